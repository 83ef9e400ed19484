/*
 * weyl.hpp
 * --------
 * The one-variable Weyl algebra: normally ordered operators
 *
 *     P = sum c_{jk} z^j d^k        (d z = z d + 1)
 *
 * with PolyScalar coefficients, tagged by which side of the Fourier
 * transform they live on (variable z or its dual w). The transform maps
 * z -> -d_w, d_z -> w monomial by monomial and renormal-orders; the inverse
 * substitutes w -> d_z, d_w -> -z.
 */
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "polyscalar.hpp"

namespace weylzeta {

enum class VarSide { Z, W };

inline const char* side_letter(VarSide s) { return s == VarSide::Z ? "z" : "w"; }
inline VarSide side_flip(VarSide s) { return s == VarSide::Z ? VarSide::W : VarSide::Z; }

namespace detail {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

// n (n-1) ... (n-k+1); valid for negative n as well.
inline long long falling(long long n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = checked_mul(r, n - i);
    return r;
}

} // namespace detail

class WeylOp {
public:
    using Key = std::pair<int, int>; // (variable degree j, derivative degree k)

    explicit WeylOp(VarSide side = VarSide::Z) : side_(side) {}

    static WeylOp zero(VarSide side = VarSide::Z) { return WeylOp(side); }
    static WeylOp scalar(const PolyScalar& c, VarSide side = VarSide::Z) {
        WeylOp p(side);
        p.add_term(0, 0, c);
        return p;
    }
    static WeylOp variable(VarSide side = VarSide::Z) {
        WeylOp p(side);
        p.add_term(1, 0, PolyScalar(1));
        return p;
    }
    static WeylOp derivative(VarSide side = VarSide::Z) {
        WeylOp p(side);
        p.add_term(0, 1, PolyScalar(1));
        return p;
    }
    static WeylOp euler(VarSide side = VarSide::Z) { // theta = z d
        WeylOp p(side);
        p.add_term(1, 1, PolyScalar(1));
        return p;
    }
    static WeylOp monomial(int j, int k, const PolyScalar& c, VarSide side = VarSide::Z) {
        if (j < 0 || k < 0) throw std::invalid_argument("negative operator degree");
        WeylOp p(side);
        p.add_term(j, k, c);
        return p;
    }

    VarSide side() const { return side_; }
    const std::map<Key, PolyScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Max derivative degree with a nonzero coefficient; -1 for the zero operator.
    int order() const {
        int k = -1;
        for (const auto& [key, c] : terms_) k = std::max(k, key.second);
        return k;
    }

    // Coefficient of d^k as a polynomial in the variable: map j -> scalar.
    std::map<int, PolyScalar> coefficient_of_d(int k) const {
        std::map<int, PolyScalar> out;
        for (const auto& [key, c] : terms_)
            if (key.second == k) out[key.first] = c;
        return out;
    }

    void add_term(int j, int k, const PolyScalar& c) {
        if (c.is_zero()) return;
        Key key{j, k};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_[key] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    WeylOp operator+(const WeylOp& o) const {
        require_same_side(o);
        WeylOp r = *this;
        for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, c);
        return r;
    }
    WeylOp operator-() const {
        WeylOp r(side_);
        for (const auto& [key, c] : terms_) r.terms_[key] = -c;
        return r;
    }
    WeylOp operator-(const WeylOp& o) const { return *this + (-o); }
    WeylOp operator*(const WeylOp& o) const {
        require_same_side(o);
        WeylOp r(side_);
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_) {
                // (z^a d^b)(z^c d^e): commute d^b past z^c.
                int a = ka.first, b = ka.second, c = kb.first, e = kb.second;
                PolyScalar coeff = ca * cb;
                for (int i = 0; i <= std::min(b, c); ++i) {
                    long long w = detail::checked_mul(detail::binomial(b, i),
                                                      detail::falling(c, i));
                    r.add_term(a + c - i, b - i + e, coeff * Rational(w));
                }
            }
        return r;
    }
    WeylOp operator*(const PolyScalar& c) const {
        WeylOp r(side_);
        for (const auto& [key, v] : terms_) r.add_term(key.first, key.second, v * c);
        return r;
    }
    WeylOp& operator+=(const WeylOp& o) { return *this = *this + o; }
    WeylOp& operator-=(const WeylOp& o) { return *this = *this - o; }
    WeylOp& operator*=(const WeylOp& o) { return *this = *this * o; }

    WeylOp pow(int n) const {
        if (n < 0) throw std::invalid_argument("negative operator power");
        WeylOp r = scalar(PolyScalar(1), side_);
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    bool operator==(const WeylOp& o) const { return side_ == o.side_ && terms_ == o.terms_; }
    bool operator!=(const WeylOp& o) const { return !(*this == o); }

    WeylOp retagged(VarSide side) const {
        WeylOp r = *this;
        r.side_ = side;
        return r;
    }

private:
    void require_same_side(const WeylOp& o) const {
        if (side_ != o.side_) throw std::invalid_argument("weyl operator variable mismatch");
    }

    VarSide side_;
    std::map<Key, PolyScalar> terms_;
};

inline WeylOp operator*(const PolyScalar& c, const WeylOp& p) { return p * c; }

// P acting on z^n; the result is a polynomial in z with PolyScalar
// coefficients, returned as exponent -> coefficient.
inline std::map<int, PolyScalar> apply_to_monomial(const WeylOp& p, int n) {
    if (n < 0) throw std::invalid_argument("apply_to_monomial needs n >= 0");
    std::map<int, PolyScalar> out;
    for (const auto& [key, c] : p.terms()) {
        int j = key.first, k = key.second;
        if (k > n) continue;
        long long f = detail::falling(n, k);
        if (f == 0) continue;
        int e = n - k + j;
        auto it = out.find(e);
        PolyScalar add = c * Rational(f);
        if (it == out.end()) out[e] = add;
        else {
            it->second += add;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

// Ring isomorphism var -> -d', d -> var'. Applying it twice gives sign_flip.
inline WeylOp fourier(const WeylOp& p) {
    WeylOp r(side_flip(p.side()));
    for (const auto& [key, c] : p.terms()) {
        int j = key.first, k = key.second;
        // (-d')^j (var')^k, renormal-ordered: d^j var^k = sum binom(j,i) k_(i) var^(k-i) d^(j-i)
        long long sign = (j % 2 == 0) ? 1 : -1;
        for (int i = 0; i <= std::min(j, k); ++i) {
            long long w = detail::checked_mul(detail::binomial(j, i), detail::falling(k, i));
            r.add_term(k - i, j - i, c * Rational(sign * w));
        }
    }
    return r;
}

// Inverse substitution var' -> d, d' -> -var.
inline WeylOp inverse_fourier(const WeylOp& p) {
    WeylOp r(side_flip(p.side()));
    for (const auto& [key, c] : p.terms()) {
        int j = key.first, k = key.second;
        // (d)^j (-var)^k = (-1)^k d^j var^k
        long long sign = (k % 2 == 0) ? 1 : -1;
        for (int i = 0; i <= std::min(j, k); ++i) {
            long long w = detail::checked_mul(detail::binomial(j, i), detail::falling(k, i));
            r.add_term(k - i, j - i, c * Rational(sign * w));
        }
    }
    return r;
}

// var -> -var, d -> -d: coefficient c_{jk} gains (-1)^(j+k).
inline WeylOp sign_flip(const WeylOp& p) {
    WeylOp r(p.side());
    for (const auto& [key, c] : p.terms()) {
        int s = (key.first + key.second) % 2;
        r.add_term(key.first, key.second, s == 0 ? c : -c);
    }
    return r;
}

inline WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) { return a * b; }

} // namespace weylzeta

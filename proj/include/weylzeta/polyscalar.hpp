/*
 * polyscalar.hpp
 * --------------
 * Multivariate polynomial scalars over Q in named formal parameters.
 *
 * A monomial maps parameter names to positive exponents; a PolyScalar maps
 * monomials to nonzero rational coefficients. Monomials are ordered by
 * graded lexicographic order, which doubles as the canonical print order
 * and the leading-term order for exact division and square roots.
 */
#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace weylzeta {

using Monomial = std::map<std::string, int>; // name -> exponent > 0

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [name, e] : m) d += e;
    return d;
}

// Graded lexicographic order (a genuine monomial order: compatible with
// multiplication, as the division and square-root routines require).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        auto ia = a.begin(), ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (ia->first != ib->first)
                // whoever owns the alphabetically earlier variable wins
                return ia->first > ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
        return false; // equal degree and shared support: identical
    }
};

class PolyScalar {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    PolyScalar() = default;
    PolyScalar(long long c) { set(Monomial{}, Rational(c)); }
    PolyScalar(const Rational& c) { set(Monomial{}, c); }

    static PolyScalar parameter(const std::string& name, int exponent = 1) {
        PolyScalar p;
        Monomial m;
        if (exponent < 0) throw std::invalid_argument("negative parameter exponent");
        if (exponent > 0) m[name] = exponent;
        p.set(m, Rational(1));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("polyscalar is not constant");
        return terms_.begin()->second;
    }

    // Single term c*m with c != 0; such a scalar is nonzero for generic
    // parameter values.
    bool is_single_monomial() const { return terms_.size() == 1; }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
        return d;
    }

    void set(const Monomial& m, const Rational& c) {
        if (c.is_zero()) terms_.erase(m);
        else terms_[m] = c;
    }

    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PolyScalar operator-() const {
        PolyScalar r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    PolyScalar operator+(const PolyScalar& o) const {
        PolyScalar r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    PolyScalar operator-(const PolyScalar& o) const {
        PolyScalar r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    PolyScalar operator*(const PolyScalar& o) const {
        PolyScalar r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma;
                for (const auto& [name, e] : mb) {
                    int& slot = m[name];
                    slot += e;
                    if (slot == 0) m.erase(name);
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }
    PolyScalar operator*(const Rational& c) const {
        PolyScalar r;
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
        return r;
    }
    PolyScalar& operator+=(const PolyScalar& o) { return *this = *this + o; }
    PolyScalar& operator-=(const PolyScalar& o) { return *this = *this - o; }
    PolyScalar& operator*=(const PolyScalar& o) { return *this = *this * o; }

    bool operator==(const PolyScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyScalar& o) const { return !(*this == o); }
    bool operator<(const PolyScalar& o) const {
        return std::lexicographical_compare(
            terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
            [](const auto& x, const auto& y) {
                GrlexLess less;
                if (less(x.first, y.first)) return true;
                if (less(y.first, x.first)) return false;
                return x.second < y.second;
            });
    }

    // Exact division; empty when the quotient does not exist in the ring.
    std::optional<PolyScalar> divide_exact(const PolyScalar& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("polyscalar division by zero");
        PolyScalar rem = *this, quot;
        const auto& dlt = *divisor.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& rlt = *rem.terms_.rbegin();
            Monomial qm;
            if (!monomial_divide(rlt.first, dlt.first, qm)) return std::nullopt;
            Rational qc = rlt.second / dlt.second;
            PolyScalar qterm;
            qterm.set(qm, qc);
            quot += qterm;
            rem -= qterm * divisor;
        }
        return quot;
    }

    // Exact square root; empty when the value is not a perfect square.
    std::optional<PolyScalar> sqrt_exact() const {
        if (is_zero()) return PolyScalar();
        const auto& lt = *terms_.rbegin();
        Monomial rm;
        for (const auto& [name, e] : lt.first) {
            if (e % 2 != 0) return std::nullopt;
            rm[name] = e / 2;
        }
        Rational rc;
        if (!rational_sqrt(lt.second, rc)) return std::nullopt;
        PolyScalar root;
        root.set(rm, rc);
        PolyScalar rem = *this - root * root;
        GrlexLess less;
        Monomial last = lt.first;
        int guard = 0;
        while (!rem.is_zero()) {
            if (++guard > 4096) return std::nullopt;
            const auto& rlt = *rem.terms_.rbegin();
            Monomial qm;
            if (!monomial_divide(rlt.first, rm, qm)) return std::nullopt;
            if (!less(qm, last) && !(qm == last)) return std::nullopt;
            last = qm;
            PolyScalar term;
            term.set(qm, rlt.second / (Rational(2) * rc));
            root += term;
            rem = *this - root * root;
        }
        return root;
    }

    Rational eval_rational(const std::map<std::string, Rational>& assignment) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (const auto& [name, e] : m) {
                auto it = assignment.find(name);
                if (it == assignment.end())
                    throw std::domain_error("unassigned parameter: " + name);
                for (int i = 0; i < e; ++i) v *= it->second;
            }
            total += v;
        }
        return total;
    }

    std::complex<double> eval_complex(
        const std::map<std::string, std::complex<double>>& assignment) const {
        std::complex<double> total(0.0, 0.0);
        for (const auto& [m, c] : terms_) {
            std::complex<double> v(c.to_double(), 0.0);
            for (const auto& [name, e] : m) {
                auto it = assignment.find(name);
                if (it == assignment.end())
                    throw std::domain_error("unassigned parameter: " + name);
                for (int i = 0; i < e; ++i) v *= it->second;
            }
            total += v;
        }
        return total;
    }

    std::vector<std::string> parameters() const {
        std::vector<std::string> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [name, e] : m)
                if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        return out;
    }

private:
    static bool monomial_divide(const Monomial& a, const Monomial& b, Monomial& out) {
        out.clear();
        for (const auto& [name, e] : a) out[name] = e;
        for (const auto& [name, e] : b) {
            auto it = out.find(name);
            if (it == out.end() || it->second < e) return false;
            it->second -= e;
            if (it->second == 0) out.erase(it);
        }
        return true;
    }

    TermMap terms_;
};

inline PolyScalar operator*(const Rational& c, const PolyScalar& p) { return p * c; }

} // namespace weylzeta

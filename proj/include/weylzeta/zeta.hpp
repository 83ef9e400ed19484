/*
 * zeta.hpp
 * --------
 * Monodromy zeta functions as factored rational functions in t:
 *
 *     zeta = lead * t^lead_power * prod (1 - c_i t^(m_i))^(e_i)
 *
 * with each constant c_i an exponential class e(x) and integer exponents
 * e_i. This factored shape is closed under the whole calculus: products and
 * integer powers, the substitution t -> 1/t via
 *
 *     (1 - c t^-m) = (-c) t^-m (1 - c^-1 t^m),
 *
 * the associated-polynomial transform tilde(zeta) = t^deg(zeta) zeta(1/t),
 * the monomial and local-system building blocks, and Euler-characteristic
 * integration over strata.
 *
 * Eigenvalue multiplicities are read off a zeta function by splitting each
 * factor with 1 - c t^m = prod over the m classes lambda with lambda^m = c
 * of (1 - lambda t); each factor exponent then contributes with the sign
 * (-1)^(N+1) of the ambient dimension, and unit classes are discarded.
 * Totals are signed: they are genuine multiplicities only for zeta
 * functions of actual monodromies.
 */
#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "exponent.hpp"

namespace weylzeta {

class ZetaFunction {
public:
    using FactorKey = std::pair<ExpClass, int>; // (class c, power m of t)

    ZetaFunction() = default;

    static ZetaFunction one() { return ZetaFunction(); }
    static ZetaFunction t_power(long long k) {
        ZetaFunction z;
        z.lead_power_ = k;
        return z;
    }
    static ZetaFunction constant(const ExpClass& c) {
        ZetaFunction z;
        z.lead_ = c;
        return z;
    }
    // (1 - c t^m)^e
    static ZetaFunction factor(const ExpClass& c, int m, long long e = 1) {
        if (m <= 0) throw std::invalid_argument("factor needs a positive power of t");
        ZetaFunction z;
        if (e != 0) z.factors_[{c, m}] = e;
        return z;
    }

    const ExpClass& lead() const { return lead_; }
    long long lead_power() const { return lead_power_; }
    const std::map<FactorKey, long long>& factors() const { return factors_; }
    bool is_one() const { return lead_.is_unity() && lead_power_ == 0 && factors_.empty(); }

    long long degree() const {
        long long d = lead_power_;
        for (const auto& [key, e] : factors_) d += e * key.second;
        return d;
    }

    ZetaFunction operator*(const ZetaFunction& o) const {
        ZetaFunction r = *this;
        r.lead_ = r.lead_ * o.lead_;
        r.lead_power_ += o.lead_power_;
        for (const auto& [key, e] : o.factors_) r.add_factor(key, e);
        return r;
    }
    ZetaFunction& operator*=(const ZetaFunction& o) { return *this = *this * o; }

    ZetaFunction pow(long long n) const {
        ZetaFunction r;
        r.lead_ = lead_.pow(n);
        r.lead_power_ = lead_power_ * n;
        if (n != 0)
            for (const auto& [key, e] : factors_) r.factors_[key] = e * n;
        return r;
    }
    ZetaFunction inverse() const { return pow(-1); }

    bool operator==(const ZetaFunction& o) const {
        return lead_ == o.lead_ && lead_power_ == o.lead_power_ && factors_ == o.factors_;
    }
    bool operator!=(const ZetaFunction& o) const { return !(*this == o); }

    // t -> 1/t, exactly in factored form.
    ZetaFunction invert_variable() const {
        ZetaFunction r;
        r.lead_ = lead_;
        r.lead_power_ = -lead_power_;
        for (const auto& [key, e] : factors_) {
            const auto& [c, m] = key;
            r.lead_ = r.lead_ * c.negated().pow(e);
            r.lead_power_ -= e * m;
            r.add_factor({c.inverse(), m}, e);
        }
        return r;
    }

    // t^deg(this) * this(1/t).
    ZetaFunction tilde() const { return t_power(degree()) * invert_variable(); }

    // Laurent coefficients at t = 0: n_terms values starting at t^ord where
    // ord = lead_power (every stored factor is a unit at t = 0).
    std::vector<std::complex<double>> series(
        const std::map<std::string, std::complex<double>>& assignment, int n_terms,
        double clean_tol = 0.0) const {
        if (n_terms <= 0) return {};
        std::vector<std::complex<double>> acc(static_cast<std::size_t>(n_terms), 0.0);
        acc[0] = lead_.eval(assignment);
        for (const auto& [key, e] : factors_) {
            std::complex<double> c = key.first.eval(assignment);
            int m = key.second;
            // base = 1 - c t^m, inv = geometric series
            std::vector<std::complex<double>> f(static_cast<std::size_t>(n_terms), 0.0);
            if (e > 0) {
                f[0] = 1.0;
                if (m < n_terms) f[static_cast<std::size_t>(m)] = -c;
            } else {
                std::complex<double> p = 1.0;
                for (int i = 0; i * m < n_terms; ++i) {
                    f[static_cast<std::size_t>(i * m)] = p;
                    p *= c;
                }
            }
            long long reps = e > 0 ? e : -e;
            for (long long r = 0; r < reps; ++r) acc = mul_trunc(acc, f);
        }
        if (clean_tol > 0.0)
            for (auto& v : acc) {
                if (std::abs(v.real()) < clean_tol) v = {0.0, v.imag()};
                if (std::abs(v.imag()) < clean_tol) v = {v.real(), 0.0};
            }
        return acc;
    }

    long long series_start() const { return lead_power_; }

    std::string str() const {
        std::vector<std::string> parts;
        if (!lead_.is_unity()) parts.push_back(lead_.str());
        if (lead_power_ != 0)
            parts.push_back(lead_power_ == 1 ? "t" : "t^" + std::to_string(lead_power_));
        bool bare_ok = parts.empty() && factors_.size() == 1;
        for (const auto& [key, e] : factors_) {
            const auto& [c, m] = key;
            std::string body = "1 - ";
            if (!c.is_unity()) body += c.str() + "*";
            body += m == 1 ? "t" : "t^" + std::to_string(m);
            if (bare_ok && e == 1) parts.push_back(body);
            else parts.push_back("(" + body + ")" + (e == 1 ? "" : "^" + std::to_string(e)));
        }
        if (parts.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
        return out;
    }

private:
    void add_factor(const FactorKey& key, long long e) {
        auto it = factors_.find(key);
        if (it == factors_.end()) {
            if (e != 0) factors_[key] = e;
        } else {
            it->second += e;
            if (it->second == 0) factors_.erase(it);
        }
    }

    static std::vector<std::complex<double>> mul_trunc(
        const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
        std::vector<std::complex<double>> out(a.size(), 0.0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == std::complex<double>(0.0, 0.0)) continue;
            for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j)
                out[i + j] += a[i] * b[j];
        }
        return out;
    }

    ExpClass lead_;            // nonzero constant in front
    long long lead_power_ = 0; // power of t in front
    std::map<FactorKey, long long> factors_;
};

inline ZetaFunction zeta_one() { return ZetaFunction::one(); }
inline ZetaFunction zeta_mul(const ZetaFunction& a, const ZetaFunction& b) { return a * b; }
inline ZetaFunction zeta_pow(const ZetaFunction& a, long long n) { return a.pow(n); }
inline ZetaFunction zeta_invert_variable(const ZetaFunction& z) { return z.invert_variable(); }
inline ZetaFunction zeta_tilde(const ZetaFunction& z) { return z.tilde(); }

// zeta at the origin of z_1^(m_1) ... z_k^(m_k): 1 - t^(m_1) for a single
// variable, 1 as soon as two or more variables appear.
inline ZetaFunction acampo_monomial(const std::vector<int>& m) {
    if (m.empty()) throw std::invalid_argument("acampo_monomial needs a nonempty exponent list");
    for (int mi : m)
        if (mi <= 0) throw std::invalid_argument("acampo_monomial needs positive exponents");
    if (m.size() > 1) return ZetaFunction::one();
    return ZetaFunction::factor(ExpClass::one(), m[0]);
}

// zeta at the origin of z_1^m against the extension by zero of a local
// system on (C*)^k x C^(n-k): det(id - t^m A) for k = 1 (A the monodromy
// matrix, given by its eigenvalue classes), 1 for k > 1.
inline ZetaFunction local_system_zeta(int k, int m, const std::vector<ExpClass>& eigenvalues) {
    if (k <= 0) throw std::invalid_argument("local_system_zeta needs k >= 1");
    if (m <= 0) throw std::invalid_argument("local_system_zeta needs m >= 1");
    if (k > 1) return ZetaFunction::one();
    ZetaFunction z;
    for (const auto& lambda : eigenvalues) z *= ZetaFunction::factor(lambda, m);
    return z;
}

// Monomials z_1^(m_1)...z_n^(m_n) with at least two positive exponents kill
// the nearby cycles of an extension by zero: the zeta function is 1.
inline ZetaFunction multi_monomial_zeta(int positive_exponent_count) {
    if (positive_exponent_count < 2)
        throw std::invalid_argument("multi_monomial_zeta needs at least two positive exponents");
    return ZetaFunction::one();
}

struct Stratum {
    std::string name;
    long long chi = 0;
    ZetaFunction local_zeta;
};

// prod over strata of local_zeta^chi; the order of strata is immaterial.
inline ZetaFunction euler_integral(const std::vector<Stratum>& strata) {
    ZetaFunction z;
    for (const auto& s : strata) z *= s.local_zeta.pow(s.chi);
    return z;
}

namespace detail {

inline long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

} // namespace detail

// Euler characteristic of a smooth degree-d hypersurface in P^N:
// (1/d)((1-d)^(N+1) - 1) + N + 1.
inline long long chi_hypersurface(int N, int d) {
    if (N < 1 || d < 1) throw std::invalid_argument("chi_hypersurface needs N >= 1, d >= 1");
    long long num = detail::ipow(1 - d, N + 1) - 1;
    if (num % d != 0) throw std::logic_error("chi_hypersurface: non-integer value");
    return num / d + N + 1;
}

// Closed form of the zeta function at infinity for the direct image of the
// rank-one local system f^alpha, f of degree d in N variables with smooth
// top-degree part: (1 - e(-d alpha) t)^((1-d)^(N-1)).
inline ZetaFunction falpha_infinity_zeta(int N, int d, const std::string& alpha) {
    if (N < 1 || d < 1) throw std::invalid_argument("falpha_infinity_zeta needs N >= 1, d >= 1");
    ExpClass c(ExponentQ::parameter(alpha, Rational(-d)));
    return ZetaFunction::factor(c, 1, detail::ipow(1 - d, N - 1));
}

// The same zeta function assembled from the stratification used in its
// proof: the hyperplane at infinity H~ carries the local factor
// 1 - e(-d alpha) t away from the two divisors D1 (degree-d hypersurface in
// P^(N-1)) and D2 (a P^(N-2)), and the trivial factor 1 on them.
inline ZetaFunction falpha_infinity_zeta_strata(int N, int d, const std::string& alpha) {
    if (N < 1 || d < 1) throw std::invalid_argument("falpha_infinity_zeta_strata needs N, d >= 1");
    auto div_exact = [](long long num, long long den) {
        if (num % den != 0) throw std::logic_error("non-integer Euler characteristic");
        return num / den;
    };
    long long chi_h = N;
    long long chi_d1 = div_exact(detail::ipow(1 - d, N) - 1, d) + N;
    long long chi_d2 = N - 1;
    long long chi_d12 = div_exact(detail::ipow(1 - d, N - 1) - 1, d) + (N - 1);
    long long chi_open = chi_h - chi_d1 - chi_d2 + chi_d12;
    ExpClass c(ExponentQ::parameter(alpha, Rational(-d)));
    std::vector<Stratum> strata{
        {"open", chi_open, ZetaFunction::factor(c, 1)},
        {"d1", chi_d1 - chi_d12, ZetaFunction::one()},
        {"d2", chi_d2 - chi_d12, ZetaFunction::one()},
        {"d1-d2", chi_d12, ZetaFunction::one()},
    };
    if (chi_open + chi_d1 + chi_d2 - chi_d12 != chi_h)
        throw std::logic_error("stratification chi values violate additivity");
    return euler_integral(strata);
}

using VirtualMultiplicity = std::map<ExpClass, long long>;

// Signed eigenvalue multiplicities extracted from a zeta function in
// ambient dimension N: a factor (1 - c t^m)^e spreads e * (-1)^(N+1) over
// the m classes lambda with lambda^m = c; unit classes are discarded and
// zero totals dropped.
inline VirtualMultiplicity multiplicities_from_zeta(const ZetaFunction& z, int N) {
    long long sign = ((N + 1) % 2 == 0) ? 1 : -1;
    VirtualMultiplicity out;
    for (const auto& [key, e] : z.factors()) {
        const auto& [c, m] = key;
        for (int j = 0; j < m; ++j) {
            ExpClass lambda(c.exponent().shifted(Rational(j)).scaled(Rational(1, m)));
            if (lambda.is_unity()) continue;
            out[lambda] += e * sign;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline std::string multiplicity_str(const VirtualMultiplicity& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [cls, mult] : m) {
        if (!first) out += ", ";
        out += cls.str() + ": " + std::to_string(mult);
        first = false;
    }
    return out + "}";
}

} // namespace weylzeta

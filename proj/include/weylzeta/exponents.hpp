/*
 * exponents.hpp
 * -------------
 * Indicial polynomials, characteristic exponents, eigenvalue multisets of
 * the monodromy at infinity, and the reciprocity checker.
 *
 * Indicial polynomial: with L = localize(P, at) = sum a_k(u) d_u^k and
 * rho = min_k(ord_u(a_k) - k),
 *
 *     b(s) = sum_k coeff(a_k, u^(k+rho)) * s(s-1)...(s-k+1).
 *
 * Its degree equals order(P) exactly when the point is regular singular.
 *
 * Exact roots are found by, in order: a verified factored form attached by
 * a catalog constructor, rational-root extraction for parameter-free
 * polynomials, and the linear/quadratic formula when the discriminant is a
 * perfect square in the coefficient ring. Anything else raises
 * ExactRootFailure and callers fall back to the numeric mode.
 *
 * Monodromy at infinity supports two configurations:
 *   (a) infinity regular singular        -> eigenvalue e(-x) per exponent x there;
 *   (b) leading coefficient c*z^k (c a single generic-nonzero monomial) and
 *       the origin regular singular      -> eigenvalue e(+x) per exponent x at 0.
 * The big counterclockwise circle reads clockwise in the chart u = 1/z,
 * which fixes the sign in (a); in (b) it is homotopic to the
 * counterclockwise loop around 0 because all finite singularities sit there.
 */
#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "exponent.hpp"
#include "newton.hpp"
#include "numeric.hpp"

namespace weylzeta {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ExactRootFailure : DomainError {
    using DomainError::DomainError;
};
struct UnsupportedConfiguration : DomainError {
    using DomainError::DomainError;
};

class IndicialPoly {
public:
    IndicialPoly() = default;
    explicit IndicialPoly(std::vector<PolyScalar> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    const std::vector<PolyScalar>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const PolyScalar& coeff(int i) const {
        static const PolyScalar zero;
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)]
                                                              : zero;
    }

    PolyScalar eval_at(const ExponentQ& x) const {
        PolyScalar s = x.to_polyscalar(), total, p(1);
        for (const auto& c : coeffs_) {
            total += c * p;
            p *= s;
        }
        return total;
    }

    std::vector<std::complex<double>> assigned_coeffs(
        const std::map<std::string, std::complex<double>>& assignment) const {
        std::vector<std::complex<double>> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.eval_complex(assignment));
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<PolyScalar> coeffs_; // index = power of s
};

inline IndicialPoly indicial_polynomial(const LocalOperator& local) {
    if (local.is_zero()) throw std::domain_error("indicial polynomial of the zero operator");
    int rho = 0;
    bool have = false;
    for (const auto& [k, a] : local.coefficients()) {
        int h = local.ord_u(k) - k;
        if (!have || h < rho) { rho = h; have = true; }
    }
    std::vector<PolyScalar> b;
    for (const auto& [k, a] : local.coefficients()) {
        PolyScalar c = local.coeff(k, k + rho);
        if (c.is_zero()) continue;
        // c * s(s-1)...(s-k+1)
        std::vector<Rational> ff{Rational(1)};
        for (int i = 0; i < k; ++i) {
            std::vector<Rational> next(ff.size() + 1, Rational(0));
            for (std::size_t t = 0; t < ff.size(); ++t) {
                next[t + 1] += ff[t];
                next[t] += ff[t] * Rational(-i);
            }
            ff = std::move(next);
        }
        if (b.size() < ff.size()) b.resize(ff.size());
        for (std::size_t t = 0; t < ff.size(); ++t) b[t] += c * ff[t];
    }
    return IndicialPoly(std::move(b));
}

inline IndicialPoly indicial_polynomial(const WeylOp& p, const LocalPoint& at) {
    if (p.is_zero()) throw std::domain_error("indicial polynomial of the zero operator");
    return indicial_polynomial(localize(p, at));
}

// Factored indicial data attached by catalog constructors; always verified
// by expanding unit * prod(s - root_i) against the computed polynomial
// before use, so a wrong hint can never change a result.
struct IndicialHint {
    VarSide side = VarSide::Z;
    LocalPoint point;
    PolyScalar unit;
    std::vector<ExponentQ> roots;
};
using HintSet = std::vector<IndicialHint>;

namespace detail {

inline bool hint_matches(const IndicialHint& h, const IndicialPoly& b) {
    if (static_cast<int>(h.roots.size()) != b.degree()) return false;
    std::vector<PolyScalar> prod{h.unit};
    for (const auto& r : h.roots) {
        PolyScalar root_p = r.to_polyscalar();
        std::vector<PolyScalar> next(prod.size() + 1);
        for (std::size_t t = 0; t < prod.size(); ++t) {
            next[t + 1] += prod[t];
            next[t] -= prod[t] * root_p;
        }
        prod = std::move(next);
    }
    while (!prod.empty() && prod.back().is_zero()) prod.pop_back();
    if (static_cast<int>(prod.size()) != b.degree() + 1) return false;
    for (std::size_t t = 0; t < prod.size(); ++t)
        if (prod[t] != b.coeff(static_cast<int>(t))) return false;
    return true;
}

// All rational roots with multiplicity, by the rational root theorem plus
// synthetic deflation; succeeds only on a full linear factorization.
inline bool rational_roots_full(const IndicialPoly& b, std::vector<ExponentQ>& out) {
    std::vector<Rational> c;
    for (const auto& p : b.coeffs()) {
        if (!p.is_constant()) return false;
        c.push_back(p.constant_value());
    }
    out.clear();
    while (c.size() > 1) {
        // strip roots at zero
        if (c.front().is_zero()) {
            out.push_back(ExponentQ(Rational(0)));
            c.erase(c.begin());
            continue;
        }
        long long lcm = 1;
        for (const auto& q : c) lcm = checked_mul(lcm / std::gcd(lcm, q.den()), q.den());
        std::vector<long long> ic;
        for (const auto& q : c) ic.push_back(checked_mul(q.num(), lcm / q.den()));
        long long a0 = std::abs(ic.front()), an = std::abs(ic.back());
        if (a0 > 1000000000000LL || an > 1000000000000LL) return false;
        auto divisors = [](long long v) {
            std::vector<long long> d;
            for (long long i = 1; i * i <= v; ++i)
                if (v % i == 0) {
                    d.push_back(i);
                    if (i != v / i) d.push_back(v / i);
                }
            return d;
        };
        bool found = false;
        for (long long p : divisors(a0)) {
            for (long long q : divisors(an)) {
                for (int s = 0; s < 2 && !found; ++s) {
                    Rational cand(s == 0 ? p : -p, q);
                    // synthetic division
                    std::vector<Rational> quot(c.size() - 1);
                    Rational acc(0);
                    for (std::size_t i = c.size(); i-- > 1;) {
                        acc = c[i] + acc * cand;
                        quot[i - 1] = acc;
                    }
                    Rational rem = c[0] + acc * cand;
                    if (rem.is_zero()) {
                        out.push_back(ExponentQ(cand));
                        c = std::move(quot);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

inline std::optional<ExponentQ> affine_of(const PolyScalar& p) {
    if (p.total_degree() > 1) return std::nullopt;
    ExponentQ x;
    for (const auto& [m, c] : p.terms()) {
        if (m.empty()) x = x + ExponentQ(c);
        else x = x + ExponentQ::parameter(m.begin()->first, c);
    }
    return x;
}

} // namespace detail

// Exact characteristic exponents (roots of the indicial polynomial, with
// multiplicity). Hints, if given, are for this operator side and point.
inline std::vector<ExponentQ> exact_roots(const IndicialPoly& b, const HintSet& hints,
                                          VarSide side, const LocalPoint& at) {
    if (b.is_zero()) throw ExactRootFailure("indicial polynomial is zero");
    for (const auto& h : hints)
        if (h.side == side && h.point == at && detail::hint_matches(h, b)) return h.roots;

    std::vector<ExponentQ> roots;
    if (detail::rational_roots_full(b, roots)) return roots;

    const int n = b.degree();
    if (n == 1) {
        auto q = (-b.coeff(0)).divide_exact(b.coeff(1));
        if (q) {
            auto x = detail::affine_of(*q);
            if (x) return {*x};
        }
    } else if (n == 2) {
        // (-b1 +- sqrt(b1^2 - 4 b2 b0)) / (2 b2), accepted only when the
        // discriminant is a perfect square and the divisions are exact.
        PolyScalar disc = b.coeff(1) * b.coeff(1) - Rational(4) * (b.coeff(2) * b.coeff(0));
        auto r = disc.sqrt_exact();
        if (r) {
            PolyScalar denom = Rational(2) * b.coeff(2);
            auto q1 = (-b.coeff(1) + *r).divide_exact(denom);
            auto q2 = (-b.coeff(1) - *r).divide_exact(denom);
            if (q1 && q2) {
                auto x1 = detail::affine_of(*q1), x2 = detail::affine_of(*q2);
                if (x1 && x2) return {*x1, *x2};
            }
        }
    }
    throw ExactRootFailure("cannot certify an exact linear factorization of the indicial polynomial");
}

inline std::vector<ExponentQ> char_exponents(const WeylOp& p, const LocalPoint& at,
                                             const HintSet& hints = {}) {
    return exact_roots(indicial_polynomial(p, at), hints, p.side(), at);
}

inline std::vector<std::complex<double>> char_exponents_numeric(
    const WeylOp& p, const LocalPoint& at,
    const std::map<std::string, std::complex<double>>& assignment) {
    IndicialPoly b = indicial_polynomial(p, at);
    auto coeffs = b.assigned_coeffs(assignment);
    if (coeffs.empty() || std::abs(coeffs.back()) < 1e-12)
        throw DomainError("assignment degenerates the indicial polynomial");
    return polynomial_roots(coeffs);
}

using EigenMultiset = std::map<ExpClass, long long>;

inline std::string multiset_str(const EigenMultiset& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [cls, mult] : m) {
        if (!first) out += ", ";
        out += cls.str() + ": " + std::to_string(mult);
        first = false;
    }
    return out + "}";
}

namespace detail {

enum class MonodromyRoute { AtInfinity, AtOrigin };

// Route (a) needs infinity regular singular; route (b) needs the leading
// coefficient to vanish only at the origin and the origin regular singular.
inline std::optional<MonodromyRoute> monodromy_route(const WeylOp& p) {
    if (is_regular(p, LocalPoint::infinity())) return MonodromyRoute::AtInfinity;
    auto lead = p.coefficient_of_d(p.order());
    if (lead.size() == 1 && lead.begin()->second.is_single_monomial() &&
        is_regular(p, LocalPoint::origin()))
        return MonodromyRoute::AtOrigin;
    return std::nullopt;
}

} // namespace detail

// Eigenvalue multiset of the monodromy at infinity; cardinality equals
// order(P) in every supported configuration.
inline EigenMultiset monodromy_at_infinity(const WeylOp& p, const HintSet& hints = {}) {
    if (p.is_zero()) throw std::domain_error("monodromy of the zero operator");
    auto route = detail::monodromy_route(p);
    if (!route)
        throw UnsupportedConfiguration(
            "monodromy at infinity: infinity is irregular and the finite "
            "singularities are not confined to the origin");
    EigenMultiset out;
    if (*route == detail::MonodromyRoute::AtInfinity) {
        for (const auto& x : char_exponents(p, LocalPoint::infinity(), hints))
            out[ExpClass(-x)] += 1;
    } else {
        for (const auto& x : char_exponents(p, LocalPoint::origin(), hints))
            out[ExpClass(x)] += 1;
    }
    return out;
}

inline std::vector<std::complex<double>> monodromy_at_infinity_numeric(
    const WeylOp& p, const std::map<std::string, std::complex<double>>& assignment) {
    if (p.is_zero()) throw std::domain_error("monodromy of the zero operator");
    auto route = detail::monodromy_route(p);
    if (!route)
        throw UnsupportedConfiguration(
            "monodromy at infinity: unsupported singularity configuration");
    const std::complex<double> two_pi_i(0.0, 2.0 * 3.14159265358979323846);
    std::vector<std::complex<double>> out;
    if (*route == detail::MonodromyRoute::AtInfinity) {
        for (const auto& s : char_exponents_numeric(p, LocalPoint::infinity(), assignment))
            out.push_back(std::exp(-two_pi_i * s));
    } else {
        for (const auto& s : char_exponents_numeric(p, LocalPoint::origin(), assignment))
            out.push_back(std::exp(two_pi_i * s));
    }
    return out;
}

struct ReciprocityReport {
    bool holds = false;
    EigenMultiset left;           // eigenvalues of P, unit classes dropped
    EigenMultiset right;          // eigenvalues of fourier(P), unit classes dropped
    EigenMultiset right_inverted; // right with every class inverted
};

inline EigenMultiset drop_unity(const EigenMultiset& m) {
    EigenMultiset out;
    for (const auto& [cls, mult] : m)
        if (!cls.is_unity()) out[cls] = mult;
    return out;
}

// The reciprocity law: eigenvalue multiplicities away from 1 of the
// monodromy at infinity of P match those of fourier(P) at inverse
// eigenvalues. Requires moderate irregularity at infinity.
inline ReciprocityReport reciprocity_check(const WeylOp& p, const HintSet& hints = {}) {
    if (!is_moderate_at_infinity(p))
        throw DomainError("reciprocity: operator is not moderate at infinity");
    ReciprocityReport rep;
    rep.left = drop_unity(monodromy_at_infinity(p, hints));
    rep.right = drop_unity(monodromy_at_infinity(fourier(p), hints));
    for (const auto& [cls, mult] : rep.right) rep.right_inverted[cls.inverse()] += mult;
    rep.holds = rep.left == rep.right_inverted;
    return rep;
}

} // namespace weylzeta

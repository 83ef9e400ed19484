/*
 * newton.hpp
 * ----------
 * Local models at points of P^1 and their Newton polygons.
 *
 * localize() rewrites P exactly in the local coordinate u (u = z - a at a
 * finite rational point, u = 1/z with d_z = -u^2 d_u at infinity) as
 * sum a_k(u) d_u^k with Laurent-polynomial coefficients.
 *
 * The polygon takes the points (k, ord_u(a_k) - k) for every nonzero a_k,
 * forms the lower convex hull traversed from smallest to largest k, and
 * keeps the edge slopes clamped below at 0. A single-point hull gives {0}.
 * With this convention the slope set is {0} exactly when the point is
 * regular singular (or ordinary) in the Fuchs sense, and a positive slope p
 * matches the pole order p of an exponential factor there.
 */
#pragma once

#include <map>
#include <set>
#include <vector>

#include "weyl.hpp"

namespace weylzeta {

struct LocalPoint {
    bool at_infinity = false;
    Rational a; // meaningful for finite points

    static LocalPoint infinity() { return {true, Rational(0)}; }
    static LocalPoint finite(const Rational& a) { return {false, a}; }
    static LocalPoint origin() { return {false, Rational(0)}; }

    bool operator==(const LocalPoint& o) const {
        return at_infinity == o.at_infinity && (at_infinity || a == o.a);
    }
};

using LaurentPoly = std::map<int, PolyScalar>; // u-exponent -> coefficient, no zeros

class LocalOperator {
public:
    LocalOperator() = default;
    LocalOperator(LocalPoint at) : at_(at) {}

    const LocalPoint& at() const { return at_; }
    const std::map<int, LaurentPoly>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(int k, int upow, const PolyScalar& c) {
        if (c.is_zero()) return;
        auto& a_k = coeffs_[k];
        auto it = a_k.find(upow);
        if (it == a_k.end()) {
            a_k[upow] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) a_k.erase(it);
        }
        if (a_k.empty()) coeffs_.erase(k);
    }

    int ord_u(int k) const {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end() || it->second.empty())
            throw std::domain_error("ord_u of zero coefficient");
        return it->second.begin()->first;
    }

    PolyScalar coeff(int k, int upow) const {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) return PolyScalar();
        auto jt = it->second.find(upow);
        return jt == it->second.end() ? PolyScalar() : jt->second;
    }

    int order() const {
        int k = -1;
        for (const auto& [kk, a] : coeffs_) k = std::max(k, kk);
        return k;
    }

    // Multiply every coefficient by u^n (slope sets are invariant under this).
    LocalOperator shifted_by_upower(int n) const {
        LocalOperator r(at_);
        for (const auto& [k, a] : coeffs_)
            for (const auto& [p, c] : a) r.add(k, p + n, c);
        return r;
    }

    LocalOperator scaled(const Rational& q) const {
        LocalOperator r(at_);
        for (const auto& [k, a] : coeffs_)
            for (const auto& [p, c] : a) r.add(k, p, c * q);
        return r;
    }

    // Action on u^n (n may be negative): a_k(u) d^k u^n = a_k * n_(k) * u^(n-k).
    LaurentPoly apply_to_upower(long long n) const {
        LaurentPoly out;
        for (const auto& [k, a] : coeffs_) {
            long long f = detail::falling(n, k);
            if (f == 0) continue;
            for (const auto& [p, c] : a) {
                int e = static_cast<int>(n - k + p);
                auto it = out.find(e);
                PolyScalar add = c * Rational(f);
                if (it == out.end()) out[e] = add;
                else {
                    it->second += add;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    }

    bool operator==(const LocalOperator& o) const {
        return at_ == o.at_ && coeffs_ == o.coeffs_;
    }

private:
    LocalPoint at_;
    std::map<int, LaurentPoly> coeffs_;
};

namespace detail {

// (u^2 d_u)^k in normal order as (u-power, d-power) -> integer coefficient.
inline std::map<std::pair<int, int>, long long> u2d_power(int k) {
    std::map<std::pair<int, int>, long long> acc;
    acc[{0, 0}] = 1;
    for (int step = 0; step < k; ++step) {
        std::map<std::pair<int, int>, long long> next;
        for (const auto& [key, c] : acc) {
            int a = key.first, b = key.second;
            // (u^a d^b)(u^2 d) = sum_i binom(b,i) 2_(i) u^(a+2-i) d^(b-i+1)
            for (int i = 0; i <= std::min(b, 2); ++i) {
                long long w = checked_mul(c, checked_mul(binomial(b, i), falling(2, i)));
                next[{a + 2 - i, b - i + 1}] += w;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        acc = std::move(next);
    }
    return acc;
}

} // namespace detail

inline LocalOperator localize(const WeylOp& p, const LocalPoint& at) {
    LocalOperator r(at);
    if (at.at_infinity) {
        // z = 1/u, d_z = -u^2 d_u: z^j d_z^k = (-1)^k u^(-j) (u^2 d_u)^k.
        std::map<int, std::map<std::pair<int, int>, long long>> cache;
        for (const auto& [key, c] : p.terms()) {
            int j = key.first, k = key.second;
            auto it = cache.find(k);
            if (it == cache.end()) it = cache.emplace(k, detail::u2d_power(k)).first;
            Rational sign((k % 2 == 0) ? 1 : -1);
            for (const auto& [ud, w] : it->second)
                r.add(ud.second, ud.first - j, c * (sign * Rational(w)));
        }
    } else {
        // z = u + a, d_z = d_u: expand (u+a)^j binomially.
        for (const auto& [key, c] : p.terms()) {
            int j = key.first, k = key.second;
            for (int i = 0; i <= j; ++i) {
                Rational apow(1);
                for (int t = 0; t < j - i; ++t) apow *= at.a;
                if (apow.is_zero()) continue;
                r.add(k, i, c * (Rational(detail::binomial(j, i)) * apow));
            }
        }
    }
    return r;
}

using SlopeSet = std::set<Rational>;

inline SlopeSet slopes(const LocalOperator& local) {
    if (local.is_zero()) throw std::domain_error("slopes of the zero operator");
    std::vector<std::pair<long long, long long>> pts; // (k, ord - k), k increasing
    for (const auto& [k, a] : local.coefficients())
        pts.push_back({k, static_cast<long long>(local.ord_u(k)) - k});
    SlopeSet out;
    if (pts.size() == 1) {
        out.insert(Rational(0));
        return out;
    }
    // Monotone-chain lower hull; keys are strictly increasing already.
    std::vector<std::pair<long long, long long>> hull;
    auto cross = [](const std::pair<long long, long long>& o,
                    const std::pair<long long, long long>& a,
                    const std::pair<long long, long long>& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        Rational s(hull[i + 1].second - hull[i].second, hull[i + 1].first - hull[i].first);
        out.insert(s < Rational(0) ? Rational(0) : s);
    }
    return out;
}

inline SlopeSet slopes(const WeylOp& p, const LocalPoint& at) {
    if (p.is_zero()) throw std::domain_error("slopes of the zero operator");
    return slopes(localize(p, at));
}

inline bool is_regular(const WeylOp& p, const LocalPoint& at) {
    SlopeSet s = slopes(p, at);
    return s.size() == 1 && *s.begin() == Rational(0);
}

inline bool is_moderate_at_infinity(const WeylOp& p) {
    for (const Rational& s : slopes(p, LocalPoint::infinity()))
        if (s > Rational(1)) return false;
    return true;
}

} // namespace weylzeta

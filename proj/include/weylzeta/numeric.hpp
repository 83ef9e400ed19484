/*
 * numeric.hpp
 * -----------
 * Floating-point helpers backing the numeric fallback paths: a
 * Durand-Kerner simultaneous root finder and tolerance-based multiset
 * matching for complex values.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace weylzeta {

// Roots of c[0] + c[1] x + ... + c[n] x^n, all at once. Leading coefficient
// must be nonzero.
inline std::vector<std::complex<double>> polynomial_roots(
    std::vector<std::complex<double>> coeffs) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-300) coeffs.pop_back();
    if (coeffs.size() <= 1) {
        if (coeffs.empty() || std::abs(coeffs[0]) < 1e-300)
            throw std::domain_error("root finding on the zero polynomial");
        return {};
    }
    const std::size_t n = coeffs.size() - 1;
    for (auto& c : coeffs) c /= coeffs.back();
    coeffs.back() = 1.0;

    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
        return v;
    };

    double radius = 0.0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
        radius = std::max(radius, std::abs(coeffs[i]));
    radius = 1.0 + radius;

    std::vector<std::complex<double>> roots(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc *= seed;
        roots[i] = radius * acc / std::abs(acc);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            std::complex<double> delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }

    // A k-fold root comes back as a cluster of k points spread ~eps^(1/k)
    // around the true value with first-order errors cancelling; replace each
    // cluster by its centroid. Roots closer than about 1e-3 (relative) are
    // therefore reported as one multiple root; the rational-assignment
    // polynomials this backs have root separations orders of magnitude above
    // that.
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        const double cluster_radius = 1e-3 * (1.0 + std::abs(roots[i]));
        std::vector<std::size_t> cluster{i};
        for (std::size_t j = i + 1; j < n; ++j)
            if (!used[j] && std::abs(roots[j] - roots[i]) < cluster_radius) {
                cluster.push_back(j);
                used[j] = true;
            }
        if (cluster.size() > 1) {
            std::complex<double> mean = 0.0;
            for (std::size_t j : cluster) mean += roots[j];
            mean /= static_cast<double>(cluster.size());
            // A k-fold root of p is a simple root of the (k-1)-th
            // derivative; Newton there recovers full precision.
            std::vector<std::complex<double>> d = coeffs;
            for (std::size_t take = 1; take < cluster.size(); ++take) {
                std::vector<std::complex<double>> next(d.size() - 1);
                for (std::size_t i = 1; i < d.size(); ++i)
                    next[i - 1] = d[i] * static_cast<double>(i);
                d = std::move(next);
            }
            for (int iter = 0; iter < 60; ++iter) {
                std::complex<double> v = 0.0, dv = 0.0;
                for (std::size_t i = d.size(); i-- > 0;) {
                    dv = dv * mean + v;
                    v = v * mean + d[i];
                }
                if (std::abs(dv) < 1e-300) break;
                std::complex<double> delta = v / dv;
                mean -= delta;
                if (std::abs(delta) < 1e-15 * (1.0 + std::abs(mean))) break;
            }
            for (std::size_t j : cluster) roots[j] = mean;
        }
    }
    return roots;
}

// Greedy nearest-neighbour matching of two complex multisets within tol.
inline bool complex_multisets_match(std::vector<std::complex<double>> a,
                                    std::vector<std::complex<double>> b, double tol) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        double best = tol;
        std::size_t best_i = b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            double d = std::abs(x - b[i]);
            if (d <= best) { best = d; best_i = i; }
        }
        if (best_i == b.size()) return false;
        b.erase(b.begin() + static_cast<long>(best_i));
    }
    return true;
}

} // namespace weylzeta

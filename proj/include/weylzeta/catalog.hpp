/*
 * catalog.hpp
 * -----------
 * The built-in operator families:
 *
 *   bessel(nu)            z^2 d^2 + z d + z^2 - nu^2
 *   gauss(a, b, c)        z(1-z) d^2 + (c - (a+b+1)z) d - a b
 *   katz(n, m, ...)       gamma prod_i (th - alpha_i) - z prod_j (th - beta_j),  n > m >= 0
 *
 * The katz constructor works in Euler form, so it also attaches the
 * factored indicial data it knows by construction: roots alpha_i at the
 * origin, and roots 1 + alpha_i at infinity on the Fourier side (where the
 * transformed operator is regular). Hints are verified against the computed
 * indicial polynomial before every use.
 */
#pragma once

#include <string>
#include <vector>

#include "exponents.hpp"

namespace weylzeta {

struct CatalogOperator {
    std::string family;
    WeylOp op;
    HintSet hints;
    std::vector<std::string> parameters;
};

inline CatalogOperator catalog_bessel(const std::string& nu = "nu") {
    WeylOp z = WeylOp::variable(), d = WeylOp::derivative();
    PolyScalar nu2 = PolyScalar::parameter(nu, 2);
    WeylOp p = z * z * d * d + z * d + z * z - WeylOp::scalar(nu2);
    return {"bessel", p, {}, {nu}};
}

inline CatalogOperator catalog_gauss(const std::string& alpha = "alpha",
                                     const std::string& beta = "beta",
                                     const std::string& gamma = "gamma") {
    WeylOp z = WeylOp::variable(), d = WeylOp::derivative();
    PolyScalar a = PolyScalar::parameter(alpha), b = PolyScalar::parameter(beta),
               c = PolyScalar::parameter(gamma);
    WeylOp p = (z - z * z) * (d * d) + WeylOp::scalar(c) * d - (a + b + PolyScalar(1)) * (z * d) -
               WeylOp::scalar(a * b);
    return {"gauss", p, {}, {alpha, beta, gamma}};
}

inline CatalogOperator catalog_katz(int n, int m, const std::string& alpha_prefix = "alpha",
                                    const std::string& beta_prefix = "beta",
                                    const std::string& gamma = "gamma") {
    if (!(n > m && m >= 0)) throw std::invalid_argument("katz family needs n > m >= 0");
    WeylOp theta = WeylOp::euler();
    PolyScalar g = PolyScalar::parameter(gamma);
    std::vector<std::string> params;
    WeylOp first = WeylOp::scalar(g);
    std::vector<ExponentQ> alpha_roots, alpha_roots_shifted;
    for (int i = 1; i <= n; ++i) {
        std::string name = alpha_prefix + std::to_string(i);
        params.push_back(name);
        first = first * (theta - WeylOp::scalar(PolyScalar::parameter(name)));
        alpha_roots.push_back(ExponentQ::parameter(name));
        alpha_roots_shifted.push_back(ExponentQ::parameter(name) + ExponentQ(1));
    }
    WeylOp second = WeylOp::variable();
    for (int j = 1; j <= m; ++j) {
        std::string name = beta_prefix + std::to_string(j);
        params.push_back(name);
        second = second * (theta - WeylOp::scalar(PolyScalar::parameter(name)));
    }
    params.push_back(gamma);
    WeylOp p = first - second;
    HintSet hints{
        {VarSide::Z, LocalPoint::origin(), g, alpha_roots},
        {VarSide::W, LocalPoint::infinity(), g, alpha_roots_shifted},
    };
    return {"katz", p, hints, params};
}

} // namespace weylzeta

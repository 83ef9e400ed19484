/*
 * weylzeta.hpp
 * ------------
 * Umbrella header: exact monodromy-at-infinity eigenvalue data for
 * operators in the one-variable Weyl algebra and their Fourier transforms,
 * plus the monodromy zeta function calculus.
 */
#pragma once

#include "catalog.hpp"
#include "exponent.hpp"
#include "exponents.hpp"
#include "newton.hpp"
#include "numeric.hpp"
#include "parse.hpp"
#include "polyscalar.hpp"
#include "rational.hpp"
#include "scenario.hpp"
#include "weyl.hpp"
#include "zeta.hpp"

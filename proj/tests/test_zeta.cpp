#include <catch_amalgamated.hpp>

#include <complex>

#include "testutil.hpp"

using namespace weylzeta;
using wztest::rand_assignment;
using wztest::rand_class;
using wztest::rand_zeta;
using wztest::zeta_eval_at;

namespace {

const ExpClass one_cls = ExpClass::one();
ExpClass cls(const std::string& name, long long coeff) {
    return ExpClass(ExponentQ::parameter(name, Rational(coeff)));
}

// Brute-force truncated power series of prod(1 - lambda_i t^m)^(+-1) by
// naive polynomial multiplication / long division; the independent oracle
// behind the factored series evaluator.
std::vector<std::complex<double>> brute_series(
    const std::vector<std::complex<double>>& lambdas, int m, int sign, int n) {
    std::vector<std::complex<double>> acc(static_cast<std::size_t>(n), 0.0);
    acc[0] = 1.0;
    for (const auto& lam : lambdas) {
        if (sign > 0) {
            std::vector<std::complex<double>> next(acc.size(), 0.0);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i];
                if (i + static_cast<std::size_t>(m) < acc.size())
                    next[i + static_cast<std::size_t>(m)] -= lam * acc[i];
            }
            acc = std::move(next);
        } else {
            // divide by (1 - lam t^m): schoolbook long division
            std::vector<std::complex<double>> q(acc.size(), 0.0);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                q[i] = acc[i];
                if (i + static_cast<std::size_t>(m) < acc.size())
                    acc[i + static_cast<std::size_t>(m)] += lam * q[i];
            }
            acc = std::move(q);
        }
    }
    return acc;
}

} // namespace

TEST_CASE("factored products and inverses") {
    ZetaFunction f = ZetaFunction::factor(one_cls, 1);
    REQUIRE(zeta_mul(f, zeta_pow(f, -1)) == zeta_one());
    ZetaFunction g = ZetaFunction::factor(cls("alpha", -1), 1, -1);
    REQUIRE(g.factors().size() == 1);
    REQUIRE(g.factors().begin()->second == -1);
    ZetaFunction h = zeta_mul(ZetaFunction::factor(one_cls, 3), f);
    REQUIRE(h.factors().size() == 2); // distinct keys stay unmerged
    REQUIRE(h.degree() == 4);
}

TEST_CASE("variable inversion") {
    ZetaFunction f = ZetaFunction::factor(one_cls, 1); // 1 - t
    ZetaFunction inv = zeta_invert_variable(f);
    REQUIRE(inv.lead() == ExpClass::minus_one());
    REQUIRE(inv.lead_power() == -1);
    REQUIRE(inv.factors() == f.factors());

    ExpClass c = cls("alpha", 1);
    ZetaFunction g = ZetaFunction::factor(c, 3);
    ZetaFunction ginv = zeta_invert_variable(g);
    REQUIRE(ginv.lead() == c.negated());
    REQUIRE(ginv.lead_power() == -3);
    REQUIRE(ginv.factors().count({c.inverse(), 3}) == 1);

    for (int i = 0; i < 200; ++i) {
        ZetaFunction z = rand_zeta();
        REQUIRE(zeta_invert_variable(zeta_invert_variable(z)) == z);
    }
}

TEST_CASE("tilde transform") {
    ZetaFunction f = ZetaFunction::factor(one_cls, 1); // 1 - t
    ZetaFunction tf = zeta_tilde(f);                   // t - 1 = (-1)(1 - t)
    REQUIRE(tf.lead() == ExpClass::minus_one());
    REQUIRE(tf.lead_power() == 0);
    REQUIRE(tf.factors() == f.factors());
    REQUIRE(zeta_tilde(zeta_one()) == zeta_one());
    // involution and degree preservation on zeta functions with trivial
    // t-power in front (every monodromy zeta function has ord_0 = 0)
    for (int i = 0; i < 500; ++i) {
        ZetaFunction z = rand_zeta(false);
        REQUIRE(zeta_tilde(zeta_tilde(z)) == z);
        REQUIRE(zeta_tilde(z).degree() == z.degree());
    }
}

TEST_CASE("tilde agrees with pointwise evaluation") {
    auto assign = rand_assignment(wztest::param_pool());
    for (int i = 0; i < 50; ++i) {
        ZetaFunction z = rand_zeta(false);
        ZetaFunction tz = zeta_tilde(z);
        std::complex<double> t0(0.37 + 0.01 * i, 0.21);
        std::complex<double> lhs = zeta_eval_at(tz, assign, t0);
        std::complex<double> rhs =
            std::pow(t0, double(z.degree())) * zeta_eval_at(z, assign, 1.0 / t0);
        REQUIRE(std::abs(lhs - rhs) < 1e-8 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("zeta functions form an abelian group with degree homomorphism") {
    for (int i = 0; i < 500; ++i) {
        ZetaFunction a = rand_zeta(), b = rand_zeta(), c = rand_zeta();
        REQUIRE(zeta_mul(zeta_mul(a, b), c) == zeta_mul(a, zeta_mul(b, c)));
        REQUIRE(zeta_mul(a, b) == zeta_mul(b, a));
        REQUIRE(zeta_mul(a, zeta_one()) == a);
        REQUIRE(zeta_mul(a, zeta_pow(a, -1)) == zeta_one());
        REQUIRE(zeta_mul(a, b).degree() == a.degree() + b.degree());
        REQUIRE(zeta_pow(a, 3).degree() == 3 * a.degree());
    }
}

TEST_CASE("monomial zeta values") {
    REQUIRE(acampo_monomial({3}) == ZetaFunction::factor(one_cls, 3));
    REQUIRE(acampo_monomial({2, 5}) == zeta_one());
    REQUIRE(acampo_monomial({1}) == ZetaFunction::factor(one_cls, 1));
    REQUIRE_THROWS_AS(acampo_monomial({}), std::invalid_argument);
    REQUIRE_THROWS_AS(acampo_monomial({0}), std::invalid_argument);
    REQUIRE(multi_monomial_zeta(2) == zeta_one());
    REQUIRE(multi_monomial_zeta(3) == zeta_one());
    REQUIRE_THROWS_AS(multi_monomial_zeta(1), std::invalid_argument);
}

TEST_CASE("local system zeta values") {
    ExpClass x = cls("alpha", 1);
    REQUIRE(local_system_zeta(1, 2, {x}) == ZetaFunction::factor(x, 2));
    REQUIRE(local_system_zeta(2, 1, {x, x}) == zeta_one());
    ExpClass y = cls("beta", 1);
    REQUIRE(local_system_zeta(1, 1, {x, y}) ==
            zeta_mul(ZetaFunction::factor(x, 1), ZetaFunction::factor(y, 1)));
}

TEST_CASE("local system zeta matches det(id - t^m A) for random diagonal A") {
    for (int trial = 0; trial < 40; ++trial) {
        int r = wztest::rand_int(1, 5), m = wztest::rand_int(1, 4);
        std::vector<ExpClass> eigs;
        for (int i = 0; i < r; ++i) eigs.push_back(rand_class());
        auto assign = rand_assignment(wztest::param_pool());
        std::vector<std::complex<double>> lambdas;
        for (const auto& e : eigs) lambdas.push_back(e.eval(assign));
        const int n = 16;
        auto expected = brute_series(lambdas, m, +1, n);
        ZetaFunction z = local_system_zeta(1, m, eigs);
        auto got = z.series(assign, n);
        REQUIRE(z.series_start() == 0);
        for (int i = 0; i < n; ++i)
            REQUIRE(std::abs(got[static_cast<std::size_t>(i)] -
                             expected[static_cast<std::size_t>(i)]) < 1e-9);
    }
}

TEST_CASE("euler integration over strata") {
    ZetaFunction za = ZetaFunction::factor(cls("alpha", -1), 1);
    ZetaFunction zb = ZetaFunction::factor(cls("alpha", -3), 1);
    ZetaFunction z = euler_integral({{"a", -1, za}, {"b", -1, zb}});
    REQUIRE(z == zeta_mul(za.pow(-1), zb.pow(-1)));
    REQUIRE(euler_integral({{"zero", 0, rand_zeta()}}) == zeta_one());
    ZetaFunction f = ZetaFunction::factor(one_cls, 1);
    REQUIRE(euler_integral({{"double", 2, f}}) == f.pow(2));
}

TEST_CASE("euler characteristic of smooth hypersurfaces") {
    for (int N = 1; N <= 10; ++N) REQUIRE(chi_hypersurface(N, 1) == N);
    REQUIRE(chi_hypersurface(2, 2) == 2); // smooth conic, a P^1
    REQUIRE(chi_hypersurface(2, 3) == 0); // elliptic curve
    REQUIRE(chi_hypersurface(3, 2) == 4); // quadric surface, P^1 x P^1
    REQUIRE_THROWS_AS(chi_hypersurface(0, 2), std::invalid_argument);
}

TEST_CASE("closed form for the f^alpha family") {
    REQUIRE(falpha_infinity_zeta(2, 2, "alpha") ==
            ZetaFunction::factor(cls("alpha", -2), 1, -1));
    REQUIRE(falpha_infinity_zeta(1, 3, "alpha") ==
            ZetaFunction::factor(cls("alpha", -3), 1, 1));
    REQUIRE(falpha_infinity_zeta(3, 3, "alpha") ==
            ZetaFunction::factor(cls("alpha", -3), 1, 4));
    REQUIRE(falpha_infinity_zeta(4, 2, "alpha") ==
            ZetaFunction::factor(cls("alpha", -2), 1, -1));
    REQUIRE(falpha_infinity_zeta_strata(2, 3, "alpha") ==
            ZetaFunction::factor(cls("alpha", -3), 1, -2));
    for (int d = 1; d <= 6; ++d)
        REQUIRE(falpha_infinity_zeta_strata(1, d, "alpha") ==
                ZetaFunction::factor(ExpClass(ExponentQ::parameter("alpha", Rational(-d))), 1, 1));
}

TEST_CASE("stratified route equals the closed form") {
    for (int N = 1; N <= 5; ++N)
        for (int d = 1; d <= 6; ++d)
            REQUIRE(falpha_infinity_zeta_strata(N, d, "alpha") ==
                    falpha_infinity_zeta(N, d, "alpha"));
}

TEST_CASE("multiplicities from factored zeta functions") {
    {
        // example: (1 - e(-a) t)(1 - e(-3a) t^3)^-1 in dimension 2
        ZetaFunction z = zeta_mul(ZetaFunction::factor(cls("alpha", -1), 1),
                                  ZetaFunction::factor(cls("alpha", -3), 3, -1));
        VirtualMultiplicity mu = multiplicities_from_zeta(z, 2);
        ExpClass b1(ExponentQ::parameter("alpha", Rational(-1)) + ExponentQ(Rational(1, 3)));
        ExpClass b2(ExponentQ::parameter("alpha", Rational(-1)) + ExponentQ(Rational(2, 3)));
        REQUIRE(mu == VirtualMultiplicity{{b1, 1}, {b2, 1}});
    }
    {
        ZetaFunction z = zeta_mul(ZetaFunction::factor(cls("alpha", -1), 1, -1),
                                  ZetaFunction::factor(cls("alpha", -3), 1, -1));
        VirtualMultiplicity mu = multiplicities_from_zeta(z, 2);
        REQUIRE(mu == VirtualMultiplicity{{cls("alpha", -1), 1}, {cls("alpha", -3), 1}});
    }
    for (int N = 1; N <= 5; ++N)
        for (int d = 2; d <= 6; ++d) {
            VirtualMultiplicity mu =
                multiplicities_from_zeta(falpha_infinity_zeta(N, d, "alpha"), N);
            long long expect = 1;
            for (int i = 0; i < N - 1; ++i) expect *= d - 1;
            REQUIRE(mu == VirtualMultiplicity{{cls("alpha", -d), expect}});
        }
}

TEST_CASE("root splitting covers all m-th roots") {
    // (1 - t^2) in dimension 1: classes 1 and -1; the unit class is dropped
    ZetaFunction z = ZetaFunction::factor(one_cls, 2);
    VirtualMultiplicity mu = multiplicities_from_zeta(z, 1);
    REQUIRE(mu == VirtualMultiplicity{{ExpClass::minus_one(), 1}});
}

TEST_CASE("multiplicity extraction is additive") {
    for (int i = 0; i < 200; ++i) {
        ZetaFunction a = rand_zeta(), b = rand_zeta();
        int N = wztest::rand_int(1, 4);
        VirtualMultiplicity sum = multiplicities_from_zeta(a, N);
        for (const auto& [cls_, m] : multiplicities_from_zeta(b, N)) {
            sum[cls_] += m;
            if (sum[cls_] == 0) sum.erase(cls_);
        }
        REQUIRE(multiplicities_from_zeta(zeta_mul(a, b), N) == sum);
    }
}

TEST_CASE("series of factored forms") {
    {
        ZetaFunction z = ZetaFunction::factor(one_cls, 1, -1); // (1-t)^-1
        auto s = z.series({}, 4);
        for (int i = 0; i < 4; ++i)
            REQUIRE(std::abs(s[static_cast<std::size_t>(i)] - 1.0) < 1e-12);
    }
    {
        // (1 - t)(1 - t^3)^-1 = 1 - t + t^3 - t^4 + ..., against long division
        ZetaFunction z = zeta_mul(ZetaFunction::factor(one_cls, 1),
                                  ZetaFunction::factor(one_cls, 3, -1));
        auto s = z.series({}, 4);
        auto expect = brute_series({{1.0, 0.0}}, 3, -1, 4);
        expect = [&] {
            // multiply by (1 - t)
            std::vector<std::complex<double>> out(4, 0.0);
            for (std::size_t i = 0; i < 4; ++i) {
                out[i] += expect[i];
                if (i + 1 < 4) out[i + 1] -= expect[i];
            }
            return out;
        }();
        REQUIRE(std::abs(expect[0] - 1.0) < 1e-12);
        REQUIRE(std::abs(expect[1] + 1.0) < 1e-12);
        REQUIRE(std::abs(expect[2]) < 1e-12);
        REQUIRE(std::abs(expect[3] - 1.0) < 1e-12);
        for (int i = 0; i < 4; ++i)
            REQUIRE(std::abs(s[static_cast<std::size_t>(i)] -
                             expect[static_cast<std::size_t>(i)]) < 1e-12);
    }
    {
        // definitional identity between tilde and t^deg * inversion
        for (int i = 0; i < 20; ++i) {
            ZetaFunction z = rand_zeta(false);
            auto assign = rand_assignment(wztest::param_pool());
            ZetaFunction lhs = zeta_tilde(z);
            ZetaFunction rhs = zeta_mul(ZetaFunction::t_power(z.degree()),
                                        zeta_invert_variable(z));
            REQUIRE(lhs == rhs);
            auto sl = lhs.series(assign, 8), sr = rhs.series(assign, 8);
            REQUIRE(lhs.series_start() == rhs.series_start());
            for (int t = 0; t < 8; ++t)
                REQUIRE(std::abs(sl[static_cast<std::size_t>(t)] -
                                 sr[static_cast<std::size_t>(t)]) < 1e-9);
        }
    }
}

TEST_CASE("series match pointwise evaluation") {
    for (int i = 0; i < 30; ++i) {
        ZetaFunction z = rand_zeta();
        auto assign = rand_assignment(wztest::param_pool());
        auto s = z.series(assign, 24);
        std::complex<double> t0(0.05, 0.03); // well inside the convergence disk
        std::complex<double> sum = 0.0, tp = std::pow(t0, double(z.series_start()));
        for (const auto& c : s) {
            sum += c * tp;
            tp *= t0;
        }
        std::complex<double> direct = zeta_eval_at(z, assign, t0);
        REQUIRE(std::abs(sum - direct) < 1e-9 * (1.0 + std::abs(direct)));
    }
}

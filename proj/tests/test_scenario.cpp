#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "testutil.hpp"

using namespace weylzeta;
using nlohmann::json;

namespace {

const std::string kFixtureDir = WEYLZETA_FIXTURE_DIR;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExpClass acls(long long coeff) {
    return ExpClass(ExponentQ::parameter("alpha", Rational(coeff)));
}

} // namespace

TEST_CASE("shipped fixtures reproduce the published zeta and multiplicities") {
    {
        auto r = run_scenario_file(kFixtureDir + "/example-4i.json");
        ZetaFunction expected = zeta_mul(ZetaFunction::factor(acls(-1), 1, -1),
                                         ZetaFunction::factor(acls(-3), 1, -1));
        REQUIRE(r.zeta == expected);
        REQUIRE(r.mu == VirtualMultiplicity{{acls(-1), 1}, {acls(-3), 1}});
    }
    {
        auto r = run_scenario_file(kFixtureDir + "/example-4ii.json");
        ZetaFunction expected = zeta_mul(ZetaFunction::factor(acls(-1), 1),
                                         ZetaFunction::factor(acls(-3), 3, -1));
        REQUIRE(r.zeta == expected);
        ExpClass b1(ExponentQ::parameter("alpha", Rational(-1)) + ExponentQ(Rational(1, 3)));
        ExpClass b2(ExponentQ::parameter("alpha", Rational(-1)) + ExponentQ(Rational(2, 3)));
        REQUIRE(r.mu == VirtualMultiplicity{{b1, 1}, {b2, 1}});
    }
    {
        auto r = run_scenario_file(kFixtureDir + "/mt3-N2-d3.json");
        REQUIRE(r.zeta == falpha_infinity_zeta(2, 3, "alpha"));
        REQUIRE(r.mu == VirtualMultiplicity{{acls(-3), 2}});
    }
}

TEST_CASE("canonical files round trip byte for byte") {
    for (const char* name : {"example-4i.json", "example-4ii.json", "mt3-N2-d3.json"}) {
        std::string path = kFixtureDir + "/" + name;
        std::string original = slurp(path);
        Scenario s = read_scenario_file(path);
        REQUIRE(write_scenario(s) == original);
        // write . read is the identity as well
        Scenario again = read_scenario(json::parse(write_scenario(s)));
        REQUIRE(write_scenario(again) == original);
    }
}

TEST_CASE("explicit factored local zeta descriptors") {
    json j = {
        {"schema", 1},
        {"name", "inline"},
        {"ambient_dimension", 2},
        {"parameters", {"alpha"}},
        {"strata",
         {{{"name", "s"},
           {"chi", 1},
           {"local",
            {{"type", "explicit"},
             {"lead_exponent", "1/2"},
             {"lead_power", 0},
             {"factors", {{{"c", "-3*alpha"}, {"m", 3}, {"e", -1}}}}}}}}},
    };
    auto r = run_scenario(read_scenario(j));
    REQUIRE(r.zeta.lead() == ExpClass::minus_one());
    REQUIRE(r.zeta.factors().count({acls(-3), 3}) == 1);
}

TEST_CASE("multi monomial descriptor contributes the trivial factor") {
    json j = {
        {"schema", 1},
        {"name", "inline"},
        {"ambient_dimension", 3},
        {"parameters", json::array()},
        {"strata",
         {{{"name", "s"}, {"chi", -7}, {"local", {{"type", "multi_monomial"}, {"positive_count", 2}}}}}},
    };
    auto r = run_scenario(read_scenario(j));
    REQUIRE(r.zeta == zeta_one());
    REQUIRE(r.mu.empty());
}

TEST_CASE("schema violations are rejected") {
    auto base = json::parse(slurp(kFixtureDir + "/example-4i.json"));

    json bad_version = base;
    bad_version["schema"] = 2;
    REQUIRE_THROWS_AS(read_scenario(bad_version), SchemaError);

    json undeclared = base;
    undeclared["strata"][0]["local"]["eigen_exponents"][0] = "-3*undeclared_name";
    REQUIRE_THROWS_AS(run_scenario(read_scenario(undeclared)), SchemaError);

    json bad_m = base;
    bad_m["strata"][0]["local"]["m"] = 0;
    REQUIRE_THROWS_AS(run_scenario(read_scenario(bad_m)), SchemaError);

    json bad_chi = base;
    bad_chi["strata"][0]["chi"] = "minus one";
    REQUIRE_THROWS_AS(read_scenario(bad_chi), SchemaError);

    json bad_type = base;
    bad_type["strata"][0]["local"]["type"] = "mystery";
    REQUIRE_THROWS_AS(run_scenario(read_scenario(bad_type)), SchemaError);

    json bad_dim = base;
    bad_dim["ambient_dimension"] = 0;
    REQUIRE_THROWS_AS(read_scenario(bad_dim), SchemaError);

    REQUIRE_THROWS_AS(read_scenario_file(kFixtureDir + "/does-not-exist.json"), SchemaError);

    json bad_exponent = base;
    bad_exponent["strata"][0]["local"]["eigen_exponents"][0] = "3*";
    REQUIRE_THROWS_AS(run_scenario(read_scenario(bad_exponent)), SchemaError);
}

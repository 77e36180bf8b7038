#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qfock/cli.hpp"

using namespace qfock;

namespace {

struct Run {
    int rc;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc = cli_run(args, out, err);
    return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gamma prints the central polynomial") {
    auto r = run({"gamma", "--n", "2", "--a", "1"});
    CHECK(r.rc == 0);
    CHECK(r.out == "1 + q^2\n");
    CHECK(r.err.empty());

    CHECK(run({"gamma", "--n", "3", "--a", "2"}).out == "2 + 2*q^4 + 2*q^8\n");

    auto j = run({"gamma", "--n", "2", "--a", "1", "--format", "json"});
    CHECK(j.rc == 0);
    auto doc = nlohmann::json::parse(j.out);
    nlohmann::json want = nlohmann::json::array();
    want.push_back({0, "1"});
    want.push_back({2, "1"});
    CHECK(doc == want);
}

TEST_CASE("vector subcommands render canonically") {
    auto act = run({"act", "--n", "2", "--op", "F(1)*F(0)", "--vec", "vac(0)"});
    CHECK(act.rc == 0);
    CHECK(act.out == "u(2)^vac(-1) + (q^-1)*u(1)^u(0)^vac(-2)\n");

    auto zero = run({"act", "--n", "2", "--op", "E(1)", "--vec", "vac(0)"});
    CHECK(zero.rc == 0);
    CHECK(zero.out == "(0)*vac(0)\n");

    auto no = run({"normal-order", "--n", "2", "--vec", "u(0)^u(3)^vac(-2)"});
    CHECK(no.rc == 0);
    CHECK(no.out == "(-1*q)*u(3)^u(0)^vac(-2) + (-1 + q^2)*u(2)^u(1)^vac(-2)\n");

    auto b = run({"bop", "--n", "2", "--a", "-1", "--vec", "vac(0)"});
    CHECK(b.rc == 0);
    CHECK(b.out == "u(2)^vac(-1) + (-1*q)*u(1)^u(0)^vac(-2)\n");

    auto js = run({"act", "--n", "2", "--op", "F(1)*F(0)", "--vec", "vac(0)", "--format", "json"});
    CHECK(js.rc == 0);
    auto doc = nlohmann::json::parse(js.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["charge"] == 0);
    CHECK(doc[0]["head"] == nlohmann::json::array({2}));
    CHECK(doc[0]["coeff"] == nlohmann::json::array({{0, "1"}}));
    CHECK(doc[1]["head"] == nlohmann::json::array({1, 0}));
    CHECK(doc[1]["coeff"] == nlohmann::json::array({{-1, "1"}}));
}

TEST_CASE("basis lists canonical wedges in term order") {
    auto r = run({"basis", "--charge", "0", "--a", "2"});
    CHECK(r.rc == 0);
    CHECK(r.out == "u(2)^vac(-1)\nu(1)^u(0)^vac(-2)\n");

    auto j = run({"basis", "--charge", "1", "--a", "1", "--format", "json"});
    auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["charge"] == 1);
    CHECK(doc[0]["head"] == nlohmann::json::array({2}));
}

TEST_CASE("singular reports partition-number dimensions") {
    auto r = run({"singular", "--n", "2", "--charge", "0", "--depth", "2", "--format", "json"});
    CHECK(r.rc == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["charge"] == 0);
    CHECK(doc["dimensions"] == nlohmann::json::array({1, 1, 2}));
    CHECK(doc["vectors"].size() == 3);

    auto t = run({"singular", "--n", "2", "--charge", "0", "--depth", "1"});
    CHECK(t.rc == 0);
    CHECK(t.out ==
          "a=0: dim 1\n"
          "  vac(0)\n"
          "a=1: dim 1\n"
          "  u(2)^vac(-1) + (-1*q)*u(1)^u(0)^vac(-2)\n");
}

TEST_CASE("two-point series and certificates") {
    auto om = run({"two-point", "--n", "2", "--which", "omega", "--order", "2"});
    CHECK(om.rc == 0);
    CHECK(om.out == "w^0: 1\nw^1: -1 + q^2\nw^2: -1*q^2 + q^4\n");

    auto xi = run({"two-point", "--n", "2", "--which", "xi", "--order", "1"});
    CHECK(xi.rc == 0);
    CHECK(xi.out == "w^0: 1\nw^1: -1 / 1 + q^2\n");

    auto phi = run({"two-point", "--n", "2", "--which", "phi", "--order", "1", "--kmax", "9",
                    "--format", "json"});
    CHECK(phi.rc == 0);
    auto doc = nlohmann::json::parse(phi.out);
    REQUIRE(doc.size() == 2);
    CHECK(doc[0] == nlohmann::json::array({0, "1"}));

    CHECK(run({"two-point", "--n", "2", "--kmax", "10"}).rc == 0);

    auto bad = run({"two-point", "--n", "2", "--kmax", "3"});
    CHECK(bad.rc == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verification suites pass and are deterministic") {
    auto r1 = run({"verify", "relations", "--n", "2", "--samples", "3", "--seed", "5"});
    CHECK(r1.rc == 0);
    CHECK(r1.out.find("FAIL") == std::string::npos);
    CHECK(r1.out.find("ok   ") != std::string::npos);

    auto r2 = run({"verify", "relations", "--n", "2", "--samples", "3", "--seed", "5"});
    CHECK(r2.out == r1.out);

    auto j = run({"verify", "gamma", "--n", "3", "--format", "json"});
    CHECK(j.rc == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["checks"].size() > 0);

    CHECK(run({"verify", "classical", "--n", "3", "--seed", "2"}).rc == 0);
    CHECK(run({"verify", "all", "--n", "2", "--samples", "2", "--seed", "7"}).rc == 0);
}

TEST_CASE("hecke oracle subcommand") {
    auto r = run({"hecke-oracle", "--n", "2", "--N", "2", "--samples", "3", "--seed", "1"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("antisymmetrized words") != std::string::npos);
}

TEST_CASE("serial flag leaves the answer unchanged") {
    std::vector<std::string> base{"bop", "--n", "3", "--a", "2", "--vec", "u(4)^u(1)^vac(-2)"};
    auto par = run(base);
    base.push_back("--serial");
    auto ser = run(base);
    CHECK(par.rc == 0);
    CHECK(ser.rc == 0);
    CHECK(ser.out == par.out);
}

TEST_CASE("usage and input errors exit with code 2") {
    CHECK(run({}).rc == 2);
    CHECK(run({"frobnicate"}).rc == 2);
    CHECK(run({"act", "--n", "2", "--op", "E(0)"}).rc == 2);
    CHECK(run({"gamma", "--format", "yaml"}).rc == 2);
    CHECK(run({"verify", "bogus"}).rc == 2);
    CHECK(run({"gamma", "--n", "2", "--a", "0"}).rc == 2);
    CHECK(run({"act", "--n", "1", "--op", "D", "--vec", "vac(0)"}).rc == 2);
    CHECK(run({"normal-order", "--n", "2", "--vec", "vac(0) + vac(1)"}).rc == 2);
    CHECK(run({"basis", "--charge", "0", "--a", "-1"}).rc == 2);

    auto pe = run({"act", "--n", "2", "--op", "E(9)", "--vec", "vac(0)"});
    CHECK(pe.rc == 2);
    CHECK(pe.err.find("error:") != std::string::npos);
    CHECK(pe.err.find("position") != std::string::npos);

    CHECK(run({"--help"}).rc == 0);
    CHECK(run({"act", "--help"}).rc == 0);
}

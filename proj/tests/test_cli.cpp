#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qdissect/cli.hpp"
#include "qdissect/report.hpp"

using namespace qdissect;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string a_spec = "(q,q^4;q^5) (q^6,q^9;q^15)^2";

} // namespace

TEST_CASE("prove exits 0 on certification")
{
    const auto r = call({"prove", a_spec, "--mod", "5", "--residue", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("certified", 0) == 0);
    CHECK(r.err.empty());
}

TEST_CASE("verify exits 1 on refutation")
{
    const auto r = call({"verify", a_spec, "--mod", "5", "--residue", "1", "--order", "200"});
    CHECK(r.code == 1);
    CHECK(r.out.find("n=1 coeff=-1") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2")
{
    CHECK(call({"expand", "(q;q^1)"}).code == 2);
    CHECK(call({"expand", "(q,q^3;q^5)"}).err.find("exponents do not sum to modulus") != std::string::npos);
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"verify", a_spec, "--mod", "5"}).code == 2);
    CHECK(call({"verify", a_spec, "--mod", "5", "--residue", "5"}).code == 2);
    CHECK(call({"verify", a_spec, "--mod", "5", "--residue", "3", "--order", "3"}).code == 2);
    CHECK(call({"scan", "--family", "nonexistent"}).code == 2);
    CHECK(call({"scan", "--family", "c", "--order", "100"}).code == 2);
}

TEST_CASE("help exits 0")
{
    const auto r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("prove") != std::string::npos);
}

TEST_CASE("inapplicable certification exits 3")
{
    const auto r = call({"prove", "(-q,-q^4;q^5)(q,q^9;q^10)^3", "--mod", "5", "--residue", "2", "--order", "300"});
    CHECK(r.code == 3);
    CHECK(r.out.rfind("inapplicable", 0) == 0);
}

TEST_CASE("expand")
{
    const auto r = call({"expand", "(q,q^4;q^5)", "--order", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1\n1 -1\n4 -1\n5 1\n6 -1\n7 1\n");
    const auto j = call({"expand", "(q,q^4;q^5)", "--order", "7", "--json"});
    CHECK(Json::parse(j.out) == Json::parse(R"({"lo":0,"order":7,"coeffs":[[0,"1"],[1,"-1"],[4,"-1"],[5,"1"],[6,"-1"],[7,"1"]]})"));
}

TEST_CASE("QDISSECT_ORDER sets the default order")
{
    setenv("QDISSECT_ORDER", "12", 1);
    const auto r = call({"expand", "(q,q^4;q^5)", "--json"});
    CHECK(Json::parse(r.out)["order"] == 12);
    CHECK(Json::parse(call({"expand", "(q,q^4;q^5)", "--json", "--order", "3"}).out)["order"] == 3);
    setenv("QDISSECT_ORDER", "many", 1);
    CHECK(call({"expand", "(q,q^4;q^5)"}).code == 2);
    unsetenv("QDISSECT_ORDER");
}

TEST_CASE("prove --json")
{
    const auto r = call({"prove", a_spec, "--mod", "5", "--residue", "3", "--order", "300", "--json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["status"] == "certified");
    CHECK(j["groups"].size() == 2);
    for (const auto &g : j["groups"]) {
        CHECK(g["mode"] == "certified");
        CHECK(g["status"] == "cancelled");
        CHECK(g["residual_first_exponent"].is_null());
    }
}

TEST_CASE("catalog output is deterministic")
{
    const auto one = call({"catalog", "--json", "--order", "200", "--jobs", "1"});
    const auto many = call({"catalog", "--json", "--order", "200", "--jobs", "4"});
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
    const Json j = Json::parse(one.out);
    CHECK(j["claims"].size() == 65);
    CHECK(j["summary"]["certified"] == 59);
    CHECK(j["summary"]["inapplicable"] == 6);
}

TEST_CASE("scan with a template file")
{
    const std::string path = "qdissect_cli_template.json";
    {
        std::ofstream f(path);
        f << R"({"name":"kk","moduli":[7,21],"powers":[1,1],"offsets":[[1,1],[9,9]],"signs":["plus","minus"],"t":7,"order":300})";
    }
    const auto r = call({"scan", "--family", path, "--json"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j["findings"].size() >= 1);
    CHECK(j["findings"][0]["catalog_id"] == "m7-k");
    CHECK(j["findings"][0]["evidence"] == "certified");
}

TEST_CASE("scan text output")
{
    const auto r = call({"scan", "--family", "c", "--order", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(q^2,q^3;q^5)^2 (q,q^14;q^15) t=5 r=3 certified m5-c1-plus") != std::string::npos);
}

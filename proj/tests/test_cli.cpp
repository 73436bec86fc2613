#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

using racgk::cli::run;
using Json = nlohmann::json;

namespace {

const std::string kData = RACGK_DATA_DIR;

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
    const auto o = invoke(std::move(args));
    REQUIRE(o.status == 0);
    return Json::parse(o.out);
}

}  // namespace

TEST_CASE("ktheory on the three-vertex path") {
    const auto j = invoke_json({"ktheory", kData + "/path3.graph", "--q", "1"});
    CHECK(j["rank"] == 6);
    CHECK(j["k1"] == 0);
    CHECK(j["pairing"] == Json({"1/1", "1/2", "1/2", "1/2", "1/4", "1/4"}));
    CHECK(j["basis"][4] == Json({"a", "b"}));
    CHECK(j["trace_image"] == "1/4");
}

TEST_CASE("ktheory with per-vertex parameters") {
    const auto j = invoke_json({"ktheory", kData + "/path3.graph", "--q", "a=1/3,b=1/2,c=1"});
    CHECK(j["pairing"] == Json({"1/1", "3/4", "2/3", "1/2", "1/2", "1/3"}));
    CHECK(j["trace_image"] == "1/12");
}

TEST_CASE("classify") {
    const auto j = invoke_json({"classify", "-n", "3", "--q1", "6/7", "--q2", "5/8"});
    CHECK(j["verdict"] == "InvariantIsomorphic_AlgebraOpen");
    CHECK(j["order1"] == 13);
    CHECK(j["order2"] == 13);
    CHECK(j["regime1"] == "Simple");
    const auto mismatch = invoke_json({"classify", "-n", "3", "--q1", "1/2", "--q2", "2/3"});
    CHECK(mismatch["verdict"] == "NotIsomorphic_RegimeMismatch");
}

TEST_CASE("growth") {
    const auto j = invoke_json({"growth", kData + "/free3.graph", "-L", "3"});
    CHECK(j["growth"] == Json({1, 3, 6, 12}));
    const auto triangle = invoke_json({"growth", kData + "/triangle.graph", "-L", "5"});
    CHECK(triangle["growth"] == Json({1, 3, 3, 1, 0, 0}));
}

TEST_CASE("cliques and compare") {
    const auto c = invoke_json({"cliques", kData + "/path3_point.graph"});
    CHECK(c["count"] == 7);
    CHECK(c["recursive_count"] == 7);
    CHECK(c["max_clique_size"] == 2);
    const auto cmp = invoke_json({"compare", kData + "/path3_point.graph", kData + "/two_edges.graph"});
    CHECK(cmp["verdict"] == "Isomorphic");
    const auto differ =
        invoke_json({"compare", kData + "/path3.graph", kData + "/path3.graph", "--q1", "1", "--q2", "1/2"});
    CHECK(differ["verdict"] == "NotIsomorphic");
}

TEST_CASE("verify") {
    const auto j = invoke_json({"verify", kData + "/free3.graph", "--q", "1/4", "-L", "3"});
    CHECK(j["exact"] == true);
    CHECK(j["passed"] == true);
    CHECK(j["relations"]["involution"] == 0.0);
    CHECK(j["traces"].size() == 4);
    CHECK(j["series"].size() == 6);
    CHECK(j["series"][0]["closed_form"] == "5/2");

    const auto inexact = invoke_json({"verify", kData + "/path3.graph", "--q", "1/2"});
    CHECK(inexact["exact"] == false);
    CHECK(inexact["passed"] == true);
    CHECK(inexact["series"].is_null());
    CHECK(inexact["radius"] == 4);
}

TEST_CASE("text output") {
    const auto o = invoke({"ktheory", kData + "/path3.graph", "--format", "text"});
    CHECK(o.status == 0);
    CHECK(o.out.find("K0 = Z^6") != std::string::npos);
    CHECK(o.out.find("[p_{a,b}]  1/4") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"verify", kData + "/path3.graph", "--q", "a=1/3,b=1/2,c=1/5", "-L", "4"};
    CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("exit statuses") {
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"bogus"}).status == 2);
    CHECK(invoke({"ktheory", kData + "/missing.graph"}).status == 2);
    CHECK(invoke({"ktheory", kData + "/bad_edge.graph"}).status == 2);
    CHECK(invoke({"ktheory", kData + "/path3.graph", "--q", "x/y"}).status == 2);
    CHECK(invoke({"ktheory", kData + "/path3.graph", "--q", "a=1/2,z=1/3"}).status == 2);
    CHECK(invoke({"growth", kData + "/free3.graph"}).status == 2);
    CHECK(invoke({"ktheory", kData + "/path3.graph", "--format", "xml"}).status == 2);

    const auto domain = invoke({"classify", "-n", "2", "--q1", "1/2", "--q2", "1/3"});
    CHECK(domain.status == 1);
    CHECK(domain.err.find("n must be at least 3") != std::string::npos);
    CHECK(invoke({"ktheory", kData + "/path3.graph", "--q", "3/2"}).status == 1);
    CHECK(invoke({"ktheory", kData + "/path3.graph", "--q", "a=1/2"}).status == 1);
    CHECK(invoke({"growth", kData + "/free3.graph", "-L", "30"}).status == 1);
    CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("element cap from flag and environment") {
    CHECK(invoke({"growth", kData + "/free3.graph", "-L", "6", "--cap", "50"}).status == 1);
    ::setenv("RACGK_ELEMENT_CAP", "50", 1);
    CHECK(invoke({"growth", kData + "/free3.graph", "-L", "6"}).status == 1);
    CHECK(invoke({"growth", kData + "/free3.graph", "-L", "6", "--cap", "1000"}).status == 0);
    ::setenv("RACGK_ELEMENT_CAP", "lots", 1);
    CHECK(invoke({"growth", kData + "/free3.graph", "-L", "2"}).status == 2);
    ::unsetenv("RACGK_ELEMENT_CAP");
    CHECK(invoke({"growth", kData + "/free3.graph", "-L", "6"}).status == 0);
}

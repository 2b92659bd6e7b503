#include "doctest.h"

#include <sstream>

#include "fthresh/cli.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/gallery.hpp"
#include "fthresh/io.hpp"

using namespace fthresh;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("filtration descriptors round-trip") {
    std::vector<std::string> docs{
        R"({"rule":"ordinary","ideal":"x1^2;x2^3"})",
        R"({"rule":"symbolic","ideal":["x1*x2","x2*x3"]})",
        R"({"rule":"integral_closure","ideal":[[3,0],[0,2]]})",
        R"({"rule":"ceiling","ideal":"m","n":2,"beta":"10/7"})",
        R"({"rule":"prime_power_intersection","n":3,"components":[{"vars":[1,2],"omega":1},{"vars":[2,3],"omega":2}]})",
        R"({"rule":"product","left":{"rule":"ordinary","ideal":"x1"},"right":{"rule":"symbolic","ideal":"x2*x3"}})",
        R"({"rule":"intersection","left":{"rule":"ordinary","ideal":"x1;x2"},"right":{"rule":"ordinary","ideal":"x3"}})",
        R"({"rule":"binomial_sum","left":{"rule":"ordinary","ideal":"x1"},"right":{"rule":"ordinary","ideal":"x2"}})",
        R"({"rule":"veronese","degree":2,"inner":{"rule":"symbolic","ideal":"x1*x2;x2*x3;x1*x3"}})",
        R"({"rule":"two_step","a":"x1;x2^2","b":"x1^2;x1*x2^2;x2^3"})",
    };
    for (const auto& d : docs) {
        INFO(d);
        auto F = filtration_from_json(json::parse(d));
        auto j = filtration_to_json(F);
        auto G = filtration_from_json(j);
        CHECK(filtration_to_json(G) == j);
        for (std::uint64_t r = 0; r <= 3; ++r) CHECK(F.generators(r) == G.generators(r));
    }
    CHECK(filtration_from_json(json::parse(docs[5])).ambient() == 3);
    CHECK_THROWS_AS(filtration_from_json(json::parse(R"({"rule":"nope","ideal":"x1"})")), DomainError);
    CHECK_THROWS_AS(filtration_from_json(json::parse(R"({"ideal":"x1"})")), DomainError);
}

TEST_CASE("hypergraph and valuation JSON") {
    auto H = hypergraph_from_json(json::parse(R"({"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]})"));
    CHECK(hypergraph_to_json(H)["edges"].size() == 5);
    auto v = valuation_from_json(json::parse(R"({"weights":["1/2","3"]})"));
    CHECK(valuation_to_json(v)["weights"][0] == "1/2");
}

TEST_CASE("cli: documented invocations") {
    auto a = cli({"fthreshold", "--ideal", "x1^2;x2^3", "--target", "m"});
    CHECK(a.code == 0);
    auto ja = json::parse(a.out);
    CHECK(ja["value"] == "5/6");
    auto b = cli({"symbolic", "--ideal", "x1*x2;x2*x3;x1*x3"});
    CHECK(b.code == 0);
    auto jb = json::parse(b.out);
    CHECK(jb["value"] == "2");
    CHECK(jb["method"] == "symbolic_squarefree");
}

TEST_CASE("cli: stdin, formats and decimals") {
    auto a = cli({"nu-seq", "-p", "2", "--emax", "3", "--format", "csv"}, "x1;x2;x3\n");
    CHECK(a.code == 0);
    CHECK(a.out == "e,q,nu,ratio\n0,1,0,0\n1,2,3,3/2\n2,4,9,9/4\n3,8,21,21/8\n");
    auto b = cli({"fthreshold", "--decimal", "3"}, R"({"rule":"ceiling","ideal":"m","n":2,"beta":"10/7"})");
    CHECK(b.code == 0);
    auto jb = json::parse(b.out);
    CHECK(jb["upper"] == "7/5");
    CHECK(jb["upper_decimal"] == "1.400");
    auto c = cli({"nu", "--filtration", R"({"rule":"symbolic","ideal":"x1*x2;x2*x3;x1*x3"})", "-p", "3", "-e", "2",
                  "--format", "table"});
    CHECK(c.out.find("16") != std::string::npos);
}

TEST_CASE("cli: errors and exit codes") {
    auto a = cli({"fthreshold", "--ideal", "x1^2;y2"});
    CHECK(a.code == 1);
    auto ja = json::parse(a.out);
    CHECK(ja["error"]["type"] == "parse");
    CHECK(ja["error"]["message"].get<std::string>().find("position 5") != std::string::npos);
    CHECK(cli({"symbolic", "--ideal", "x1^2"}).code == 1);
    CHECK(cli({"nu"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"nu", "--ideal", "x1", "--filtration", "{}"}).code == 2);
    CHECK(cli({"nu", "--ideal", "x1", "-p", "4"}).code == 1);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli: output is deterministic") {
    std::vector<std::string> args{"nu-seq", "--ideal", "x1*x2;x2*x3;x3*x4;x1*x4", "-p", "3", "--emax", "4"};
    CHECK(cli(args).out == cli(args).out);
}

TEST_CASE("gallery: filter, override and negative control") {
    auto all = verify_examples();
    CHECK(all.size() == gallery_names().size());
    for (const auto& r : all) {
        INFO(r.name << ": " << r.computed);
        CHECK(r.pass);
    }
    GalleryOptions one;
    one.filter = "sym-ord-exm/symbolic threshold";
    CHECK(verify_examples(one).size() == 1);
    one.overrides["sym-ord-exm/symbolic threshold"] = "3";
    auto bad = verify_examples(one);
    REQUIRE(bad.size() == 1);
    CHECK_FALSE(bad[0].pass);
    auto r = cli({"verify-examples", "--only", "non-exam/threshold", "--expect", "non-exam/threshold=1"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(cli({"verify-examples", "--only", "non-exam", "--format", "json"}).code == 0);
}

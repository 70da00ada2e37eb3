#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "golden.hpp"
#include "oracles.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = flagcalc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("golden fixtures")
{
    for (const auto& g : golden::cases()) {
        CAPTURE(g.file);
        auto r = run(g.args);
        CHECK(r.code == 0);
        auto expected = slurp(std::string(FLAGCALC_FIXTURE_DIR) + "/" + g.file);
        REQUIRE(!expected.empty());
        CHECK(r.out == expected);
    }
}

TEST_CASE("text output examples")
{
    CHECK(run({"tag", "reduce", "A3:2,0,2"}).out == "C2:2,0\n");
    CHECK(run({"tag", "reduce", "A3:1,0,2"}).out == "none\n");
    CHECK(run({"tag", "split", "-2,-1,-1,-1"}).out == "A3:1,0,0\n");
    CHECK(run({"tag", "restrict", "A3:1,0,2", "--marks", "2"}).out == "A1+A1:1,2\n");
    CHECK(run({"tag", "shape", "A4:3,0,0,0"}).out == "FirstNodeOnly(3)\n");
    CHECK(run({"tag", "nest", "A3:1,0,1", "--first", "1", "--second", "3"}).out == "admissible\n");
    auto roots = run({"roots", "G2"});
    CHECK(roots.code == 0);
    CHECK(roots.out.find("positive roots (6):") != std::string::npos);
}

TEST_CASE("every json output is versioned")
{
    for (const auto& g : golden::cases()) {
        if (g.file.find(".json") == std::string::npos)
            continue;
        auto j = nlohmann::json::parse(run(g.args).out);
        CHECK(j.at("schema") == 1);
    }
}

TEST_CASE("json enumeration matches the classification list")
{
    auto j = nlohmann::json::parse(run({"enumerate", "--max-rank", "12", "--format", "json"}).out);
    std::set<oracle::Entry> got;
    for (const auto& m : j.at("models")) {
        auto marks = m.at("marks").get<std::vector<int>>();
        REQUIRE(marks.size() == 2);
        got.insert({m.at("family").get<std::string>().front(), m.at("rank").get<int>(), marks[0], marks[1]});
    }
    CHECK(got == oracle::two_bundle_list(12));
    CHECK(j.at("count") == got.size());
    CHECK(run({"gp", "enumerate", "--max-rank", "12", "--format", "json"}).out ==
          run({"enumerate", "--max-rank", "12", "--format", "json"}).out);
}

TEST_CASE("output is deterministic")
{
    for (const auto& g : golden::cases())
        CHECK(run(g.args).out == run(g.args).out);
}

TEST_CASE("exit codes")
{
    CHECK(run({"--help"}).code == flagcalc::cli::kExitOk);
    CHECK(run({"tag", "--help"}).code == flagcalc::cli::kExitOk);
    CHECK(run({}).code == flagcalc::cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == flagcalc::cli::kExitUsage);
    CHECK(run({"roots"}).code == flagcalc::cli::kExitUsage);
    CHECK(run({"roots", "G2", "--format", "xml"}).code == flagcalc::cli::kExitUsage);
    CHECK(run({"roots", "Q7"}).code == flagcalc::cli::kExitUsage);
    CHECK(run({"tag", "zeros", "A3:1,x,2"}).code == flagcalc::cli::kExitUsage);

    auto r = run({"roots", "E9"});
    CHECK(r.code == flagcalc::cli::kExitDomain);
    CHECK(r.err.find("error:") == 0);
    CHECK(r.out.empty());
    CHECK(run({"drum", "build", "A4", "1", "3"}).code == flagcalc::cli::kExitDomain);
    CHECK(run({"gp", "fiber", "A3{1,2}", "--base", "3"}).code == flagcalc::cli::kExitDomain);
    CHECK(run({"tag", "split", "3,1"}).code == flagcalc::cli::kExitDomain);
    CHECK(run({"enumerate", "--max-rank", "1"}).code == flagcalc::cli::kExitDomain);
    CHECK(run({"classify", "--r-minus", "1", "--r-plus", "3", "--tag-minus", "1", "--tag-plus", "1,0,0",
               "--max-rank", "2"})
              .code == flagcalc::cli::kExitDomain);
}

TEST_CASE("marks given in raw numbering are normalized")
{
    // D3 = A3 with node 1 of D3 in the middle
    CHECK(run({"gp", "dim", "D3{1}"}).out == run({"gp", "dim", "A3{2}"}).out);
    CHECK(run({"drum", "build", "C2", "1", "2"}).code == 0);
}

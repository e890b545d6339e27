#include "hlag/cli.hpp"
#include "hlag/edge_list.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hlag;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "hlag_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("lambda of a single edge")
{
    const auto path = scratch("single.edges");
    std::ofstream(path) << "2 2 1\n1 2\n";
    const auto r = run({"lambda", "--input", path.string(), "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["lambda"].get<double>() == doctest::Approx(0.25));
    CHECK(doc["weights"] == nlohmann::json::array({0.5, 0.5}));
    CHECK(doc["support"] == nlohmann::json::array({1, 2}));
    CHECK(doc["kkt_residual"].get<double>() <= 1e-12);
    CHECK(doc["converged"] == true);

    const auto piped = run({"lambda", "--input", "-"}, "2 2 1\n1 2\n");
    CHECK(piped.out == r.out);
}

TEST_CASE("lambda reports input errors with line numbers")
{
    const auto r = run({"lambda", "--input", "-"}, "3 4 2\n1 2 3\n1 2 3\n");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(run({"lambda", "--input", scratch("missing.edges").string()}).code == 2);
}

TEST_CASE("colex writes the initial segment")
{
    const auto path = scratch("C.edges");
    const auto r = run({"colex", "--r", "3", "--m", "4", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(parse_edge_list(slurp(path)) == clique(4, 3));
    const auto wide = run({"colex", "--r", "3", "--m", "4", "--t", "6"});
    CHECK(parse_edge_list(wide.out).order() == 6);
    CHECK(run({"colex", "--r", "3", "--m", "5", "--t", "4"}).code == 2);
}

TEST_CASE("construct records the family in the comment header")
{
    const auto r = run({"construct", "--family", "addresult", "--t", "14", "--r", "3", "--a", "11", "--i", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# family addresult t=14 r=3 a=11 i=1\n# m=353\n", 0) == 0);
    CHECK(parse_edge_list(r.out).size() == 353);
    CHECK(run({"construct", "--family", "addresult", "--t", "14", "--r", "3", "--a", "10", "--i", "1"}).code == 2);
    const auto printed =
        run({"construct", "--family", "addresult-plus", "--t", "15", "--r", "4", "--a", "12", "--case", "2", "--printed"});
    CHECK(printed.code == 0);
    CHECK(printed.out.find("as printed") != std::string::npos);
}

TEST_CASE("enumerate lists graphs")
{
    const auto r = run({"enumerate", "--r", "3", "--m", "3", "--nmax", "5"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["count"] == 2);
    CHECK(doc["graphs"].size() == 2);
    const auto text = run({"enumerate", "--r", "3", "--m", "3", "--nmax", "5", "--format", "text", "--count-only"});
    CHECK(text.out == "count 2\n");
}

TEST_CASE("verify commands")
{
    const auto conj = run({"verify", "conjecture", "--r", "3", "--m-max", "6", "--format", "csv"});
    CHECK(conj.code == 0);
    CHECK(conj.out.rfind("label,lhs,rhs,margin,tolerance,pass\n", 0) == 0);
    CHECK(run({"verify", "conjecture", "--r", "4", "--m", "3"}).code == 2);
    CHECK(run({"verify", "conjecture", "--r", "3"}).code == 2);

    const std::vector<std::string> args{"verify", "theorem", "--name", "addresult", "--t", "14", "--r", "3",
                                        "--a",    "11",      "--i",    "1",         "--seed", "7"};
    const auto a = run(args);
    CHECK(a.code == 0);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["passed"] == true);
    CHECK(run(args).out == a.out);

    // an unattainable KKT tolerance marks the optimizations unconverged: exit 1, report still printed
    const auto strict = run({"verify", "theorem", "--name", "talbot-colex-range", "--t", "6", "--r", "3",
                             "--kkt-tol", "1e-300", "--format", "text"});
    CHECK(strict.code == 1);
    CHECK(strict.out.find("FAILED") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"lambda"}).code == 2);
    CHECK(run({"verify", "theorem", "--name", "nope", "--t", "5"}).code == 2);
    CHECK(run({"colex", "--r", "3", "--m", "4", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

#include "hlag/cli.hpp"

#include "hlag/constructions.hpp"
#include "hlag/edge_list.hpp"
#include "hlag/enumerate.hpp"
#include "hlag/optimizer.hpp"
#include "hlag/report.hpp"
#include "hlag/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace hlag {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    std::string family;
    std::string name;
    int r = 0;
    std::uint64_t m = 0;
    std::uint64_t m_max = 0;
    int t = 0;
    int a = 0;
    int i = 0;
    int kase = 0;
    int nmax = 0;
    bool printed = false;
    bool minimize = false;
    bool count_only = false;
    OptimizerConfig optimizer;
    VerifyConfig verify;
};

void add_optimizer_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--restarts", o.optimizer.restarts, "number of optimizer starts")->check(CLI::Range(1, 100000));
    cmd->add_option("--seed", o.optimizer.seed, "seed for random starts and samples");
    cmd->add_option("--threads", o.optimizer.threads, "worker threads for the optimizer")->check(CLI::Range(1, 256));
    cmd->add_option("--kkt-tol", o.optimizer.kkt_tolerance, "KKT tolerance for convergence")
        ->check(CLI::PositiveNumber);
}

void add_verify_flags(CLI::App* cmd, Options& o)
{
    add_optimizer_flags(cmd, o);
    cmd->add_option("--headline-tol", o.verify.headline_tolerance, "tolerance of lambda inequalities")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--inner-tol", o.verify.inner_tolerance, "tolerance of checks at the optimum")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--identity-tol", o.verify.identity_tolerance, "tolerance of closed-form identities")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--equality-tol", o.verify.equality_tolerance, "tolerance of lambda equalities")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.output, "write the report here instead of standard output");
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw UsageError("cannot open '" + path + "' for writing");
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

UniformHypergraph read_graph(const std::string& path, std::istream& in)
{
    if (path == "-")
        return parse_edge_list(in);
    std::ifstream file(path);
    if (!file)
        throw UsageError("cannot open '" + path + "' for reading");
    return parse_edge_list(file);
}

std::string render(const VerificationReport& report, const std::string& format)
{
    if (format == "csv")
        return to_csv(report);
    if (format == "text")
        return to_text(report);
    return to_json(report);
}

int run_lambda(const Options& o, std::istream& in, std::ostream& out)
{
    const auto g = read_graph(o.input, in);
    auto result = optimize(g, o.optimizer);
    if (o.minimize)
        result = minimize_support(g, result, o.optimizer);
    Sink sink(o.output, out);
    *sink << (o.format == "text" ? to_text(result) : to_json(result));
    return kExitOk;
}

int run_colex(const Options& o, std::ostream& out)
{
    auto c = colex_segment(o.r, o.m);
    if (o.t != 0) {
        if (o.t < c.order())
            throw UsageError("--t " + std::to_string(o.t) + " is smaller than the " + std::to_string(c.order())
                             + " vertices C_{r,m} needs");
        c = c.with_order(o.t);
    }
    Sink sink(o.output, out);
    write_edge_list(*sink, c, {"colex initial segment r=" + std::to_string(o.r) + " m=" + std::to_string(o.m)});
    return kExitOk;
}

int run_construct(const Options& o, std::ostream& out)
{
    FamilyParams p{o.t, o.r, o.a, o.i, o.kase};
    std::optional<UniformHypergraph> g;
    if (o.family == "addresult") {
        g = addresult_graph(o.t, o.r, o.a, o.i);
    } else if (o.family == "lemmaadd-plus") {
        g = lemmaaddplus_graph(o.t, o.r, o.a);
        p.i = 0;
    } else {
        if (o.kase < 1 || o.kase > 3)
            throw UsageError("--case must be 1, 2 or 3 for addresult-plus");
        g = addresultplus_case(o.t, o.r, o.a, o.kase, o.printed ? Case2Variant::AsPrinted : Case2Variant::LeftCompressed);
        p.i = 0;
    }
    auto comments = p.describe(o.family);
    if (o.family == "addresult-plus" && o.kase == 2)
        comments.push_back(o.printed ? "case 2 variant: as printed" : "case 2 variant: left-compressed");
    Sink sink(o.output, out);
    write_edge_list(*sink, *g, comments);
    return kExitOk;
}

std::string set_string(EdgeMask e)
{
    return to_rset(e).to_string();
}

int run_enumerate(const Options& o, std::ostream& out)
{
    using json = nlohmann::ordered_json;
    json graphs = json::array();
    std::ostringstream text;
    const auto count = for_each_left_compressed(o.r, static_cast<std::size_t>(o.m), o.nmax,
                                                [&](const UniformHypergraph& g) {
                                                    if (o.count_only)
                                                        return true;
                                                    json edges = json::array();
                                                    std::string line;
                                                    for (EdgeMask e : g.edges()) {
                                                        edges.push_back(to_rset(e).vertices());
                                                        line += (line.empty() ? "" : " ") + set_string(e);
                                                    }
                                                    graphs.push_back(std::move(edges));
                                                    text << line << "\n";
                                                    return true;
                                                });
    Sink sink(o.output, out);
    if (o.format == "text") {
        *sink << text.str() << "count " << count << "\n";
    } else {
        json doc{{"r", o.r}, {"m", o.m}, {"nmax", o.nmax}, {"count", count}};
        if (!o.count_only)
            doc["graphs"] = std::move(graphs);
        *sink << doc.dump(2) << "\n";
    }
    return kExitOk;
}

int run_verify_conjecture(Options o, std::ostream& out)
{
    o.verify.optimizer = o.optimizer;
    VerificationReport report;
    if (o.m_max == 0) {
        report = verify_conjecture(o.r, o.m, o.verify, o.nmax);
    } else {
        report.name = "conjecture";
        report.params = {{"r", o.r}, {"m_max", static_cast<std::int64_t>(o.m_max)}, {"nmax", o.nmax}};
        std::int64_t graphs = 0;
        for (std::uint64_t m = 1; m <= o.m_max; ++m) {
            const auto one = verify_conjecture(o.r, m, o.verify, o.nmax);
            const std::string prefix = "m=" + std::to_string(m) + ": ";
            for (auto c : one.checks) {
                c.label = prefix + c.label;
                report.checks.push_back(std::move(c));
            }
            for (const auto& [key, value] : one.params) {
                if (key == "graphs")
                    graphs += value;
            }
            for (const auto& note : one.notes)
                report.notes.push_back(prefix + note);
            report.converged_all = report.converged_all && one.converged_all;
            report.lambda_G = one.lambda_G;
            report.lambda_Crm = one.lambda_Crm;
        }
        report.params.emplace_back("graphs", graphs);
        report.notes.push_back("lambda_G and lambda_Crm are those of m = m_max");
    }
    Sink sink(o.output, out);
    *sink << render(report, o.format);
    return report.passed() ? kExitOk : kExitFailedVerification;
}

int run_verify_theorem(Options o, std::ostream& out)
{
    o.verify.optimizer = o.optimizer;
    const FamilyParams p{o.t, o.r, o.a, o.i, o.kase};
    const auto report = verify_theorem(o.name, p, o.verify);
    Sink sink(o.output, out);
    *sink << render(report, o.format);
    return report.passed() ? kExitOk : kExitFailedVerification;
}

} // namespace

int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Lagrangians of uniform hypergraphs", "hlag"};
    app.require_subcommand(1);

    auto* lambda = app.add_subcommand("lambda", "optimize lambda of an edge-list graph");
    lambda->add_option("--input", o.input, "edge-list file, - for standard input")->required();
    lambda->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    lambda->add_flag("--minimize-support", o.minimize, "shrink the support of the optimum");
    lambda->add_option("--out", o.output, "output file");
    add_optimizer_flags(lambda, o);

    auto* colex = app.add_subcommand("colex", "write the colex initial segment C_{r,m}");
    colex->add_option("--r", o.r, "edge size")->required()->check(CLI::Range(1, 64));
    colex->add_option("--m", o.m, "number of edges")->required();
    colex->add_option("--t", o.t, "vertex count of the written graph")->check(CLI::Range(1, 64));
    colex->add_option("--out", o.output, "output file");

    auto* construct = app.add_subcommand("construct", "write a member of a near-clique family");
    construct->add_option("--family", o.family, "addresult, lemmaadd-plus or addresult-plus")
        ->required()
        ->check(CLI::IsMember({"addresult", "lemmaadd-plus", "addresult-plus"}));
    construct->add_option("--t", o.t, "vertex count")->required()->check(CLI::Range(1, 64));
    construct->add_option("--r", o.r, "edge size")->required()->check(CLI::Range(1, 64));
    construct->add_option("--a", o.a, "number of missing r-sets")->required()->check(CLI::NonNegativeNumber);
    construct->add_option("--i", o.i, "colex-gap index (addresult)")->check(CLI::NonNegativeNumber);
    construct->add_option("--case", o.kase, "case 1, 2 or 3 (addresult-plus)");
    construct->add_flag("--printed", o.printed, "case 2 with the third missing tuple as printed");
    construct->add_option("--out", o.output, "output file");

    auto* enumerate = app.add_subcommand("enumerate", "list the left-compressed r-graphs with m edges on [nmax]");
    enumerate->add_option("--r", o.r, "edge size")->required()->check(CLI::Range(1, 64));
    enumerate->add_option("--m", o.m, "number of edges")->required();
    enumerate->add_option("--nmax", o.nmax, "vertex bound")->required()->check(CLI::Range(1, 64));
    enumerate->add_flag("--count-only", o.count_only, "print only the number of graphs");
    enumerate->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    enumerate->add_option("--out", o.output, "output file");

    auto* verify = app.add_subcommand("verify", "check a statement and print a report");
    verify->require_subcommand(1);
    auto* conjecture = verify->add_subcommand("conjecture", "compare all left-compressed graphs against C_{r,m}");
    conjecture->add_option("--r", o.r, "edge size")->required()->check(CLI::Range(1, 64));
    auto* m_opt = conjecture->add_option("--m", o.m, "number of edges")->check(CLI::PositiveNumber);
    auto* m_max_opt = conjecture->add_option("--m-max", o.m_max, "check every m = 1..K")->check(CLI::PositiveNumber);
    m_opt->excludes(m_max_opt);
    conjecture->add_option("--nmax", o.nmax, "vertex bound (required unless r = 3)")->check(CLI::Range(1, 64));
    conjecture->add_option("--max-graphs", o.verify.max_graphs, "abort above this many graphs");
    add_verify_flags(conjecture, o);

    auto* theorem = verify->add_subcommand("theorem", "check one statement on one instance");
    std::vector<std::string> names = theorem_names();
    theorem->add_option("--name", o.name, "statement name")->required()->check(CLI::IsMember(names));
    theorem->add_option("--t", o.t, "vertex count")->required()->check(CLI::Range(1, 64));
    theorem->add_option("--r", o.r, "edge size")->check(CLI::Range(1, 64));
    theorem->add_option("--a", o.a, "number of missing r-sets (tang-delta2: p)")->check(CLI::NonNegativeNumber);
    theorem->add_option("--i", o.i, "colex-gap index")->check(CLI::NonNegativeNumber);
    theorem->add_option("--samples", o.verify.samples, "random instances")->check(CLI::Range(0, 1000000));
    add_verify_flags(theorem, o);

    std::vector<std::string> argv_store{"hlag"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        o.optimizer.validate();
        if (*lambda)
            return run_lambda(o, in, out);
        if (*colex)
            return run_colex(o, out);
        if (*construct)
            return run_construct(o, out);
        if (*enumerate)
            return run_enumerate(o, out);
        if (*conjecture) {
            if (o.m == 0 && o.m_max == 0)
                throw UsageError("verify conjecture needs --m or --m-max");
            return run_verify_conjecture(o, out);
        }
        if (*theorem)
            return run_verify_theorem(o, out);
    } catch (const std::exception& e) {
        err << "hlag: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace hlag

#include "hlag/verify.hpp"

#include "hlag/compression.hpp"
#include "hlag/enumerate.hpp"
#include "hlag/polynomial.hpp"
#include "hlag/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace hlag {

Check Check::at_least(std::string label, double lhs, double rhs, double tolerance)
{
    const double margin = lhs - rhs;
    return Check{std::move(label), lhs, rhs, margin, tolerance, margin >= -tolerance};
}

Check Check::at_most(std::string label, double lhs, double rhs, double tolerance)
{
    const double margin = rhs - lhs;
    return Check{std::move(label), lhs, rhs, margin, tolerance, margin >= -tolerance};
}

Check Check::equal(std::string label, double lhs, double rhs, double tolerance)
{
    const double margin = 0.0 - std::abs(lhs - rhs);
    return Check{std::move(label), lhs, rhs, margin, tolerance, margin >= -tolerance};
}

Check Check::holds(std::string label, bool value, bool expected)
{
    return equal(std::move(label), value ? 1.0 : 0.0, expected ? 1.0 : 0.0, 0.0);
}

bool VerificationReport::passed() const
{
    return converged_all && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& theorem_names()
{
    static const std::vector<std::string> names{"talbot-colex-range", "addresult",   "addresult-plus",
                                                "lemmaadd-plus",      "clique-weight-bound",
                                                "tang-delta2",        "pz-clique"};
    return names;
}

namespace {

std::string s(int v)
{
    return std::to_string(v);
}

std::string sub(int a, int b)
{
    return "{" + s(a) + "," + s(b) + "}";
}

int smallest_universe(int r, std::uint64_t m)
{
    int t = r;
    while (binomial(t, r) < m)
        ++t;
    return t;
}

struct Solved {
    OptResult result;
    std::vector<double> x;
    double at(Vertex v) const { return x[static_cast<std::size_t>(v - 1)]; }
};

Solved solve(const UniformHypergraph& g, const VerifyConfig& cfg, bool minimal_support)
{
    auto result = optimize(g, cfg.optimizer);
    if (minimal_support)
        result = minimize_support(g, result, cfg.optimizer);
    std::vector<double> x(result.weighting.values().begin(), result.weighting.values().end());
    return Solved{std::move(result), std::move(x)};
}

Check equality_group(const Solved& opt, int from, int to)
{
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int v = from; v <= to; ++v) {
        lo = std::min(lo, opt.at(v));
        hi = std::max(hi, opt.at(v));
    }
    const std::string label = "x_" + s(from) + " = ... = x_" + s(to) + " (max vs min)";
    return Check{label, hi, lo, lo - hi, 0.0, false};
}

void add_structure(VerificationReport& rep, const UniformHypergraph& g, const UniformHypergraph& c, int t,
                   std::size_t expected_difference)
{
    rep.checks.push_back(Check::holds("G is left-compressed", is_left_compressed(g)));
    rep.checks.push_back(Check::holds("G contains [" + s(t - 1) + "]^(" + s(g.rank()) + ")",
                                      is_subgraph(clique(t - 1, g.rank()).with_order(t), g)));
    rep.checks.push_back(Check::equal("|E(G) symdiff E(C_{r,m})|", static_cast<double>(symmetric_difference_size(g, c)),
                                      static_cast<double>(expected_difference), 0.0));
}

// Pair-link and weight-gap inequalities of the four-edge family at the optimum of G.
void add_four_edge_inner(VerificationReport& rep, const UniformHypergraph& g, const Solved& opt, int t, int r, int a,
                       const VerifyConfig& cfg, const std::string& prefix)
{
    const int lo = t - r - a + 3, mid = t - r, p1 = t - r + 1, p3 = t - r + 3;
    rep.checks.push_back(Check::at_least(prefix + "4 lambda(E_" + sub(lo, mid) + ", x) >= lambda(E_" + sub(p1, p3) + ", x)",
                                         4.0 * pair_link(g, opt.x, lo, mid), pair_link(g, opt.x, p1, p3),
                                         cfg.inner_tolerance));
    rep.checks.push_back(Check::at_least(prefix + "x_" + s(p1) + " - x_" + s(p3) + " >= x_" + s(lo) + " - x_" + s(mid),
                                         opt.at(p1) - opt.at(p3), opt.at(lo) - opt.at(mid), cfg.inner_tolerance));
}

VerificationReport verify_colex_clique_range(const FamilyParams& p, const VerifyConfig& cfg)
{
    const int r = p.r, t = p.t;
    if (r < 2 || t < r + 2)
        throw std::invalid_argument("talbot-colex-range requires r >= 2 and t >= r + 2");
    VerificationReport rep;
    rep.name = "talbot-colex-range";
    rep.params = {{"r", r}, {"t", t}};
    const double reference = clique_lambda_exact(t - 1, r).to_double();
    const std::uint64_t lo = binomial(t - 1, r), hi = lo + binomial(t - 2, r - 1);
    rep.lambda_Crm = reference;
    rep.lambda_G = 0.0;
    for (std::uint64_t m = lo; m <= hi; ++m) {
        const auto c = colex_segment(r, m);
        const auto opt = optimize(c, cfg.optimizer);
        rep.converged_all = rep.converged_all && opt.converged;
        rep.lambda_G = std::max(rep.lambda_G, opt.value);
        rep.checks.push_back(Check::equal("lambda(C_{" + s(r) + "," + std::to_string(m) + "}) = lambda([" + s(t - 1)
                                              + "]^(" + s(r) + "))",
                                          opt.value, reference, cfg.equality_tolerance));
    }
    rep.notes.push_back("lambda_G is the largest lambda(C_{r,m}) over the range; lambda_Crm is lambda([t-1]^(r)) = "
                        + clique_lambda_exact(t - 1, r).to_string());
    return rep;
}

VerificationReport verify_addresult(const FamilyParams& p, const VerifyConfig& cfg)
{
    const int t = p.t, r = p.r, a = p.a, i = p.i;
    const auto g = addresult_graph(t, r, a, i);
    const auto c = colex_segment(r, p.edge_count()).with_order(t);
    VerificationReport rep;
    rep.name = "addresult";
    rep.params = {{"t", t}, {"r", r}, {"a", a}, {"i", i}, {"m", static_cast<std::int64_t>(p.edge_count())}};

    add_structure(rep, g, c, t, static_cast<std::size_t>(2 * i));
    const auto complement = complement_in_clique(g, t);
    rep.checks.push_back(Check::holds("colex-minimum non-edge is " + addresult_min_nonedge(t, r, i).to_string(),
                                      complement.edges().front() == to_mask(addresult_min_nonedge(t, r, i))));

    const auto og = solve(g, cfg, true);
    const auto oc = solve(c, cfg, false);
    rep.lambda_G = og.result.value;
    rep.lambda_Crm = oc.result.value;
    rep.converged_all = og.result.converged && oc.result.converged;
    rep.checks.push_back(Check::at_most("lambda(G) <= lambda(C_{r,m})", og.result.value, oc.result.value,
                                        cfg.headline_tolerance));

    const int g1 = t - r - i + 1, p1 = t - r + 1, p2 = t - r + 2;
    rep.checks.push_back(Check::at_least("4 lambda(E_" + sub(1, g1) + ", x) >= lambda(E_" + sub(p1, p2) + ", x)",
                                         4.0 * pair_link(g, og.x, 1, g1), pair_link(g, og.x, p1, p2),
                                         cfg.inner_tolerance));
    rep.checks.push_back(Check::at_least("x_" + s(p1) + " - x_" + s(p2) + " >= x_1 - x_" + s(g1),
                                         og.at(p1) - og.at(p2), og.at(1) - og.at(g1), cfg.inner_tolerance));
    auto first = equality_group(og, 1, t - r - a + i + 1);
    first.tolerance = cfg.inner_tolerance;
    first.pass = first.margin >= -first.tolerance;
    rep.checks.push_back(first);
    auto second = equality_group(og, g1, t - r);
    second.tolerance = cfg.inner_tolerance;
    second.pass = second.margin >= -second.tolerance;
    rep.checks.push_back(second);

    double tail = 1.0;
    for (int v = t - r + 3; v <= t; ++v)
        tail *= og.at(v);
    const double closed = i * (og.at(g1) * og.at(p1) - og.at(1) * og.at(p2)) * tail;
    const double direct = eval_lambda(c, og.x) - eval_lambda(g, og.x);
    rep.checks.push_back(Check::equal("lambda(C_{r,m}, x) - lambda(G, x) = i (x_" + s(g1) + " x_" + s(p1) + " - x_1 x_"
                                          + s(p2) + ") x_" + s(t - r + 3) + "...x_" + s(t),
                                      direct, closed, cfg.identity_tolerance));
    if (og.at(t) <= 0.0)
        rep.notes.push_back("optimal weighting of G vanishes on vertex t; the inner checks are outside the x_t > 0 branch");
    return rep;
}

VerificationReport verify_lemmaadd_plus(const FamilyParams& p, const VerifyConfig& cfg)
{
    const int t = p.t, r = p.r, a = p.a;
    const auto g = lemmaaddplus_graph(t, r, a);
    const auto c = colex_segment(r, p.edge_count()).with_order(t);
    VerificationReport rep;
    rep.name = "lemmaadd-plus";
    rep.params = {{"t", t}, {"r", r}, {"a", a}, {"m", static_cast<std::int64_t>(p.edge_count())}};
    add_structure(rep, g, c, t, 4);
    const auto og = solve(g, cfg, true);
    const auto oc = solve(c, cfg, false);
    rep.lambda_G = og.result.value;
    rep.lambda_Crm = oc.result.value;
    rep.converged_all = og.result.converged && oc.result.converged;
    rep.checks.push_back(Check::at_most("lambda(G) <= lambda(C_{r,m})", og.result.value, oc.result.value,
                                        cfg.headline_tolerance));
    add_four_edge_inner(rep, g, og, t, r, a, cfg, "");
    if (og.at(t) <= 0.0)
        rep.notes.push_back("optimal weighting of G vanishes on vertex t; the inner checks are outside the x_t > 0 branch");
    return rep;
}

VerificationReport verify_addresult_plus(const FamilyParams& p, const VerifyConfig& cfg)
{
    const int t = p.t, r = p.r, a = p.a;
    const auto variants = addresultplus_case2_variants(t, r, a);
    const auto c = colex_segment(r, p.edge_count()).with_order(t);
    VerificationReport rep;
    rep.name = "addresult-plus";
    rep.params = {{"t", t}, {"r", r}, {"a", a}, {"m", static_cast<std::int64_t>(p.edge_count())}};

    rep.checks.push_back(Check::holds("case 2 as printed is rejected (not left-compressed)", !variants.as_printed_ok));
    rep.checks.push_back(Check::holds("case 2 two-gap reading is left-compressed", variants.left_compressed_ok));

    const auto oc = solve(c, cfg, false);
    rep.lambda_Crm = oc.result.value;
    rep.converged_all = oc.result.converged;
    rep.lambda_G = 0.0;
    for (int kase = 1; kase <= 3; ++kase) {
        const auto g = addresultplus_case(t, r, a, kase);
        const std::string prefix = "case " + s(kase) + ": ";
        rep.checks.push_back(Check::holds(prefix + "G is left-compressed", is_left_compressed(g)));
        rep.checks.push_back(Check::holds(prefix + "|E(G) symdiff E(C_{r,m})| <= 4",
                                          symmetric_difference_size(g, c) <= 4));
        const auto og = solve(g, cfg, kase == 3);
        rep.converged_all = rep.converged_all && og.result.converged;
        rep.lambda_G = std::max(rep.lambda_G, og.result.value);
        rep.checks.push_back(Check::at_most(prefix + "lambda(G) <= lambda(C_{r,m})", og.result.value, oc.result.value,
                                            cfg.headline_tolerance));
        if (kase == 3)
            add_four_edge_inner(rep, g, og, t, r, a, cfg, prefix);
    }
    rep.notes.push_back("lambda_G is the largest lambda(G) over cases 1-3");
    return rep;
}

// G = [t-1]^(r) plus {S ∪ {t} : S in F} for a random downset F of (r-1)-subsets
// of [t-1]; such G is left-compressed and contains [t-1]^(r).
UniformHypergraph random_clique_extension(int t, int r, std::mt19937_64& rng)
{
    const auto base = clique(t - 1, r);
    std::vector<EdgeMask> edges(base.edges().begin(), base.edges().end());
    const auto shadow = clique(t - 1, r - 1);
    const std::vector<EdgeMask> links(shadow.edges().begin(), shadow.edges().end());
    std::uniform_int_distribution<std::size_t> pick(0, links.size() - 1);
    std::uniform_int_distribution<int> gens(1, 3);
    std::vector<EdgeMask> down;
    const int count = gens(rng);
    for (int k = 0; k < count; ++k) {
        const EdgeMask top = links[pick(rng)];
        for (EdgeMask s : links) {
            if (dominated_by(s, top))
                down.push_back(s);
        }
    }
    std::sort(down.begin(), down.end());
    down.erase(std::unique(down.begin(), down.end()), down.end());
    for (EdgeMask s : down)
        edges.push_back(s | vertex_bit(t));
    return UniformHypergraph(r, t, std::move(edges));
}

VerificationReport verify_clique_weight_bound(const FamilyParams& p, const VerifyConfig& cfg)
{
    const int tmax = p.t, r = p.r;
    if (r < 2 || tmax < r + 1 || tmax > 12)
        throw std::invalid_argument("clique-weight-bound requires r >= 2 and r + 1 <= t <= 12");
    VerificationReport rep;
    rep.name = "clique-weight-bound";
    rep.params = {{"t", tmax}, {"r", r}, {"samples", cfg.samples}};
    std::mt19937_64 rng(cfg.optimizer.seed ^ 0x5eed'c11c'0ebd'0000ULL);
    std::uniform_int_distribution<int> universe(r + 1, tmax);
    Check worst_first = Check::at_least("x_1 <= x_{t-1} + x_t (worst sample)", 0, 0, cfg.inner_tolerance);
    Check worst_second = Check::at_least("x_{t-1} + x_t <= 2 x_{t-1} (worst sample)", 0, 0, cfg.inner_tolerance);
    worst_first.margin = worst_second.margin = std::numeric_limits<double>::infinity();
    bool all_structured = true;
    for (int k = 0; k < cfg.samples; ++k) {
        const int t = universe(rng);
        const auto g = random_clique_extension(t, r, rng);
        all_structured = all_structured && is_left_compressed(g)
                      && is_subgraph(clique(t - 1, r).with_order(t), g);
        const auto og = solve(g, cfg, false);
        rep.converged_all = rep.converged_all && og.result.converged;
        const double pair = og.at(t - 1) + og.at(t);
        if (pair - og.at(1) < worst_first.margin) {
            worst_first = Check::at_least("x_1 <= x_{t-1} + x_t (worst sample, t=" + s(t) + ")", pair, og.at(1),
                                          cfg.inner_tolerance);
            rep.lambda_G = og.result.value;
            rep.lambda_Crm = optimize(colex_segment(r, g.size()), cfg.optimizer).value;
        }
        if (2 * og.at(t - 1) - pair < worst_second.margin)
            worst_second = Check::at_least("x_{t-1} + x_t <= 2 x_{t-1} (worst sample, t=" + s(t) + ")",
                                           2 * og.at(t - 1), pair, cfg.inner_tolerance);
    }
    rep.checks.push_back(Check::holds("samples are left-compressed and contain [t-1]^(r)", all_structured));
    if (cfg.samples > 0) {
        rep.checks.push_back(worst_first);
        rep.checks.push_back(worst_second);
    }
    rep.notes.push_back("lambda_G and lambda_Crm refer to the sample with the smallest x_{t-1} + x_t - x_1 margin");
    return rep;
}

VerificationReport verify_near_colex_swaps(const FamilyParams& p, const VerifyConfig& cfg)
{
    const int t = p.t, r = p.r, pm = p.a;
    if (r < 2 || t < r + 1 || pm < 0 || pm > t - r + 1)
        throw std::invalid_argument("tang-delta2 requires 0 <= p <= t - r + 1");
    if (pm >= 3 && binomial(t - r - (pm - 1), r - 2) < binomial(t - 4, r - 4))
        throw std::invalid_argument("tang-delta2 requires C(t-r-(p-1), r-2) >= C(t-4, r-4) for p >= 3");
    const std::uint64_t m = binomial(t, r) - static_cast<std::uint64_t>(pm);
    const auto c = colex_segment(r, m).with_order(t);
    const auto missing = complement_in_clique(c, t);
    VerificationReport rep;
    rep.name = "tang-delta2";
    rep.params = {{"t", t}, {"r", r}, {"p", pm}, {"m", static_cast<std::int64_t>(m)}};
    const auto oc = optimize(c, cfg.optimizer);
    rep.lambda_Crm = oc.value;
    rep.converged_all = oc.converged;
    rep.lambda_G = oc.value;
    std::size_t tried = 0;
    for (EdgeMask out : c.edges()) {
        for (EdgeMask in : missing.edges()) {
            std::vector<EdgeMask> edges;
            edges.reserve(c.size());
            for (EdgeMask e : c.edges()) {
                if (e != out)
                    edges.push_back(e);
            }
            edges.push_back(in);
            UniformHypergraph g(r, t, std::move(edges));
            if (!is_left_compressed(g))
                continue;
            ++tried;
            const auto og = optimize(g, cfg.optimizer);
            rep.converged_all = rep.converged_all && og.converged;
            rep.lambda_G = std::max(rep.lambda_G, og.value);
            rep.checks.push_back(Check::at_most("swap " + to_rset(out).to_string() + " -> " + to_rset(in).to_string()
                                                    + ": lambda(G) <= lambda(C_{r,m})",
                                                og.value, oc.value, cfg.headline_tolerance));
        }
    }
    rep.notes.push_back(std::to_string(tried) + " left-compressed graphs at symmetric difference 2");
    return rep;
}

VerificationReport verify_clique_plus_edges(const FamilyParams& p, const VerifyConfig& cfg)
{
    const int t = p.t, r = 3;
    if (t < 5 || t + 2 > kMaxVertices)
        throw std::invalid_argument("pz-clique requires 5 <= t <= 62");
    VerificationReport rep;
    rep.name = "pz-clique";
    rep.params = {{"t", t}, {"samples", cfg.samples}};
    const double reference = clique_lambda_exact(t - 1, r).to_double();
    rep.lambda_Crm = reference;
    const auto base = clique(t - 1, r);
    const int n = t + 2;
    std::vector<EdgeMask> extra_pool;
    const auto all = clique(n, r);
    for (EdgeMask e : all.edges()) {
        if (!base.contains(e))
            extra_pool.push_back(e);
    }
    std::mt19937_64 rng(cfg.optimizer.seed ^ 0x9a2c'11f0'0000'0000ULL);
    std::uniform_int_distribution<std::uint64_t> count(0, binomial(t - 2, 2));
    for (int k = 0; k < cfg.samples; ++k) {
        auto pool = extra_pool;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<EdgeMask> edges(base.edges().begin(), base.edges().end());
        const auto extra = count(rng);
        edges.insert(edges.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(extra));
        const UniformHypergraph g(r, n, std::move(edges));
        const auto og = optimize(g, cfg.optimizer);
        rep.converged_all = rep.converged_all && og.converged;
        rep.lambda_G = std::max(rep.lambda_G, og.value);
        rep.checks.push_back(Check::equal("sample " + s(k) + " (m=" + std::to_string(g.size()) + "): lambda(G) = lambda(["
                                              + s(t - 1) + "]^(3))",
                                          og.value, reference, cfg.equality_tolerance));
    }
    return rep;
}

} // namespace

VerificationReport verify_conjecture(int r, std::uint64_t m, const VerifyConfig& cfg, int nmax)
{
    if (r < 1)
        throw std::invalid_argument("verify_conjecture: rank must be at least 1");
    const int t = smallest_universe(r, m);
    VerificationReport rep;
    rep.name = "conjecture";
    if (nmax == 0) {
        if (r != 3)
            throw std::invalid_argument("verify_conjecture: ranks other than 3 need an explicit nmax");
        nmax = t;
        rep.notes.push_back("universe [" + s(t) + "]: for r = 3 an extremal left-compressed graph has an optimal "
                            "weighting supported on at most t vertices, C(t-1,3) < m <= C(t,3)");
    } else {
        rep.notes.push_back("universe [" + s(nmax) + "] supplied by the caller; graphs needing more vertices are not covered");
    }
    if (nmax < t)
        throw std::invalid_argument("verify_conjecture: nmax smaller than the universe of C_{r,m}");

    const auto c = colex_segment(r, m).with_order(nmax);
    const auto oc = optimize(c, cfg.optimizer);
    rep.lambda_Crm = oc.value;
    rep.converged_all = oc.converged;

    double best = -1.0;
    std::vector<EdgeMask> best_edges;
    EnumerationCursor cursor(r, static_cast<std::size_t>(m), nmax);
    std::size_t count = 0;
    while (auto g = cursor.next()) {
        if (++count > cfg.max_graphs)
            throw BudgetExceeded("verify_conjecture: more than " + std::to_string(cfg.max_graphs)
                                 + " left-compressed graphs for r=" + s(r) + ", m=" + std::to_string(m));
        const auto og = optimize(*g, cfg.optimizer);
        rep.converged_all = rep.converged_all && og.converged;
        if (og.value > best) {
            best = og.value;
            best_edges.assign(g->edges().begin(), g->edges().end());
        }
    }
    rep.lambda_G = std::max(best, 0.0);
    rep.params = {{"r", r}, {"m", static_cast<std::int64_t>(m)}, {"nmax", nmax}, {"graphs", static_cast<std::int64_t>(count)}};
    rep.checks.push_back(Check::at_most("max lambda over left-compressed graphs <= lambda(C_{r,m})", rep.lambda_G,
                                        oc.value, cfg.headline_tolerance));
    rep.checks.push_back(Check::equal("C_{r,m} attains the maximum", rep.lambda_G, oc.value, cfg.equality_tolerance));
    std::string witness = "maximizer:";
    for (EdgeMask e : best_edges)
        witness += " " + to_rset(e).to_string();
    rep.notes.push_back(witness);
    return rep;
}

VerificationReport verify_theorem(const std::string& name, const FamilyParams& params, const VerifyConfig& cfg)
{
    if (name == "talbot-colex-range")
        return verify_colex_clique_range(params, cfg);
    if (name == "addresult")
        return verify_addresult(params, cfg);
    if (name == "addresult-plus")
        return verify_addresult_plus(params, cfg);
    if (name == "lemmaadd-plus")
        return verify_lemmaadd_plus(params, cfg);
    if (name == "clique-weight-bound")
        return verify_clique_weight_bound(params, cfg);
    if (name == "tang-delta2")
        return verify_near_colex_swaps(params, cfg);
    if (name == "pz-clique")
        return verify_clique_plus_edges(params, cfg);
    throw std::invalid_argument("unknown theorem name '" + name + "'");
}

} // namespace hlag

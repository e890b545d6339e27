#include "hlag/optimizer.hpp"

#include "hlag/compression.hpp"
#include "hlag/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

namespace hlag {

void OptimizerConfig::validate() const
{
    if (restarts < 1)
        throw std::invalid_argument("optimizer: restarts must be at least 1");
    if (max_iterations < 1)
        throw std::invalid_argument("optimizer: max_iterations must be at least 1");
    if (!(value_tolerance > 0.0) || !(kkt_tolerance > 0.0) || !(support_prune_epsilon > 0.0))
        throw std::invalid_argument("optimizer: tolerances must be positive");
    if (threads < 1)
        throw std::invalid_argument("optimizer: threads must be at least 1");
}

std::vector<Vertex> OptResult::support_vertices() const
{
    std::vector<Vertex> out;
    for_each_vertex(support, [&](Vertex v) { out.push_back(v); });
    return out;
}

bool pairs_covered(const UniformHypergraph& g, EdgeMask support)
{
    std::array<EdgeMask, kMaxVertices> reach{};
    for (EdgeMask e : g.edges()) {
        if ((e & ~support) == 0)
            for_each_vertex(e, [&](Vertex v) { reach[static_cast<std::size_t>(v - 1)] |= e; });
    }
    bool ok = true;
    for_each_vertex(support, [&](Vertex v) {
        const EdgeMask need = support & ~vertex_bit(v);
        ok = ok && (reach[static_cast<std::size_t>(v - 1)] & need) == need;
    });
    return ok;
}

namespace {

using Point = std::vector<double>;

// Newton iterations never need more than a handful of steps from an ascent point.
constexpr int kNewtonSteps = 60;
constexpr int kMaxSupportDrops = 4;
constexpr std::size_t kPolishInterval = 64;

void normalize(Point& x)
{
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& w : x)
        w /= sum;
}

EdgeMask support_of(const Point& x, double epsilon)
{
    EdgeMask s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] > epsilon)
            s |= EdgeMask{1} << k;
    }
    return s;
}

std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform Dirichlet sample: normalized standard exponentials.
Point random_interior_point(int n, std::uint64_t seed, std::size_t restart)
{
    std::mt19937_64 rng(mix64(seed ^ mix64(restart)));
    Point x(static_cast<std::size_t>(n));
    for (double& w : x) {
        const double u = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        w = -std::log(u) + 1e-300;
    }
    normalize(x);
    return x;
}

// Solves { lambda(E_i, y) = mu for i in support, sum y = 1 } by Newton's method,
// starting from x restricted to the support. The Jacobian of the links is the
// pair-link matrix; its minimum-norm solve copes with flat directions.
std::optional<Point> newton_polish(const UniformHypergraph& g, const Point& x, EdgeMask support)
{
    std::vector<std::size_t> s;
    for_each_vertex(support, [&](Vertex v) { s.push_back(static_cast<std::size_t>(v - 1)); });
    const auto k = static_cast<Eigen::Index>(s.size());
    if (k == 0)
        return std::nullopt;

    Point y(x.size(), 0.0);
    for (auto v : s)
        y[v] = x[v];
    if (std::accumulate(y.begin(), y.end(), 0.0) <= 0.0)
        return std::nullopt;
    normalize(y);

    const auto n = static_cast<std::size_t>(g.order());
    double mu = g.rank() * eval_lambda(g, y);
    Eigen::MatrixXd jac(k + 1, k + 1);
    Eigen::VectorXd f(k + 1);
    std::vector<double> pairs(n * n);
    std::array<std::size_t, kMaxVertices> idx{};
    double residual = 0.0;
    for (int step = 0; step < kNewtonSteps; ++step) {
        const auto links = vertex_links(g, y);
        std::fill(pairs.begin(), pairs.end(), 0.0);
        for (EdgeMask e : g.edges()) {
            if (e & ~support)
                continue;
            std::size_t len = 0;
            for_each_vertex(e, [&](Vertex v) { idx[len++] = static_cast<std::size_t>(v - 1); });
            for (std::size_t p = 0; p < len; ++p) {
                for (std::size_t q = p + 1; q < len; ++q) {
                    double prod = 1.0;
                    for (std::size_t o = 0; o < len; ++o) {
                        if (o != p && o != q)
                            prod *= y[idx[o]];
                    }
                    pairs[idx[p] * n + idx[q]] += prod;
                    pairs[idx[q] * n + idx[p]] += prod;
                }
            }
        }
        double sum = 0.0;
        residual = 0.0;
        for (Eigen::Index a = 0; a < k; ++a) {
            f(a) = links[s[static_cast<std::size_t>(a)]] - mu;
            sum += y[s[static_cast<std::size_t>(a)]];
            residual = std::max(residual, std::abs(f(a)));
        }
        f(k) = sum - 1.0;
        residual = std::max(residual, std::abs(f(k)));
        if (residual <= 1e-16)
            break;
        for (Eigen::Index a = 0; a < k; ++a) {
            for (Eigen::Index b = 0; b < k; ++b)
                jac(a, b) = a == b ? 0.0 : pairs[s[static_cast<std::size_t>(a)] * n + s[static_cast<std::size_t>(b)]];
            jac(a, k) = -1.0;
            jac(k, a) = 1.0;
        }
        jac(k, k) = 0.0;
        const Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(-f);
        if (!delta.allFinite())
            return std::nullopt;
        for (Eigen::Index a = 0; a < k; ++a)
            y[s[static_cast<std::size_t>(a)]] += delta(a);
        mu += delta(k);
        if (delta.cwiseAbs().maxCoeff() <= 1e-17)
            break;
    }
    for (auto v : s) {
        if (!(y[v] > 0.0))
            return std::nullopt;
    }
    normalize(y);
    return y;
}

// Active-set polishing: Newton on the pruned support, dropping the lightest
// vertex when that fails, until a point meeting the full KKT conditions appears.
std::optional<Point> refine(const UniformHypergraph& g, const Point& x, const OptimizerConfig& cfg)
{
    EdgeMask support = support_of(x, cfg.support_prune_epsilon);
    for (int drop = 0; drop <= kMaxSupportDrops && support; ++drop) {
        if (auto y = newton_polish(g, x, support); y && kkt_violation(g, *y) <= cfg.kkt_tolerance)
            return y;
        std::size_t lightest = x.size();
        for_each_vertex(support, [&](Vertex v) {
            const auto k = static_cast<std::size_t>(v - 1);
            if (lightest == x.size() || x[k] < x[lightest])
                lightest = k;
        });
        support &= ~(EdgeMask{1} << lightest);
    }
    return std::nullopt;
}

struct Candidate {
    Point x;
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

Candidate local_solve(const UniformHypergraph& g, Point x, const OptimizerConfig& cfg)
{
    Candidate c;
    double value = eval_lambda(g, x);
    if (!(value > 0.0)) {
        c.x = std::move(x);
        return c;
    }
    std::size_t it = 0;
    while (it < cfg.max_iterations) {
        Point next = baum_eagon_step(g, x);
        const double next_value = eval_lambda(g, next);
        ++it;
        const double gain = next_value - value;
        x = std::move(next);
        value = next_value;
        if (gain < cfg.value_tolerance)
            break;
        if (it % kPolishInterval == 0) {
            if (auto y = refine(g, x, cfg)) {
                const double polished = eval_lambda(g, *y);
                if (polished >= value - cfg.value_tolerance) {
                    x = std::move(*y);
                    value = polished;
                    break;
                }
            }
        }
    }
    if (auto y = refine(g, x, cfg)) {
        const double polished = eval_lambda(g, *y);
        if (polished >= value - cfg.value_tolerance) {
            x = std::move(*y);
            value = polished;
        }
    }
    for (double& w : x) {
        if (w <= cfg.support_prune_epsilon)
            w = 0.0;
    }
    normalize(x);
    c.value = eval_lambda(g, x);
    c.converged = kkt_violation(g, x) <= cfg.kkt_tolerance;
    c.iterations = it;
    c.x = std::move(x);
    return c;
}

// a beats b: clearly larger value; on a near-tie a converged point wins; the
// caller resolves remaining ties by start index.
bool beats(const Candidate& a, const Candidate& b)
{
    const double tie = 4 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a.value), std::abs(b.value));
    if (a.value > b.value + tie)
        return true;
    if (b.value > a.value + tie)
        return false;
    return a.converged && !b.converged;
}

// For left-compressed graphs sorting a weighting never lowers lambda, so the
// optimum is reported in non-increasing order.
Candidate canonical_order(const UniformHypergraph& g, Candidate c, const OptimizerConfig& cfg)
{
    if (!is_left_compressed(g) || std::is_sorted(c.x.rbegin(), c.x.rend()))
        return c;
    Point sorted = c.x;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    Candidate polished = local_solve(g, sorted, cfg);
    std::sort(polished.x.begin(), polished.x.end(), std::greater<>());
    polished.value = eval_lambda(g, polished.x);
    polished.converged = kkt_violation(g, polished.x) <= cfg.kkt_tolerance;
    polished.iterations += c.iterations;
    return polished;
}

OptResult to_result(const UniformHypergraph& g, const Candidate& c)
{
    Weighting w(c.x);
    const double value = eval_lambda(g, w.values());
    return OptResult{value, w, w.support(), kkt_residual(g, w.values()), c.iterations, c.converged};
}

} // namespace

OptResult optimize(const UniformHypergraph& g, const OptimizerConfig& cfg)
{
    cfg.validate();
    const int n = g.order();
    if (g.empty())
        return OptResult{0.0, Weighting::uniform(n), 0, 0.0, 0, true};

    // Start order fixes tie-breaking: uniform, random interior points, then supports.
    std::vector<Point> starts;
    const auto uniform = Weighting::uniform(n);
    starts.emplace_back(uniform.values().begin(), uniform.values().end());
    for (int k = 1; k < cfg.restarts; ++k)
        starts.push_back(random_interior_point(n, cfg.seed, static_cast<std::size_t>(k)));
    if (n <= cfg.exhaustive_support_threshold) {
        for (EdgeMask t = 1; t <= prefix_mask(n); ++t) {
            if (std::popcount(t) < g.rank() || !pairs_covered(g, t))
                continue;
            const auto w = Weighting::uniform_on(n, t);
            if (eval_lambda(g, w.values()) > 0.0)
                starts.emplace_back(w.values().begin(), w.values().end());
        }
    }

    std::vector<Candidate> found(starts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < starts.size();)
            found[k] = local_solve(g, std::move(starts[k]), cfg);
    };
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), starts.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k < found.size(); ++k) {
        if (beats(found[k], found[best]))
            best = k;
    }
    return to_result(g, canonical_order(g, std::move(found[best]), cfg));
}

OptResult minimize_support(const UniformHypergraph& g, const OptResult& result, const OptimizerConfig& cfg)
{
    cfg.validate();
    if (g.empty())
        return result;
    const double target = result.value - cfg.value_tolerance;
    Candidate current;
    current.x.assign(result.weighting.values().begin(), result.weighting.values().end());
    for (double& w : current.x) {
        if (w < cfg.support_prune_epsilon)
            w = 0.0;
    }
    normalize(current.x);
    current.iterations = result.iterations;

    for (bool progress = true; progress;) {
        progress = false;
        const EdgeMask support = support_of(current.x, 0.0);

        // lambda is linear along x_i + x_j = const when no edge holds both i
        // and j, so one endpoint of that segment is at least as good.
        std::optional<std::pair<std::size_t, std::size_t>> uncovered;
        std::array<EdgeMask, kMaxVertices> reach{};
        for (EdgeMask e : g.edges()) {
            if ((e & ~support) == 0)
                for_each_vertex(e, [&](Vertex v) { reach[static_cast<std::size_t>(v - 1)] |= e; });
        }
        for_each_vertex(support, [&](Vertex v) {
            const auto i = static_cast<std::size_t>(v - 1);
            const EdgeMask missing = support & ~reach[i] & ~vertex_bit(v);
            if (!uncovered && missing)
                uncovered = std::pair{i, static_cast<std::size_t>(std::countr_zero(missing))};
        });
        if (uncovered) {
            const auto [i, j] = *uncovered;
            const auto links = vertex_links(g, current.x);
            const auto [keep, drop] = links[i] >= links[j] ? std::pair{i, j} : std::pair{j, i};
            current.x[keep] += current.x[drop];
            current.x[drop] = 0.0;
            Candidate polished = local_solve(g, current.x, cfg);
            if (polished.value >= eval_lambda(g, current.x) - cfg.value_tolerance)
                current.x = std::move(polished.x);
            progress = true;
            continue;
        }

        std::vector<std::size_t> order;
        for_each_vertex(support, [&](Vertex v) { order.push_back(static_cast<std::size_t>(v - 1)); });
        if (order.size() <= 1)
            break;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return current.x[a] < current.x[b]; });
        for (std::size_t v : order) {
            Point trial = current.x;
            trial[v] = 0.0;
            normalize(trial);
            Candidate c = local_solve(g, std::move(trial), cfg);
            if (c.value >= target && std::popcount(support_of(c.x, 0.0)) < std::popcount(support)) {
                current.x = std::move(c.x);
                progress = true;
                break;
            }
        }
    }
    current.value = eval_lambda(g, current.x);
    current.converged = kkt_violation(g, current.x) <= cfg.kkt_tolerance;
    if (is_left_compressed(g) && !std::is_sorted(current.x.rbegin(), current.x.rend())) {
        std::sort(current.x.begin(), current.x.end(), std::greater<>());
        current.value = eval_lambda(g, current.x);
        current.converged = kkt_violation(g, current.x) <= cfg.kkt_tolerance;
    }
    return to_result(g, current);
}

} // namespace hlag

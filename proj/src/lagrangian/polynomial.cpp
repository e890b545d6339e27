#include "hlag/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hlag {

namespace {

void require_length(const UniformHypergraph& g, std::span<const double> x)
{
    if (x.size() < static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("weighting has " + std::to_string(x.size()) + " entries, graph has "
                                    + std::to_string(g.order()) + " vertices");
}

void require_vertex(const UniformHypergraph& g, Vertex v)
{
    if (v < 1 || v > g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " + std::to_string(g.order()) + "]");
}

void require_pair(const UniformHypergraph& g, Vertex i, Vertex j)
{
    require_vertex(g, i);
    require_vertex(g, j);
    if (i == j)
        throw std::invalid_argument("link of a pair requires i != j");
}

double monomial(EdgeMask e, std::span<const double> x)
{
    double p = 1.0;
    for_each_vertex(e, [&](Vertex v) { p *= x[static_cast<std::size_t>(v - 1)]; });
    return p;
}

} // namespace

double eval_lambda(const UniformHypergraph& g, std::span<const double> x)
{
    require_length(g, x);
    double sum = 0.0;
    for (EdgeMask e : g.edges())
        sum += monomial(e, x);
    return sum;
}

double vertex_link(const UniformHypergraph& g, std::span<const double> x, Vertex i)
{
    require_length(g, x);
    require_vertex(g, i);
    const EdgeMask bi = vertex_bit(i);
    double sum = 0.0;
    for (EdgeMask e : g.edges()) {
        if (e & bi)
            sum += monomial(e & ~bi, x);
    }
    return sum;
}

std::vector<double> vertex_links(const UniformHypergraph& g, std::span<const double> x)
{
    require_length(g, x);
    std::vector<double> links(static_cast<std::size_t>(g.order()), 0.0);
    std::array<std::size_t, kMaxVertices> idx{};
    std::array<double, kMaxVertices + 1> prefix{};
    for (EdgeMask e : g.edges()) {
        std::size_t k = 0;
        for_each_vertex(e, [&](Vertex v) { idx[k++] = static_cast<std::size_t>(v - 1); });
        prefix[0] = 1.0;
        for (std::size_t p = 0; p < k; ++p)
            prefix[p + 1] = prefix[p] * x[idx[p]];
        // links[v] += (product before v) * (product after v)
        double suffix = 1.0;
        for (std::size_t p = k; p-- > 0;) {
            links[idx[p]] += prefix[p] * suffix;
            suffix *= x[idx[p]];
        }
    }
    return links;
}

double pair_link(const UniformHypergraph& g, std::span<const double> x, Vertex i, Vertex j)
{
    require_length(g, x);
    require_pair(g, i, j);
    const EdgeMask both = vertex_bit(i) | vertex_bit(j);
    double sum = 0.0;
    for (EdgeMask e : g.edges()) {
        if ((e & both) == both)
            sum += monomial(e & ~both, x);
    }
    return sum;
}

double strict_link(const UniformHypergraph& g, std::span<const double> x, Vertex i, Vertex j)
{
    require_length(g, x);
    require_pair(g, i, j);
    const EdgeMask bi = vertex_bit(i), bj = vertex_bit(j);
    double sum = 0.0;
    for (EdgeMask e : g.edges()) {
        if ((e & bi) && !(e & bj) && !g.contains((e & ~bi) | bj))
            sum += monomial(e & ~bi, x);
    }
    return sum;
}

double plain_exclusive_link(const UniformHypergraph& g, std::span<const double> x, Vertex i, Vertex j)
{
    require_length(g, x);
    require_pair(g, i, j);
    const EdgeMask bi = vertex_bit(i), bj = vertex_bit(j);
    double sum = 0.0;
    for (EdgeMask e : g.edges()) {
        if ((e & bi) && !(e & bj))
            sum += monomial(e & ~bi, x);
    }
    return sum;
}

std::vector<double> baum_eagon_step(const UniformHypergraph& g, std::span<const double> x)
{
    const double value = eval_lambda(g, x);
    if (!(value > 0.0))
        throw std::domain_error("baum_eagon_step: lambda(G, x) = 0, restart needed");
    const auto links = vertex_links(g, x);
    const double scale = g.rank() * value;
    std::vector<double> next(x.begin(), x.begin() + g.order());
    double sum = 0.0;
    for (std::size_t k = 0; k < next.size(); ++k) {
        next[k] *= links[k] / scale;
        sum += next[k];
    }
    // Euler's identity makes the sum 1 up to rounding.
    for (double& w : next)
        w /= sum;
    return next;
}

double kkt_residual(const UniformHypergraph& g, std::span<const double> x)
{
    const double target = g.rank() * eval_lambda(g, x);
    const auto links = vertex_links(g, x);
    double worst = 0.0;
    for (std::size_t k = 0; k < links.size(); ++k) {
        if (x[k] > 0.0)
            worst = std::max(worst, std::abs(links[k] - target));
    }
    return worst;
}

double kkt_violation(const UniformHypergraph& g, std::span<const double> x)
{
    const double target = g.rank() * eval_lambda(g, x);
    const auto links = vertex_links(g, x);
    double worst = 0.0;
    for (std::size_t k = 0; k < links.size(); ++k)
        worst = std::max(worst, x[k] > 0.0 ? std::abs(links[k] - target) : links[k] - target);
    return worst;
}

} // namespace hlag

#include "hlag/hypergraph.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace hlag {

EdgeMask to_mask(const RSet& s)
{
    EdgeMask e = 0;
    for (Vertex v : s.vertices()) {
        if (v > kMaxVertices)
            throw std::out_of_range("vertex label " + std::to_string(v) + " exceeds 64");
        e |= vertex_bit(v);
    }
    return e;
}

RSet to_rset(EdgeMask e)
{
    std::vector<Vertex> vs;
    vs.reserve(static_cast<std::size_t>(std::popcount(e)));
    for_each_vertex(e, [&](Vertex v) { vs.push_back(v); });
    return RSet(std::move(vs));
}

UniformHypergraph::UniformHypergraph(int r, int n, std::vector<EdgeMask> edges)
    : r_(r), n_(n), edges_(std::move(edges))
{
    if (r < 1)
        throw std::invalid_argument("rank must be at least 1");
    if (n < r || n > kMaxVertices)
        throw std::invalid_argument("vertex count must satisfy r <= n <= 64");
    const EdgeMask universe = prefix_mask(n);
    for (EdgeMask e : edges_) {
        if (std::popcount(e) != r)
            throw std::invalid_argument("edge " + to_rset(e).to_string() + " does not have "
                                        + std::to_string(r) + " vertices");
        if (e & ~universe)
            throw std::invalid_argument("edge " + to_rset(e).to_string() + " lies outside ["
                                        + std::to_string(n) + "]");
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge " + to_rset(*dup).to_string());
}

namespace {
std::vector<EdgeMask> masks_of(const std::vector<RSet>& sets)
{
    std::vector<EdgeMask> out;
    out.reserve(sets.size());
    for (const auto& s : sets)
        out.push_back(to_mask(s));
    return out;
}
} // namespace

UniformHypergraph::UniformHypergraph(int r, int n, const std::vector<RSet>& edges)
    : UniformHypergraph(r, n, masks_of(edges))
{
}

bool UniformHypergraph::contains(EdgeMask e) const noexcept
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool UniformHypergraph::contains(const RSet& e) const
{
    if (static_cast<int>(e.size()) != r_ || e.max() > n_)
        return false;
    return contains(to_mask(e));
}

std::vector<RSet> UniformHypergraph::edge_sets() const
{
    std::vector<RSet> out;
    out.reserve(edges_.size());
    for (EdgeMask e : edges_)
        out.push_back(to_rset(e));
    return out;
}

EdgeMask UniformHypergraph::vertex_span() const noexcept
{
    EdgeMask u = 0;
    for (EdgeMask e : edges_)
        u |= e;
    return u;
}

UniformHypergraph UniformHypergraph::with_order(int n) const
{
    return UniformHypergraph(r_, n, edges_);
}

namespace {
// Next mask with the same popcount (Gosper's hack).
EdgeMask next_combination(EdgeMask x)
{
    const EdgeMask c = x & (~x + 1);
    const EdgeMask r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}
} // namespace

UniformHypergraph clique(int t, int r)
{
    if (r < 1 || t < r || t > kMaxVertices)
        throw std::invalid_argument("clique requires 1 <= r <= t <= 64");
    std::vector<EdgeMask> edges;
    edges.reserve(binomial(t, r));
    const EdgeMask limit = prefix_mask(t);
    for (EdgeMask e = prefix_mask(r);;) {
        edges.push_back(e);
        if (e == (limit & ~prefix_mask(t - r)))
            break;
        e = next_combination(e);
    }
    return UniformHypergraph(r, t, std::move(edges));
}

UniformHypergraph colex_segment(int r, std::uint64_t m)
{
    if (r < 1)
        throw std::invalid_argument("colex_segment: rank must be at least 1");
    int n = r;
    while (binomial(n, r) < m) {
        ++n;
        if (n > kMaxVertices)
            throw std::invalid_argument("colex_segment: segment needs more than 64 vertices");
    }
    std::vector<EdgeMask> edges;
    edges.reserve(m);
    EdgeMask e = prefix_mask(r);
    for (std::uint64_t k = 0; k < m; ++k) {
        edges.push_back(e);
        if (k + 1 < m)
            e = next_combination(e);
    }
    return UniformHypergraph(r, n, std::move(edges));
}

UniformHypergraph complement_in_clique(const UniformHypergraph& g, int t)
{
    if ((g.vertex_span() & ~prefix_mask(t)) != 0)
        throw std::invalid_argument("complement_in_clique: edge outside [" + std::to_string(t) + "]");
    const auto all = clique(t, g.rank());
    std::vector<EdgeMask> out;
    out.reserve(all.size() - g.size());
    std::set_difference(all.edges().begin(), all.edges().end(), g.edges().begin(), g.edges().end(),
                        std::back_inserter(out));
    return UniformHypergraph(g.rank(), t, std::move(out));
}

std::size_t symmetric_difference_size(const UniformHypergraph& g, const UniformHypergraph& h)
{
    if (g.rank() != h.rank())
        throw std::invalid_argument("symmetric_difference_size: ranks differ");
    std::size_t common = 0;
    auto a = g.edges().begin();
    auto b = h.edges().begin();
    while (a != g.edges().end() && b != h.edges().end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else {
            ++common;
            ++a;
            ++b;
        }
    }
    return g.size() + h.size() - 2 * common;
}

bool is_subgraph(const UniformHypergraph& sub, const UniformHypergraph& super)
{
    return sub.rank() == super.rank()
        && std::includes(super.edges().begin(), super.edges().end(), sub.edges().begin(),
                         sub.edges().end());
}

} // namespace hlag

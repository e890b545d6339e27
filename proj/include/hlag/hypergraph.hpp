#pragma once

#include "hlag/rset.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hlag {

/// Vertex v occupies bit v - 1. Numeric order of masks is exactly colex order.
using EdgeMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr EdgeMask vertex_bit(Vertex v) noexcept { return EdgeMask{1} << (v - 1); }

/// Mask of [t] = {1, ..., t}.
constexpr EdgeMask prefix_mask(int t) noexcept
{
    return t >= 64 ? ~EdgeMask{0} : (EdgeMask{1} << t) - 1;
}

EdgeMask to_mask(const RSet& s);
RSet to_rset(EdgeMask e);

/// Calls f(v) for every vertex of the mask in increasing order.
template <typename F>
void for_each_vertex(EdgeMask e, F&& f)
{
    while (e) {
        f(static_cast<Vertex>(std::countr_zero(e) + 1));
        e &= e - 1;
    }
}

/// An r-uniform hypergraph on [n], n <= 64. Edges are kept in colex order and
/// are unique; construction with a duplicate edge throws.
class UniformHypergraph {
public:
    UniformHypergraph(int r, int n, std::vector<EdgeMask> edges);
    UniformHypergraph(int r, int n, const std::vector<RSet>& edges);

    int rank() const noexcept { return r_; }
    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    std::span<const EdgeMask> edges() const noexcept { return edges_; }
    bool contains(EdgeMask e) const noexcept;
    bool contains(const RSet& e) const;
    std::vector<RSet> edge_sets() const;

    /// Union of all edges.
    EdgeMask vertex_span() const noexcept;

    /// Same edges on a different universe [n]; throws if an edge would fall outside.
    UniformHypergraph with_order(int n) const;

    friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

private:
    int r_;
    int n_;
    std::vector<EdgeMask> edges_;
};

/// The complete r-graph [t]^(r).
UniformHypergraph clique(int t, int r);

/// C_{r,m}: the first m r-sets in colex order, on the smallest universe that holds them.
UniformHypergraph colex_segment(int r, std::uint64_t m);

/// [t]^(r) minus E(G), on universe [t].
UniformHypergraph complement_in_clique(const UniformHypergraph& g, int t);

/// |E(G) △ E(H)| for graphs of the same rank.
std::size_t symmetric_difference_size(const UniformHypergraph& g, const UniformHypergraph& h);

/// True iff every edge of `sub` is an edge of `super`.
bool is_subgraph(const UniformHypergraph& sub, const UniformHypergraph& super);

} // namespace hlag

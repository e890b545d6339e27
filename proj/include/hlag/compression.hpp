#pragma once

#include "hlag/hypergraph.hpp"

namespace hlag {

/// Lower covers of an r-set in the coordinatewise dominance order: every set
/// obtained by replacing one vertex v by v - 1 when v - 1 is not already present.
template <typename F>
void for_each_lower_cover(EdgeMask e, F&& f)
{
    for_each_vertex(e, [&](Vertex v) {
        if (v > 1 && !(e & vertex_bit(v - 1)))
            f((e & ~vertex_bit(v)) | vertex_bit(v - 1));
    });
}

/// Upper covers inside [n]: replace v by v + 1 when v + 1 <= n is not present.
template <typename F>
void for_each_upper_cover(EdgeMask e, int n, F&& f)
{
    for_each_vertex(e, [&](Vertex v) {
        if (v < n && !(e & vertex_bit(v + 1)))
            f((e & ~vertex_bit(v)) | vertex_bit(v + 1));
    });
}

/// True iff A <= B coordinatewise on the sorted vertex sequences (same size).
bool dominated_by(EdgeMask a, EdgeMask b);

/// The edge set is closed under moving any vertex to a smaller unused label.
bool is_left_compressed(const UniformHypergraph& g);

/// The (i, j)-shift for i < j: every edge containing j but not i moves to
/// (e \ {j}) ∪ {i} unless that set is already an edge. Throws if i >= j.
UniformHypergraph elementary_compress(const UniformHypergraph& g, Vertex i, Vertex j);

/// Applies elementary_compress over pairs in increasing (j, i) order until a
/// full sweep changes nothing.
UniformHypergraph left_compress_fixpoint(const UniformHypergraph& g);

} // namespace hlag

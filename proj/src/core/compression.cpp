#include "hlag/compression.hpp"

#include <stdexcept>
#include <string>

namespace hlag {

bool dominated_by(EdgeMask a, EdgeMask b)
{
    if (std::popcount(a) != std::popcount(b))
        return false;
    while (a) {
        if (std::countr_zero(a) > std::countr_zero(b))
            return false;
        a &= a - 1;
        b &= b - 1;
    }
    return true;
}

bool is_left_compressed(const UniformHypergraph& g)
{
    // Single-step left moves generate the dominance order, so checking lower
    // covers of every edge is enough.
    for (EdgeMask e : g.edges()) {
        bool closed = true;
        for_each_lower_cover(e, [&](EdgeMask lower) { closed = closed && g.contains(lower); });
        if (!closed)
            return false;
    }
    return true;
}

UniformHypergraph elementary_compress(const UniformHypergraph& g, Vertex i, Vertex j)
{
    if (i >= j)
        throw std::invalid_argument("elementary_compress requires i < j");
    if (i < 1 || j > g.order())
        throw std::out_of_range("elementary_compress: vertex outside [" + std::to_string(g.order()) + "]");
    const EdgeMask bi = vertex_bit(i), bj = vertex_bit(j);
    std::vector<EdgeMask> out;
    out.reserve(g.size());
    for (EdgeMask e : g.edges()) {
        if ((e & bj) && !(e & bi)) {
            const EdgeMask moved = (e & ~bj) | bi;
            out.push_back(g.contains(moved) ? e : moved);
        } else {
            out.push_back(e);
        }
    }
    return UniformHypergraph(g.rank(), g.order(), std::move(out));
}

UniformHypergraph left_compress_fixpoint(const UniformHypergraph& g)
{
    UniformHypergraph current = g;
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex j = 2; j <= current.order(); ++j) {
            for (Vertex i = 1; i < j; ++i) {
                auto next = elementary_compress(current, i, j);
                if (next != current) {
                    current = std::move(next);
                    changed = true;
                }
            }
        }
    }
    return current;
}

} // namespace hlag

#pragma once

#include "hlag/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hlag {

/// Depth-first generator of the left-compressed r-graphs on [nmax] with exactly
/// m edges (the size-m downsets of the dominance order on r-subsets).
///
/// Every downset is built by adding its edges in increasing colex order, so
/// each one has exactly one generating path and no isomorphism test is needed.
/// The cursor can be driven lazily and stopped at any point. For parallel
/// consumption, shard k of K only descends into the search nodes at a fixed
/// split depth whose DFS ordinal is congruent to k mod K; the K shards together
/// yield every graph exactly once.
class EnumerationCursor {
public:
    EnumerationCursor(int r, std::size_t m, int nmax, std::size_t shard = 0, std::size_t shard_count = 1);

    std::optional<UniformHypergraph> next();
    std::size_t yielded() const noexcept { return yielded_; }

private:
    bool owns_node();
    bool lower_covers_chosen(EdgeMask e) const;

    int r_;
    std::size_t m_;
    int nmax_;
    std::size_t shard_;
    std::size_t shard_count_;
    std::size_t split_depth_;
    std::size_t split_nodes_ = 0;
    std::size_t yielded_ = 0;
    bool done_ = false;
    bool started_ = false;
    std::vector<EdgeMask> candidates_; // r-subsets in colex order
    std::vector<EdgeMask> chosen_;     // current downset, colex increasing
    std::vector<std::size_t> resume_;  // per depth: next candidate index to try
};

std::vector<UniformHypergraph> enumerate_left_compressed(int r, std::size_t m, int nmax);

/// Streams the same sequence as enumerate_left_compressed; stops early when
/// `visit` returns false. Returns the number of graphs visited.
std::size_t for_each_left_compressed(int r, std::size_t m, int nmax,
                                     const std::function<bool(const UniformHypergraph&)>& visit);

} // namespace hlag

#pragma once

#include "hlag/hypergraph.hpp"
#include "hlag/weighting.hpp"

#include <cstdint>
#include <vector>

namespace hlag {

struct OptimizerConfig {
    int restarts = 64;                       ///< uniform start + (restarts - 1) random interior starts
    std::size_t max_iterations = 100000;     ///< growth-transform steps per start
    double value_tolerance = 1e-13;          ///< stop when lambda gains less than this per step
    double kkt_tolerance = 1e-8;
    double support_prune_epsilon = 1e-9;     ///< weights below this are snapped to zero
    std::uint64_t seed = 0;
    int exhaustive_support_threshold = 10;   ///< n <= this: also ascend on every admissible support
    int threads = 1;                         ///< workers for independent starts; result is thread-count independent

    /// Throws std::invalid_argument for non-positive tolerances or restarts < 1.
    void validate() const;
};

struct OptResult {
    double value;           ///< lambda(G, weighting)
    Weighting weighting;
    EdgeMask support;       ///< {v : weight_v > 0}
    double kkt_residual;    ///< max over the support of |lambda(E_i, x) - r lambda|
    std::size_t iterations; ///< growth-transform steps of the winning start
    bool converged;         ///< KKT conditions (including off-support) hold to kkt_tolerance

    std::vector<Vertex> support_vertices() const;
};

/// Numerical lambda(G): multistart growth-transform ascent with support pruning
/// and Newton polishing of the equal-link system; for small n every support
/// whose vertex pairs are all covered by edges is also tried. For left-compressed
/// G the returned weighting is non-increasing in the vertex label. A graph
/// without edges yields value 0, the uniform weighting and an empty support.
OptResult optimize(const UniformHypergraph& g, const OptimizerConfig& cfg = {});

/// Reduces the support of an optimum without lowering lambda by more than
/// value_tolerance: merges weight across vertex pairs not covered by an edge
/// and greedily drops vertices whose removal keeps the value.
OptResult minimize_support(const UniformHypergraph& g, const OptResult& result, const OptimizerConfig& cfg = {});

/// True iff every pair of vertices of `support` lies in an edge contained in `support`.
bool pairs_covered(const UniformHypergraph& g, EdgeMask support);

} // namespace hlag

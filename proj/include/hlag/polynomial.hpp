#pragma once

#include "hlag/hypergraph.hpp"

#include <span>
#include <vector>

namespace hlag {

// The edge polynomial lambda(G, x) = sum over edges of the product of their
// weights, and its links. All functions accept any real point x with at least
// n entries (not only simplex points), indexed so that x[v - 1] is vertex v.
// Rank-0 link sets contribute the empty product 1.

double eval_lambda(const UniformHypergraph& g, std::span<const double> x);

/// lambda(E_i, x) with E_i = {e \ {i} : i ∈ e}; equals d lambda / d x_i.
double vertex_link(const UniformHypergraph& g, std::span<const double> x, Vertex i);

/// All vertex links in one pass; entry v - 1 is lambda(E_v, x).
std::vector<double> vertex_links(const UniformHypergraph& g, std::span<const double> x);

/// lambda(E_ij, x) with E_ij = {e \ {i, j} : {i, j} ⊆ e}.
double pair_link(const UniformHypergraph& g, std::span<const double> x, Vertex i, Vertex j);

/// Swap-aware lambda(E_{i\j}, x): edges containing i but not j whose i -> j
/// swap is NOT an edge, with i deleted.
double strict_link(const UniformHypergraph& g, std::span<const double> x, Vertex i, Vertex j);

/// Plain lambda over {e \ {i} : i ∈ e, j ∉ e}, without the swap filter.
double plain_exclusive_link(const UniformHypergraph& g, std::span<const double> x, Vertex i, Vertex j);

/// Growth transform x'_i = x_i lambda(E_i, x) / (r lambda(G, x)). Never
/// decreases lambda. Throws std::domain_error when lambda(G, x) = 0.
std::vector<double> baum_eagon_step(const UniformHypergraph& g, std::span<const double> x);

/// max over the support of |lambda(E_i, x) - r lambda(G, x)|.
double kkt_residual(const UniformHypergraph& g, std::span<const double> x);

/// kkt_residual extended by the off-support violation max(0, lambda(E_i, x) - r lambda(G, x)).
double kkt_violation(const UniformHypergraph& g, std::span<const double> x);

} // namespace hlag

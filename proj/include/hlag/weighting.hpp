#pragma once

#include "hlag/hypergraph.hpp"

#include <span>
#include <vector>

namespace hlag {

/// A point of the standard simplex: nonnegative weights on [n] summing to 1.
class Weighting {
public:
    static constexpr double kSumTolerance = 1e-12;

    /// Throws std::invalid_argument on a negative/non-finite weight or when the
    /// sum is more than kSumTolerance away from 1.
    explicit Weighting(std::vector<double> weights);

    static Weighting uniform(int n);
    /// Uniform on the vertices of `support`, zero elsewhere.
    static Weighting uniform_on(int n, EdgeMask support);

    std::span<const double> values() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t k) const { return weights_[k]; }
    /// Weight of 1-based vertex v.
    double at(Vertex v) const { return weights_.at(static_cast<std::size_t>(v - 1)); }

    /// {v : x_v > 0}.
    EdgeMask support() const noexcept;

    friend bool operator==(const Weighting&, const Weighting&) = default;

private:
    std::vector<double> weights_;
};

} // namespace hlag

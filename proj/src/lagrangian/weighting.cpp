#include "hlag/weighting.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hlag {

Weighting::Weighting(std::vector<double> weights) : weights_(std::move(weights))
{
    if (weights_.empty() || weights_.size() > kMaxVertices)
        throw std::invalid_argument("weighting must have between 1 and 64 entries");
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0)
            throw std::invalid_argument("weights must be finite and nonnegative");
    }
    const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw std::invalid_argument("weights must sum to 1");
}

Weighting Weighting::uniform(int n)
{
    return uniform_on(n, prefix_mask(n));
}

Weighting Weighting::uniform_on(int n, EdgeMask support)
{
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("weighting size must be in [1, 64]");
    support &= prefix_mask(n);
    if (!support)
        throw std::invalid_argument("uniform_on: empty support");
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    const double share = 1.0 / std::popcount(support);
    for_each_vertex(support, [&](Vertex v) { w[static_cast<std::size_t>(v - 1)] = share; });
    return Weighting(std::move(w));
}

EdgeMask Weighting::support() const noexcept
{
    EdgeMask s = 0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] > 0.0)
            s |= EdgeMask{1} << k;
    }
    return s;
}

} // namespace hlag

#include "hlag/rset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlag {

std::uint64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t acc = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        // acc * (n - k + j) / j is integral; cancel gcd(acc, j) first so the
        // remaining divisor divides the new factor
        const auto g = std::gcd(acc, static_cast<std::uint64_t>(j));
        const auto factor = static_cast<std::uint64_t>(n - k + j) / (static_cast<std::uint64_t>(j) / g);
        if (__builtin_mul_overflow(acc / g, factor, &acc))
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return acc;
}

RSet::RSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    for (std::size_t p = 0; p < vertices_.size(); ++p) {
        if (vertices_[p] < 1)
            throw std::invalid_argument("vertex labels must be positive");
        if (p > 0 && vertices_[p - 1] >= vertices_[p])
            throw std::invalid_argument("vertex labels must be strictly increasing");
    }
}

RSet::RSet(std::initializer_list<Vertex> vertices) : RSet(std::vector<Vertex>(vertices)) {}

bool RSet::contains(Vertex v) const noexcept
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::string RSet::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RSet& s)
{
    os << '{';
    for (std::size_t p = 0; p < s.size(); ++p)
        os << (p ? "," : "") << s[p];
    return os << '}';
}

std::strong_ordering colex_compare(const RSet& a, const RSet& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("colex_compare: sets of different size");
    // Walk both sorted sequences from the top; the first disagreement is max(A △ B).
    for (std::size_t p = a.size(); p-- > 0;) {
        if (a[p] != b[p])
            return a[p] < b[p] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::uint64_t colex_rank(const RSet& s)
{
    std::uint64_t rank = 1;
    for (std::size_t p = 0; p < s.size(); ++p) {
        const std::uint64_t term = binomial(s[p] - 1, static_cast<std::int64_t>(p + 1));
        if (rank > std::numeric_limits<std::uint64_t>::max() - term)
            throw std::overflow_error("colex rank exceeds 64 bits");
        rank += term;
    }
    return rank;
}

RSet colex_unrank(int r, std::uint64_t k)
{
    if (r < 1)
        throw std::invalid_argument("colex_unrank: rank r must be at least 1");
    if (k < 1)
        throw std::invalid_argument("colex_unrank: position must be at least 1");
    std::uint64_t remaining = k - 1;
    std::vector<Vertex> out(static_cast<std::size_t>(r));
    for (int p = r; p >= 1; --p) {
        // largest c with C(c, p) <= remaining; C(p - 1, p) = 0 is always admissible
        std::int64_t lo = p - 1, hi = p;
        while (binomial(hi, p) <= remaining)
            hi *= 2;
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (binomial(mid, p) <= remaining)
                lo = mid;
            else
                hi = mid;
        }
        remaining -= binomial(lo, p);
        out[static_cast<std::size_t>(p - 1)] = static_cast<Vertex>(lo + 1);
    }
    return RSet(std::move(out));
}

} // namespace hlag

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hlag {

using Vertex = int;

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n. Throws std::overflow_error
/// if the value does not fit in 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// An r-element set of positive vertex labels, stored strictly increasing.
class RSet {
public:
    RSet() = default;
    explicit RSet(std::vector<Vertex> vertices);
    RSet(std::initializer_list<Vertex> vertices);

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    Vertex operator[](std::size_t p) const { return vertices_[p]; }
    Vertex max() const { return vertices_.back(); }
    bool contains(Vertex v) const noexcept;

    std::string to_string() const;

    friend bool operator==(const RSet&, const RSet&) = default;

private:
    std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& os, const RSet& s);

/// Colex comparison: A < B iff max(A △ B) lies in B. Throws std::invalid_argument
/// when the sets differ in size.
std::strong_ordering colex_compare(const RSet& a, const RSet& b);

/// 1-based position in the colex order of r-sets: 1 + sum_p C(a_p - 1, p).
std::uint64_t colex_rank(const RSet& s);

/// Inverse of colex_rank for sets of size r. Throws std::invalid_argument for k < 1.
RSet colex_unrank(int r, std::uint64_t k);

} // namespace hlag

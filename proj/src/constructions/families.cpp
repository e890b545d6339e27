#include "hlag/constructions.hpp"

#include "hlag/compression.hpp"

#include <stdexcept>

namespace hlag {

std::uint64_t FamilyParams::edge_count() const
{
    return binomial(t, r) - static_cast<std::uint64_t>(a);
}

std::vector<std::string> FamilyParams::describe(const std::string& family) const
{
    std::string line = "family " + family + " t=" + std::to_string(t) + " r=" + std::to_string(r)
                     + " a=" + std::to_string(a);
    if (i)
        line += " i=" + std::to_string(i);
    if (kase)
        line += " case=" + std::to_string(kase);
    return {line, "m=" + std::to_string(edge_count())};
}

namespace {

// {from, ..., to}; empty when from > to.
EdgeMask run(int from, int to)
{
    EdgeMask e = 0;
    for (int v = from; v <= to; ++v)
        e |= vertex_bit(v);
    return e;
}

UniformHypergraph clique_minus(int t, int r, const std::vector<EdgeMask>& missing)
{
    const auto complement = UniformHypergraph(r, t, missing);
    return complement_in_clique(complement, t);
}

void require_universe(int t)
{
    if (t > kMaxVertices)
        throw std::invalid_argument("family requires t <= 64");
}

// Theorem-7 style family without the 2i + 9 <= a range check.
UniformHypergraph two_family_graph(int t, int r, int a, int i)
{
    std::vector<EdgeMask> missing;
    const EdgeMask top = run(t - r + 2, t);
    for (int j = t - r + 2 - a + i; j <= t - r + 1; ++j)
        missing.push_back(vertex_bit(j) | top);
    const EdgeMask tail = vertex_bit(t - r + 1) | run(t - r + 3, t);
    for (int j = 1; j <= i; ++j)
        missing.push_back(vertex_bit(t - r - j + 1) | tail);
    return clique_minus(t, r, missing);
}

void require_plus_range(int t, int r, int a)
{
    require_universe(t);
    if (r < 4)
        throw std::invalid_argument("family requires r >= 4");
    if (a < 12 || a > t - r + 1)
        throw std::invalid_argument("family requires 12 <= a <= t - r + 1 (a=" + std::to_string(a)
                                    + ", t-r+1=" + std::to_string(t - r + 1) + ")");
}

} // namespace

UniformHypergraph addresult_graph(int t, int r, int a, int i)
{
    require_universe(t);
    if (r < 3)
        throw std::invalid_argument("addresult family requires r >= 3");
    if (i < 1)
        throw std::invalid_argument("addresult family requires i >= 1");
    if (2 * i + 9 > a || a > t - r + 1)
        throw std::invalid_argument("addresult family requires 2i + 9 <= a <= t - r + 1 (a=" + std::to_string(a)
                                    + ", 2i+9=" + std::to_string(2 * i + 9)
                                    + ", t-r+1=" + std::to_string(t - r + 1) + ")");
    return two_family_graph(t, r, a, i);
}

RSet addresult_min_nonedge(int t, int r, int i)
{
    return to_rset(vertex_bit(t - r - i + 1) | vertex_bit(t - r + 1) | run(t - r + 3, t));
}

UniformHypergraph lemmaaddplus_graph(int t, int r, int a)
{
    require_plus_range(t, r, a);
    std::vector<EdgeMask> missing;
    const EdgeMask top = run(t - r + 2, t);
    for (int j = t - r - a + 4; j <= t - r + 1; ++j)
        missing.push_back(vertex_bit(j) | top);
    missing.push_back(run(t - r, t - r + 1) | run(t - r + 3, t));
    missing.push_back(run(t - r, t - r + 2) | run(t - r + 4, t));
    return clique_minus(t, r, missing);
}

namespace {
UniformHypergraph case2_as_printed(int t, int r, int a)
{
    std::vector<EdgeMask> missing;
    const EdgeMask top = run(t - r + 2, t);
    for (int j = t - r - a + 4; j <= t - r + 1; ++j)
        missing.push_back(vertex_bit(j) | top);
    missing.push_back(run(t - r, t - r + 1) | run(t - r + 3, t));
    missing.push_back(vertex_bit(t - r - 1) | run(t - r + 1, t - r + 2) | run(t - r + 4, t));
    return clique_minus(t, r, missing);
}
} // namespace

Case2Variants addresultplus_case2_variants(int t, int r, int a)
{
    require_plus_range(t, r, a);
    auto lc = two_family_graph(t, r, a, 2);
    auto printed = case2_as_printed(t, r, a);
    const bool lc_ok = is_left_compressed(lc);
    const bool printed_ok = is_left_compressed(printed);
    return Case2Variants{std::move(lc), std::move(printed), lc_ok, printed_ok};
}

UniformHypergraph addresultplus_case(int t, int r, int a, int kase, Case2Variant variant)
{
    require_plus_range(t, r, a);
    switch (kase) {
    case 1:
        return two_family_graph(t, r, a, 1);
    case 2:
        return variant == Case2Variant::AsPrinted ? case2_as_printed(t, r, a) : two_family_graph(t, r, a, 2);
    case 3:
        return lemmaaddplus_graph(t, r, a);
    default:
        throw std::invalid_argument("addresult-plus case must be 1, 2 or 3");
    }
}

} // namespace hlag

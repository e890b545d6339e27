#pragma once

#include "hlag/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hlag {

/// Parameters of the near-clique families on [t] with m = C(t, r) - a edges.
struct FamilyParams {
    int t = 0;
    int r = 0;
    int a = 0;    ///< number of r-sets of [t] missing from the graph
    int i = 0;    ///< colex-gap index (addresult family)
    int kase = 0; ///< 1, 2 or 3 (addresult-plus family)

    std::uint64_t edge_count() const;
    std::vector<std::string> describe(const std::string& family) const;
};

/// [t]^(r) minus { j ∪ {t-r+2..t} : t-r+2-a+i <= j <= t-r+1 }
///           minus { {t-r-j+1, t-r+1} ∪ {t-r+3..t} : 1 <= j <= i }.
/// Requires r >= 3, i >= 1 and 2i + 9 <= a <= t - r + 1.
UniformHypergraph addresult_graph(int t, int r, int a, int i);

/// The colex-minimum non-edge of addresult_graph: {t-r-i+1, t-r+1} ∪ {t-r+3..t}.
RSet addresult_min_nonedge(int t, int r, int i);

/// [t]^(r) minus { j ∪ {t-r+2..t} : t-r-a+4 <= j <= t-r+1 },
///           minus {t-r, t-r+1} ∪ {t-r+3..t},
///           minus {t-r, t-r+1, t-r+2} ∪ {t-r+4..t}.
/// Requires r >= 4 and 12 <= a <= t - r + 1.
UniformHypergraph lemmaaddplus_graph(int t, int r, int a);

enum class Case2Variant {
    LeftCompressed, ///< third missing tuple {t-r-1, t-r+1} ∪ {t-r+3..t} (the i = 2 family)
    AsPrinted,      ///< third missing tuple {t-r-1, t-r+1, t-r+2} ∪ {t-r+4..t}
};

/// Case 1: addresult_graph(t, r, a, 1). Case 2: the two-gap family in the chosen
/// variant. Case 3: lemmaaddplus_graph(t, r, a). Requires r >= 4, 12 <= a <= t-r+1.
UniformHypergraph addresultplus_case(int t, int r, int a, int kase,
                                     Case2Variant variant = Case2Variant::LeftCompressed);

/// Both readings of case 2, each with its left-compression verdict.
struct Case2Variants {
    UniformHypergraph left_compressed;
    UniformHypergraph as_printed;
    bool left_compressed_ok;
    bool as_printed_ok;
};
Case2Variants addresultplus_case2_variants(int t, int r, int a);

} // namespace hlag

#pragma once

#include "hlag/constructions.hpp"
#include "hlag/optimizer.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlag {

/// One named inequality or identity. pass <=> margin >= -tolerance.
struct Check {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    /// lhs >= rhs: margin = lhs - rhs.
    static Check at_least(std::string label, double lhs, double rhs, double tolerance);
    /// lhs <= rhs: margin = rhs - lhs.
    static Check at_most(std::string label, double lhs, double rhs, double tolerance);
    /// lhs == rhs: margin = -|lhs - rhs|.
    static Check equal(std::string label, double lhs, double rhs, double tolerance);
    /// A structural property; lhs is 1 when it holds, rhs is the expectation.
    static Check holds(std::string label, bool value, bool expected = true);
};

struct VerificationReport {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::vector<Check> checks;
    double lambda_G = 0.0;
    double lambda_Crm = 0.0;
    bool converged_all = true;
    std::vector<std::string> notes;

    /// Every check passes and every optimization converged.
    bool passed() const;
};

struct VerifyConfig {
    OptimizerConfig optimizer;
    double headline_tolerance = 1e-9; ///< lambda inequalities
    double inner_tolerance = 1e-6;    ///< checks evaluated at a numerical optimum
    double identity_tolerance = 1e-8; ///< closed-form identities at the optimum
    double equality_tolerance = 1e-7; ///< lambda equalities between different graphs
    std::size_t max_graphs = 2'000'000;
    int samples = 100;                ///< random instances for sampled statements
};

/// The enumeration needed more graphs than VerifyConfig::max_graphs allows.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Maximum lambda over the left-compressed r-graphs with m edges on [nmax]
/// against lambda(C_{r,m}). For r = 3 nmax defaults (when 0) to the smallest t
/// with m <= C(t, 3); other ranks need an explicit nmax.
VerificationReport verify_conjecture(int r, std::uint64_t m, const VerifyConfig& cfg = {}, int nmax = 0);

/// Names: talbot-colex-range (r, t), addresult (t, r, a, i), addresult-plus
/// (t, r, a), lemmaadd-plus (t, r, a), clique-weight-bound (t = largest
/// universe, r; cfg.samples graphs), and the spot checks tang-delta2 (t, r,
/// a = p) and pz-clique (t; cfg.samples graphs).
VerificationReport verify_theorem(const std::string& name, const FamilyParams& params, const VerifyConfig& cfg = {});

const std::vector<std::string>& theorem_names();

} // namespace hlag

#pragma once

#include <string>
#include <vector>

#include "icdof/channel.hpp"
#include "icdof/rv.hpp"

namespace icdof {

/// One verdict: lhs <= rhs within accumulated error bounds.
/// holds == true requires slack.value >= -slack.abs_error.
struct InequalityReport {
    std::string name;
    ApproxReal lhs;
    ApproxReal rhs;
    ApproxReal slack;  // rhs - lhs
    bool holds = false;
    std::string note;
};

InequalityReport make_report(std::string name, ApproxReal lhs, ApproxReal rhs,
                             std::string note = "");

// H(X+Y) <= H(X) + H(Y) for independent X, Y.
InequalityReport check_subadditivity(const DiscreteRV& x, const DiscreteRV& y);

// H(alpha*X + beta*Y) >= max{H(X), H(Y)} for independent X, Y and
// nonzero alpha, beta.
InequalityReport check_max_lower_bound(const Rat& alpha, const Rat& beta, const DiscreteRV& x,
                                       const DiscreteRV& y);

// Entropy Pluennecke-Ruzsa sum bound for mutually independent X, Y_1..Y_m:
// H(X + Y_1 + ... + Y_m) <= H(X) + sum_i [H(X+Y_i) - H(X)].
// When H(X) > 0 the note carries the ratio H(X + sum Y_i)/H(X).
InequalityReport check_pr_sum(const DiscreteRV& x, const std::vector<DiscreteRV>& ys);

long tau_constant(const Int& p, const Int& q);  // 7*floor(log2|p|) + 7*floor(log2|q|) + 2

// H(pX+qY) - H(X+Y) <= tau_{p,q} * (2H(X+Y) - H(X) - H(Y)) for nonzero
// integers p, q and independent X, Y.
InequalityReport check_wu_thm14(const Int& p, const Int& q, const DiscreteRV& x,
                                const DiscreteRV& y);

// Copy-swap lower bound: for X' an independent copy of X and Z independent
// of both, H(pX + Z) - Delta(X, X') <= H(rX' + (p-r)X + Z), for all
// rational p, r.
InequalityReport check_wu_lem18(const Rat& p, const Rat& r, const DiscreteRV& x,
                                const DiscreteRV& x_copy, const DiscreteRV& z);

/// Per-user ratios [H(sum_j h_ij V_j) - H(sum_{j!=i} h_ij V_j)] / max_i H(sum_j h_ij V_j),
/// and the epsilon level 1/2 - min_i ratio they achieve.
struct DofRatioReport {
    std::vector<ApproxReal> ratios;
    std::vector<ApproxReal> signal_entropy;        // H(sum_j h_ij V_j)
    std::vector<ApproxReal> interference_entropy;  // H(sum_{j!=i} h_ij V_j)
    ApproxReal max_signal_entropy;
    ApproxReal min_ratio;
    ApproxReal eps_level;  // 1/2 - min_ratio
};

// Uses base members V_1..V_K of the family.  Throws std::domain_error when
// all members are point masses (zero denominator).
DofRatioReport dof_ratio(const ChannelMatrix& m, const RVFamily& family);

/// Explicit balancing intervals, conclusions of the premise
/// min_i ratio >= 1/2 - eps: the interference/signal-to-member and pairwise
/// member entropy ratios all sit inside fixed eps-intervals.
struct BalancingReport {
    Rat eps;
    bool applicable = false;  // premise held
    ApproxReal min_ratio;     // measured premise level
    std::vector<InequalityReport> interval_checks;
    bool all_hold = false;
};

BalancingReport balancing_report(const ChannelMatrix& m, const RVFamily& family,
                                 const Rat& eps);

}  // namespace icdof

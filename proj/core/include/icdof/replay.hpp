#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icdof/channel.hpp"
#include "icdof/inequalities.hpp"
#include "icdof/injectivity.hpp"
#include "icdof/rv.hpp"

namespace icdof {

/// One record of a 3-user proof-chain walk.  Unconditional inequality steps
/// carry a verdict; residual steps track a ratio against its target value
/// and are report-only (their slack hides an unspecified O(eps) constant).
struct TraceStep {
    enum class Kind { UnconditionalInequality, ResidualEquality };
    std::string label;
    Kind kind = Kind::ResidualEquality;
    ApproxReal lhs;
    ApproxReal rhs;       // inequality rhs, or the residual target
    ApproxReal residual;  // |ratio - target| for residual steps; slack otherwise
    std::optional<bool> verdict;  // only for unconditional steps
    std::string description;
};

struct InductionTrace {
    std::vector<TraceStep> steps;
    bool all_unconditional_hold() const;
};

// Base-case (degree 0) chain for the canonical 3-user matrix: the entropy
// ratio H(a0 V1 + b0 (V2+V3))/H(V1) walked through its intermediate sums,
// the tau-bound inequality instance, and the final sandwich.
// pre: three independent members with positive entropy; a0, b0 nonzero.
InductionTrace replay_base_case(const CanonicalForm3& canon, RVFamily& family, const Int& a0,
                                const Int& b0, const Rat& eps);

// Degree-m induction step: the three central quantities built from
// independent copies (V1*, V1^, V2~, V2^, V3~, V3^), both polynomial-sum
// mixtures p(h) and p~(h), the two copy-swap inequality instances, and the
// final ratio H(sum a_i h^i V1 + sum b_i h^i (V2+V3))/H(V1).
// pre: a, b of length m+1 (constant term first), m >= 1.
InductionTrace replay_induction_step(const CanonicalForm3& canon, RVFamily& family,
                                     const std::vector<Int>& a, const std::vector<Int>& b,
                                     const Rat& eps);

/// Probe output: the collision witness certifying that g1 is a ratio of
/// truncation-set differences, plus the measured entropy ratio against both
/// chain targets (2 from the full-sum balancing, 1 from the induction).
struct ContradictionProbe {
    CollisionWitness witness;
    ApproxReal ratio;  // H(g1 V1 + V2 + V3)/H(V1)
    ApproxReal residual_to_two;
    ApproxReal residual_to_one;
    ApproxReal eps_level;  // measured from dof_ratio
    InequalityReport sandwich_lower;  // ratio >= 1
    InequalityReport sandwich_upper;  // ratio <= (H(V1)+H(V2)+H(V3))/H(V1)
};

// pre: canon.g[0] equals numer(h)/denom(h) at canon.h; a witness must exist
// at level (N, d), otherwise the probe refuses (std::runtime_error).
ContradictionProbe contradiction_probe(const CanonicalForm3& canon, const UniPoly& numer,
                                       const UniPoly& denom, const RVFamily& family, long N,
                                       int d, const SearchOptions& opts = {});

}  // namespace icdof

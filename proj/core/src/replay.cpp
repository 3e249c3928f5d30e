#include "icdof/replay.hpp"

#include <stdexcept>

namespace icdof {

bool InductionTrace::all_unconditional_hold() const {
    for (const auto& s : steps)
        if (s.kind == TraceStep::Kind::UnconditionalInequality && !(s.verdict && *s.verdict))
            return false;
    return true;
}

namespace {

using Term = RVFamily::Term;

TraceStep residual_step(std::string label, ApproxReal ratio, double target,
                        std::string description) {
    TraceStep s;
    s.label = std::move(label);
    s.kind = TraceStep::Kind::ResidualEquality;
    s.lhs = ratio;
    s.rhs = ApproxReal::exact(target);
    s.residual = ratio - s.rhs;
    s.description = std::move(description);
    return s;
}

TraceStep verdict_step(std::string label, const InequalityReport& rep,
                       std::string description) {
    TraceStep s;
    s.label = std::move(label);
    s.kind = TraceStep::Kind::UnconditionalInequality;
    s.lhs = rep.lhs;
    s.rhs = rep.rhs;
    s.residual = rep.slack;
    s.verdict = rep.holds;
    s.description = std::move(description);
    return s;
}

ApproxReal positive_entropy(const RVFamily& family, RVFamily::Handle h) {
    ApproxReal e = entropy_bits(family.dist(h));
    if (e.value <= e.abs_error)
        throw std::domain_error("family member " + family.name(h) + " has zero entropy");
    return e;
}

}  // namespace

InductionTrace replay_base_case(const CanonicalForm3& canon, RVFamily& family, const Int& a0,
                                const Int& b0, const Rat& eps) {
    (void)canon;
    (void)eps;
    if (family.K() != 3) throw std::invalid_argument("base case needs a 3-member family");
    if (a0 == 0 || b0 == 0) throw std::invalid_argument("base case needs nonzero a0, b0");
    const auto V1 = family.base(0), V2 = family.base(1), V3 = family.base(2);
    ApproxReal h1 = positive_entropy(family, V1);
    ApproxReal h3 = positive_entropy(family, V3);
    positive_entropy(family, V2);

    const Rat one(1);
    DiscreteRV v23 = family.combine(std::vector<Term>{{one, V2}, {one, V3}});
    DiscreteRV v13 = family.combine(std::vector<Term>{{one, V1}, {one, V3}});
    DiscreteRV v123 = family.combine(std::vector<Term>{{one, V1}, {one, V2}, {one, V3}});
    ApproxReal h123 = entropy_bits(v123);

    InductionTrace tr;
    tr.steps.push_back(residual_step("interference_over_v1", entropy_bits(v23) / h1, 1.0,
                                     "H(V2+V3)/H(V1) against 1"));
    tr.steps.push_back(residual_step("cross_sum_over_v1", entropy_bits(v13) / h1, 1.0,
                                     "H(V1+V3)/H(V1) against 1"));
    tr.steps.push_back(residual_step("triple_sum_over_v3", h123 / h3, 1.0,
                                     "H(V1+V2+V3)/H(V3) against 1"));
    tr.steps.push_back(residual_step("triple_sum_over_v1", h123 / h1, 1.0,
                                     "H(V1+V2+V3)/H(V1) against 1"));
    tr.steps.push_back(verdict_step("tau_increment_bound",
                                    check_wu_thm14(a0, b0, family.dist(V1), v23),
                                    "H(a0 V1 + b0 (V2+V3)) - H(V1+V2+V3) against the tau bound"));
    tr.steps.push_back(verdict_step("scaled_sum_lower_bound",
                                    check_max_lower_bound(Rat(a0), Rat(b0), family.dist(V1), v23),
                                    "H(a0 V1 + b0 (V2+V3)) >= max{H(V1), H(V2+V3)}"));
    DiscreteRV final_sum =
        family.combine(std::vector<Term>{{Rat(a0), V1}, {Rat(b0), V2}, {Rat(b0), V3}});
    tr.steps.push_back(residual_step("final_ratio", entropy_bits(final_sum) / h1, 1.0,
                                     "H(a0 V1 + b0 (V2+V3))/H(V1) against 1"));
    return tr;
}

InductionTrace replay_induction_step(const CanonicalForm3& canon, RVFamily& family,
                                     const std::vector<Int>& a, const std::vector<Int>& b,
                                     const Rat& eps) {
    (void)eps;
    if (family.K() != 3) throw std::invalid_argument("induction step needs a 3-member family");
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("coefficient vectors need equal length m+1 with m >= 1");
    const size_t m = a.size() - 1;
    const Rat h = canon.h;

    const auto V1 = family.base(0), V2 = family.base(1), V3 = family.base(2);
    ApproxReal h1 = positive_entropy(family, V1);
    positive_entropy(family, V2);
    positive_entropy(family, V3);
    const auto V1s = family.independent_copy(V1, "V1*");
    const auto V1h = family.independent_copy(V1, "V1^");
    const auto V2t = family.independent_copy(V2, "V2~");
    const auto V2h = family.independent_copy(V2, "V2^");
    const auto V3t = family.independent_copy(V3, "V3~");
    const auto V3h = family.independent_copy(V3, "V3^");

    // alpha1 = sum_{i<m} a_i h^i, alpha2 = a_m h^m; same split for b.
    Rat alpha1(0), beta1(0), hp(1);
    for (size_t i = 0; i < m; ++i) {
        alpha1 += Rat(a[i]) * hp;
        beta1 += Rat(b[i]) * hp;
        hp *= h;
    }
    const Rat alpha2 = Rat(a[m]) * hp;
    const Rat beta2 = Rat(b[m]) * hp;

    InductionTrace tr;
    DiscreteRV tail = family.combine(std::vector<Term>{
        {h, V2}, {h, V3}, {alpha2, V1s}, {beta2, V2t}, {beta2, V3t}});
    tr.steps.push_back(residual_step(
        "leading_term_mixture", entropy_bits(tail) / h1, 1.0,
        "H(h(V2+V3) + a_m h^m V1* + b_m h^m (V2~+V3~))/H(V1) against 1"));

    DiscreteRV head = family.combine(std::vector<Term>{
        {h, V2}, {h, V3}, {alpha1, V1}, {beta1, V2h}, {beta1, V3h}});
    tr.steps.push_back(residual_step(
        "lower_terms_mixture", entropy_bits(head) / h1, 1.0,
        "H(h(V2+V3) + alpha1 V1 + beta1 (V2^+V3^))/H(V1) against 1"));

    DiscreteRV p_mix = family.combine(std::vector<Term>{
        {h, V2}, {h, V3}, {alpha1, V1h}, {beta1, V2h}, {beta1, V3h},
        {alpha2, V1s}, {beta2, V2t}, {beta2, V3t}});
    ApproxReal hp_mix = entropy_bits(p_mix);
    tr.steps.push_back(residual_step("full_mixture", hp_mix / h1, 1.0,
                                     "H(p(h))/H(V1) against 1"));

    DiscreteRV pt_mix = family.combine(std::vector<Term>{
        {alpha1, V1h}, {beta1, V2h}, {beta1, V3h}, {alpha2, V1s}, {beta2, V2t}, {beta2, V3t}});
    ApproxReal hpt_mix = entropy_bits(pt_mix);
    tr.steps.push_back(verdict_step("mixture_sandwich_upper",
                                    make_report("mixture_sandwich_upper", hpt_mix, hp_mix),
                                    "H(p(h)) >= H(p~(h)) by the max lower bound"));
    {
        // H(p~(h)) >= H(V1) is unconditional only when the V1-side
        // coefficients do not all vanish at this h.
        TraceStep s;
        s.label = "mixture_sandwich_lower";
        s.lhs = h1;
        s.rhs = hpt_mix;
        s.residual = hpt_mix - h1;
        if (alpha1 != 0 || alpha2 != 0) {
            s.kind = TraceStep::Kind::UnconditionalInequality;
            s.verdict = s.residual.certainly_nonnegative();
        } else {
            s.kind = TraceStep::Kind::ResidualEquality;
        }
        s.description = "H(p~(h)) >= H(V1)";
        tr.steps.push_back(s);
    }

    DiscreteRV z1 = family.combine(std::vector<Term>{
        {beta1, V2t}, {beta1, V3t}, {beta2, V2}, {beta2, V3}});
    tr.steps.push_back(verdict_step(
        "copy_swap_v1",
        check_wu_lem18(alpha1 + alpha2, alpha1, family.dist(V1), family.dist(V1s), z1),
        "swap V1 against its copy under Z = beta1(V2~+V3~) + beta2(V2+V3)"));

    ApproxReal delta_plus = ruzsa_delta(family.dist(V1), family.dist(V1s).negated());
    ApproxReal delta_minus = ruzsa_delta(family.dist(V1), family.dist(V1s));
    tr.steps.push_back(residual_step("delta_sum_copy", delta_plus / h1, 0.0,
                                     "Delta(V1, -V1*)/H(V1) against 0"));
    tr.steps.push_back(residual_step("delta_difference_copy", delta_minus / h1, 0.0,
                                     "Delta(V1, V1*)/H(V1) against 0"));

    DiscreteRV x23 = family.combine(std::vector<Term>{{Rat(1), V2}, {Rat(1), V3}});
    DiscreteRV x23t = family.combine(std::vector<Term>{{Rat(1), V2t}, {Rat(1), V3t}});
    DiscreteRV z2 = family.combine(std::vector<Term>{{alpha1 + alpha2, V1}});
    tr.steps.push_back(verdict_step(
        "copy_swap_v23", check_wu_lem18(beta1 + beta2, beta2, x23, x23t, z2),
        "swap V2+V3 against its copy under Z = (alpha1+alpha2) V1"));

    DiscreteRV final_sum = family.combine(std::vector<Term>{
        {alpha1 + alpha2, V1}, {beta1 + beta2, V2}, {beta1 + beta2, V3}});
    ApproxReal final_ratio = entropy_bits(final_sum) / h1;
    tr.steps.push_back(residual_step(
        "copy_swap_combined", final_ratio - hpt_mix / h1, 0.0,
        "final ratio minus H(p~(h))/H(V1); bounded by the copy-swap slack"));
    tr.steps.push_back(residual_step(
        "final_ratio", final_ratio, 1.0,
        "H(sum a_i h^i V1 + sum b_i h^i (V2+V3))/H(V1) against 1"));
    return tr;
}

ContradictionProbe contradiction_probe(const CanonicalForm3& canon, const UniPoly& numer,
                                       const UniPoly& denom, const RVFamily& family, long N,
                                       int d, const SearchOptions& opts) {
    if (numer.is_zero() || denom.is_zero())
        throw std::invalid_argument("diagonal polynomial ratio must be nonzero");
    const Rat dv = denom.eval(canon.h);
    if (dv == 0) throw std::invalid_argument("denominator polynomial vanishes at h");
    const Rat g1 = numer.eval(canon.h) / dv;
    if (canon.g[0] != g1)
        throw std::invalid_argument("canonical g1 does not equal the polynomial ratio at h");

    ChannelMatrix m = canon.reconstruct();
    DofRatioReport dr = dof_ratio(m, family);  // rejects all-deterministic families

    CheckOutcome outcome = check_user(m, 0, N, d, opts);
    if (!outcome.is_witness())
        throw std::runtime_error(
            "no collision witness at this (N, d); matrix not demonstrably violating at this level");

    const auto V1 = family.base(0), V2 = family.base(1), V3 = family.base(2);
    ApproxReal h1 = entropy_bits(family.dist(V1));
    if (h1.value <= h1.abs_error) throw std::domain_error("V1 has zero entropy");
    DiscreteRV mixed = family.combine(std::vector<RVFamily::Term>{
        {g1, V1}, {Rat(1), V2}, {Rat(1), V3}});
    ApproxReal ratio = entropy_bits(mixed) / h1;

    ContradictionProbe probe;
    probe.witness = *outcome.witness;
    probe.ratio = ratio;
    probe.residual_to_two = ratio - ApproxReal::exact(2.0);
    probe.residual_to_one = ratio - ApproxReal::exact(1.0);
    probe.eps_level = dr.eps_level;
    probe.sandwich_lower = make_report("ratio_at_least_one", ApproxReal::exact(1.0), ratio);
    ApproxReal bound = (entropy_bits(family.dist(V1)) + entropy_bits(family.dist(V2)) +
                        entropy_bits(family.dist(V3))) /
                       h1;
    probe.sandwich_upper = make_report("ratio_at_most_entropy_sum", ratio, bound);
    return probe;
}

}  // namespace icdof

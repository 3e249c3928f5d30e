#include "icdof/inequalities.hpp"

#include <stdexcept>

namespace icdof {

InequalityReport make_report(std::string name, ApproxReal lhs, ApproxReal rhs,
                             std::string note) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.holds = r.slack.certainly_nonnegative();
    r.note = std::move(note);
    return r;
}

namespace {

DiscreteRV sum_of(const std::vector<Rat>& coeffs, const std::vector<DiscreteRV>& vars) {
    return linear_combination(coeffs, vars);
}

}  // namespace

InequalityReport check_subadditivity(const DiscreteRV& x, const DiscreteRV& y) {
    ApproxReal lhs = entropy_bits(sum_of({Rat(1), Rat(1)}, {x, y}));
    ApproxReal rhs = entropy_bits(x) + entropy_bits(y);
    return make_report("subadditivity", lhs, rhs);
}

InequalityReport check_max_lower_bound(const Rat& alpha, const Rat& beta, const DiscreteRV& x,
                                       const DiscreteRV& y) {
    if (alpha == 0 || beta == 0)
        throw std::invalid_argument("max lower bound requires nonzero coefficients");
    ApproxReal hx = entropy_bits(x), hy = entropy_bits(y);
    ApproxReal lhs = hx.value >= hy.value ? hx : hy;  // max{H(X), H(Y)}
    lhs.abs_error = std::max(hx.abs_error, hy.abs_error);
    ApproxReal rhs = entropy_bits(sum_of({alpha, beta}, {x, y}));
    return make_report("max_lower_bound", lhs, rhs);
}

InequalityReport check_pr_sum(const DiscreteRV& x, const std::vector<DiscreteRV>& ys) {
    if (ys.empty()) throw std::invalid_argument("pr_sum requires at least one Y");
    ApproxReal hx = entropy_bits(x);
    ApproxReal rhs = hx;
    for (const auto& y : ys) {
        ApproxReal hxy = entropy_bits(sum_of({Rat(1), Rat(1)}, {x, y}));
        rhs = rhs + (hxy - hx);
    }
    std::vector<Rat> coeffs(ys.size() + 1, Rat(1));
    std::vector<DiscreteRV> vars{x};
    vars.insert(vars.end(), ys.begin(), ys.end());
    ApproxReal lhs = entropy_bits(sum_of(coeffs, vars));
    std::string note;
    if (hx.value > hx.abs_error) {
        ApproxReal ratio = lhs / hx;
        note = "ratio H(X+sum Y)/H(X) = " + std::to_string(ratio.value);
    }
    return make_report("pluennecke_ruzsa_sum", lhs, rhs, std::move(note));
}

long tau_constant(const Int& p, const Int& q) {
    if (p == 0 || q == 0) throw std::invalid_argument("tau requires nonzero integers");
    return 7 * floor_log2_abs(p) + 7 * floor_log2_abs(q) + 2;
}

InequalityReport check_wu_thm14(const Int& p, const Int& q, const DiscreteRV& x,
                                const DiscreteRV& y) {
    long tau = tau_constant(p, q);
    ApproxReal hxy = entropy_bits(sum_of({Rat(1), Rat(1)}, {x, y}));
    ApproxReal hpq = entropy_bits(sum_of({Rat(p), Rat(q)}, {x, y}));
    ApproxReal lhs = hpq - hxy;
    ApproxReal two = ApproxReal::exact(2.0);
    ApproxReal rhs = ApproxReal::exact(static_cast<double>(tau)) *
                     (two * hxy - entropy_bits(x) - entropy_bits(y));
    return make_report("wu_thm14", lhs, rhs, "tau = " + std::to_string(tau));
}

InequalityReport check_wu_lem18(const Rat& p, const Rat& r, const DiscreteRV& x,
                                const DiscreteRV& x_copy, const DiscreteRV& z) {
    if (!x.same_distribution(x_copy))
        throw std::invalid_argument("x_copy must be identically distributed with x");
    ApproxReal lhs =
        entropy_bits(sum_of({p, Rat(1)}, {x, z})) - ruzsa_delta(x, x_copy);
    ApproxReal rhs = entropy_bits(sum_of({r, p - r, Rat(1)}, {x_copy, x, z}));
    return make_report("wu_lem18", lhs, rhs);
}

DofRatioReport dof_ratio(const ChannelMatrix& m, const RVFamily& family) {
    const int K = m.K();
    if (family.K() != K) throw std::invalid_argument("family size does not match K");
    bool all_deterministic = true;
    for (int j = 0; j < K; ++j)
        if (!family.dist(family.base(j)).is_point_mass()) all_deterministic = false;
    if (all_deterministic)
        throw std::domain_error("dof_ratio: all-deterministic family, denominator is zero");

    DofRatioReport rep;
    for (int i = 0; i < K; ++i) {
        std::vector<RVFamily::Term> sig, intf;
        for (int j = 0; j < K; ++j) {
            sig.push_back({m.at(i, j), family.base(j)});
            if (j != i) intf.push_back({m.at(i, j), family.base(j)});
        }
        rep.signal_entropy.push_back(entropy_bits(family.combine(sig)));
        rep.interference_entropy.push_back(entropy_bits(family.combine(intf)));
    }
    rep.max_signal_entropy = rep.signal_entropy[0];
    for (const auto& h : rep.signal_entropy)
        if (h.value > rep.max_signal_entropy.value) rep.max_signal_entropy = h;
    for (int i = 0; i < K; ++i) {
        ApproxReal num = rep.signal_entropy[i] - rep.interference_entropy[i];
        rep.ratios.push_back(num / rep.max_signal_entropy);
    }
    rep.min_ratio = rep.ratios[0];
    for (const auto& r : rep.ratios)
        if (r.value < rep.min_ratio.value) rep.min_ratio = r;
    rep.eps_level = ApproxReal::exact(0.5) - rep.min_ratio;
    return rep;
}

BalancingReport balancing_report(const ChannelMatrix& m, const RVFamily& family,
                                 const Rat& eps) {
    if (eps <= 0 || eps >= Rat(1, 2))
        throw std::invalid_argument("epsilon must lie in (0, 1/2)");
    const int K = m.K();
    DofRatioReport dr = dof_ratio(m, family);

    BalancingReport rep;
    rep.eps = eps;
    rep.min_ratio = dr.min_ratio;
    ApproxReal premise_target = ApproxReal::from_rat(Rat(1, 2) - eps);
    rep.applicable = dr.min_ratio.holds_geq(premise_target);
    if (!rep.applicable) return rep;  // conclusions only asserted under the premise

    std::vector<ApproxReal> member_entropy;
    for (int i = 0; i < K; ++i)
        member_entropy.push_back(entropy_bits(family.dist(family.base(i))));

    const Rat lo = (1 - 2 * eps) / (1 + 2 * eps);
    const Rat hi = (1 + 2 * eps) / (1 - 2 * eps);
    const Rat sig_lo = 2 * (1 - 2 * eps) / ((1 + 2 * eps) * (1 + 2 * eps));
    const Rat sig_hi = 1 + hi;
    const ApproxReal lo_a = ApproxReal::from_rat(lo), hi_a = ApproxReal::from_rat(hi);
    const ApproxReal sig_lo_a = ApproxReal::from_rat(sig_lo);
    const ApproxReal sig_hi_a = ApproxReal::from_rat(sig_hi);

    auto tag = [](const std::string& base, int i, int j = -1) {
        std::string s = base + "[i=" + std::to_string(i + 1);
        if (j >= 0) s += ",j=" + std::to_string(j + 1);
        return s + "]";
    };

    // Interference-to-member interval (per user).
    for (int i = 0; i < K; ++i) {
        ApproxReal ratio = dr.interference_entropy[i] / member_entropy[i];
        rep.interval_checks.push_back(make_report(tag("interference_ratio_lower", i), lo_a, ratio));
        rep.interval_checks.push_back(make_report(tag("interference_ratio_upper", i), ratio, hi_a));
    }
    // Pairwise member entropy ratios.
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) {
            if (i == j) continue;
            ApproxReal ratio = member_entropy[i] / member_entropy[j];
            rep.interval_checks.push_back(make_report(tag("pairwise_ratio_lower", i, j), lo_a, ratio));
            rep.interval_checks.push_back(make_report(tag("pairwise_ratio_upper", i, j), ratio, hi_a));
        }
    // Signal-to-member interval (per user).
    for (int i = 0; i < K; ++i) {
        ApproxReal ratio = dr.signal_entropy[i] / member_entropy[i];
        rep.interval_checks.push_back(make_report(tag("signal_ratio_lower", i), sig_lo_a, ratio));
        rep.interval_checks.push_back(make_report(tag("signal_ratio_upper", i), ratio, sig_hi_a));
    }
    rep.all_hold = true;
    for (const auto& c : rep.interval_checks)
        if (!c.holds) rep.all_hold = false;
    return rep;
}

}  // namespace icdof

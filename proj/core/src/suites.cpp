#include "icdof/suites.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "icdof/random_instances.hpp"
#include "icdof/rv.hpp"

namespace icdof {

namespace {

std::vector<InequalityReport> instance_subadditivity(SplitMix64& g) {
    DiscreteRV x = random_rv(g), y = random_rv(g);
    return {check_subadditivity(x, y)};
}

std::vector<InequalityReport> instance_max_lower_bound(SplitMix64& g) {
    Rat a = random_nonzero_int_coeff(g), b = random_nonzero_int_coeff(g);
    DiscreteRV x = random_rv(g), y = random_rv(g);
    return {check_max_lower_bound(a, b, x, y)};
}

std::vector<InequalityReport> instance_pr_sum(SplitMix64& g) {
    const int m = static_cast<int>(g.range(1, 3));
    DiscreteRV x = random_rv(g, 6);
    std::vector<DiscreteRV> ys;
    for (int i = 0; i < m; ++i) ys.push_back(random_rv(g, 5));
    return {check_pr_sum(x, ys)};
}

std::vector<InequalityReport> instance_wu_thm14(SplitMix64& g) {
    Int p(random_nonzero_int_coeff(g).get_num());
    Int q(random_nonzero_int_coeff(g).get_num());
    DiscreteRV x = random_rv(g), y = random_rv(g);
    return {check_wu_thm14(p, q, x, y)};
}

std::vector<InequalityReport> instance_wu_lem18(SplitMix64& g) {
    // p, r small rationals (the bound holds for all reals)
    Rat p = random_nonzero_int_coeff(g);
    p /= Rat(g.range(1, 3));
    Rat r(g.range(-4, 4));
    r /= Rat(g.range(1, 3));
    DiscreteRV x = random_rv(g, 5);
    DiscreteRV z = random_rv(g, 5);
    return {check_wu_lem18(p, r, x, x, z)};
}

std::vector<InequalityReport> instance_delta(SplitMix64& g) {
    DiscreteRV v = random_rv(g), w = random_rv(g);
    ApproxReal d = ruzsa_delta(v, w);
    return {make_report("delta_nonnegative", ApproxReal::exact(0.0), d)};
}

// Measured-epsilon balancing instance: the premise holds by construction
// whenever the measured epsilon level lies in (0, 1/2); the interval checks
// are then theorem consequences and must all pass.
std::vector<InequalityReport> instance_balancing(SplitMix64& g, bool& premise_passed) {
    premise_passed = false;
    ChannelMatrix m = random_fully_connected(g, 3, 4, 3);
    std::vector<DiscreteRV> base;
    for (int i = 0; i < 3; ++i) base.push_back(random_rv(g, 4, 8));
    RVFamily family(std::move(base));
    DofRatioReport dr = dof_ratio(m, family);
    // Round the measured level up to a rational on a fixed grid.
    double level = dr.eps_level.value + dr.eps_level.abs_error;
    long grid = static_cast<long>(std::ceil(level * 1024.0));
    if (grid < 1) grid = 1;
    Rat eps(grid, 1024);
    eps.canonicalize();
    if (eps >= Rat(1, 2)) return {};  // not representable with eps in (0, 1/2)
    BalancingReport rep = balancing_report(m, family, eps);
    if (!rep.applicable) return {};
    premise_passed = true;
    return rep.interval_checks;
}

using InstanceFn = std::vector<InequalityReport> (*)(SplitMix64&);

InstanceFn lookup(const std::string& name) {
    if (name == "subadditivity") return instance_subadditivity;
    if (name == "max_lower_bound") return instance_max_lower_bound;
    if (name == "pr_sum") return instance_pr_sum;
    if (name == "wu_thm14") return instance_wu_thm14;
    if (name == "wu_lem18") return instance_wu_lem18;
    if (name == "delta") return instance_delta;
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"subadditivity", "max_lower_bound", "pr_sum", "wu_thm14",
            "wu_lem18",      "delta",           "balancing"};
}

SuiteReport run_suite(const std::string& name, int instances, std::uint64_t seed,
                      int workers) {
    if (instances < 1) throw std::invalid_argument("suite needs at least one instance");
    SuiteReport rep;
    rep.suite = name;
    rep.seed = seed;
    rep.instances = instances;

    const bool balancing = (name == "balancing");
    InstanceFn fn = balancing ? nullptr : lookup(name);
    SplitMix64 root(seed);

    std::vector<std::vector<InequalityReport>> per_instance(static_cast<size_t>(instances));
    std::vector<char> passed(static_cast<size_t>(instances), 0);

    auto run_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            SplitMix64 g = root.split(static_cast<std::uint64_t>(i));
            if (balancing) {
                bool ok = false;
                per_instance[i] = instance_balancing(g, ok);
                passed[i] = ok ? 1 : 0;
            } else {
                per_instance[i] = fn(g);
            }
        }
    };

    workers = std::max(1, workers);
    if (workers == 1) {
        run_range(0, instances);
    } else {
        std::vector<std::thread> pool;
        int chunk = (instances + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int lo = w * chunk, hi = std::min(instances, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    for (int i = 0; i < instances; ++i) {
        rep.premise_passing += passed[i];
        for (auto& c : per_instance[i]) {
            if (!c.holds) ++rep.violations;
            rep.checks.push_back(std::move(c));
        }
    }
    return rep;
}

}  // namespace icdof

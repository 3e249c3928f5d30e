#include "icdof/random_instances.hpp"

#include <set>

namespace icdof {

Rat random_nonzero_rat(SplitMix64& rng, long max_num, long max_den) {
    long num = 0;
    while (num == 0) num = rng.range(-max_num, max_num);
    long den = rng.range(1, max_den);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

ChannelMatrix random_fully_connected(SplitMix64& rng, int K, long max_num, long max_den) {
    std::vector<Rat> e;
    e.reserve(static_cast<size_t>(K) * K);
    for (int i = 0; i < K * K; ++i) e.push_back(random_nonzero_rat(rng, max_num, max_den));
    return ChannelMatrix(K, std::move(e));
}

DiscreteRV random_rv(SplitMix64& rng, int max_points, long max_prob_den) {
    const int n = static_cast<int>(rng.range(2, max_points));
    std::set<Rat> support;
    while (static_cast<int>(support.size()) < n) {
        Rat s(rng.range(-12, 12), rng.range(1, 4));
        s.canonicalize();
        support.insert(s);
    }
    // Probabilities k/max_prob_den with positive k summing to the denominator.
    std::vector<long> weights(n);
    long remaining = max_prob_den;
    for (int i = 0; i < n - 1; ++i) {
        long w = rng.range(1, remaining - (n - 1 - i));
        weights[i] = w;
        remaining -= w;
    }
    weights[n - 1] = remaining;
    std::vector<std::pair<Rat, Rat>> pts;
    int i = 0;
    for (const auto& s : support) {
        Rat p(weights[i++], max_prob_den);
        p.canonicalize();
        pts.emplace_back(s, p);
    }
    return DiscreteRV::from_points(std::move(pts));
}

Rat random_nonzero_int_coeff(SplitMix64& rng, long bound) {
    long c = 0;
    while (c == 0) c = rng.range(-bound, bound);
    return Rat(c);
}

}  // namespace icdof

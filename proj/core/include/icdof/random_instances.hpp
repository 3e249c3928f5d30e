#pragma once

#include "icdof/channel.hpp"
#include "icdof/rng.hpp"
#include "icdof/rv.hpp"

namespace icdof {

// Nonzero rational with numerator in [-max_num, max_num] and denominator
// in [1, max_den].
Rat random_nonzero_rat(SplitMix64& rng, long max_num = 9, long max_den = 9);

// Fully connected K x K matrix of such entries.
ChannelMatrix random_fully_connected(SplitMix64& rng, int K, long max_num = 9,
                                     long max_den = 9);

// Distribution with 2..max_points distinct rational support points and
// positive rational probabilities with denominator <= max_prob_den.
DiscreteRV random_rv(SplitMix64& rng, int max_points = 8, long max_prob_den = 16);

// Nonzero rational coefficient with |numerator| <= bound, denominator 1.
Rat random_nonzero_int_coeff(SplitMix64& rng, long bound = 4);

}  // namespace icdof

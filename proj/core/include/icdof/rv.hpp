#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icdof/exact.hpp"

namespace icdof {

/// Finite-support distribution over rational points with exact rational
/// probabilities.  Probabilities sum to one exactly; support points are
/// distinct, sorted ascending; all probabilities positive.
class DiscreteRV {
public:
    static DiscreteRV from_points(std::vector<std::pair<Rat, Rat>> pts);
    static DiscreteRV point_mass(Rat x);
    static DiscreteRV uniform(std::vector<Rat> support);

    size_t size() const { return pts_.size(); }
    const std::vector<std::pair<Rat, Rat>>& points() const { return pts_; }

    DiscreteRV scaled(const Rat& c) const;  // distribution of c*X (c may be 0)
    DiscreteRV negated() const { return scaled(Rat(-1)); }

    bool is_point_mass() const { return pts_.size() == 1; }
    bool same_distribution(const DiscreteRV& o) const { return pts_ == o.pts_; }

private:
    std::vector<std::pair<Rat, Rat>> pts_;
};

// Exact distribution of sum_j coeffs[j] * rvs[j] for mutually independent
// rvs, by convolution with exact merging of coinciding sum points.
DiscreteRV linear_combination(std::span<const Rat> coeffs, std::span<const DiscreteRV> rvs);

// Shannon entropy in bits, -sum p log2 p, with accumulated error bound.
ApproxReal entropy_bits(const DiscreteRV& rv);

// Delta(V, W) = H(V - W) - H(V)/2 - H(W)/2 for independent V, W.
ApproxReal ruzsa_delta(const DiscreteRV& v, const DiscreteRV& w);

/// Family of mutually independent random variables with a registry of
/// declared independent copies.  A handle is a fresh variable: two distinct
/// handles are independent even when identically distributed, and the same
/// handle appearing twice in an expression is the same variable.
class RVFamily {
public:
    using Handle = int;

    explicit RVFamily(std::vector<DiscreteRV> base);

    int K() const { return K_; }
    Handle base(int i) const;
    // New member, identically distributed with `of`, independent of everything.
    Handle independent_copy(Handle of, std::string name = "");
    const DiscreteRV& dist(Handle h) const;
    const std::string& name(Handle h) const;

    struct Term {
        Rat coeff;
        Handle var;
    };
    // Distribution of sum coeff*var; repeated handles have their
    // coefficients merged first.
    DiscreteRV combine(std::span<const Term> terms) const;

private:
    int K_;
    std::vector<DiscreteRV> dists_;
    std::vector<std::string> names_;
};

}  // namespace icdof

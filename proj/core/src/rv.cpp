#include "icdof/rv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace icdof {

DiscreteRV DiscreteRV::from_points(std::vector<std::pair<Rat, Rat>> pts) {
    if (pts.empty()) throw std::invalid_argument("distribution needs at least one point");
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rat total(0);
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].second <= 0) throw std::invalid_argument("probabilities must be positive");
        if (i > 0 && pts[i].first == pts[i - 1].first)
            throw std::invalid_argument("support points must be distinct");
        total += pts[i].second;
    }
    if (total != 1) throw std::invalid_argument("probabilities must sum to one exactly");
    DiscreteRV rv;
    rv.pts_ = std::move(pts);
    return rv;
}

DiscreteRV DiscreteRV::point_mass(Rat x) { return from_points({{std::move(x), Rat(1)}}); }

DiscreteRV DiscreteRV::uniform(std::vector<Rat> support) {
    if (support.empty()) throw std::invalid_argument("empty support");
    Rat p = Rat(1) / Rat(static_cast<long>(support.size()));
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(support.size());
    for (auto& s : support) pts.emplace_back(std::move(s), p);
    return from_points(std::move(pts));
}

DiscreteRV DiscreteRV::scaled(const Rat& c) const {
    if (c == 0) return point_mass(Rat(0));
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(pts_.size());
    for (const auto& [x, p] : pts_) pts.emplace_back(c * x, p);
    DiscreteRV rv;
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rv.pts_ = std::move(pts);
    return rv;
}

DiscreteRV linear_combination(std::span<const Rat> coeffs, std::span<const DiscreteRV> rvs) {
    if (rvs.empty()) throw std::invalid_argument("linear_combination of no variables");
    if (coeffs.size() != rvs.size())
        throw std::invalid_argument("coefficient count does not match variable count");
    std::map<Rat, Rat> acc{{Rat(0), Rat(1)}};
    for (size_t k = 0; k < rvs.size(); ++k) {
        if (coeffs[k] == 0) continue;  // contributes the constant 0
        std::map<Rat, Rat> next;
        for (const auto& [x, p] : acc)
            for (const auto& [y, q] : rvs[k].points()) next[x + coeffs[k] * y] += p * q;
        acc = std::move(next);
    }
    std::vector<std::pair<Rat, Rat>> pts(acc.begin(), acc.end());
    return DiscreteRV::from_points(std::move(pts));
}

ApproxReal entropy_bits(const DiscreteRV& rv) {
    ApproxReal h = ApproxReal::exact(0.0);
    for (const auto& [x, p] : rv.points()) {
        if (p == 1) continue;  // point mass term contributes 0
        h = h - ApproxReal::from_rat(p) * log2_bounded(p);
    }
    return h;
}

ApproxReal ruzsa_delta(const DiscreteRV& v, const DiscreteRV& w) {
    const std::vector<Rat> coeffs{Rat(1), Rat(-1)};
    const std::vector<DiscreteRV> vars{v, w};
    ApproxReal hd = entropy_bits(linear_combination(coeffs, vars));
    ApproxReal half = ApproxReal::exact(0.5);
    return hd - half * entropy_bits(v) - half * entropy_bits(w);
}

RVFamily::RVFamily(std::vector<DiscreteRV> base)
    : K_(static_cast<int>(base.size())), dists_(std::move(base)) {
    if (K_ == 0) throw std::invalid_argument("family needs at least one member");
    for (int i = 0; i < K_; ++i) names_.push_back("V" + std::to_string(i + 1));
}

RVFamily::Handle RVFamily::base(int i) const {
    if (i < 0 || i >= K_) throw std::out_of_range("family member index");
    return i;
}

RVFamily::Handle RVFamily::independent_copy(Handle of, std::string name) {
    const DiscreteRV& d = dist(of);
    dists_.push_back(d);
    names_.push_back(name.empty() ? names_[of] + "'" : std::move(name));
    return static_cast<Handle>(dists_.size() - 1);
}

const DiscreteRV& RVFamily::dist(Handle h) const {
    if (h < 0 || static_cast<size_t>(h) >= dists_.size())
        throw std::out_of_range("invalid family handle");
    return dists_[h];
}

const std::string& RVFamily::name(Handle h) const {
    dist(h);  // bounds check
    return names_[h];
}

DiscreteRV RVFamily::combine(std::span<const Term> terms) const {
    if (terms.empty()) throw std::invalid_argument("combine of no terms");
    std::map<Handle, Rat> merged;
    for (const auto& t : terms) merged[t.var] += t.coeff;
    std::vector<Rat> coeffs;
    std::vector<DiscreteRV> vars;
    for (const auto& [h, c] : merged) {
        coeffs.push_back(c);
        vars.push_back(dist(h));
    }
    return linear_combination(coeffs, vars);
}

}  // namespace icdof

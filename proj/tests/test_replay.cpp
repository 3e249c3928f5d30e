#include <doctest.h>

#include <cmath>

#include "icdof/replay.hpp"

using namespace icdof;

namespace {

DiscreteRV coin() { return DiscreteRV::uniform({Rat(0), Rat(1)}); }

CanonicalForm3 canon_all_ones() {
    return canonicalize3(ChannelMatrix(3, std::vector<Rat>(9, Rat(1))));
}

RVFamily coin_family() { return RVFamily({coin(), coin(), coin()}); }

const TraceStep& find_step(const InductionTrace& tr, const std::string& label) {
    for (const auto& s : tr.steps)
        if (s.label == label) return s;
    REQUIRE_MESSAGE(false, "missing trace step " << label);
    static TraceStep dummy;
    return dummy;
}

}  // namespace

TEST_SUITE("replay") {

TEST_CASE("base case chain on the all-ones canonical matrix") {
    RVFamily fam = coin_family();
    InductionTrace tr = replay_base_case(canon_all_ones(), fam, Int(1), Int(1), parse_rat("1/10"));
    CHECK(tr.all_unconditional_hold());

    // with a0 = b0 = 1 the final ratio and the triple-sum ratio are the same
    // expression
    const TraceStep& final = find_step(tr, "final_ratio");
    const TraceStep& triple = find_step(tr, "triple_sum_over_v1");
    CHECK(std::fabs(final.lhs.value - triple.lhs.value) <=
          final.lhs.abs_error + triple.lhs.abs_error);

    const TraceStep& tau = find_step(tr, "tau_increment_bound");
    CHECK(tau.kind == TraceStep::Kind::UnconditionalInequality);
    REQUIRE(tau.verdict.has_value());
    CHECK(*tau.verdict);

    const TraceStep& lower = find_step(tr, "scaled_sum_lower_bound");
    REQUIRE(lower.verdict.has_value());
    CHECK(*lower.verdict);
}

TEST_CASE("base case rejects degenerate inputs") {
    RVFamily zero_ent({coin(), coin(), DiscreteRV::point_mass(Rat(0))});
    CHECK_THROWS_AS(
        replay_base_case(canon_all_ones(), zero_ent, Int(1), Int(1), parse_rat("1/10")),
        std::domain_error);
    RVFamily fam = coin_family();
    CHECK_THROWS_AS(replay_base_case(canon_all_ones(), fam, Int(0), Int(1), parse_rat("1/10")),
                    std::invalid_argument);
}

TEST_CASE("induction step with unit coefficients at h = 1") {
    RVFamily fam = coin_family();
    InductionTrace tr = replay_induction_step(canon_all_ones(), fam, {Int(1), Int(1)},
                                              {Int(1), Int(1)}, parse_rat("1/10"));
    CHECK(tr.all_unconditional_hold());
    for (const char* label :
         {"mixture_sandwich_upper", "mixture_sandwich_lower", "copy_swap_v1", "copy_swap_v23"}) {
        const TraceStep& s = find_step(tr, label);
        CHECK(s.kind == TraceStep::Kind::UnconditionalInequality);
        REQUIRE(s.verdict.has_value());
        CHECK(*s.verdict);
    }
    // the Delta report-only steps stay, by design, without verdicts
    CHECK_FALSE(find_step(tr, "delta_sum_copy").verdict.has_value());
    CHECK_FALSE(find_step(tr, "delta_difference_copy").verdict.has_value());
}

TEST_CASE("pure leading term reduces the final ratio to exactly one") {
    RVFamily fam = coin_family();
    // a = (0, 1), b = (0, 0): final sum is h*V1, and H(h V1) = H(V1)
    InductionTrace tr = replay_induction_step(canon_all_ones(), fam, {Int(0), Int(1)},
                                              {Int(0), Int(0)}, parse_rat("1/10"));
    const TraceStep& final = find_step(tr, "final_ratio");
    CHECK(std::fabs(final.residual.value) <= final.residual.abs_error);
}

TEST_CASE("trace determinism") {
    RVFamily f1 = coin_family(), f2 = coin_family();
    InductionTrace a = replay_induction_step(canon_all_ones(), f1, {Int(2), Int(-1), Int(1)},
                                             {Int(1), Int(1), Int(2)}, parse_rat("1/10"));
    InductionTrace b = replay_induction_step(canon_all_ones(), f2, {Int(2), Int(-1), Int(1)},
                                             {Int(1), Int(1), Int(2)}, parse_rat("1/10"));
    REQUIRE(a.steps.size() == b.steps.size());
    for (size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].label == b.steps[i].label);
        CHECK(a.steps[i].lhs.value == b.steps[i].lhs.value);
        CHECK(a.steps[i].residual.value == b.steps[i].residual.value);
    }
    CHECK(a.all_unconditional_hold());
}

TEST_CASE("contradiction probe on a violating integer diagonal") {
    // canonical all-ones with g1 = 2: witness from the d = 0 search at N = 3
    ChannelMatrix m(3, {Rat(2), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    CanonicalForm3 canon = canonicalize3(m);
    RVFamily fam = coin_family();
    ContradictionProbe p = contradiction_probe(canon, UniPoly::constant(Int(2)),
                                               UniPoly::constant(Int(1)), fam, 3, 0);
    CHECK(p.witness.N == 3);
    CHECK(p.sandwich_lower.holds);
    CHECK(p.sandwich_upper.holds);
    CHECK(std::fabs((p.ratio - ApproxReal::exact(2.0)).value - p.residual_to_two.value) <= 1e-12);

    // no witness for g1 = 7 at (3, 0): probe refuses
    ChannelMatrix m7(3, {Rat(7), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK_THROWS_AS(contradiction_probe(canonicalize3(m7), UniPoly::constant(Int(7)),
                                        UniPoly::constant(Int(1)), fam, 3, 0),
                    std::runtime_error);

    // mismatched polynomial ratio rejected up front
    CHECK_THROWS_AS(contradiction_probe(canon, UniPoly::constant(Int(3)),
                                        UniPoly::constant(Int(1)), fam, 3, 0),
                    std::invalid_argument);

    // all-deterministic family rejected by the ratio functional
    RVFamily det({DiscreteRV::point_mass(Rat(0)), DiscreteRV::point_mass(Rat(0)),
                  DiscreteRV::point_mass(Rat(0))});
    CHECK_THROWS_AS(contradiction_probe(canon, UniPoly::constant(Int(2)),
                                        UniPoly::constant(Int(1)), det, 3, 0),
                    std::domain_error);
}

TEST_CASE("probe handles polynomial diagonals") {
    // g1 = (1+2h)/(1+h) at h = 2 gives g1 = 5/3; witness exists at (3, 1)
    std::vector<Rat> e(9, Rat(1));
    e[0] = parse_rat("5/3");
    e[7] = Rat(2);  // position (3,2)
    CanonicalForm3 canon = canonicalize3(ChannelMatrix(3, e));
    RVFamily fam = coin_family();
    ContradictionProbe p = contradiction_probe(canon, UniPoly({Int(1), Int(2)}),
                                               UniPoly({Int(1), Int(1)}), fam, 3, 1);
    CHECK(p.sandwich_lower.holds);
    CHECK(p.sandwich_upper.holds);
    CHECK(p.witness.d == 1);
}

}  // TEST_SUITE

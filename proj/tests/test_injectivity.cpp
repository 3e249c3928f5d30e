#include <doctest.h>

#include "icdof/channel.hpp"
#include "icdof/injectivity.hpp"
#include "icdof/random_instances.hpp"
#include "icdof/rng.hpp"

using namespace icdof;

namespace {

ChannelMatrix diag3(const Rat& g1, const Rat& g2, const Rat& g3) {
    return ChannelMatrix(3, {g1, Rat(1), Rat(1), Rat(1), g2, Rat(1), Rat(1), Rat(1), g3});
}

}  // namespace

TEST_SUITE("injectivity") {

TEST_CASE("g = 2 collides at N = 3, d = 0") {
    std::vector<Rat> f = {Rat(1)};
    CheckOutcome out = check_map_injectivity(f, Rat(2), 0, 3, 0);
    REQUIRE(out.is_witness());
    const CollisionWitness& w = *out.witness;
    CHECK(w.w1 == std::vector<int>{0});
    CHECK(w.w2 == std::vector<int>{1});
    CHECK(w.w1t == std::vector<int>{2});
    CHECK(w.w2t == std::vector<int>{0});
    CHECK(w.lhs == w.rhs);
    CHECK(w.lhs == 2);  // 0 + 2*1 = 2 + 2*0
    CHECK(validate_witness(w, f, Rat(2)));
}

TEST_CASE("g = 3 is injective at N = 2, d = 0") {
    std::vector<Rat> f = {Rat(1)};
    CheckOutcome out = check_map_injectivity(f, Rat(3), 0, 2, 0);
    REQUIRE(out.is_certificate());
    CHECK(out.certificate->N == 2);
    CHECK(out.certificate->d == 0);
    // the four map values {0, 1, 3, 4} are distinct
    CheckOutcome oracle = brute_force_check_values(f, Rat(3), 0, 2, 0);
    CHECK(oracle.is_certificate());
}

TEST_CASE("symbolic g1 = h collides at N = 2, d = 1") {
    std::vector<UniPoly> hvec(5, UniPoly::constant(Int(1)));
    hvec.push_back(UniPoly::monomial(Int(1), 1));
    MonomialBasis basis = enumerate_monomials(3, 1);
    std::vector<UniPoly> f = eval_basis_poly(basis, hvec);
    UniPoly g_num = UniPoly::monomial(Int(1), 1), g_den = UniPoly::constant(Int(1));
    CheckOutcome out = check_map_injectivity_poly(f, g_num, g_den, 0, 2, 1);
    REQUIRE(out.is_witness());
    const CollisionWitness& w = *out.witness;
    CHECK(w.symbolic);
    CHECK_FALSE(w.bf_poly.is_zero());
    // polynomial identity h*(b.f) = a.f, e.g. h + h*0 = 0 + h*1
    CHECK(validate_witness_poly(w, f, g_num, g_den));
}

TEST_CASE("the all-ones matrix yields witnesses for every user at N = 2, d = 0") {
    ChannelMatrix m = diag3(Rat(1), Rat(1), Rat(1));
    for (int u = 0; u < 3; ++u) {
        CheckOutcome out = check_user(m, u, 2, 0);
        REQUIRE(out.is_witness());
        CHECK(out.witness->user == u);
    }
    ConditionReport rep = check_condition(m, 2, 0);
    CHECK_FALSE(rep.holds_at_level);
    CHECK(rep.users.size() == 1);  // first witness short-circuits
    CHECK(rep.users[0].is_witness());
}

TEST_CASE("large integer diagonals certify at N = 2, d = 0") {
    ConditionReport rep = check_condition(diag3(Rat(7), Rat(11), Rat(-13)), 2, 0);
    CHECK(rep.holds_at_level);
    REQUIRE(rep.users.size() == 3);
    for (const auto& o : rep.users) CHECK(o.is_certificate());
}

TEST_CASE("explicit rational-diagonal witnesses at d = 0") {
    auto w = rational_diagonal_witness(parse_rat("1/2"), 3);
    REQUIRE(w.has_value());
    CHECK(w->af == 1);
    CHECK(w->bf == 2);
    CHECK(validate_witness(*w, {Rat(1)}, parse_rat("1/2")));

    CHECK_FALSE(rational_diagonal_witness(Rat(5), 3).has_value());  // 5 > N-1

    auto wn = rational_diagonal_witness(Rat(-1), 2);
    REQUIRE(wn.has_value());
    CHECK(validate_witness(*wn, {Rat(1)}, Rat(-1)));
}

TEST_CASE("MITM verdicts agree with the brute-force oracle on random matrices") {
    SplitMix64 g(2024);
    for (int t = 0; t < 8; ++t) {
        ChannelMatrix m = random_fully_connected(g, 3);
        for (long N : {2L, 3L}) {
            for (int d : {0, 1}) {
                for (int u = 0; u < 3; ++u) {
                    CheckOutcome fast = check_user(m, u, N, d);
                    CheckOutcome slow = brute_force_check(m, u, N, d);
                    CHECK(fast.kind == slow.kind);
                    std::vector<Rat> f =
                        eval_basis(enumerate_monomials(3, d), m.offdiag());
                    if (fast.is_witness())
                        CHECK(validate_witness(*fast.witness, f, m.at(u, u)));
                    if (slow.is_witness())
                        CHECK(validate_witness(*slow.witness, f, m.at(u, u)));
                }
            }
        }
    }
}

TEST_CASE("witness monotonicity in (N, d)") {
    ChannelMatrix m = diag3(Rat(2), Rat(5), Rat(7));
    CHECK(check_user(m, 0, 3, 0).is_witness());
    CHECK(check_user(m, 0, 4, 0).is_witness());
    CHECK(check_user(m, 0, 3, 1).is_witness());
}

TEST_CASE("cap exhaustion reports unknown, never a certificate") {
    ChannelMatrix m = diag3(Rat(7), Rat(7), Rat(7));
    SearchOptions opts;
    opts.half_cap = 2;
    CheckOutcome out = check_user(m, 0, 3, 1, opts);
    CHECK(out.kind == CheckOutcome::Kind::Unknown);
    CHECK_FALSE(out.unknown_reason.empty());
}

TEST_CASE("worker count never changes the result") {
    SplitMix64 g(77);
    for (int t = 0; t < 4; ++t) {
        ChannelMatrix m = random_fully_connected(g, 3);
        SearchOptions one, four;
        one.workers = 1;
        four.workers = 4;
        for (int u = 0; u < 3; ++u) {
            CheckOutcome a = check_user(m, u, 3, 1, one);
            CheckOutcome b = check_user(m, u, 3, 1, four);
            REQUIRE(a.kind == b.kind);
            if (a.is_witness()) {
                CHECK(a.witness->a == b.witness->a);
                CHECK(a.witness->b == b.witness->b);
                CHECK(a.witness->w1 == b.witness->w1);
                CHECK(a.witness->w2 == b.witness->w2);
            }
        }
    }
}

TEST_CASE("witness reconstruction stays inside the coefficient box") {
    ChannelMatrix m = diag3(parse_rat("-3/2"), Rat(1), Rat(1));
    CheckOutcome out = check_user(m, 0, 4, 1);
    REQUIRE(out.is_witness());
    const CollisionWitness& w = *out.witness;
    for (size_t i = 0; i < w.a.size(); ++i) {
        CHECK(w.a[i] == w.w1[i] - w.w1t[i]);
        CHECK(w.b[i] == w.w2t[i] - w.w2[i]);
        for (int v : {w.w1[i], w.w2[i], w.w1t[i], w.w2t[i]}) {
            CHECK(v >= 0);
            CHECK(v <= 3);
        }
    }
    CHECK(w.w1 != w.w1t);
    CHECK(w.w2 != w.w2t);
}

}  // TEST_SUITE

#include <doctest.h>

#include "icdof/channel.hpp"
#include "icdof/random_instances.hpp"
#include "icdof/rng.hpp"

using namespace icdof;

namespace {

ChannelMatrix all_ones(int K) {
    return ChannelMatrix(K, std::vector<Rat>(static_cast<size_t>(K) * K, Rat(1)));
}

bool same_canonical(const CanonicalForm3& x, const CanonicalForm3& y) {
    return x.g == y.g && x.h == y.h;
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("fully connected validation") {
    CHECK(validate_fully_connected(all_ones(3)).empty());
    CHECK(is_fully_connected(ChannelMatrix(2, {Rat(1), Rat(2), Rat(3), Rat(4)})));

    ChannelMatrix m(3, {Rat(1), Rat(0), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    auto zeros = validate_fully_connected(m);
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0] == std::pair<int, int>(0, 1));
    CHECK_FALSE(is_fully_connected(m));
}

TEST_CASE("off-diagonal flattening is row-major skipping the diagonal") {
    ChannelMatrix m(3, {Rat(11), Rat(12), Rat(13), Rat(21), Rat(22), Rat(23), Rat(31), Rat(32),
                        Rat(33)});
    CHECK(m.offdiag() ==
          std::vector<Rat>{Rat(12), Rat(13), Rat(21), Rat(23), Rat(31), Rat(32)});
}

TEST_CASE("row and column scaling") {
    ChannelMatrix m = all_ones(3);
    std::vector<Rat> id(3, Rat(1));
    CHECK(scale(m, id, id).entries() == m.entries());

    ChannelMatrix s = scale(m, {Rat(2), Rat(1), Rat(1)}, id);
    for (int j = 0; j < 3; ++j) CHECK(s.at(0, j) == 2);
    for (int j = 0; j < 3; ++j) CHECK(s.at(1, j) == 1);

    SplitMix64 g(3);
    ChannelMatrix r = random_fully_connected(g, 3);
    std::vector<Rat> rows, cols, rows_inv, cols_inv;
    for (int i = 0; i < 3; ++i) {
        Rat a = random_nonzero_rat(g), b = random_nonzero_rat(g);
        rows.push_back(a);
        cols.push_back(b);
        rows_inv.push_back(1 / a);
        cols_inv.push_back(1 / b);
    }
    CHECK(scale(scale(r, rows, cols), rows_inv, cols_inv).entries() == r.entries());
    CHECK_THROWS(scale(m, {Rat(0), Rat(1), Rat(1)}, id));
}

TEST_CASE("canonicalize3 fixes already-canonical matrices") {
    ChannelMatrix m(3, {Rat(2), Rat(1), Rat(1), Rat(1), Rat(3), Rat(1), Rat(1), Rat(5), Rat(7)});
    // diag (2,3,7), off-diagonals 1 except (3,2) = 5
    CanonicalForm3 cf = canonicalize3(m);
    CHECK(cf.g[0] == 2);
    CHECK(cf.g[1] == 3);
    CHECK(cf.g[2] == 7);
    CHECK(cf.h == 5);
    CHECK(cf.rows[0] == 1);  // gauge fix
    CHECK(cf.reconstruct().entries() == m.entries());
}

TEST_CASE("canonical free parameter equals the cross ratio") {
    SplitMix64 g(17);
    for (int t = 0; t < 50; ++t) {
        ChannelMatrix m = random_fully_connected(g, 3);
        CanonicalForm3 cf = canonicalize3(m);
        Rat cross = (m.at(0, 2) * m.at(1, 0) * m.at(2, 1)) /
                    (m.at(0, 1) * m.at(1, 2) * m.at(2, 0));
        CHECK(cf.h == cross);
        CHECK(cf.g[0] == (m.at(0, 0) * m.at(1, 2)) / (m.at(0, 2) * m.at(1, 0)));
        // the recorded scaling actually produces the canonical pattern
        ChannelMatrix rec = cf.reconstruct();
        ChannelMatrix scaled =
            scale(m, {cf.rows[0], cf.rows[1], cf.rows[2]}, {cf.cols[0], cf.cols[1], cf.cols[2]});
        CHECK(scaled.entries() == rec.entries());
    }
}

TEST_CASE("canonical form is invariant under scaling and idempotent") {
    SplitMix64 g(99);
    for (int t = 0; t < 25; ++t) {
        ChannelMatrix m = random_fully_connected(g, 3);
        CanonicalForm3 cf = canonicalize3(m);
        std::vector<Rat> rows, cols;
        for (int i = 0; i < 3; ++i) {
            rows.push_back(random_nonzero_rat(g));
            cols.push_back(random_nonzero_rat(g));
        }
        CHECK(same_canonical(canonicalize3(scale(m, rows, cols)), cf));
        CHECK(same_canonical(canonicalize3(cf.reconstruct()), cf));
    }
}

TEST_CASE("symbolic off-diagonal vector of the canonical form") {
    ChannelMatrix m(3, {Rat(2), Rat(1), Rat(1), Rat(1), Rat(3), Rat(1), Rat(1), Rat(5), Rat(7)});
    auto sym = canonicalize3(m).offdiag_symbolic();
    REQUIRE(sym.size() == 6);
    for (int i = 0; i < 5; ++i) CHECK(sym[i] == UniPoly::constant(Int(1)));
    CHECK(sym[5] == UniPoly::monomial(Int(1), 1));  // position (3,2) carries h
}

TEST_CASE("canonicalize3 rejects bad input") {
    CHECK_THROWS(canonicalize3(ChannelMatrix(2, {Rat(1), Rat(1), Rat(1), Rat(1)})));
    CHECK_THROWS(canonicalize3(
        ChannelMatrix(3, {Rat(1), Rat(0), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)})));
}

}  // TEST_SUITE

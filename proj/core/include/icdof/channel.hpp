#pragma once

#include <array>
#include <utility>
#include <vector>

#include "icdof/exact.hpp"

namespace icdof {

/// K x K channel matrix of exact rationals, row-major.
class ChannelMatrix {
public:
    ChannelMatrix(int K, std::vector<Rat> entries);

    int K() const { return K_; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * K_ + j]; }
    const std::vector<Rat>& entries() const { return e_; }

    // Off-diagonal entries, row-major skipping the diagonal; length K(K-1).
    std::vector<Rat> offdiag() const;

private:
    int K_;
    std::vector<Rat> e_;
};

// Empty result means fully connected; otherwise the (i, j) zero positions.
std::vector<std::pair<int, int>> validate_fully_connected(const ChannelMatrix& m);
bool is_fully_connected(const ChannelMatrix& m);

// Entry (i, j) becomes rows[i] * cols[j] * h_ij.  All factors must be nonzero.
ChannelMatrix scale(const ChannelMatrix& m, const std::vector<Rat>& rows,
                    const std::vector<Rat>& cols);

/// The 3-user canonical representative: unit off-diagonals except the free
/// parameter h at position (3,2), diagonal (g1, g2, g3); together with the
/// row/column factors that produce it (gauge: rows[0] = 1).
struct CanonicalForm3 {
    std::array<Rat, 3> g;
    Rat h;
    std::array<Rat, 3> rows;
    std::array<Rat, 3> cols;

    ChannelMatrix reconstruct() const;
    // Off-diagonal vector as polynomials in h: (1,1,1,1,1,h).
    std::vector<UniPoly> offdiag_symbolic() const;
};

// pre: K = 3, fully connected.  The free parameter is the cross ratio
// h13*h21*h32 / (h12*h23*h31), invariant under row/column scaling.
CanonicalForm3 canonicalize3(const ChannelMatrix& m);

}  // namespace icdof

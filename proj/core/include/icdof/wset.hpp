#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "icdof/exact.hpp"

namespace icdof {

// Number of monomials in K(K-1) variables of degree <= d: C(K(K-1)+d, d).
Int phi(int K, int d);

/// The ordered monomial basis f_1, ..., f_phi(d): exponent vectors of
/// length K(K-1), total degree <= d, in graded-lexicographic order
/// (degree first, then lex with the first variable largest).  The first
/// element is the constant monomial.
struct MonomialBasis {
    int K = 0;
    int d = 0;
    std::vector<std::vector<int>> exponents;

    size_t size() const { return exponents.size(); }
};

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

// Throws std::length_error when phi(K, d) exceeds cap.
MonomialBasis enumerate_monomials(int K, int d, std::uint64_t cap = kDefaultEnumCap);

// Exact componentwise evaluation at the off-diagonal vector (length K(K-1),
// all entries nonzero).
std::vector<Rat> eval_basis(const MonomialBasis& basis, const std::vector<Rat>& hvec);

// Symbolic evaluation; each variable is a (nonzero) polynomial in h.
std::vector<UniPoly> eval_basis_poly(const MonomialBasis& basis,
                                     const std::vector<UniPoly>& hvec);

/// Explicit truncation W_{N,d}: every value sum_i a_i f_i(hvec) with
/// a_i in {0, ..., N-1}, deduplicated.  Each value keeps the first
/// coefficient vector producing it in lexicographic enumeration order.
struct WSetTruncation {
    long N = 0;
    int d = 0;
    std::map<Rat, std::vector<int>> values;  // value -> lex-least coefficient vector
};

// Oracle-scale only: throws std::length_error when N^phi(d) exceeds cap.
WSetTruncation generate_W(long N, int d, const std::vector<Rat>& hvec, int K,
                          std::uint64_t cap = kDefaultEnumCap);

// Symbolic variant over a polynomial off-diagonal vector.
struct WSetTruncationPoly {
    long N = 0;
    int d = 0;
    std::map<UniPoly, std::vector<int>> values;
};

WSetTruncationPoly generate_W_poly(long N, int d, const std::vector<UniPoly>& hvec, int K,
                                   std::uint64_t cap = kDefaultEnumCap);

}  // namespace icdof

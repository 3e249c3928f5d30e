#include "icdof/wset.hpp"

#include <stdexcept>

namespace icdof {

Int phi(int K, int d) {
    if (K < 2 || d < 0) throw std::invalid_argument("phi requires K >= 2, d >= 0");
    Int r;
    unsigned long n = static_cast<unsigned long>(K) * (K - 1) + static_cast<unsigned long>(d);
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(d));
    return r;
}

namespace {

// Exponent vectors of the given total degree over nvars variables, in
// lexicographic order with the first variable largest.
void emit_degree(int nvars, int deg, std::vector<int>& cur, int pos,
                 std::vector<std::vector<int>>& out) {
    if (pos == nvars - 1) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    for (int e = deg; e >= 0; --e) {
        cur[pos] = e;
        emit_degree(nvars, deg - e, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

}  // namespace

MonomialBasis enumerate_monomials(int K, int d, std::uint64_t cap) {
    Int count = phi(K, d);
    if (count > Int(static_cast<unsigned long>(cap)))
        throw std::length_error("monomial basis size " + count.get_str() +
                                " exceeds cap " + std::to_string(cap));
    const int nvars = K * (K - 1);
    MonomialBasis b;
    b.K = K;
    b.d = d;
    std::vector<int> cur(nvars, 0);
    for (int deg = 0; deg <= d; ++deg) emit_degree(nvars, deg, cur, 0, b.exponents);
    return b;
}

std::vector<Rat> eval_basis(const MonomialBasis& basis, const std::vector<Rat>& hvec) {
    const size_t nvars = static_cast<size_t>(basis.K) * (basis.K - 1);
    if (hvec.size() != nvars)
        throw std::invalid_argument("off-diagonal vector length does not match K(K-1)");
    std::vector<Rat> out;
    out.reserve(basis.size());
    for (const auto& exp : basis.exponents) {
        Rat v(1);
        for (size_t j = 0; j < nvars; ++j)
            if (exp[j] != 0) v *= rat_pow(hvec[j], static_cast<unsigned long>(exp[j]));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<UniPoly> eval_basis_poly(const MonomialBasis& basis,
                                     const std::vector<UniPoly>& hvec) {
    const size_t nvars = static_cast<size_t>(basis.K) * (basis.K - 1);
    if (hvec.size() != nvars)
        throw std::invalid_argument("off-diagonal vector length does not match K(K-1)");
    std::vector<UniPoly> out;
    out.reserve(basis.size());
    for (const auto& exp : basis.exponents) {
        UniPoly v = UniPoly::constant(1);
        for (size_t j = 0; j < nvars; ++j)
            for (int t = 0; t < exp[j]; ++t) v = v * hvec[j];
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// N^count <= cap, checked without overflow.
void check_wset_cap(long N, const Int& count, std::uint64_t cap) {
    Int total;
    if (!count.fits_ulong_p()) throw std::length_error("W-set truncation exceeds cap");
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(N), count.get_ui());
    if (total > Int(static_cast<unsigned long>(cap)))
        throw std::length_error("W-set truncation size " + total.get_str() +
                                " exceeds cap " + std::to_string(cap));
}

template <typename T>
std::map<T, std::vector<int>> enumerate_sums(long N, const std::vector<T>& fvals) {
    std::map<T, std::vector<int>> values;
    std::vector<int> coeff(fvals.size(), 0);
    T sum{};
    // depth-first over coefficient vectors in lexicographic order
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == fvals.size()) {
            values.emplace(sum, coeff);  // keeps the first (lex-least) representative
            return;
        }
        T saved = sum;
        for (int a = 0; a < N; ++a) {
            coeff[pos] = a;
            self(self, pos + 1);
            sum = sum + fvals[pos];
        }
        sum = saved;
        coeff[pos] = 0;
    };
    rec(rec, 0);
    return values;
}

}  // namespace

WSetTruncation generate_W(long N, int d, const std::vector<Rat>& hvec, int K,
                          std::uint64_t cap) {
    if (N < 1) throw std::invalid_argument("generate_W requires N >= 1");
    check_wset_cap(N, phi(K, d), cap);
    MonomialBasis basis = enumerate_monomials(K, d, cap);
    WSetTruncation w;
    w.N = N;
    w.d = d;
    w.values = enumerate_sums(N, eval_basis(basis, hvec));
    return w;
}

WSetTruncationPoly generate_W_poly(long N, int d, const std::vector<UniPoly>& hvec, int K,
                                   std::uint64_t cap) {
    if (N < 1) throw std::invalid_argument("generate_W requires N >= 1");
    check_wset_cap(N, phi(K, d), cap);
    MonomialBasis basis = enumerate_monomials(K, d, cap);
    WSetTruncationPoly w;
    w.N = N;
    w.d = d;
    w.values = enumerate_sums(N, eval_basis_poly(basis, hvec));
    return w;
}

}  // namespace icdof

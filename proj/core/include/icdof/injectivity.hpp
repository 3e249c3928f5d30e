#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icdof/channel.hpp"
#include "icdof/wset.hpp"

namespace icdof {

/// A collision for the map (w1, w2) -> w1 + g*w2 at truncation level (N, d):
/// integer difference vectors a = coeff(w1) - coeff(w~1), b = coeff(w~2) - coeff(w2)
/// with entries in [-(N-1), N-1], b.f != 0 as a value, and g*(b.f) = a.f.
struct CollisionWitness {
    int user = 0;
    long N = 0;
    int d = 0;
    std::vector<int> a, b;
    std::vector<int> w1, w2, w1t, w2t;  // elements of {0,...,N-1}^phi(d)
    bool symbolic = false;
    Rat af, bf;              // numeric mode: the values a.f and b.f
    Rat lhs, rhs;            // numeric mode: w1 + g*w2 and w~1 + g*w~2
    UniPoly af_poly, bf_poly;  // symbolic mode
};

struct TruncationCertificate {
    int user = 0;
    long N = 0;
    int d = 0;
    Int search_space;  // number of (a, b) difference vectors examined
};

/// Level-qualified outcome: a certificate never claims anything beyond the
/// (N, d) truncation searched, and a cap hit is reported as unknown, never
/// silently certified.
struct CheckOutcome {
    enum class Kind { Certificate, Witness, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<TruncationCertificate> certificate;
    std::optional<CollisionWitness> witness;
    std::string unknown_reason;

    bool is_witness() const { return kind == Kind::Witness; }
    bool is_certificate() const { return kind == Kind::Certificate; }
};

struct SearchOptions {
    std::uint64_t half_cap = 1u << 26;  // cap on (2N-1)^ceil(phi) per MITM half
    std::uint64_t oracle_cap = kDefaultEnumCap;
    int workers = 1;
};

// Meet-in-the-middle decision for one user over the numeric basis values
// fvals = f_i(hvec) with diagonal entry g.  Exact; deterministic first
// witness in lexicographic (a|b) order.
CheckOutcome check_map_injectivity(const std::vector<Rat>& fvals, const Rat& g, int user,
                                   long N, int d, const SearchOptions& opts = {});

// Symbolic variant: basis values and g = g_num/g_den are polynomials in h.
CheckOutcome check_map_injectivity_poly(const std::vector<UniPoly>& fvals,
                                        const UniPoly& g_num, const UniPoly& g_den, int user,
                                        long N, int d, const SearchOptions& opts = {});

// Condition (**) for one user of a fully connected matrix (0-based user index).
CheckOutcome check_user(const ChannelMatrix& m, int user, long N, int d,
                        const SearchOptions& opts = {});
CheckOutcome check_user(const CanonicalForm3& cf, int user, long N, int d, bool symbolic,
                        const SearchOptions& opts = {});

/// Per-user verdicts for condition (**) at level (N, d).  The first witness
/// short-circuits; users after it are not checked.
struct ConditionReport {
    long N = 0;
    int d = 0;
    std::vector<CheckOutcome> users;  // outcomes for users 0..checked-1
    bool holds_at_level = false;      // every checked user certified
};

ConditionReport check_condition(const ChannelMatrix& m, long N, int d,
                                const SearchOptions& opts = {});

// Oracle: literal enumeration of all |W|^2 map outputs over generate_W.
CheckOutcome brute_force_check(const ChannelMatrix& m, int user, long N, int d,
                               const SearchOptions& opts = {});
CheckOutcome brute_force_check_values(const std::vector<Rat>& fvals, const Rat& g, int user,
                                      long N, int d, const SearchOptions& opts = {});

// Explicit d = 0 witness for a rational diagonal g = p/q with
// max(|p|, q) <= N-1; nullopt when the bound fails.
std::optional<CollisionWitness> rational_diagonal_witness(const Rat& g, long N, int user = 0);

// Re-validates a witness by direct substitution, independent of the search.
bool validate_witness(const CollisionWitness& w, const std::vector<Rat>& fvals, const Rat& g);
bool validate_witness_poly(const CollisionWitness& w, const std::vector<UniPoly>& fvals,
                           const UniPoly& g_num, const UniPoly& g_den);

}  // namespace icdof

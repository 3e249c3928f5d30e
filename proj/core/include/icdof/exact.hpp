#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icdof {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or "p" (decimal integers, optional leading '-').
// The result is canonical: reduced, denominator > 0.
Rat parse_rat(std::string_view s);

// Canonical form: "p" when q == 1, otherwise "p/q".
std::string rat_to_string(const Rat& x);

Rat rat_pow(const Rat& base, unsigned long exp);

// floor(log2(|n|)) for n != 0.
long floor_log2_abs(const Int& n);

/// Floating value together with a bound on its absolute error.
/// Arithmetic propagates the bound conservatively, so a computed
/// chain of operations always brackets the true real value.
struct ApproxReal {
    double value = 0.0;
    double abs_error = 0.0;

    static ApproxReal exact(double v) { return {v, 0.0}; }
    static ApproxReal from_rat(const Rat& x);

    ApproxReal operator-() const { return {-value, abs_error}; }
    ApproxReal operator+(const ApproxReal& o) const;
    ApproxReal operator-(const ApproxReal& o) const;
    ApproxReal operator*(const ApproxReal& o) const;
    // pre: the divisor interval excludes zero
    ApproxReal operator/(const ApproxReal& o) const;

    // True value certainly >= 0 / certainly can be >= b - tolerance.
    bool certainly_nonnegative() const { return value >= -abs_error; }
    bool holds_geq(const ApproxReal& rhs) const {
        ApproxReal s = *this - rhs;
        return s.certainly_nonnegative();
    }
};

// |value - log2(x)| <= abs_error; exact (error 0) for powers of two.
// pre: x > 0.
ApproxReal log2_bounded(const Rat& x);

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first.  Normalized: no trailing zero coefficients;
/// the zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs);
    static UniPoly constant(Int c);
    static UniPoly monomial(Int c, unsigned deg);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(unsigned deg) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly scaled(const Int& k) const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }
    // graded then coefficient-wise order; total order usable as a map key
    bool operator<(const UniPoly& o) const;

    Rat eval(const Rat& x) const;
    std::string to_string() const;  // e.g. "1 + 2*h^2"

private:
    void normalize();
    std::vector<Int> c_;
};

}  // namespace icdof

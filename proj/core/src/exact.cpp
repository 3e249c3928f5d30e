#include "icdof/exact.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace icdof {

Rat parse_rat(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string buf(s);
    Rat x;
    if (x.set_str(buf, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + buf + "'");
    if (x.get_den() == 0) throw std::invalid_argument("zero denominator in '" + buf + "'");
    x.canonicalize();
    return x;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
    r.canonicalize();
    return r;
}

long floor_log2_abs(const Int& n) {
    if (n == 0) throw std::invalid_argument("floor_log2_abs of zero");
    // sizeinbase(|n|, 2) is the bit length, so bitlen - 1 = floor(log2 |n|)
    return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
}

namespace {

double rounding_ulp(double v) {
    return std::ldexp(std::max(std::fabs(v), 1e-300), -52);
}

}  // namespace

ApproxReal ApproxReal::from_rat(const Rat& x) {
    // Correctly rounded double via a 53-bit conversion.
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
    double v = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    if (std::isfinite(v) && Rat(v) == x) return {v, 0.0};
    return {v, rounding_ulp(v)};
}

ApproxReal ApproxReal::operator+(const ApproxReal& o) const {
    double v = value + o.value;
    return {v, abs_error + o.abs_error + rounding_ulp(v)};
}

ApproxReal ApproxReal::operator-(const ApproxReal& o) const {
    double v = value - o.value;
    return {v, abs_error + o.abs_error + rounding_ulp(v)};
}

ApproxReal ApproxReal::operator*(const ApproxReal& o) const {
    double v = value * o.value;
    double e = std::fabs(value) * o.abs_error + std::fabs(o.value) * abs_error +
               abs_error * o.abs_error + rounding_ulp(v);
    return {v, e};
}

ApproxReal ApproxReal::operator/(const ApproxReal& o) const {
    double denom_lo = std::fabs(o.value) - o.abs_error;
    if (denom_lo <= 0.0)
        throw std::domain_error("ApproxReal division: divisor interval contains zero");
    double v = value / o.value;
    double e = (abs_error + std::fabs(v) * o.abs_error) / denom_lo + rounding_ulp(v);
    return {v, e};
}

ApproxReal log2_bounded(const Rat& x) {
    if (x <= 0) throw std::domain_error("log2_bounded: nonpositive argument");
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    // Exact answer for powers of two.
    if (mpz_popcount(num.get_mpz_t()) == 1 && mpz_popcount(den.get_mpz_t()) == 1) {
        long e = floor_log2_abs(num) - floor_log2_abs(den);
        return ApproxReal::exact(static_cast<double>(e));
    }
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
    mpfr_log2(t, t, MPFR_RNDN);
    double v = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    // 128-bit intermediate leaves the double rounding as the dominant term.
    return {v, std::ldexp(std::max(std::fabs(v), 1.0), -52)};
}

UniPoly::UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(Int c) {
    UniPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::monomial(Int c, unsigned deg) {
    UniPoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int UniPoly::coeff(unsigned deg) const {
    if (deg >= c_.size()) return Int(0);
    return c_[deg];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& v : r) v = -v;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Int& k) const {
    std::vector<Int> r(c_);
    for (auto& v : r) v *= k;
    return UniPoly(std::move(r));
}

bool UniPoly::operator<(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Int a = abs(c_[i]);
        if (i == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "h";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace icdof

#ifndef ALTSUM_NUMERICS_HPP
#define ALTSUM_NUMERICS_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "altsum/errors.hpp"

namespace altsum {

/// Exact arbitrary-size integers and rationals (GMP). mpq_class arithmetic
/// keeps values in lowest terms with a positive denominator.
using Integer  = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational n/d.
Rational make_rational(long n, long d);
Rational make_rational(const Integer& n, const Integer& d);

/// C(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

/// r^e for e >= 0, exact.
Rational pow_int(const Rational& r, unsigned long e);

std::string to_string(const Rational& r);

/// Sum_{a=1}^{n} 1/a, exact, by divide and conquer.
Rational harmonic_number(unsigned long n);

// ---------------------------------------------------------------------------
// BigReal: an arbitrary-precision real carrying its working precision in
// decimal digits. Backed by MPFR; all operations round to nearest. Results of
// binary operations carry max(precision of operands). Values are immutable in
// spirit: every operation returns a fresh value, so sharing across threads is
// safe.
// ---------------------------------------------------------------------------
class BigReal {
public:
    BigReal() : BigReal(0L, 20) {}
    explicit BigReal(long digits);
    BigReal(long value, long digits);
    BigReal(double value, long digits);
    BigReal(const Rational& value, long digits); // correctly rounded to `digits`
    BigReal(const Integer& value, long digits);
    BigReal(const std::string& decimal, long digits);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    long digits() const { return digits_; }
    /// Same value re-rounded to a (usually lower) precision.
    BigReal to_precision(long digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Smallest integer >= value (exact; value must fit in Integer).
    Integer ceil_to_integer() const;

    /// Fixed-point decimal with exactly `frac_digits` fractional digits.
    /// Truncates toward zero when `truncate`, otherwise rounds to nearest.
    std::string to_fixed_string(long frac_digits, bool truncate = true) const;
    /// Scientific form with `sig_digits` significant digits.
    std::string to_sci_string(long sig_digits) const;

    BigReal operator-() const;
    BigReal operator+(const BigReal& o) const;
    BigReal operator-(const BigReal& o) const;
    BigReal operator*(const BigReal& o) const;
    BigReal operator/(const BigReal& o) const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);

    BigReal operator+(long o) const;
    BigReal operator-(long o) const;
    BigReal operator*(long o) const;
    BigReal operator/(long o) const;

    int compare(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigReal& o) const { return compare(o) < 0; }
    bool operator<=(const BigReal& o) const { return compare(o) <= 0; }
    bool operator>(const BigReal& o) const { return compare(o) > 0; }
    bool operator>=(const BigReal& o) const { return compare(o) >= 0; }
    bool operator==(const BigReal& o) const { return compare(o) == 0; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static mpfr_prec_t bits_for(long digits);

private:
    mpfr_t v_;
    long digits_;

    friend BigReal abs(const BigReal&);
    friend BigReal sqrt(const BigReal&);
    friend BigReal ln(const BigReal&);
    friend BigReal exp(const BigReal&);
    friend BigReal pow(const BigReal&, const BigReal&);
    friend BigReal pow_si(const BigReal&, long);
    friend BigReal sin(const BigReal&);
    friend BigReal cos(const BigReal&);
    friend BigReal atan2(const BigReal&, const BigReal&);
    friend BigReal hypot(const BigReal&, const BigReal&);
    friend BigReal fma_long(const BigReal&, long, const BigReal&);
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);   // x >= 0
BigReal ln(const BigReal& x);     // x > 0
BigReal exp(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& p); // principal: exp(p ln x) for x > 0
BigReal pow_si(const BigReal& x, long e);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);

/// pi at the given precision.
BigReal const_pi(long digits);
/// 10^e at the given precision (e may be negative).
BigReal pow10(long e, long digits);

/// Principal branch of the Lambert W function for u >= 0: the w >= 0 with
/// w e^w = u. Newton iteration from a double seed.
BigReal lambert_w(const BigReal& u);

// ---------------------------------------------------------------------------
// BigComplex: re + i*im at a common precision. The principal power uses
// arg z in (-pi, pi]: z^p = exp(p (ln|z| + i arg z)).
// ---------------------------------------------------------------------------
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() = default;
    explicit BigComplex(BigReal r) : re(std::move(r)), im(BigReal(0L, re.digits())) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    long digits() const { return re.digits(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const;
    BigComplex operator/(const BigComplex& o) const;
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);

    BigComplex operator*(const BigReal& s) const { return {re * s, im * s}; }
    BigComplex operator/(const BigReal& s) const { return {re / s, im / s}; }
};

BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);             // in (-pi, pi]; arg(0) = 0
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);          // ln|z| + i arg z, z != 0
BigComplex pow(const BigComplex& z, const BigComplex& p);

/// max over components of |a_k - b_k|.
BigReal max_abs_diff(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b);

// ---------------------------------------------------------------------------
// Working-precision policy: target digits d plus guard digits g, with
// g = 10 + ceil(2 log10(d + m + c + 10)). The guard absorbs accumulation
// error; the double-run check validates it at runtime.
// ---------------------------------------------------------------------------
long guard_digits(long d, long m, long c);

struct PrecisionPolicy {
    long target_digits;
    long guard;
    long working_digits; // target + guard

    static PrecisionPolicy for_plan(long d, long m, long c) {
        long g = guard_digits(d, m, c);
        return {d, g, d + g};
    }
};

} // namespace altsum

#endif

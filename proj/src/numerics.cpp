#include "altsum/numerics.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace altsum {

Rational make_rational(long n, long d) {
    if (d == 0) throw argument_error("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw argument_error("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational pow_int(const Rational& r, unsigned long e) {
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(r.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(r.get_mpq_t()), e);
    return out; // num/den coprime => powers coprime, already canonical
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

namespace {
Rational harmonic_range(unsigned long lo, unsigned long hi) {
    // sum of 1/a over a in [lo, hi]
    if (lo == hi) return make_rational(1, static_cast<long>(lo));
    unsigned long mid = lo + (hi - lo) / 2;
    return harmonic_range(lo, mid) + harmonic_range(mid + 1, hi);
}
} // namespace

Rational harmonic_number(unsigned long n) {
    if (n == 0) return Rational(0);
    return harmonic_range(1, n);
}

// --------------------------------------------------------------------------
// BigReal
// --------------------------------------------------------------------------

mpfr_prec_t BigReal::bits_for(long digits) {
    if (digits < 1) digits = 1;
    // log2(10) = 3.3219...; a few spare bits so that `digits` decimal digits
    // are always representable.
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 9.0);
}

BigReal::BigReal(long digits) : digits_(digits < 1 ? 1 : digits) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, long digits) : digits_(digits < 1 ? 1 : digits) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, long digits) : digits_(digits < 1 ? 1 : digits) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, long digits) : digits_(digits < 1 ? 1 : digits) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const Integer& value, long digits) : digits_(digits < 1 ? 1 : digits) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, long digits) : digits_(digits < 1 ? 1 : digits) {
    mpfr_init2(v_, bits_for(digits_));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw argument_error("unparsable decimal literal: " + decimal);
    }
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
    // leave `other` valid but tiny
    v_[0] = other.v_[0];
    mpfr_init2(other.v_, MPFR_PREC_MIN);
    mpfr_set_zero(other.v_, 1);
    other.digits_ = 1;
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        std::swap(digits_, other.digits_);
    }
    return *this;
}

BigReal::~BigReal() {
    mpfr_clear(v_);
}

BigReal BigReal::to_precision(long digits) const {
    BigReal out(digits);
    mpfr_set(out.v_, v_, MPFR_RNDN);
    out.digits_ = digits < 1 ? 1 : digits;
    return out;
}

Integer BigReal::ceil_to_integer() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_ceil(t, v_);
    Integer z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

std::string BigReal::to_fixed_string(long frac_digits, bool truncate) const {
    if (frac_digits < 0) frac_digits = 0;
    char* s = nullptr;
    // RNDZ = toward zero: the printed digits are a prefix of the exact
    // decimal expansion of the stored value.
    mpfr_asprintf(&s, "%.*R*f", static_cast<int>(frac_digits),
                  truncate ? MPFR_RNDZ : MPFR_RNDN, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BigReal::to_sci_string(long sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*e", static_cast<int>(sig_digits - 1), MPFR_RNDN, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {
inline long join(long a, long b) { return a > b ? a : b; }
} // namespace

BigReal BigReal::operator-() const {
    BigReal out(digits_);
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

#define ALTSUM_BINOP(op, fn)                                     \
    BigReal BigReal::operator op(const BigReal& o) const {       \
        BigReal out(join(digits_, o.digits_));                   \
        fn(out.v_, v_, o.v_, MPFR_RNDN);                         \
        return out;                                              \
    }

ALTSUM_BINOP(+, mpfr_add)
ALTSUM_BINOP(-, mpfr_sub)
ALTSUM_BINOP(*, mpfr_mul)
#undef ALTSUM_BINOP

BigReal BigReal::operator/(const BigReal& o) const {
    if (o.is_zero()) throw domain_error("division by zero");
    BigReal out(join(digits_, o.digits_));
    mpfr_div(out.v_, v_, o.v_, MPFR_RNDN);
    return out;
}

BigReal& BigReal::operator+=(const BigReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal BigReal::operator+(long o) const {
    BigReal out(digits_);
    mpfr_add_si(out.v_, v_, o, MPFR_RNDN);
    return out;
}

BigReal BigReal::operator-(long o) const {
    BigReal out(digits_);
    mpfr_sub_si(out.v_, v_, o, MPFR_RNDN);
    return out;
}

BigReal BigReal::operator*(long o) const {
    BigReal out(digits_);
    mpfr_mul_si(out.v_, v_, o, MPFR_RNDN);
    return out;
}

BigReal BigReal::operator/(long o) const {
    if (o == 0) throw domain_error("division by zero");
    BigReal out(digits_);
    mpfr_div_si(out.v_, v_, o, MPFR_RNDN);
    return out;
}

BigReal abs(const BigReal& x) {
    BigReal out(x.digits_);
    mpfr_abs(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw domain_error("sqrt of a negative number");
    BigReal out(x.digits_);
    mpfr_sqrt(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigReal ln(const BigReal& x) {
    if (x.sign() <= 0) throw domain_error("ln of a nonpositive number");
    BigReal out(x.digits_);
    mpfr_log(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigReal exp(const BigReal& x) {
    BigReal out(x.digits_);
    mpfr_exp(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigReal pow(const BigReal& x, const BigReal& p) {
    if (x.is_zero() && p.sign() <= 0)
        throw domain_error("pow(0, p) with p <= 0");
    if (x.sign() < 0) throw domain_error("real pow of a negative base");
    BigReal out(x.digits_ > p.digits_ ? x.digits_ : p.digits_);
    mpfr_pow(out.v_, x.v_, p.v_, MPFR_RNDN);
    return out;
}

BigReal pow_si(const BigReal& x, long e) {
    if (x.is_zero() && e <= 0) {
        if (e == 0) return BigReal(1L, x.digits_); // 0^0 := 1
        throw domain_error("pow(0, p) with p < 0");
    }
    BigReal out(x.digits_);
    mpfr_pow_si(out.v_, x.v_, e, MPFR_RNDN);
    return out;
}

BigReal sin(const BigReal& x) {
    BigReal out(x.digits_);
    mpfr_sin(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigReal cos(const BigReal& x) {
    BigReal out(x.digits_);
    mpfr_cos(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal out(join(y.digits_, x.digits_));
    mpfr_atan2(out.v_, y.v_, x.v_, MPFR_RNDN);
    return out;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
    BigReal out(join(x.digits_, y.digits_));
    mpfr_hypot(out.v_, x.v_, y.v_, MPFR_RNDN);
    return out;
}

BigReal const_pi(long digits) {
    BigReal out(digits);
    mpfr_const_pi(out.raw(), MPFR_RNDN);
    return out;
}

BigReal pow10(long e, long digits) {
    BigReal out(digits);
    if (e >= 0) {
        mpfr_ui_pow_ui(out.raw(), 10, static_cast<unsigned long>(e), MPFR_RNDN);
    } else {
        mpfr_ui_pow_ui(out.raw(), 10, static_cast<unsigned long>(-e), MPFR_RNDN);
        mpfr_ui_div(out.raw(), 1, out.raw(), MPFR_RNDN);
    }
    return out;
}

BigReal lambert_w(const BigReal& u) {
    if (u.sign() < 0) throw domain_error("lambert_w needs u >= 0");
    if (u.is_zero()) return BigReal(0L, u.digits());

    double ud = u.to_double();
    double w = std::log1p(ud);
    for (int i = 0; i < 8; ++i) {
        double ew = std::exp(w);
        w -= (w * ew - ud) / (ew * (w + 1.0));
    }

    long d = u.digits();
    BigReal x(w, d);
    // Newton is quadratically convergent; the double seed carries ~15 digits.
    int rounds = 2;
    for (long correct = 15; correct < d; correct *= 2) ++rounds;
    for (int i = 0; i < rounds; ++i) {
        BigReal ew = exp(x);
        x = x - (x * ew - u) / (ew * (x + 1));
    }
    return x;
}

// --------------------------------------------------------------------------
// BigComplex
// --------------------------------------------------------------------------

BigComplex BigComplex::operator*(const BigComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
    BigReal den = o.re * o.re + o.im * o.im;
    if (den.is_zero()) throw domain_error("complex division by zero");
    return {(re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den};
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigReal abs(const BigComplex& z) {
    return hypot(z.re, z.im);
}

BigReal arg(const BigComplex& z) {
    if (z.im.is_zero()) {
        // keep the branch cut convention: arg = pi on the negative real axis
        if (z.re.sign() < 0) return const_pi(z.re.digits());
        return BigReal(0L, z.re.digits());
    }
    return atan2(z.im, z.re);
}

BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) {
    if (z.is_zero()) throw domain_error("log of complex zero");
    return {ln(abs(z)), arg(z)};
}

BigComplex pow(const BigComplex& z, const BigComplex& p) {
    if (z.is_zero()) {
        if (p.im.is_zero() && p.re.sign() > 0) return BigComplex(BigReal(0L, z.digits()));
        if (p.is_zero()) return BigComplex(BigReal(1L, z.digits()));
        throw domain_error("complex pow of zero base");
    }
    // real base, real exponent: the principal value is the real power
    if (z.im.is_zero() && p.im.is_zero() && z.re.sign() > 0)
        return BigComplex(pow(z.re, p.re));
    return exp(p * log(z));
}

BigReal max_abs_diff(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b) {
    if (a.size() != b.size()) throw argument_error("component count mismatch");
    long d = a.empty() ? 20 : a[0].digits();
    BigReal worst(0L, d);
    for (size_t i = 0; i < a.size(); ++i) {
        BigReal diff = abs(a[i] - b[i]);
        if (diff > worst) worst = diff;
    }
    return worst;
}

// --------------------------------------------------------------------------
// Precision policy
// --------------------------------------------------------------------------

long guard_digits(long d, long m, long c) {
    if (d < 0 || m < 0 || c < 0) throw argument_error("guard_digits needs nonnegative arguments");
    Integer s = Integer(d) + m + c + 10;
    Integer s2 = s * s;
    // exact ceil(log10(s2)); mpz_sizeinbase may overcount by one in base 10
    size_t nd = mpz_sizeinbase(s2.get_mpz_t(), 10);
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(nd - 1));
    if (s2 < p10) {
        --nd;
        mpz_divexact_ui(p10.get_mpz_t(), p10.get_mpz_t(), 10);
    }
    long t = (s2 == p10) ? static_cast<long>(nd) - 1 : static_cast<long>(nd);
    return 10 + t;
}

} // namespace altsum

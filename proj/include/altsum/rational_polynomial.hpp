#ifndef ALTSUM_RATIONAL_POLYNOMIAL_HPP
#define ALTSUM_RATIONAL_POLYNOMIAL_HPP

#include <vector>

#include "altsum/numerics.hpp"

namespace altsum {

/// Polynomial with exact rational coefficients, coeffs[k] * x^k.
/// Supports the exact (rational) evaluation mode of both engines.
struct RationalPolynomial {
    std::vector<Rational> coeffs;

    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
        return acc;
    }

    RationalPolynomial derivative() const {
        if (coeffs.size() <= 1) return RationalPolynomial{};
        std::vector<Rational> d(coeffs.size() - 1);
        for (size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * static_cast<long>(k);
        return RationalPolynomial(std::move(d));
    }

    /// Antiderivative with zero constant term.
    RationalPolynomial antiderivative() const {
        std::vector<Rational> a(coeffs.size() + 1);
        a[0] = Rational(0);
        for (size_t k = 0; k < coeffs.size(); ++k)
            a[k + 1] = coeffs[k] / make_rational(static_cast<long>(k) + 1, 1);
        return RationalPolynomial(std::move(a));
    }

    /// sum_{k=0}^{n-1} P(k), exact, by direct evaluation.
    Rational sum_over_prefix(long n) const {
        Rational acc(0);
        for (long k = 0; k < n; ++k) acc += eval(Rational(k));
        return acc;
    }
};

} // namespace altsum

#endif

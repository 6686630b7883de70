#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace linf {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form; inverse of parse_rational on canonical input.
std::string format_rational(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational factorial(int n);

/// Dense univariate polynomial in t with rational coefficients.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants promote implicitly
    static Poly monomial(const Rational& c, int power);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool zero() const { return coeffs_.empty(); }
    Rational coefficient(int power) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& t) const;
    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly integral() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const Poly& p) { return p.zero(); }

}  // namespace linf

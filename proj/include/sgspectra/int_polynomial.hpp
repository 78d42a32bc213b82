#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sgs {

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// coeff(i) is the coefficient of x^i. Trailing zeros are trimmed, so the
/// leading coefficient is nonzero unless the polynomial is zero
/// (degree() == -1 exactly for the zero polynomial).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const mpz_class& c);
    static IntPolynomial x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int d) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class operator()(const mpz_class& at) const;
    double evaluate(double at) const;

    IntPolynomial reflected() const;  // p(-x)
    IntPolynomial pow(int e) const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const mpz_class& s);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
    friend IntPolynomial operator*(const mpz_class& s, IntPolynomial a) { return a *= s; }

    bool operator==(const IntPolynomial&) const = default;

    /// Dense coefficient list, low degree first: "[-1, 0, 1]" for x^2 - 1.
    /// The zero polynomial renders as "[0]".
    std::string to_string() const;

private:
    std::vector<mpz_class> c_;

    void trim();
};

/// Interpolates the unique polynomial of degree < xs.size() through
/// (xs[i], ys[i]). Points must be distinct. Intermediate arithmetic is
/// rational; throws if the result does not clear to integer coefficients.
IntPolynomial interpolate_integer(const std::vector<mpz_class>& xs,
                                  const std::vector<mpz_class>& ys);

}  // namespace sgs

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "compcount/count.hpp"

namespace compcount {

/// Dense integer polynomial, coefficients ascending by degree. Stored
/// normalized: no zero leading coefficient, zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<SignedCount> ascending);

    static IntPolynomial constant(SignedCount c);
    /// The monomial lambda.
    static IntPolynomial variable();

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    /// Coefficient of lambda^d (zero beyond the degree).
    SignedCount coefficient(std::size_t d) const;
    const std::vector<SignedCount>& coefficients() const { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const SignedCount& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const SignedCount& c) { return a *= c; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Space-separated ascending coefficients; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void normalize();
    std::vector<SignedCount> coeffs_;
};

} // namespace compcount

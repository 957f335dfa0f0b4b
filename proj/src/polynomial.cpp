#include "compcount/polynomial.hpp"

#include <algorithm>

namespace compcount {

IntPolynomial::IntPolynomial(std::vector<SignedCount> ascending) : coeffs_(std::move(ascending)) {
    normalize();
}

IntPolynomial IntPolynomial::constant(SignedCount c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::variable() { return IntPolynomial({0, 1}); }

SignedCount IntPolynomial::coefficient(std::size_t d) const {
    return d < coeffs_.size() ? coeffs_[d] : SignedCount(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const SignedCount& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<SignedCount> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& c : coeffs_) {
        if (!s.empty()) s += ' ';
        s += c.get_str();
    }
    return s;
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

} // namespace compcount

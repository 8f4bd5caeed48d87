#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cyclichall {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Integer-coefficient polynomial in q; coeffs[i] is the degree-i coefficient.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }
    // q^shift * (1 + q + ... + q^(len-1)); the divided form of (q^len - 1)/(q - 1)
    static IntPolynomial geometric(int len, int shift);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : BigInt(0);
    }
    BigInt operator()(const BigInt& q) const;
    BigInt constant_term() const { return coeff(0); }

    std::string to_string() const;  // "q^2+3*q+1"

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;
};

}  // namespace cyclichall

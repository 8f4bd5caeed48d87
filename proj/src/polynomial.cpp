#include "cyclichall/polynomial.hpp"

#include <sstream>

namespace cyclichall {

IntPolynomial IntPolynomial::geometric(int len, int shift) {
    if (len < 0 || shift < 0) throw std::invalid_argument("IntPolynomial::geometric: negative argument");
    std::vector<BigInt> c(static_cast<std::size_t>(shift + len), 0);
    for (int i = 0; i < len; ++i) c[static_cast<std::size_t>(shift + i)] = 1;
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::operator()(const BigInt& q) const {
    BigInt v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q + *it;
    return v;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BigInt c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "");
        if (i == 0 || c != 1) {
            os << c.str();
            if (i > 0) os << "*";
        }
        if (i > 0) os << "q";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace cyclichall

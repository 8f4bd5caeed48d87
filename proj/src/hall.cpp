#include "cyclichall/hall.hpp"

namespace cyclichall {

HallElement HallElement::unit(CycleQuiver q) {
    HallElement e(q, DimVector::zero(q.n));
    e.add_term(Multipartition(q), 1);
    return e;
}

HallElement HallElement::symbol(const Multipartition& m) {
    HallElement e(m.quiver(), dim_vector(m));
    e.add_term(m, 1);
    return e;
}

BigInt HallElement::coeff(const Multipartition& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void HallElement::add_term(const Multipartition& m, const BigInt& c) {
    if (c == 0) return;
    if (!(dim_vector(m) == grade_)) throw std::invalid_argument("HallElement: term off the element's grade");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HallElement multiply_at_q(const HallElement& a, const HallElement& b, int p) {
    if (a.quiver() != b.quiver()) throw std::invalid_argument("multiply_at_q: quiver mismatch");
    const CycleQuiver& q = a.quiver();
    HallElement r(q, a.grade() + b.grade());
    for (const Multipartition& X : enumerate_classes(q, r.grade())) {
        BigInt c = 0;
        for (const auto& [M, cm] : a.terms())
            for (const auto& [N, cn] : b.terms()) c += cm * cn * hall_number_brute(X, M, N, p);
        r.add_term(X, c);
    }
    return r;
}

HallElement word_monomial(const CycleQuiver& q, const Word& w, int p) {
    HallElement acc = HallElement::unit(q);
    for (const Letter& l : w)
        acc = multiply_at_q(acc, HallElement::symbol(Multipartition::semisimple(q, l)), p);
    return acc;
}

std::map<Multipartition, ModResidue> constant_term_mod(const CycleQuiver& q, const Word& w,
                                                       const std::vector<int>& primes) {
    if (primes.empty()) throw std::invalid_argument("constant_term_mod: need at least one prime");
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j]) throw std::invalid_argument("constant_term_mod: primes must be distinct");

    std::vector<HallElement> evals;
    for (int p : primes) evals.push_back(word_monomial(q, w, p));

    std::map<Multipartition, ModResidue> out;
    for (const Multipartition& X : enumerate_classes(q, word_dim(q, w))) {
        bool all_zero = true, all_one = true;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            BigInt res = evals[i].coeff(X) % primes[i];
            if (res < 0) res += primes[i];
            if (res != 0) all_zero = false;
            if (res != 1) all_one = false;
        }
        out[X] = all_one ? ModResidue::One : (all_zero ? ModResidue::Zero : ModResidue::Inconsistent);
    }
    return out;
}

IntPolynomial interpolate_hall_polynomial(const Multipartition& X, const Multipartition& M,
                                          const Multipartition& N, int degree_bound) {
    if (degree_bound < 0) degree_bound = X.total() * X.total();
    std::vector<int> primes = first_primes(degree_bound + 2);

    std::vector<BigInt> values;
    for (int p : primes) values.push_back(hall_number_brute(X, M, N, p));

    // Lagrange through the first degree_bound+1 points over exact rationals
    int npts = degree_bound + 1;
    std::vector<BigRational> coeffs(static_cast<std::size_t>(npts), 0);
    for (int i = 0; i < npts; ++i) {
        // basis polynomial prod_{j != i} (q - x_j) / (x_i - x_j)
        std::vector<BigRational> basis{1};
        BigRational denom = 1;
        for (int j = 0; j < npts; ++j) {
            if (j == i) continue;
            std::vector<BigRational> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * primes[static_cast<std::size_t>(j)];
            }
            basis = std::move(next);
            denom *= BigRational(primes[static_cast<std::size_t>(i)] - primes[static_cast<std::size_t>(j)]);
        }
        BigRational w = BigRational(values[static_cast<std::size_t>(i)]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * w;
    }

    std::vector<BigInt> icoeffs;
    for (const BigRational& c : coeffs) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::runtime_error(
                "interpolate_hall_polynomial: non-integer coefficients; raise the degree bound");
        icoeffs.push_back(boost::multiprecision::numerator(c));
    }
    IntPolynomial poly(std::move(icoeffs));
    int held_out = primes.back();
    if (poly(held_out) != values.back())
        throw std::runtime_error(
            "interpolate_hall_polynomial: held-out validation failed; raise the degree bound");
    return poly;
}

}  // namespace cyclichall

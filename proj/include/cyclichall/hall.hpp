#pragma once

#include <map>

#include "cyclichall/polynomial.hpp"
#include "cyclichall/quiver.hpp"
#include "cyclichall/rep.hpp"

namespace cyclichall {

// Homogeneous integer combination of class symbols u_pi at one grade.
class HallElement {
public:
    HallElement(CycleQuiver q, DimVector grade) : quiver_(q), grade_(std::move(grade)) {
        if (grade_.size() != q.n) throw std::invalid_argument("HallElement: grade size mismatch");
    }
    static HallElement unit(CycleQuiver q);
    static HallElement symbol(const Multipartition& m);  // 1 * u_m

    const CycleQuiver& quiver() const { return quiver_; }
    const DimVector& grade() const { return grade_; }
    const std::map<Multipartition, BigInt>& terms() const { return terms_; }
    BigInt coeff(const Multipartition& m) const;
    void add_term(const Multipartition& m, const BigInt& c);

    friend bool operator==(const HallElement&, const HallElement&) = default;

private:
    CycleQuiver quiver_;
    DimVector grade_;
    std::map<Multipartition, BigInt> terms_;  // zero coefficients never stored
};

// bilinear extension of u_M <> u_N = sum_X F^X_{MN}(p) u_X
HallElement multiply_at_q(const HallElement& a, const HallElement& b, int p);

// u_w = u_{N_1} <> ... <> u_{N_r} evaluated at q = p
HallElement word_monomial(const CycleQuiver& q, const Word& w, int p);

enum class ModResidue { Zero = 0, One = 1, Inconsistent = -1 };

// constant term f(0) of every coefficient of u_w, read through residues
// mod each probe prime; Inconsistent flags residues that disagree
std::map<Multipartition, ModResidue> constant_term_mod(const CycleQuiver& q, const Word& w,
                                                       const std::vector<int>& primes = {2, 3});

// Lagrange reconstruction of f^X_{MN}(q) from brute-force counts at the
// first degree_bound+2 primes, with one held-out validation point.
// degree_bound < 0 selects the default (total dim of X)^2.
IntPolynomial interpolate_hall_polynomial(const Multipartition& X, const Multipartition& M,
                                          const Multipartition& N, int degree_bound = -1);

}  // namespace cyclichall

#pragma once

#include <map>
#include <optional>
#include <random>

#include "cyclichall/fqmatrix.hpp"
#include "cyclichall/polynomial.hpp"
#include "cyclichall/quiver.hpp"

namespace cyclichall {

// Explicit nilpotent representation over a prime field: one matrix per
// arrow, arrows[i] maps vertex i to vertex i+1 (mod n).
struct FqRep {
    CycleQuiver quiver;
    PrimeField field;
    DimVector dims;
    std::vector<FqMatrix> arrows;

    FqRep(CycleQuiver q, PrimeField f, DimVector d, std::vector<FqMatrix> a);

    int total_dim() const { return dims.total(); }
    bool is_nilpotent() const;
    std::string key() const;
};

// Arrow-invariant tuple of subspaces, one column-echelon basis per vertex.
struct Subrep {
    std::vector<FqMatrix> bases;            // bases[v]: dims[v] x d[v]
    std::vector<std::vector<int>> pivots;   // pivot rows per vertex

    DimVector dims(int n) const;
};

FqRep canonical_rep(const Multipartition& pi, PrimeField field);

// dim_Fp Hom(a, b); field-independent for nilpotent cycle representations
int hom_dim(const FqRep& a, const FqRep& b);

// basis of Hom(a, b): each element is one matrix per vertex (b.dims[v] x a.dims[v])
std::vector<std::vector<FqMatrix>> hom_basis(const FqRep& a, const FqRep& b);

// invert the classification: the unique pi with canonical_rep(pi) iso x,
// recovered from the hom-profile against all indecomposables
Multipartition classify(const FqRep& x);

FqRep base_change(const FqRep& x, const std::vector<FqMatrix>& g);
std::vector<FqMatrix> random_base_change(const FqRep& x, std::mt19937& rng);

// all submodules of x with the given per-vertex dimensions, in the
// documented deterministic (vertex-0-major cell) order
std::vector<Subrep> enumerate_submodules(const FqRep& x, const DimVector& d);

// the subspace tuple as a representation in its basis coordinates
FqRep sub_as_rep(const FqRep& x, const Subrep& u);

// x/u in the complement coordinates (non-pivot rows of each basis)
FqRep quotient_rep(const FqRep& x, const Subrep& u);

// F^X_{MN} over F_p; 0 instantly on a dimension mismatch
BigInt hall_number_brute(const Multipartition& X, const Multipartition& M, const Multipartition& N, int p);

// counts of submodules of X isomorphic to N keyed by quotient class;
// memoized, the workhorse behind hall_number_brute and the sweeps
const std::map<Multipartition, BigInt>& hall_distribution(const Multipartition& X, const Multipartition& N, int p);

struct ExtProbe {
    bool exists = false;
    std::vector<std::pair<int, BigInt>> counts;  // (prime, hall number)
    bool disagreement = false;                   // zero at some probe, non-zero at another
};

ExtProbe ext_probe(const Multipartition& X, const Multipartition& M, const Multipartition& N,
                   const std::vector<int>& probes);
bool ext_exists(const Multipartition& X, const Multipartition& M, const Multipartition& N,
                const std::vector<int>& probes = {2, 3});

// first count primes, 2, 3, 5, ...
std::vector<int> first_primes(int count);

}  // namespace cyclichall

#pragma once

#include <set>

#include "cyclichall/hall.hpp"
#include "cyclichall/quiver.hpp"
#include "cyclichall/rep.hpp"

namespace cyclichall {

// Orbit closure of one class; its points-up-to-iso are the degenerations
// of the generator.
struct MonoidElement {
    Multipartition generator;
};

struct IsoClassSet {
    DimVector grade;
    std::set<Multipartition> members;

    friend bool operator==(const IsoClassSet&, const IsoClassSet&) = default;
};

// dim Hom between isomorphism classes; field-independent, computed once
// per summand pair and cached
int hom_dim_classes(const Multipartition& a, const Multipartition& b);

// Hom order as the computable surrogate for the degeneration order:
// same dimension vector and hom_dim(I, M) <= hom_dim(I, N) for every
// indecomposable I up to the total dimension.
bool deg_leq(const Multipartition& M, const Multipartition& N);

int end_dim(const Multipartition& m);
int orbit_dim(const Multipartition& m);

// the unique extension of M (quotient) by N (sub) with maximal orbit
// dimension; a tie is an error, never a choice
Multipartition generic_extension(const Multipartition& M, const Multipartition& N);

// [A_w] by the set recursion [A_w.N] = { X : exists M in [A_w] with an
// extension of M by N }
IsoClassSet eval_word(const CycleQuiver& q, const Word& w);

// all degenerations of the generator at its grade
IsoClassSet iso_classes(const MonoidElement& a);

// Psi(A): the {0,1} indicator of iso_classes(A), shaped like a HallElement
HallElement psi(const MonoidElement& a);

// fold of generic_extension over the word's semisimple letters
Multipartition word_generator(const CycleQuiver& q, const Word& w);

}  // namespace cyclichall

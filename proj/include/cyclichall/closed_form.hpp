#pragma once

#include "cyclichall/polynomial.hpp"
#include "cyclichall/quiver.hpp"

namespace cyclichall {

// Data behind the closed-form Hall number for an extension of M by the
// simple S_a with inserted part length l: n_l parts of rho^(a) equal l,
// m_l parts exceed l.
struct SimpleExtensionProfile {
    int a = 0;    // socle vertex of the simple
    int l = 1;    // length of the inserted part
    int n_l = 0;  // #{ parts of rho^(a) equal to l }
    int m_l = 0;  // #{ parts of rho^(a) greater than l }
};

SimpleExtensionProfile simple_extension_profile(const Multipartition& rho, int a, int l);

// q^(m_l) * (1 + q + ... + q^(n_l - 1))
IntPolynomial closed_form_from_profile(const SimpleExtensionProfile& prof);

// Closed form for rho viewed as an extension of M by S_a where the inserted
// part has length l (so M is rho with one part l removed from component a
// and, when l > 1, a part l-1 returned to component a-1). Throws if
// rho^(a) has no part l.
IntPolynomial closed_form_simple_l(const Multipartition& rho, int a, int l);

// Spec-shaped entry point: k indexes the source pi^(a-1), including one
// virtual zero part at position m+1 (the split extension). The insertion is
// reversed from (rho, a, k); if several source classes are consistent with
// the same k the call is ambiguous and throws.
IntPolynomial closed_form_simple(const Multipartition& rho, int a, int k);

// All (l, source pi) reversals of rho = insert_pi(pi, a, k), virtual zero
// part included. Exposed for tests and diagnostics.
std::vector<std::pair<int, Multipartition>> reverse_insertions(const Multipartition& rho, int a, int k);

}  // namespace cyclichall

#pragma once

// H^1(W, ZPhi) as the cokernel of the transposed Cartan matrix. Sections of
// ZPhi x| W -> W are integer n-vectors; two sections are conjugate exactly
// when tC z = (difference) has an integer solution, decided through a Smith
// normal form computed once per root system. Types A-D also get the
// closed-form modular classifiers.

#include <optional>
#include <set>
#include <vector>

#include "alcove/shi.hpp"

namespace alcove {

struct Section {
    IntVec coeffs;  // s(s_i) = tau_{a_i alpha_i} s_i

    bool operator==(const Section&) const = default;
};

struct DifferenceVector {
    IntVec d;
};

struct CohomologyClass {
    IntVec residues;  // r_i modulo the i-th invariant factor

    bool operator==(const CohomologyClass&) const = default;
};

// U * M * V = diag, with U and V unimodular and diag[0] | diag[1] | ...
struct SmithNormalForm {
    SquareMat u;
    SquareMat v;
    IntVec diag;
};

SmithNormalForm smith_normal_form(const SquareMat& m);

struct CohomologyGroup {
    IntVec invariant_factors;  // SNF diagonal entries > 1
    Int order = 1;             // product of the invariant factors = f
    SmithNormalForm snf;       // of the transposed Cartan matrix
};

CohomologyGroup h1_group(const RootSystem& rs);

// The section attached to an alcove vector: its simple entries.
Section section_of(const RootSystem& rs, const ShiVector& v);

// Integer witness z with tC z = s1 - s2, or nullopt if the sections are not
// ZPhi-conjugate.
std::optional<IntVec> conjugate(const CohomologyGroup& g, const Section& s1, const Section& s2);
std::optional<IntVec> conjugate(const RootSystem& rs, const Section& s1, const Section& s2);

// Rational witness whose denominators only involve the given primes, or
// nullopt if the sections stay non-conjugate over Z[1/p : p in primes].
std::optional<RatVec> conjugate_over(const RootSystem& rs, const Section& s1, const Section& s2,
                                     const std::set<Int>& inverted_primes);

CohomologyClass h1_class(const CohomologyGroup& g, const Section& s);

// Closed-form same-class test on a section difference; types A-D only.
bool fast_class(const RootSystem& rs, const DifferenceVector& d);

// Per-element modular invariant whose equality matches fast_class on the
// difference; types A-D only.
IntVec modular_invariant(const RootSystem& rs, const IntVec& simple_entries);

// Whether H^1(W, APhi) vanishes for A = Z[1/p : p in inverted_primes].
bool trivial_over(const RootSystem& rs, const std::set<Int>& inverted_primes);

// Prime factors of the index of connection (the minimal localization).
std::vector<Int> minimal_inverted_primes(const RootSystem& rs);

}  // namespace alcove

#pragma once

// Shi coefficient vectors and the component structure they carry: the
// alcove criterion on k-vectors, the decomposition k(w,theta) =
// P_theta(w) + lambda_theta(w), admitted vectors, and the inverse of the
// coefficient map (group element from Shi vector).

#include <cstddef>
#include <vector>

#include "alcove/weyl.hpp"

namespace alcove {

struct ShiVector {
    IntVec k;  // indexed by the canonical positive-root order

    bool operator==(const ShiVector&) const = default;
};

struct AdmittedVector {
    IntVec lambda;  // full Phi+ length; simple entries are always 0

    bool operator==(const AdmittedVector&) const = default;
    bool operator<(const AdmittedVector& o) const { return lambda < o.lambda; }
};

// iota(w): k(w,theta) = floor <w(x0), theta_vee> at the interior sample
// point; throws std::logic_error if a pairing lands on a hyperplane (which
// would mean the element is corrupted).
ShiVector shi_vector(const RootSystem& rs, const AffineElement& w);

// Shi's criterion: true iff every (alpha, beta, alpha+beta) triple passes
// the two-sided norm-weighted inequality.
bool is_alcove(const RootSystem& rs, const IntVec& candidate);

// Coefficients of P_theta, i.e. the coroot coordinates of theta.
const IntVec& p_polynomial(const RootSystem& rs, int root_index);

// lambda_theta = k_theta - P_theta(simple entries); throws
// std::invalid_argument if any entry leaves [0, h(theta_vee)-1], which
// signals a non-alcove input.
AdmittedVector lambda_of(const RootSystem& rs, const ShiVector& v);

bool is_admissible(const RootSystem& rs, const AdmittedVector& lam);

// True iff lam satisfies the reduced inequality system; input must be
// admissible.
bool is_admitted(const RootSystem& rs, const AdmittedVector& lam);

// Number of admissible vectors (product of the interval sizes), saturating
// at SIZE_MAX on overflow.
std::size_t admissible_space_size(const RootSystem& rs);

// Exhaustive filter of the admissible box through is_admitted, in
// lexicographic order. Refuses (std::runtime_error) if the box exceeds cap.
std::vector<AdmittedVector> enumerate_admitted(const RootSystem& rs, std::size_t cap);

bool same_component(const RootSystem& rs, const ShiVector& a, const ShiVector& b);

// (<x, theta_vee>)_theta over the canonical root order.
IntVec coroot_pairings(const RootSystem& rs, const IntVec& x);

// Inverse of iota: the unique group element with the given Shi vector.
// Enumerates the finite Weyl group (throws if |W| exceeds finite_cap).
AffineElement element_of_shi_vector(const RootSystem& rs, const ShiVector& v,
                                    std::size_t finite_cap = 2000000);

}  // namespace alcove

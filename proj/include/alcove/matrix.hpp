#pragma once

// Small dense square matrices over the integers, plus the exact linear
// algebra used throughout: Bareiss determinants, rational Gaussian solves,
// and integer matrix inverses for group elements.

#include <cstddef>

#include "alcove/rational.hpp"

namespace alcove {

struct SquareMat {
    int n = 0;
    IntVec a;  // row-major, n*n entries

    SquareMat() = default;
    explicit SquareMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

    static SquareMat identity(int dim)
    {
        SquareMat m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    Int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    bool operator==(const SquareMat&) const = default;

    SquareMat mul(const SquareMat& o) const;
    IntVec mul_vec(const IntVec& v) const;
    RatVec mul_vec(const RatVec& v) const;
    SquareMat transposed() const;
};

// Determinant by fraction-free (Bareiss) elimination; exact.
Int det_bareiss(SquareMat m);

// Solves M x = rhs over the rationals; throws std::domain_error if singular.
RatVec solve_rational(const SquareMat& m, const RatVec& rhs);

// Inverse of a matrix known to be invertible over Z (|det| = 1 not required,
// but every entry of the inverse must be integral); throws otherwise.
SquareMat inverse_integer(const SquareMat& m);

std::size_t hash_ints(const Int* p, std::size_t count, std::size_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace alcove

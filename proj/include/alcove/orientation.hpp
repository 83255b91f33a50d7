#pragma once

// Same-orientation decisions by three routes: the definition (equal finite
// parts), the component + cohomology-class theorem, and the per-type modular
// congruences; plus the ball-level cross-validation harness.

#include <optional>
#include <string>
#include <vector>

#include "alcove/cohomology.hpp"

namespace alcove {

// Canonical representative of the ZPhi-orbit of an element: its finite part.
struct OrientationClass {
    SquareMat finite_part;

    bool operator==(const OrientationClass&) const = default;
};

inline OrientationClass orientation_class_of(const AffineElement& w)
{
    return {w.finite};
}

// Definitional route: w' = tau_x w for some x in ZPhi iff the finite parts
// coincide.
bool same_orientation_oracle(const RootSystem& rs, const AffineElement& w, const AffineElement& w2);

// Theorem route: same component and conjugate sections.
bool same_orientation_theorem(const RootSystem& rs, const ShiVector& v1, const ShiVector& v2);
bool same_orientation_theorem(const RootSystem& rs, const CohomologyGroup& g, const ShiVector& v1,
                              const ShiVector& v2);

// Corollary route (types A-D). The same-component hypothesis is part of the
// statement; violating it throws std::invalid_argument.
bool same_orientation_modular(const RootSystem& rs, const ShiVector& v1, const ShiVector& v2);

struct Discrepancy {
    std::string type;
    int rank = 0;
    std::string word1;
    std::string word2;
    bool oracle = false;
    bool theorem = false;
    std::optional<bool> modular;
};

struct BallReport {
    std::string type;
    int rank = 0;
    int radius = 0;
    std::size_t ball_size = 0;
    std::size_t pairs_checked = 0;
    std::size_t orientation_classes = 0;
    std::size_t components = 0;
    std::vector<std::size_t> class_sizes;        // per orientation class, canonical order
    std::vector<Discrepancy> discrepancies;      // expected empty
    bool modular_checked = false;                // types A-D only
};

// Enumerates the ball, partitions it by orientation class and by component,
// and checks oracle == theorem on every pair (and == modular on every
// same-component pair when the type supports it). Disagreements are
// collected, never thrown.
BallReport classify_ball(const RootSystem& rs, int radius);

}  // namespace alcove

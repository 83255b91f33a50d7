#pragma once

// Elements of W and W_a = ZPhi x| W on the root basis. An affine element is
// stored as its semidirect pair (translation, finite matrix) and acts by
// p -> finite(p) + translation. Words over the affine generator set
// {s_0, s_1, ..., s_n} evaluate left to right; balls in the Cayley graph
// are enumerated breadth-first with dedup by value.

#include <cstddef>
#include <string>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

struct AffineElement {
    IntVec translation;
    SquareMat finite;

    // p -> finite(p) + translation
    RatVec apply(const RatVec& p) const;
    IntVec apply(const IntVec& p) const;

    bool operator==(const AffineElement&) const = default;
};

AffineElement identity_element(const RootSystem& rs);
AffineElement translation_element(const RootSystem& rs, IntVec x);

// s_i for 1 <= i <= rank (the spec's generator letters; s_0 is affine).
AffineElement simple_reflection(const RootSystem& rs, int i);

// s_{theta,k}: fixes the hyperplane <x, theta_vee> = k pointwise.
AffineElement affine_reflection(const RootSystem& rs, int root_index, Int k);

// [s_0, s_1, ..., s_n] with s_0 = s_{highest root, 1}.
std::vector<AffineElement> affine_generators(const RootSystem& rs);

AffineElement multiply(const AffineElement& a, const AffineElement& b);
AffineElement inverse(const AffineElement& a);

inline std::pair<IntVec, SquareMat> decompose(const AffineElement& a)
{
    return {a.translation, a.finite};
}

using Word = std::vector<int>;

AffineElement evaluate_word(const RootSystem& rs, const Word& w);

// Parses whitespace-separated generator letters, e.g. "0 1 2 1".
Word parse_word(const std::string& text, int rank);
std::string word_to_string(const Word& w);

struct BallElement {
    AffineElement g;
    Word word;  // lexicographically least among the shortest words
};

// All elements of word length <= radius, in shortlex discovery order.
std::vector<BallElement> enumerate_ball(const RootSystem& rs, int radius);

// The finite Weyl group as matrices, BFS order; throws if |W| exceeds cap.
std::vector<SquareMat> enumerate_finite_weyl(const RootSystem& rs, std::size_t cap = 2000000);

// Diagnostic: does the matrix permute {+-theta : theta positive}?
bool is_root_permutation(const RootSystem& rs, const SquareMat& m);

std::size_t hash_element(const AffineElement& a);

}  // namespace alcove

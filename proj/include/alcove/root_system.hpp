#pragma once

// Irreducible crystallographic root systems of types A-G, built from
// hardcoded Cartan matrices (Bourbaki numbering) and kept entirely in
// root-basis coordinates. No Euclidean embedding is constructed; all
// pairings go through the Cartan matrix with exact arithmetic.

#include <string>
#include <vector>

#include "alcove/matrix.hpp"

namespace alcove {

enum class Type { A, B, C, D, E, F, G };

std::string type_name(Type t);

// Accepts "A".."G" (case-insensitive) or a fused label like "E6", "B2".
// A fused label must agree with `rank` when rank != 0.
std::pair<Type, int> parse_type_rank(const std::string& type_str, int rank);

struct PositiveRoot {
    IntVec root;             // theta = sum c_i alpha_i, coordinates c_i >= 0
    IntVec coroot;           // theta_vee on the simple-coroot basis
    IntVec simple_pairings;  // entry i = <alpha_i, theta_vee>
    Int height = 0;          // sum of root coordinates
    Int coroot_height = 0;   // h(theta_vee) = sum of coroot coordinates
    Int sq_norm = 0;         // |theta|^2, shortest simple root normalized to 2
};

// beta_left + beta_right = beta_sum as positive roots, left < right.
struct Triple {
    int left;
    int right;
    int sum;
};

class RootSystem {
public:
    static RootSystem build(Type t, int rank);

    Type type() const { return type_; }
    int rank() const { return rank_; }
    std::string label() const { return type_name(type_) + std::to_string(rank_); }

    const SquareMat& cartan() const { return cartan_; }
    Int cartan_at(int i, int j) const { return cartan_.at(i, j); }
    const IntVec& norms() const { return norms_; }
    Int index_of_connection() const { return index_of_connection_; }

    int root_count() const { return static_cast<int>(roots_.size()); }
    const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
    const PositiveRoot& root(int t) const { return roots_[static_cast<size_t>(t)]; }

    // Index of a positive root by its root coordinates; -1 if not a root.
    int root_index(const IntVec& coords) const;

    const std::vector<Triple>& sum_triples() const { return triples_; }

    int highest_root_index() const { return highest_root_; }
    const PositiveRoot& highest_root() const { return roots_[static_cast<size_t>(highest_root_)]; }

    // <x, alpha_j_vee> = sum_i x_i C_ij  (j is 0-based).
    Int pairing(const IntVec& x, int j) const;
    Rat pairing(const RatVec& x, int j) const;

    // <x, theta_vee> for a general positive root.
    Int root_pairing(const IntVec& x, const PositiveRoot& theta) const;
    Rat root_pairing(const RatVec& x, const PositiveRoot& theta) const;

    // A point x0 of the open fundamental alcove: <x0, alpha_i_vee> = 1/N
    // for every i, with N = 1 + max coroot height.
    const RatVec& interior_sample_point() const { return sample_point_; }
    Int sample_denominator() const { return sample_den_; }

private:
    RootSystem() = default;

    Type type_ = Type::A;
    int rank_ = 0;
    SquareMat cartan_;
    IntVec norms_;
    Int index_of_connection_ = 1;
    std::vector<PositiveRoot> roots_;
    std::vector<Triple> triples_;
    int highest_root_ = -1;
    RatVec sample_point_;
    Int sample_den_ = 1;
};

}  // namespace alcove

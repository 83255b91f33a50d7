#include "alcove/shi.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace alcove {

ShiVector shi_vector(const RootSystem& rs, const AffineElement& w)
{
    RatVec x = w.apply(rs.interior_sample_point());
    ShiVector v;
    v.k.reserve(static_cast<size_t>(rs.root_count()));
    for (const PositiveRoot& theta : rs.positive_roots()) {
        Rat p = rs.root_pairing(x, theta);
        if (p.is_integer())
            throw std::logic_error("sample point image lies on a hyperplane; corrupted element");
        v.k.push_back(p.floor());
    }
    return v;
}

bool is_alcove(const RootSystem& rs, const IntVec& candidate)
{
    if (static_cast<int>(candidate.size()) != rs.root_count())
        throw std::invalid_argument("candidate vector has wrong length (want " +
                                    std::to_string(rs.root_count()) + ")");
    for (const Triple& t : rs.sum_triples()) {
        Int na = rs.root(t.left).sq_norm;
        Int nb = rs.root(t.right).sq_norm;
        Int nc = rs.root(t.sum).sq_norm;
        Int ka = candidate[static_cast<size_t>(t.left)];
        Int kb = candidate[static_cast<size_t>(t.right)];
        Int kc = candidate[static_cast<size_t>(t.sum)];
        Int lhs = add_i(mul_i(na, ka), mul_i(nb, kb));
        Int mid = mul_i(nc, add_i(kc, 1));
        if (add_i(lhs, 1) > mid) return false;
        if (mid > sub_i(add_i(add_i(lhs, na), add_i(nb, nc)), 1)) return false;
    }
    return true;
}

const IntVec& p_polynomial(const RootSystem& rs, int root_index)
{
    if (root_index < 0 || root_index >= rs.root_count())
        throw std::invalid_argument("root index out of range");
    return rs.root(root_index).coroot;
}

AdmittedVector lambda_of(const RootSystem& rs, const ShiVector& v)
{
    if (static_cast<int>(v.k.size()) != rs.root_count())
        throw std::invalid_argument("Shi vector has wrong length");
    AdmittedVector lam;
    lam.lambda.resize(v.k.size(), 0);
    for (int t = 0; t < rs.root_count(); ++t) {
        const PositiveRoot& theta = rs.root(t);
        Int p = 0;
        for (int i = 0; i < rs.rank(); ++i)
            p = add_i(p, mul_i(theta.coroot[static_cast<size_t>(i)], v.k[static_cast<size_t>(i)]));
        Int l = sub_i(v.k[static_cast<size_t>(t)], p);
        if (l < 0 || l >= theta.coroot_height)
            throw std::invalid_argument("lambda out of range at root " + std::to_string(t) +
                                        ": input is not an alcove vector");
        lam.lambda[static_cast<size_t>(t)] = l;
    }
    return lam;
}

bool is_admissible(const RootSystem& rs, const AdmittedVector& lam)
{
    if (static_cast<int>(lam.lambda.size()) != rs.root_count()) return false;
    for (int t = 0; t < rs.root_count(); ++t) {
        Int l = lam.lambda[static_cast<size_t>(t)];
        if (l < 0 || l >= rs.root(t).coroot_height) return false;
    }
    return true;
}

bool is_admitted(const RootSystem& rs, const AdmittedVector& lam)
{
    if (!is_admissible(rs, lam))
        throw std::invalid_argument("is_admitted requires an admissible vector");
    // The linear parts P cancel out of Shi's system thanks to the coroot
    // cancellation identity (verified at RootSystem construction), leaving
    // the same two-sided inequality in lambda alone.
    for (const Triple& t : rs.sum_triples()) {
        Int na = rs.root(t.left).sq_norm;
        Int nb = rs.root(t.right).sq_norm;
        Int nc = rs.root(t.sum).sq_norm;
        Int la = lam.lambda[static_cast<size_t>(t.left)];
        Int lb = lam.lambda[static_cast<size_t>(t.right)];
        Int lc = lam.lambda[static_cast<size_t>(t.sum)];
        Int lhs = add_i(mul_i(na, la), mul_i(nb, lb));
        Int mid = mul_i(nc, add_i(lc, 1));
        if (add_i(lhs, 1) > mid) return false;
        if (mid > sub_i(add_i(add_i(lhs, na), add_i(nb, nc)), 1)) return false;
    }
    return true;
}

std::size_t admissible_space_size(const RootSystem& rs)
{
    std::size_t total = 1;
    for (const PositiveRoot& theta : rs.positive_roots()) {
        std::size_t box = static_cast<std::size_t>(theta.coroot_height);
        if (box == 0) return 0;
        if (total > std::numeric_limits<std::size_t>::max() / box)
            return std::numeric_limits<std::size_t>::max();
        total *= box;
    }
    return total;
}

std::vector<AdmittedVector> enumerate_admitted(const RootSystem& rs, std::size_t cap)
{
    std::size_t box = admissible_space_size(rs);
    if (box > cap)
        throw std::runtime_error(
            "admissible search space has " + std::to_string(box) + " vectors, above the cap of " +
            std::to_string(cap) + "; raise ALCOVE_SHI_MAX_ADMISSIBLE or sample components from a "
            "Cayley ball instead");
    const int m = rs.root_count();
    std::vector<AdmittedVector> out;
    AdmittedVector cur;
    cur.lambda.assign(static_cast<size_t>(m), 0);
    // Odometer over the admissible box, most significant digit first, so the
    // output is already in lexicographic order.
    while (true) {
        if (is_admitted(rs, cur)) out.push_back(cur);
        int pos = m - 1;
        while (pos >= 0) {
            Int& digit = cur.lambda[static_cast<size_t>(pos)];
            if (digit + 1 < rs.root(pos).coroot_height) {
                ++digit;
                break;
            }
            digit = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

bool same_component(const RootSystem& rs, const ShiVector& a, const ShiVector& b)
{
    return lambda_of(rs, a) == lambda_of(rs, b);
}

IntVec coroot_pairings(const RootSystem& rs, const IntVec& x)
{
    IntVec out;
    out.reserve(static_cast<size_t>(rs.root_count()));
    for (const PositiveRoot& theta : rs.positive_roots()) out.push_back(rs.root_pairing(x, theta));
    return out;
}

AffineElement element_of_shi_vector(const RootSystem& rs, const ShiVector& v, std::size_t finite_cap)
{
    if (!is_alcove(rs, v.k)) throw std::invalid_argument("not an alcove vector");
    const int n = rs.rank();
    AdmittedVector target_lambda = lambda_of(rs, v);

    // k(w, theta) = k(wbar, theta) + <x, theta_vee> with w = tau_x wbar, and
    // the simple entries of any finite element's vector lie in {-1, 0}. Try
    // every finite part whose lambda matches; the translation then has to
    // solve tC x = v_simple - simple(iota(wbar)) over Z. Bijectivity of iota
    // makes the successful candidate unique.
    SquareMat ct = rs.cartan().transposed();
    for (const SquareMat& wbar : enumerate_finite_weyl(rs, finite_cap)) {
        AffineElement finite{IntVec(static_cast<size_t>(n), 0), wbar};
        ShiVector base = shi_vector(rs, finite);
        if (lambda_of(rs, base) != target_lambda) continue;
        RatVec rhs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            rhs[static_cast<size_t>(i)] =
                Rat(sub_i(v.k[static_cast<size_t>(i)], base.k[static_cast<size_t>(i)]));
        RatVec x = solve_rational(ct, rhs);
        bool integral = true;
        for (const Rat& c : x)
            if (!c.is_integer()) { integral = false; break; }
        if (!integral) continue;
        IntVec tr(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) tr[static_cast<size_t>(i)] = x[static_cast<size_t>(i)].num();
        AffineElement w = multiply(translation_element(rs, tr), finite);
        if (shi_vector(rs, w) == v) return w;
    }
    throw std::logic_error("no group element found for an alcove vector; bijection violated");
}

}  // namespace alcove

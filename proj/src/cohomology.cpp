#include "alcove/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace alcove {

namespace {

void swap_rows(SquareMat& m, int r1, int r2)
{
    for (int j = 0; j < m.n; ++j) std::swap(m.at(r1, j), m.at(r2, j));
}

void swap_cols(SquareMat& m, int c1, int c2)
{
    for (int i = 0; i < m.n; ++i) std::swap(m.at(i, c1), m.at(i, c2));
}

// row r1 -= q * row r2
void row_op(SquareMat& m, int r1, int r2, Int q)
{
    for (int j = 0; j < m.n; ++j) m.at(r1, j) = sub_i(m.at(r1, j), mul_i(q, m.at(r2, j)));
}

void col_op(SquareMat& m, int c1, int c2, Int q)
{
    for (int i = 0; i < m.n; ++i) m.at(i, c1) = sub_i(m.at(i, c1), mul_i(q, m.at(i, c2)));
}

}  // namespace

SmithNormalForm smith_normal_form(const SquareMat& input)
{
    const int n = input.n;
    SmithNormalForm s;
    SquareMat d = input;
    s.u = SquareMat::identity(n);
    s.v = SquareMat::identity(n);

    for (int t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (d.at(i, j) != 0 &&
                        (pi < 0 || abs_i(d.at(i, j)) < abs_i(d.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) { pi = pj = t; }  // trailing block all zero
            if (pi != t) { swap_rows(d, t, pi); swap_rows(s.u, t, pi); }
            if (pj != t) { swap_cols(d, t, pj); swap_cols(s.v, t, pj); }
            if (d.at(t, t) == 0) break;

            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) { row_op(d, i, t, q); row_op(s.u, i, t, q); }
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) { col_op(d, j, t, q); col_op(s.v, j, t, q); }
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // remainders left; pivot will shrink

            // Divisibility fix: fold a bad row into row t and restart.
            bool divides = true;
            for (int i = t + 1; i < n && divides; ++i)
                for (int j = t + 1; j < n && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_op(d, t, i, -1);
                        row_op(s.u, t, i, -1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(t, t) < 0) {
            for (int j = 0; j < n; ++j) d.at(t, j) = neg_i(d.at(t, j));
            for (int j = 0; j < n; ++j) s.u.at(t, j) = neg_i(s.u.at(t, j));
        }
    }

    s.diag.resize(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) s.diag[static_cast<size_t>(t)] = d.at(t, t);

    // Verify the factorization and unimodularity.
    if (abs_i(det_bareiss(s.u)) != 1 || abs_i(det_bareiss(s.v)) != 1)
        throw std::logic_error("SNF transforms are not unimodular");
    SquareMat check = s.u.mul(input).mul(s.v);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (check.at(i, j) != (i == j ? s.diag[static_cast<size_t>(i)] : 0))
                throw std::logic_error("SNF factorization check failed");
    for (int t = 0; t + 1 < n; ++t)
        if (s.diag[static_cast<size_t>(t)] != 0 &&
            s.diag[static_cast<size_t>(t + 1)] % s.diag[static_cast<size_t>(t)] != 0)
            throw std::logic_error("SNF divisibility chain broken");
    return s;
}

CohomologyGroup h1_group(const RootSystem& rs)
{
    CohomologyGroup g;
    g.snf = smith_normal_form(rs.cartan().transposed());
    for (Int d : g.snf.diag) {
        if (d == 0) throw std::logic_error("Cartan matrix is singular");
        if (d > 1) {
            g.invariant_factors.push_back(d);
            g.order = mul_i(g.order, d);
        }
    }
    if (g.order != rs.index_of_connection())
        throw std::logic_error("cokernel order disagrees with the index of connection");
    return g;
}

Section section_of(const RootSystem& rs, const ShiVector& v)
{
    if (!is_alcove(rs, v.k)) throw std::invalid_argument("section_of: not an alcove vector");
    return Section{IntVec(v.k.begin(), v.k.begin() + rs.rank())};
}

std::optional<IntVec> conjugate(const CohomologyGroup& g, const Section& s1, const Section& s2)
{
    const int n = g.snf.u.n;
    if (static_cast<int>(s1.coeffs.size()) != n || static_cast<int>(s2.coeffs.size()) != n)
        throw std::invalid_argument("section length mismatch");
    IntVec d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        d[static_cast<size_t>(i)] = sub_i(s1.coeffs[static_cast<size_t>(i)], s2.coeffs[static_cast<size_t>(i)]);
    IntVec y = g.snf.u.mul_vec(d);
    for (int i = 0; i < n; ++i) {
        Int di = g.snf.diag[static_cast<size_t>(i)];
        if (y[static_cast<size_t>(i)] % di != 0) return std::nullopt;
        y[static_cast<size_t>(i)] /= di;
    }
    return g.snf.v.mul_vec(y);
}

std::optional<IntVec> conjugate(const RootSystem& rs, const Section& s1, const Section& s2)
{
    return conjugate(h1_group(rs), s1, s2);
}

std::optional<RatVec> conjugate_over(const RootSystem& rs, const Section& s1, const Section& s2,
                                     const std::set<Int>& inverted_primes)
{
    const int n = rs.rank();
    RatVec rhs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        rhs[static_cast<size_t>(i)] =
            Rat(sub_i(s1.coeffs[static_cast<size_t>(i)], s2.coeffs[static_cast<size_t>(i)]));
    RatVec z = solve_rational(rs.cartan().transposed(), rhs);
    for (const Rat& zi : z) {
        Int den = zi.den();
        for (Int p : inverted_primes)
            while (den % p == 0) den /= p;
        if (den != 1) return std::nullopt;
    }
    return z;
}

CohomologyClass h1_class(const CohomologyGroup& g, const Section& s)
{
    IntVec y = g.snf.u.mul_vec(s.coeffs);
    CohomologyClass c;
    for (size_t i = 0; i < y.size(); ++i) {
        Int di = g.snf.diag[i];
        if (di > 1) c.residues.push_back(mod_pos(y[i], di));
    }
    return c;
}

bool fast_class(const RootSystem& rs, const DifferenceVector& dv)
{
    const int n = rs.rank();
    if (static_cast<int>(dv.d.size()) != n) throw std::invalid_argument("difference vector length mismatch");
    const IntVec& d = dv.d;
    switch (rs.type()) {
        case Type::A: {
            Int s = 0;
            for (int j = 1; j <= n; ++j) s = add_i(s, mul_i(j, d[static_cast<size_t>(j - 1)]));
            return mod_pos(s, n + 1) == 0;
        }
        case Type::B:
            return mod_pos(d[static_cast<size_t>(n - 1)], 2) == 0;
        case Type::C: {
            Int s = 0;
            for (int j = 1; j <= n; j += 2) s = add_i(s, d[static_cast<size_t>(j - 1)]);
            return mod_pos(s, 2) == 0;
        }
        case Type::D: {
            // Same class iff both mod-4 congruences hold; the mod-2 parity
            // condition on d_{n-1}, d_n is implied by their difference.
            Int odd = 0;
            for (int j = 1; j <= n - 2; j += 2) odd = add_i(odd, mul_i(2, d[static_cast<size_t>(j - 1)]));
            Int dn1 = d[static_cast<size_t>(n - 2)];
            Int dn = d[static_cast<size_t>(n - 1)];
            Int u = add_i(odd, add_i(mul_i(n, dn1), mul_i(n - 2, dn)));
            Int v = add_i(odd, add_i(mul_i(n - 2, dn1), mul_i(n, dn)));
            bool parity = mod_pos(sub_i(dn1, dn), 2) == 0;
            return parity && mod_pos(u, 4) == 0 && mod_pos(v, 4) == 0;
        }
        default:
            throw std::invalid_argument("fast_class only covers types A-D; use conjugate()");
    }
}

IntVec modular_invariant(const RootSystem& rs, const IntVec& simple_entries)
{
    const int n = rs.rank();
    if (static_cast<int>(simple_entries.size()) < n)
        throw std::invalid_argument("modular_invariant needs the simple entries");
    const IntVec& k = simple_entries;
    switch (rs.type()) {
        case Type::A: {
            Int s = 0;
            for (int j = 1; j <= n; ++j) s = add_i(s, mul_i(j, k[static_cast<size_t>(j - 1)]));
            return {mod_pos(s, n + 1)};
        }
        case Type::B:
            return {mod_pos(k[static_cast<size_t>(n - 1)], 2)};
        case Type::C: {
            Int s = 0;
            for (int j = 1; j <= n; j += 2) s = add_i(s, k[static_cast<size_t>(j - 1)]);
            return {mod_pos(s, 2)};
        }
        case Type::D: {
            Int odd = 0;
            for (int j = 1; j <= n - 2; j += 2) odd = add_i(odd, mul_i(2, k[static_cast<size_t>(j - 1)]));
            Int kn1 = k[static_cast<size_t>(n - 2)];
            Int kn = k[static_cast<size_t>(n - 1)];
            return {mod_pos(add_i(odd, add_i(mul_i(n, kn1), mul_i(n - 2, kn))), 4),
                    mod_pos(add_i(odd, add_i(mul_i(n - 2, kn1), mul_i(n, kn))), 4)};
        }
        default:
            throw std::invalid_argument("modular invariants only cover types A-D");
    }
}

bool trivial_over(const RootSystem& rs, const std::set<Int>& inverted_primes)
{
    Int f = rs.index_of_connection();
    for (Int p : inverted_primes) {
        if (p < 2) throw std::invalid_argument("inverted primes must be >= 2");
        while (f % p == 0) f /= p;
    }
    return f == 1;
}

std::vector<Int> minimal_inverted_primes(const RootSystem& rs)
{
    std::vector<Int> primes;
    Int f = rs.index_of_connection();
    for (Int p = 2; p * p <= f; ++p)
        if (f % p == 0) {
            primes.push_back(p);
            while (f % p == 0) f /= p;
        }
    if (f > 1) primes.push_back(f);
    return primes;
}

}  // namespace alcove

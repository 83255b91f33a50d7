#include "alcove/matrix.hpp"

#include <stdexcept>

namespace alcove {

SquareMat SquareMat::mul(const SquareMat& o) const
{
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    SquareMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Int v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j)
                r.at(i, j) = add_i(r.at(i, j), mul_i(v, o.at(k, j)));
        }
    return r;
}

IntVec SquareMat::mul_vec(const IntVec& v) const
{
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("matrix/vector dimension mismatch");
    IntVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[i] = add_i(r[i], mul_i(at(i, j), v[j]));
    return r;
}

RatVec SquareMat::mul_vec(const RatVec& v) const
{
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("matrix/vector dimension mismatch");
    RatVec r(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[i] += Rat(at(i, j)) * v[j];
    return r;
}

SquareMat SquareMat::transposed() const
{
    SquareMat r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Int det_bareiss(SquareMat m)
{
    const int n = m.n;
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = sub_i(mul_i(m.at(i, j), m.at(k, k)), mul_i(m.at(i, k), m.at(k, j)));
                m.at(i, j) = t / prev;  // divides exactly (Bareiss)
            }
        prev = m.at(k, k);
    }
    return mul_i(sign, m.at(n - 1, n - 1));
}

RatVec solve_rational(const SquareMat& m, const RatVec& rhs)
{
    const int n = m.n;
    if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("solve: rhs dimension mismatch");
    // Augmented Gaussian elimination with exact rationals.
    std::vector<RatVec> aug(n, RatVec(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rat(m.at(i, j));
        aug[i][n] = rhs[i];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!aug[i][col].is_zero()) { pivot = i; break; }
        if (pivot < 0) throw std::domain_error("solve: singular matrix");
        std::swap(aug[col], aug[pivot]);
        Rat inv = Rat(1) / aug[col][col];
        for (int j = col; j <= n; ++j) aug[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            Rat f = aug[i][col];
            for (int j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

SquareMat inverse_integer(const SquareMat& m)
{
    const int n = m.n;
    SquareMat inv(n);
    for (int j = 0; j < n; ++j) {
        RatVec e(n, Rat(0));
        e[j] = Rat(1);
        RatVec col = solve_rational(m, e);
        for (int i = 0; i < n; ++i) {
            if (!col[i].is_integer())
                throw std::domain_error("inverse_integer: inverse is not integral");
            inv.at(i, j) = col[i].num();
        }
    }
    return inv;
}

std::size_t hash_ints(const Int* p, std::size_t count, std::size_t seed)
{
    std::size_t h = seed;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t x = static_cast<std::size_t>(p[i]);
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 31;
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace alcove

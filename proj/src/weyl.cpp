#include "alcove/weyl.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace alcove {

AffineElement identity_element(const RootSystem& rs)
{
    return {IntVec(static_cast<size_t>(rs.rank()), 0), SquareMat::identity(rs.rank())};
}

AffineElement translation_element(const RootSystem& rs, IntVec x)
{
    if (static_cast<int>(x.size()) != rs.rank())
        throw std::invalid_argument("translation vector has wrong length");
    return {std::move(x), SquareMat::identity(rs.rank())};
}

AffineElement simple_reflection(const RootSystem& rs, int i)
{
    if (i < 1 || i > rs.rank())
        throw std::invalid_argument("simple reflection index out of range: " + std::to_string(i));
    const int n = rs.rank();
    SquareMat m = SquareMat::identity(n);
    // column j = alpha_j - C_ji alpha_i
    for (int j = 0; j < n; ++j)
        m.at(i - 1, j) = sub_i(m.at(i - 1, j), rs.cartan_at(j, i - 1));
    return {IntVec(static_cast<size_t>(n), 0), std::move(m)};
}

AffineElement affine_reflection(const RootSystem& rs, int root_index, Int k)
{
    if (root_index < 0 || root_index >= rs.root_count())
        throw std::invalid_argument("root index out of range");
    const int n = rs.rank();
    const PositiveRoot& theta = rs.root(root_index);
    SquareMat m = SquareMat::identity(n);
    // column j = alpha_j - <alpha_j, theta_vee> theta
    for (int j = 0; j < n; ++j) {
        Int p = theta.simple_pairings[static_cast<size_t>(j)];
        for (int r = 0; r < n; ++r)
            m.at(r, j) = sub_i(m.at(r, j), mul_i(p, theta.root[static_cast<size_t>(r)]));
    }
    IntVec tr(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) tr[static_cast<size_t>(r)] = mul_i(k, theta.root[static_cast<size_t>(r)]);
    return {std::move(tr), std::move(m)};
}

std::vector<AffineElement> affine_generators(const RootSystem& rs)
{
    std::vector<AffineElement> gens;
    gens.reserve(static_cast<size_t>(rs.rank()) + 1);
    gens.push_back(affine_reflection(rs, rs.highest_root_index(), 1));
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));
    return gens;
}

AffineElement multiply(const AffineElement& a, const AffineElement& b)
{
    // (x, u)(y, v) = (x + u(y), uv)
    IntVec t = a.finite.mul_vec(b.translation);
    for (size_t i = 0; i < t.size(); ++i) t[i] = add_i(t[i], a.translation[i]);
    return {std::move(t), a.finite.mul(b.finite)};
}

AffineElement inverse(const AffineElement& a)
{
    SquareMat inv = inverse_integer(a.finite);
    IntVec t = inv.mul_vec(a.translation);
    for (Int& x : t) x = neg_i(x);
    return {std::move(t), std::move(inv)};
}

RatVec AffineElement::apply(const RatVec& p) const
{
    RatVec r = finite.mul_vec(p);
    for (size_t i = 0; i < r.size(); ++i) r[i] += Rat(translation[i]);
    return r;
}

IntVec AffineElement::apply(const IntVec& p) const
{
    IntVec r = finite.mul_vec(p);
    for (size_t i = 0; i < r.size(); ++i) r[i] = add_i(r[i], translation[i]);
    return r;
}

AffineElement evaluate_word(const RootSystem& rs, const Word& w)
{
    std::vector<AffineElement> gens = affine_generators(rs);
    AffineElement acc = identity_element(rs);
    for (int letter : w) {
        if (letter < 0 || letter > rs.rank())
            throw std::invalid_argument("generator letter out of range: " + std::to_string(letter));
        acc = multiply(acc, gens[static_cast<size_t>(letter)]);
    }
    return acc;
}

Word parse_word(const std::string& text, int rank)
{
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int letter;
        try {
            size_t pos = 0;
            letter = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad generator letter '" + tok + "'");
        }
        if (letter < 0 || letter > rank)
            throw std::invalid_argument("generator letter out of range: " + tok);
        w.push_back(letter);
    }
    return w;
}

std::string word_to_string(const Word& w)
{
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

std::size_t hash_element(const AffineElement& a)
{
    std::size_t h = hash_ints(a.translation.data(), a.translation.size());
    return hash_ints(a.finite.a.data(), a.finite.a.size(), h);
}

namespace {

struct ElementHash {
    std::size_t operator()(const AffineElement& e) const { return hash_element(e); }
};

struct MatHash {
    std::size_t operator()(const SquareMat& m) const { return hash_ints(m.a.data(), m.a.size()); }
};

}  // namespace

std::vector<BallElement> enumerate_ball(const RootSystem& rs, int radius)
{
    if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
    std::vector<AffineElement> gens = affine_generators(rs);
    std::vector<BallElement> out;
    out.push_back({identity_element(rs), {}});
    std::unordered_set<AffineElement, ElementHash> seen;
    seen.reserve(1024);
    seen.insert(out[0].g);

    // Frontier elements are visited in shortlex order of their stored words
    // and generators in ascending index, so the first word found for a new
    // element is the lexicographically least among the shortest.
    size_t level_begin = 0;
    for (int depth = 0; depth < radius; ++depth) {
        size_t level_end = out.size();
        for (size_t idx = level_begin; idx < level_end; ++idx) {
            for (int letter = 0; letter <= rs.rank(); ++letter) {
                AffineElement next = multiply(out[idx].g, gens[static_cast<size_t>(letter)]);
                if (!seen.insert(next).second) continue;
                Word w = out[idx].word;
                w.push_back(letter);
                out.push_back({std::move(next), std::move(w)});
            }
        }
        level_begin = level_end;
    }
    return out;
}

std::vector<SquareMat> enumerate_finite_weyl(const RootSystem& rs, std::size_t cap)
{
    std::vector<SquareMat> out{SquareMat::identity(rs.rank())};
    std::vector<SquareMat> gens;
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i).finite);

    std::unordered_set<SquareMat, MatHash> seen;
    seen.insert(out[0]);
    for (size_t idx = 0; idx < out.size(); ++idx) {
        for (const SquareMat& g : gens) {
            SquareMat next = out[idx].mul(g);
            if (!seen.insert(next).second) continue;
            if (out.size() >= cap)
                throw std::runtime_error("finite Weyl group larger than cap (" + std::to_string(cap) + ")");
            out.push_back(std::move(next));
        }
    }
    return out;
}

bool is_root_permutation(const RootSystem& rs, const SquareMat& m)
{
    for (const PositiveRoot& pr : rs.positive_roots()) {
        IntVec img = m.mul_vec(pr.root);
        IntVec neg = img;
        for (Int& x : neg) x = neg_i(x);
        if (rs.root_index(img) < 0 && rs.root_index(neg) < 0) return false;
    }
    return true;
}

}  // namespace alcove

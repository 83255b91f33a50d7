#include "alcove/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace alcove {

namespace {

// Closed-form index of connection, valid for every rank.
Int connection_index_table(Type t, int n)
{
    switch (t) {
        case Type::A: return n + 1;
        case Type::B:
        case Type::C: return 2;
        case Type::D: return 4;
        case Type::E: return 9 - n;  // 3, 2, 1 for E6, E7, E8
        case Type::F:
        case Type::G: return 1;
    }
    throw std::logic_error("unreachable");
}

void check_rank(Type t, int n)
{
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("invalid type/rank combination " + type_name(t) +
                                    std::to_string(n) + ": " + why);
    };
    switch (t) {
        case Type::A: if (n < 1) fail("type A needs rank >= 1"); break;
        case Type::B: if (n < 2) fail("type B needs rank >= 2"); break;
        case Type::C: if (n < 2) fail("type C needs rank >= 2"); break;
        case Type::D: if (n < 3) fail("type D needs rank >= 3"); break;
        case Type::E: if (n < 6 || n > 8) fail("type E exists for ranks 6, 7, 8"); break;
        case Type::F: if (n != 4) fail("type F exists for rank 4"); break;
        case Type::G: if (n != 2) fail("type G exists for rank 2"); break;
    }
    if (n > 32) fail("rank capped at 32");
}

SquareMat cartan_matrix(Type t, int n)
{
    SquareMat c(n);
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    auto edge = [&](int i, int j) { c.at(i, j) = -1; c.at(j, i) = -1; };  // 0-based
    switch (t) {
        case Type::A:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Type::B:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            c.at(n - 2, n - 1) = -2;  // alpha_n is the short root
            break;
        case Type::C:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            c.at(n - 1, n - 2) = -2;  // alpha_n is the long root
            break;
        case Type::D:
            for (int i = 0; i + 1 < n - 2; ++i) edge(i, i + 1);
            edge(n - 3, n - 2);
            edge(n - 3, n - 1);
            break;
        case Type::E:
            // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
            edge(0, 2);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            edge(1, 3);
            break;
        case Type::F:
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            c.at(1, 2) = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            break;
        case Type::G:
            edge(0, 1);
            c.at(1, 0) = -3;  // alpha_2 is the long root
            break;
    }
    return c;
}

// Squared norms of the simple roots from the Cartan ratios
// |alpha_i|^2 / |alpha_j|^2 = C_ij / C_ji, scaled so the minimum is 2.
IntVec simple_norms(const SquareMat& c)
{
    const int n = c.n;
    RatVec w(n, Rat(0));
    w[0] = Rat(1);
    std::vector<int> todo{0};
    while (!todo.empty()) {
        int i = todo.back();
        todo.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || c.at(i, j) == 0 || !w[j].is_zero()) continue;
            // |alpha_j|^2 = |alpha_i|^2 * C_ji / C_ij
            w[j] = w[i] * Rat(c.at(j, i), c.at(i, j));
            todo.push_back(j);
        }
    }
    Rat mn = w[0];
    for (const Rat& x : w) {
        if (x.is_zero()) throw std::invalid_argument("Dynkin diagram is not connected");
        if (x < mn) mn = x;
    }
    IntVec norms(n);
    for (int i = 0; i < n; ++i) {
        Rat scaled = w[i] * Rat(2) / mn;
        if (!scaled.is_integer()) throw std::logic_error("non-integral simple norm");
        norms[i] = scaled.num();
    }
    return norms;
}

bool lex_less(const IntVec& a, const IntVec& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string type_name(Type t)
{
    switch (t) {
        case Type::A: return "A";
        case Type::B: return "B";
        case Type::C: return "C";
        case Type::D: return "D";
        case Type::E: return "E";
        case Type::F: return "F";
        case Type::G: return "G";
    }
    throw std::logic_error("unreachable");
}

std::pair<Type, int> parse_type_rank(const std::string& type_str, int rank)
{
    if (type_str.empty()) throw std::invalid_argument("empty type label");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(type_str[0])));
    Type t;
    switch (c) {
        case 'A': t = Type::A; break;
        case 'B': t = Type::B; break;
        case 'C': t = Type::C; break;
        case 'D': t = Type::D; break;
        case 'E': t = Type::E; break;
        case 'F': t = Type::F; break;
        case 'G': t = Type::G; break;
        default: throw std::invalid_argument("unknown type label '" + type_str + "'");
    }
    int fused = 0;
    if (type_str.size() > 1) {
        try {
            fused = std::stoi(type_str.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed type label '" + type_str + "'");
        }
        if (rank != 0 && rank != fused)
            throw std::invalid_argument("type label '" + type_str + "' disagrees with --rank");
    }
    int n = fused != 0 ? fused : rank;
    if (n == 0) throw std::invalid_argument("rank required for type " + std::string(1, c));
    return {t, n};
}

int RootSystem::root_index(const IntVec& coords) const
{
    for (int t = 0; t < root_count(); ++t)
        if (roots_[static_cast<size_t>(t)].root == coords) return t;
    return -1;
}

Int RootSystem::pairing(const IntVec& x, int j) const
{
    Int s = 0;
    for (int i = 0; i < rank_; ++i) s = add_i(s, mul_i(x[static_cast<size_t>(i)], cartan_.at(i, j)));
    return s;
}

Rat RootSystem::pairing(const RatVec& x, int j) const
{
    Rat s(0);
    for (int i = 0; i < rank_; ++i) s += x[static_cast<size_t>(i)] * Rat(cartan_.at(i, j));
    return s;
}

Int RootSystem::root_pairing(const IntVec& x, const PositiveRoot& theta) const
{
    Int s = 0;
    for (int i = 0; i < rank_; ++i)
        s = add_i(s, mul_i(x[static_cast<size_t>(i)], theta.simple_pairings[static_cast<size_t>(i)]));
    return s;
}

Rat RootSystem::root_pairing(const RatVec& x, const PositiveRoot& theta) const
{
    Rat s(0);
    for (int i = 0; i < rank_; ++i)
        s += x[static_cast<size_t>(i)] * Rat(theta.simple_pairings[static_cast<size_t>(i)]);
    return s;
}

RootSystem RootSystem::build(Type t, int rank)
{
    check_rank(t, rank);
    RootSystem rs;
    rs.type_ = t;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(t, rank);
    rs.norms_ = simple_norms(rs.cartan_);

    const int n = rank;
    const SquareMat& c = rs.cartan_;

    // Basic Cartan sanity.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && c.at(i, j) != 2) throw std::logic_error("Cartan diagonal must be 2");
            if (i != j && c.at(i, j) > 0) throw std::logic_error("Cartan off-diagonal must be <= 0");
            if ((c.at(i, j) == 0) != (c.at(j, i) == 0)) throw std::logic_error("Cartan zero pattern not symmetric");
            if (i != j && c.at(i, j) != 0 &&
                mul_i(rs.norms_[static_cast<size_t>(i)], c.at(j, i)) !=
                    mul_i(rs.norms_[static_cast<size_t>(j)], c.at(i, j)))
                throw std::logic_error("norm ratios disagree with Cartan entries");
        }

    rs.index_of_connection_ = abs_i(det_bareiss(c));
    if (rs.index_of_connection_ != connection_index_table(t, rank))
        throw std::logic_error("|det C| disagrees with the index-of-connection table");

    // Generate the positive roots: close the simple roots under the simple
    // reflections, keeping images with all-nonnegative coordinates.
    std::map<IntVec, bool> seen;
    std::vector<IntVec> queue;
    for (int i = 0; i < n; ++i) {
        IntVec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        seen.emplace(e, true);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        IntVec v = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            Int p = 0;
            for (int j = 0; j < n; ++j) p = add_i(p, mul_i(v[static_cast<size_t>(j)], c.at(j, i)));
            IntVec img = v;
            img[static_cast<size_t>(i)] = sub_i(img[static_cast<size_t>(i)], p);
            bool nonneg = true, nonpos = true;
            for (Int x : img) {
                if (x < 0) nonneg = false;
                if (x > 0) nonpos = false;
            }
            if (!nonneg && !nonpos) throw std::logic_error("reflection image has mixed signs");
            if (!nonneg) continue;
            if (seen.emplace(img, true).second) queue.push_back(std::move(img));
        }
    }

    std::vector<IntVec> coords;
    coords.reserve(seen.size());
    for (auto& kv : seen) coords.push_back(kv.first);

    // Canonical order: simple roots in Cartan index order, then ascending
    // height, ties lexicographic on root coordinates.
    auto height_of = [](const IntVec& v) {
        Int h = 0;
        for (Int x : v) h = add_i(h, x);
        return h;
    };
    std::sort(coords.begin(), coords.end(), [&](const IntVec& a, const IntVec& b) {
        Int ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        if (ha == 1) {  // simple roots: Cartan index order
            int ia = static_cast<int>(std::find(a.begin(), a.end(), 1) - a.begin());
            int ib = static_cast<int>(std::find(b.begin(), b.end(), 1) - b.begin());
            return ia < ib;
        }
        return lex_less(a, b);
    });

    rs.roots_.reserve(coords.size());
    for (IntVec& v : coords) {
        PositiveRoot pr;
        pr.height = height_of(v);
        // |theta|^2 = sum_j c_j (|alpha_j|^2 / 2) <theta, alpha_j_vee>
        Int sq = 0;
        for (int j = 0; j < n; ++j) {
            Int pj = 0;
            for (int i = 0; i < n; ++i) pj = add_i(pj, mul_i(v[static_cast<size_t>(i)], c.at(i, j)));
            sq = add_i(sq, mul_i(v[static_cast<size_t>(j)],
                                 mul_i(rs.norms_[static_cast<size_t>(j)] / 2, pj)));
        }
        if (sq <= 0) throw std::logic_error("non-positive root norm");
        pr.sq_norm = sq;
        pr.coroot.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            Int num = mul_i(v[static_cast<size_t>(i)], rs.norms_[static_cast<size_t>(i)]);
            if (num % sq != 0) throw std::logic_error("coroot coordinates are not integral");
            pr.coroot[static_cast<size_t>(i)] = num / sq;
            pr.coroot_height = add_i(pr.coroot_height, pr.coroot[static_cast<size_t>(i)]);
        }
        pr.simple_pairings.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j)
                s = add_i(s, mul_i(pr.coroot[static_cast<size_t>(j)], c.at(i, j)));
            pr.simple_pairings[static_cast<size_t>(i)] = s;
        }
        pr.root = std::move(v);
        if (rs.root_pairing(pr.root, pr) != 2) throw std::logic_error("<theta, theta_vee> != 2");
        rs.roots_.push_back(std::move(pr));
    }

    // Highest root: componentwise maximum; for an irreducible system it is
    // the unique root of maximal height, hence last in the canonical order.
    rs.highest_root_ = rs.root_count() - 1;
    for (const PositiveRoot& pr : rs.roots_)
        for (int i = 0; i < n; ++i)
            if (pr.root[static_cast<size_t>(i)] > rs.highest_root().root[static_cast<size_t>(i)])
                throw std::logic_error("highest root is not a componentwise maximum");

    // Sum triples, found by hashing root-coordinate sums.
    std::map<IntVec, int> index;
    for (int k = 0; k < rs.root_count(); ++k) index.emplace(rs.roots_[static_cast<size_t>(k)].root, k);
    for (int i = 0; i < rs.root_count(); ++i)
        for (int j = i + 1; j < rs.root_count(); ++j) {
            IntVec s(static_cast<size_t>(n));
            for (int q = 0; q < n; ++q)
                s[static_cast<size_t>(q)] = add_i(rs.roots_[static_cast<size_t>(i)].root[static_cast<size_t>(q)],
                                                  rs.roots_[static_cast<size_t>(j)].root[static_cast<size_t>(q)]);
            auto it = index.find(s);
            if (it != index.end()) rs.triples_.push_back({i, j, it->second});
        }

    // |alpha+beta|^2 * coroot(alpha+beta) = |alpha|^2 coroot(alpha) + |beta|^2 coroot(beta)
    // for every triple; is_admitted depends on this cancellation.
    for (const Triple& tr : rs.triples_) {
        const PositiveRoot& a = rs.root(tr.left);
        const PositiveRoot& b = rs.root(tr.right);
        const PositiveRoot& s = rs.root(tr.sum);
        for (int i = 0; i < n; ++i) {
            Int lhs = mul_i(s.sq_norm, s.coroot[static_cast<size_t>(i)]);
            Int rhs = add_i(mul_i(a.sq_norm, a.coroot[static_cast<size_t>(i)]),
                            mul_i(b.sq_norm, b.coroot[static_cast<size_t>(i)]));
            if (lhs != rhs) throw std::logic_error("coroot cancellation identity failed");
        }
    }

    // Interior sample point: solve tC x0 = (1/N, ..., 1/N).
    Int max_ch = 0;
    for (const PositiveRoot& pr : rs.roots_) max_ch = std::max(max_ch, pr.coroot_height);
    rs.sample_den_ = add_i(max_ch, 1);
    RatVec rhs(static_cast<size_t>(n), Rat(1, rs.sample_den_));
    rs.sample_point_ = solve_rational(c.transposed(), rhs);
    for (const PositiveRoot& pr : rs.roots_) {
        Rat v = rs.root_pairing(rs.sample_point_, pr);
        if (!(Rat(0) < v && v < Rat(1)))
            throw std::logic_error("sample point escaped the fundamental alcove");
    }

    return rs;
}

}  // namespace alcove

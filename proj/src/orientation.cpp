#include "alcove/orientation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace alcove {

bool same_orientation_oracle(const RootSystem&, const AffineElement& w, const AffineElement& w2)
{
    return orientation_class_of(w) == orientation_class_of(w2);
}

bool same_orientation_theorem(const RootSystem& rs, const CohomologyGroup& g, const ShiVector& v1,
                              const ShiVector& v2)
{
    if (!same_component(rs, v1, v2)) return false;
    return conjugate(g, section_of(rs, v1), section_of(rs, v2)).has_value();
}

bool same_orientation_theorem(const RootSystem& rs, const ShiVector& v1, const ShiVector& v2)
{
    return same_orientation_theorem(rs, h1_group(rs), v1, v2);
}

bool same_orientation_modular(const RootSystem& rs, const ShiVector& v1, const ShiVector& v2)
{
    if (rs.type() != Type::A && rs.type() != Type::B && rs.type() != Type::C && rs.type() != Type::D)
        throw std::invalid_argument("modular orientation test only covers types A-D");
    if (!same_component(rs, v1, v2))
        throw std::invalid_argument(
            "modular orientation test: hypothesis not met, the two vectors lie in different "
            "components");
    Section s1 = section_of(rs, v1);
    Section s2 = section_of(rs, v2);
    DifferenceVector d;
    d.d.resize(s1.coeffs.size());
    for (size_t i = 0; i < d.d.size(); ++i)
        d.d[i] = sub_i(s1.coeffs[i], s2.coeffs[i]);
    return fast_class(rs, d);
}

BallReport classify_ball(const RootSystem& rs, int radius)
{
    BallReport rep;
    rep.type = type_name(rs.type());
    rep.rank = rs.rank();
    rep.radius = radius;

    std::vector<BallElement> ball = enumerate_ball(rs, radius);
    rep.ball_size = ball.size();

    bool has_modular = rs.type() == Type::A || rs.type() == Type::B || rs.type() == Type::C ||
                       rs.type() == Type::D;
    rep.modular_checked = has_modular;

    CohomologyGroup group = h1_group(rs);

    // Per-element keys: orientation = finite part, component = lambda,
    // theorem = (lambda id, class residues), modular = congruence values.
    // Key equality is exactly what the verdict functions compare, so the
    // pairwise loop below reproduces their answers.
    struct Keys {
        int orient;
        int component;
        int residues;
        int modular;
    };
    std::vector<Keys> keys(ball.size());
    std::map<IntVec, int> orient_ids;  // flattened finite matrix -> id
    std::map<IntVec, int> component_ids;
    std::map<IntVec, int> residue_ids;
    std::map<IntVec, int> modular_ids;
    auto intern = [](std::map<IntVec, int>& ids, const IntVec& key) {
        return ids.emplace(key, static_cast<int>(ids.size())).first->second;
    };
    for (size_t i = 0; i < ball.size(); ++i) {
        const AffineElement& w = ball[i].g;
        ShiVector v = shi_vector(rs, w);
        AdmittedVector lam = lambda_of(rs, v);
        keys[i].orient = intern(orient_ids, w.finite.a);
        keys[i].component = intern(component_ids, lam.lambda);
        keys[i].residues = intern(residue_ids, h1_class(group, section_of(rs, v)).residues);
        keys[i].modular =
            has_modular
                ? intern(modular_ids, modular_invariant(rs, IntVec(v.k.begin(), v.k.begin() + rs.rank())))
                : 0;
    }
    rep.orientation_classes = orient_ids.size();
    rep.components = component_ids.size();
    rep.class_sizes.assign(orient_ids.size(), 0);
    for (const Keys& k : keys) ++rep.class_sizes[static_cast<size_t>(k.orient)];

    const size_t max_reported = 32;
    for (size_t i = 0; i < ball.size(); ++i) {
        for (size_t j = i + 1; j < ball.size(); ++j) {
            ++rep.pairs_checked;
            bool oracle = keys[i].orient == keys[j].orient;
            bool same_comp = keys[i].component == keys[j].component;
            // equal residues is exactly conjugate(): the SNF solve succeeds
            // iff every (U d)_i vanishes mod diag_i.
            bool theorem = same_comp && keys[i].residues == keys[j].residues;
            std::optional<bool> modular;
            if (has_modular && same_comp) modular = keys[i].modular == keys[j].modular;
            bool bad = oracle != theorem || (modular.has_value() && *modular != oracle);
            if (bad && rep.discrepancies.size() < max_reported) {
                Discrepancy dis;
                dis.type = rep.type;
                dis.rank = rep.rank;
                dis.word1 = word_to_string(ball[i].word);
                dis.word2 = word_to_string(ball[j].word);
                dis.oracle = oracle;
                dis.theorem = theorem;
                dis.modular = modular;
                rep.discrepancies.push_back(std::move(dis));
            }
        }
    }
    return rep;
}

}  // namespace alcove

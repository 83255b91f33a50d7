#include "alcove/json_io.hpp"

#include <stdexcept>

namespace alcove {

using nlohmann::json;

namespace {

json matrix_json(const SquareMat& m)
{
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

SquareMat matrix_from_json(const json& j, int n)
{
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw std::invalid_argument("matrix: expected " + std::to_string(n) + " rows");
    SquareMat m(n);
    for (int i = 0; i < n; ++i) {
        if (!j[static_cast<size_t>(i)].is_array() || static_cast<int>(j[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("matrix: ragged rows");
        for (int c = 0; c < n; ++c) m.at(i, c) = j[static_cast<size_t>(i)][static_cast<size_t>(c)].get<Int>();
    }
    return m;
}

IntVec vec_from_json(const json& j, size_t want, const char* what)
{
    if (!j.is_array() || j.size() != want)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) + " entries");
    IntVec v;
    v.reserve(want);
    for (const auto& x : j) v.push_back(x.get<Int>());
    return v;
}

}  // namespace

json root_system_json(const RootSystem& rs)
{
    json roots = json::array();
    for (const PositiveRoot& pr : rs.positive_roots()) {
        roots.push_back({{"root", pr.root},
                         {"coroot", pr.coroot},
                         {"height", pr.coroot_height},
                         {"sq_norm", pr.sq_norm}});
    }
    return {{"schema", kSchemaTag},
            {"type", type_name(rs.type())},
            {"rank", rs.rank()},
            {"cartan", matrix_json(rs.cartan())},
            {"roots", std::move(roots)},
            {"f", rs.index_of_connection()}};
}

json shi_vector_json(const RootSystem& rs, const ShiVector& v)
{
    json order = json::array();
    for (const PositiveRoot& pr : rs.positive_roots()) order.push_back(pr.root);
    return {{"schema", kSchemaTag}, {"order", std::move(order)}, {"k", v.k}};
}

json element_json(const AffineElement& w)
{
    return {{"schema", kSchemaTag}, {"translation", w.translation}, {"matrix", matrix_json(w.finite)}};
}

json h1_json(const RootSystem& rs, const CohomologyGroup& g)
{
    return {{"schema", kSchemaTag},
            {"type", type_name(rs.type())},
            {"rank", rs.rank()},
            {"factors", g.invariant_factors},
            {"f", rs.index_of_connection()},
            {"minimal_inverted_primes", minimal_inverted_primes(rs)}};
}

json ball_report_json(const BallReport& rep)
{
    json discs = json::array();
    for (const Discrepancy& d : rep.discrepancies) {
        json jd = {{"type", d.type},     {"rank", d.rank},       {"word1", d.word1},
                   {"word2", d.word2},   {"oracle", d.oracle},   {"theorem", d.theorem}};
        if (d.modular.has_value()) jd["modular"] = *d.modular;
        else jd["modular"] = nullptr;
        discs.push_back(std::move(jd));
    }
    return {{"schema", kSchemaTag},
            {"type", rep.type},
            {"rank", rep.rank},
            {"radius", rep.radius},
            {"ball", rep.ball_size},
            {"pairs_checked", rep.pairs_checked},
            {"orientation_classes", rep.orientation_classes},
            {"components", rep.components},
            {"class_sizes", rep.class_sizes},
            {"modular_checked", rep.modular_checked},
            {"discrepancies", std::move(discs)}};
}

ShiVector shi_vector_from_json(const RootSystem& rs, const json& j)
{
    if (!j.is_object() || !j.contains("k")) throw std::invalid_argument("Shi vector JSON needs a \"k\" array");
    ShiVector v;
    v.k = vec_from_json(j.at("k"), static_cast<size_t>(rs.root_count()), "k");
    if (j.contains("order")) {
        const json& order = j.at("order");
        if (static_cast<int>(order.size()) != rs.root_count())
            throw std::invalid_argument("order: wrong number of roots");
        for (int t = 0; t < rs.root_count(); ++t) {
            IntVec r = vec_from_json(order[static_cast<size_t>(t)], static_cast<size_t>(rs.rank()), "order entry");
            if (r != rs.root(t).root)
                throw std::invalid_argument("order: does not match the canonical root order at index " +
                                            std::to_string(t));
        }
    }
    if (!is_alcove(rs, v.k)) throw std::invalid_argument("imported k-vector is not an alcove");
    return v;
}

AffineElement element_from_json(const RootSystem& rs, const json& j)
{
    AffineElement w;
    w.translation = vec_from_json(j.at("translation"), static_cast<size_t>(rs.rank()), "translation");
    w.finite = matrix_from_json(j.at("matrix"), rs.rank());
    if (!is_root_permutation(rs, w.finite))
        throw std::invalid_argument("matrix does not permute the root set");
    return w;
}

}  // namespace alcove

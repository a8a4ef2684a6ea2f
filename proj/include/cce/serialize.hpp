#ifndef CCE_SERIALIZE_HPP
#define CCE_SERIALIZE_HPP

#include "cce/closure.hpp"
#include "cce/pbw.hpp"
#include "cce/superint.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace cce {

using Json = nlohmann::ordered_json;

inline Json roots_json(const LieAlgebra& g)
{
    const RootSystem& rs = g.roots;
    Json j;
    j["type"] = std::string(1, family_letter(g.type.family));
    j["rank"] = g.rank();
    j["dim"] = g.dim();
    j["cartan_basis"] = g.cartan_basis == CartanBasis::Coroot ? "coroot" : "orthonormal";
    j["roots"] = rs.roots;
    j["positive"] = rs.positive;
    j["simple"] = rs.simple;
    j["cartan_matrix"] = rs.cartan_matrix;
    j["weights"] = rs.weights;
    Json names = Json::array();
    for (int b = 0; b < g.dim(); ++b)
        names.push_back(coordinate_name(g, b));
    j["basis"] = names;
    Json st = Json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int k = i + 1; k < g.dim(); ++k)
            for (const auto& [l, c] : g.sc.bracket(i, k))
                st.push_back({{"i", i}, {"j", k}, {"k", l}, {"c", to_string(c)}});
    j["structure"] = st;
    return j;
}

inline Json catalog_json(const GeneratorSet& gs)
{
    const GeneratorCatalog& cat = gs.catalog();
    const RootSystem& rs = gs.algebra().roots;
    Json j;
    j["type"] = std::string(1, family_letter(cat.type.family));
    j["rank"] = cat.rank;
    Json cartan = Json::array();
    for (int i = 0; i < cat.rank; ++i)
        cartan.push_back(gs.at(i).name);
    j["cartan"] = cartan;
    Json layers = Json::object();
    Json counts = Json::object();
    for (const auto& [h, layer] : cat.layers) {
        Json arr = Json::array();
        for (const auto& m : layer) {
            Json roots = Json::array();
            for (int r : m)
                roots.push_back(rs.roots[r]);
            arr.push_back({{"roots", roots}, {"name", generator_name(rs, m)}});
        }
        layers[std::to_string(h)] = arr;
        counts[std::to_string(h)] = layer.size();
    }
    j["layers"] = layers;
    j["counts"] = counts;
    j["total"] = cat.total();
    j["zeta"] = cat.zeta;
    j["truncated"] = cat.truncated;
    return j;
}

inline Json expression_json(const GeneratorExpression& e, const GeneratorSet& gs)
{
    Json arr = Json::array();
    for (const auto& [ids, c] : e) {
        Json names = Json::array();
        for (int id : ids)
            names.push_back(gs.at(id).name);
        arr.push_back({{"gens", names}, {"c", to_string(c)}});
    }
    return arr;
}

inline Json brackets_json(const BracketTable& t, const GeneratorSet& gs)
{
    Json j;
    j["type"] = t.type.name();
    j["degree"] = t.degree;
    j["degree_including_cartan"] = t.degree_all;
    j["degree_exhaustive"] = t.degree_exhaustive;
    Json entries = Json::object();
    for (const auto& e : t.entries)
        entries[gs.at(e.a).name + " | " + gs.at(e.b).name] = expression_json(e.expr, gs);
    j["entries"] = entries;
    return j;
}

inline Json certificate_json(const Certificate& c)
{
    Json j;
    j["hamiltonian"] = c.hamiltonian;
    j["integrals"] = c.integrals;
    j["rank"] = c.rank;
    j["bound"] = c.bound;
    j["commute"] = "all-zero";
    j["rank_excluding_hamiltonian"] = c.rank_excluding_hamiltonian;
    j["r"] = c.r;
    j["r_bound"] = c.r_bound;
    j["bound_ok"] = c.bound_ok;
    j["mutually_commuting"] = c.mutually_commuting;
    return j;
}

inline Json polynomial_json(const Polynomial& p)
{
    Json arr = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json exps = Json::object();
        for (const auto& [v, k] : it->first.entries())
            exps[std::to_string(v)] = k;
        arr.push_back({{"exponents", exps}, {"c", to_string(it->second)}});
    }
    return arr;
}

inline std::string root_string(const Root& v)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k];
    os << "]";
    return os.str();
}

} // namespace cce

#endif

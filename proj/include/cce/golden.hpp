#ifndef CCE_GOLDEN_HPP
#define CCE_GOLDEN_HPP

#include "cce/golden_data.hpp"
#include "cce/superint.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cce::golden {

inline const nlohmann::json& data()
{
    static const nlohmann::json j = nlohmann::json::parse(detail_golden_json);
    return j;
}

/// Published layer counts by degree, if tabulated for this type.
inline std::optional<std::map<int, int>> layer_counts(const AlgebraType& t)
{
    const auto& l = data().at("layers");
    if (!l.contains(t.name()))
        return std::nullopt;
    std::map<int, int> out;
    for (const auto& [k, v] : l.at(t.name()).items())
        out[std::stoi(k)] = v.get<int>();
    return out;
}

inline std::optional<int> lookup_int(const char* table, const AlgebraType& t)
{
    const auto& l = data().at(table);
    if (!l.contains(t.name()))
        return std::nullopt;
    return l.at(t.name()).get<int>();
}

inline std::optional<int> total(const AlgebraType& t) { return lookup_int("totals", t); }
inline std::optional<int> zeta(const AlgebraType& t) { return lookup_int("zeta", t); }
inline std::optional<int> degree(const AlgebraType& t) { return lookup_int("degree", t); }
inline std::optional<int> independence_bound(const AlgebraType& t) { return lookup_int("independence_bound", t); }

inline std::vector<std::string> d3_independent_set()
{
    return data().at("D3_independent_set").get<std::vector<std::string>>();
}

inline Relation relation_from_json(const nlohmann::json& r)
{
    return {r.at("label").get<std::string>(), r.at("lhs").get<std::vector<std::string>>(),
            r.at("rhs").get<std::vector<std::string>>()};
}

inline std::vector<Relation> d3_relations()
{
    std::vector<Relation> out;
    for (const auto& r : data().at("D3_relations"))
        out.push_back(relation_from_json(r));
    return out;
}

inline Relation d3_relation_as_printed() { return relation_from_json(data().at("D3_relation_as_printed")); }

} // namespace cce::golden

#endif

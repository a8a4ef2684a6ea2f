#ifndef CCE_NAMING_HPP
#define CCE_NAMING_HPP

#include "cce/lie_algebra.hpp"

#include <map>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cce {

/// Index token of a root: "12-", "12+", "12h+", "1", "1h".
inline std::string root_token(const Root& v)
{
    std::vector<std::pair<int, int>> nz;
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (v[k] != 0)
            nz.emplace_back(k + 1, v[k]);
    if (nz.size() == 2) {
        auto [i, a] = nz[0];
        auto [j, b] = nz[1];
        if (a > 0 && b < 0)
            return std::to_string(i) + std::to_string(j) + "-";
        if (a < 0 && b > 0)
            return std::to_string(j) + std::to_string(i) + "-";
        if (a > 0)
            return std::to_string(i) + std::to_string(j) + "+";
        return std::to_string(i) + std::to_string(j) + "h+";
    }
    if (nz.size() == 1)
        return std::to_string(nz[0].first) + (nz[0].second > 0 ? "" : "h");
    throw std::invalid_argument("root_token: not a root");
}

/// Coordinate names: "h1", "e12-", "e12+", "e12+h", "e1", "e1h".
inline std::string coordinate_name(const LieAlgebra& g, int b)
{
    if (g.is_cartan(b))
        return "h" + std::to_string(b + 1);
    std::string t = root_token(g.roots.roots.at(g.basis_to_root(b)));
    auto pos = t.find("h+");
    if (pos != std::string::npos)
        t = t.substr(0, pos) + "+h";
    return "e" + t;
}

inline std::function<std::string(int)> coordinate_namer(const LieAlgebra& g)
{
    return [&g](int b) { return coordinate_name(g, b); };
}

/// Generator name for a multiset of root indices: p_{perm;plus;axis}.
inline std::string generator_name(const RootSystem& rs, const std::vector<int>& roots)
{
    std::map<int, int> mult;
    for (int r : roots)
        ++mult[r];
    std::vector<std::string> perm, plus, axis;
    for (const auto& [r, k] : mult) {
        std::string t = root_token(rs.roots[r]);
        if (k > 1)
            t += "^" + std::to_string(k);
        char kind = t.find('-') != std::string::npos ? '-' : (t.find('+') != std::string::npos ? '+' : 'a');
        (kind == '-' ? perm : kind == '+' ? plus : axis).push_back(t);
    }
    std::string s;
    for (const auto* section : {&perm, &plus, &axis}) {
        if (section->empty())
            continue;
        if (!s.empty())
            s += ";";
        for (std::size_t k = 0; k < section->size(); ++k)
            s += (k ? "," : "") + (*section)[k];
    }
    return "p_{" + s + "}";
}

/// Parses a generator name into its root multiset (sorted). Cartan names return {-1 - i}.
inline std::vector<int> parse_generator_name(const RootSystem& rs, const std::string& name)
{
    static const std::regex cartan_re(R"(^h(\d+)$)");
    std::smatch m;
    if (std::regex_match(name, m, cartan_re)) {
        int i = std::stoi(m[1]) - 1;
        if (i < 0 || i >= rs.rank())
            throw std::invalid_argument("malformed name '" + name + "': Cartan index out of range");
        return {-1 - i};
    }
    if (name.size() < 4 || name.compare(0, 3, "p_{") != 0 || name.back() != '}')
        throw std::invalid_argument("malformed name '" + name + "'");
    std::string body = name.substr(3, name.size() - 4);
    static const std::regex pair_re(R"(^(\d)(\d)(h?)([-+])(h?)(?:\^(\d+))?$)");
    static const std::regex single_re(R"(^(\d)(h?)(?:\^(\d+))?$)");
    const int d = rs.type.ambient();
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t end = body.find_first_of(",;", start);
        if (end == std::string::npos)
            end = body.size();
        std::string tok = body.substr(start, end - start);
        start = end + 1;
        if (tok.empty())
            throw std::invalid_argument("malformed name '" + name + "': empty token");
        Root v(d, 0);
        int power = 1;
        auto idx = [&](const std::string& s) {
            int i = std::stoi(s) - 1;
            if (i < 0 || i >= d)
                throw std::invalid_argument("malformed name '" + name + "': index out of range in '" + tok + "'");
            return i;
        };
        if (std::regex_match(tok, m, pair_re)) {
            int i = idx(m[1]), j = idx(m[2]);
            bool hat = m[3].length() || m[5].length();
            if (i == j)
                throw std::invalid_argument("malformed name '" + name + "': repeated index in '" + tok + "'");
            if (m[4] == "-") {
                if (hat)
                    throw std::invalid_argument("malformed name '" + name + "': hat on '-' token");
                v[i] = 1;
                v[j] = -1;
            } else {
                v[i] = hat ? -1 : 1;
                v[j] = hat ? -1 : 1;
            }
            if (m[6].length())
                power = std::stoi(m[6]);
        } else if (std::regex_match(tok, m, single_re)) {
            int i = idx(m[1]);
            int c = rs.type.family == Family::C ? 2 : 1;
            v[i] = m[2].length() ? -c : c;
            if (m[3].length())
                power = std::stoi(m[3]);
        } else {
            throw std::invalid_argument("malformed name '" + name + "': bad token '" + tok + "'");
        }
        int r = rs.index_of(v);
        if (r < 0)
            throw std::invalid_argument("malformed name '" + name + "': '" + tok + "' is not a root of " +
                                        rs.type.name());
        if (power < 1)
            throw std::invalid_argument("malformed name '" + name + "': bad exponent");
        out.insert(out.end(), power, r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cce

#endif

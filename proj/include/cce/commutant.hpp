#ifndef CCE_COMMUTANT_HPP
#define CCE_COMMUTANT_HPP

#include "cce/lie_algebra.hpp"
#include "cce/naming.hpp"
#include "cce/parallel.hpp"
#include "cce/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cce {

/// Sorted root indices, one per factor.
using RootMultiset = std::vector<int>;

/// Root sums packed into 8-bit biased lanes, so that addition is integer addition.
class PackedRoots {
public:
    explicit PackedRoots(const RootSystem& rs) : dim_(rs.type.ambient())
    {
        if (dim_ > 8)
            throw std::invalid_argument("root space dimension above 8 is not supported");
        bias_ = 0;
        for (int k = 0; k < dim_; ++k)
            bias_ |= std::uint64_t{128} << (8 * k);
        for (const Root& v : rs.roots) {
            keys_.push_back(pack(v));
            l1_.push_back(0);
            for (int c : v)
                l1_.back() += std::abs(c);
            if (l1_.back() > max_l1_)
                max_l1_ = l1_.back();
        }
        for (std::size_t r = 0; r < keys_.size(); ++r)
            index_[keys_[r]] = static_cast<int>(r);
    }

    std::uint64_t pack(const Root& v) const
    {
        std::uint64_t k = 0;
        for (int i = 0; i < dim_; ++i)
            k |= static_cast<std::uint64_t>(v[i] + 128) << (8 * i);
        return k;
    }

    std::uint64_t key(int r) const { return keys_[r]; }
    std::uint64_t zero() const { return bias_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a + b - bias_; }
    std::uint64_t negate(std::uint64_t a) const { return 2 * bias_ - a; }
    int l1(int r) const { return l1_[r]; }
    int max_l1() const { return max_l1_; }

    int l1_of(std::uint64_t a) const
    {
        int s = 0;
        for (int i = 0; i < dim_; ++i)
            s += std::abs(static_cast<int>((a >> (8 * i)) & 0xff) - 128);
        return s;
    }

    int root_of(std::uint64_t a) const
    {
        auto it = index_.find(a);
        return it == index_.end() ? -1 : it->second;
    }

private:
    int dim_;
    std::uint64_t bias_;
    int max_l1_ = 0;
    std::vector<std::uint64_t> keys_;
    std::vector<int> l1_;
    std::unordered_map<std::uint64_t, int> index_;
};

namespace detail {

/// Nonempty subset sums after appending root key r to a set with sums s (sorted, deduplicated).
inline std::vector<std::uint64_t> extend_sums(const PackedRoots& pk, const std::vector<std::uint64_t>& s,
                                              std::uint64_t r)
{
    std::vector<std::uint64_t> shifted;
    shifted.reserve(s.size() + 1);
    bool placed = false;
    for (std::uint64_t x : s) {
        std::uint64_t y = pk.add(x, r);
        if (!placed && r < y) {
            shifted.push_back(r);
            placed = true;
        }
        shifted.push_back(y);
    }
    if (!placed)
        shifted.push_back(r);
    std::vector<std::uint64_t> out;
    out.reserve(s.size() + shifted.size());
    std::set_union(s.begin(), s.end(), shifted.begin(), shifted.end(), std::back_inserter(out));
    return out;
}

struct LayerSearch {
    const PackedRoots& pk;
    int nroots;
    int h;
    std::vector<RootMultiset>* out;
    RootMultiset cur;

    void run(int depth, int min_idx, const std::vector<std::uint64_t>& sums, std::uint64_t total)
    {
        if (depth == h - 1) {
            int r = pk.root_of(pk.negate(total));
            if (r >= min_idx) {
                cur.push_back(r);
                out->push_back(cur);
                cur.pop_back();
            }
            return;
        }
        const int remaining_after = h - depth - 1;
        for (int r = min_idx; r < nroots; ++r) {
            std::uint64_t kr = pk.key(r);
            if (std::binary_search(sums.begin(), sums.end(), pk.negate(kr)))
                continue;
            std::uint64_t nt = pk.add(total, kr);
            if (pk.l1_of(nt) > pk.max_l1() * remaining_after)
                continue;
            auto ns = extend_sums(pk, sums, kr);
            cur.push_back(r);
            run(depth + 1, r, ns, nt);
            cur.pop_back();
        }
    }
};

} // namespace detail

/// Indecomposable zero-sum multisets of h roots, in lexicographic order of sorted root indices.
inline std::vector<RootMultiset> enumerate_layer(const RootSystem& rs, int h)
{
    if (h < 2)
        throw std::invalid_argument("enumerate_layer: degree must be >= 2");
    PackedRoots pk(rs);
    const int nroots = rs.size();
    std::vector<std::vector<RootMultiset>> parts(nroots);
    parallel_for(nroots, [&](std::size_t first) {
        detail::LayerSearch s{pk, nroots, h, &parts[first], {}};
        int r = static_cast<int>(first);
        std::uint64_t kr = pk.key(r);
        if (pk.l1_of(kr) > pk.max_l1() * (h - 1))
            return;
        s.cur.push_back(r);
        s.run(1, r, {kr}, kr);
    });
    std::vector<RootMultiset> out;
    for (auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

inline bool has_zero_sum(const RootSystem& rs, const RootMultiset& m)
{
    Root s(rs.type.ambient(), 0);
    for (int r : m)
        s = s + rs.roots.at(r);
    return is_zero(s);
}

/// True iff no proper nonempty sub-multiset sums to zero; requires a zero total.
inline bool is_indecomposable(const RootSystem& rs, RootMultiset m)
{
    if (m.empty())
        throw std::invalid_argument("is_indecomposable: empty monomial");
    for (int r : m)
        if (r < 0 || r >= rs.size())
            throw std::out_of_range("is_indecomposable: root index out of range");
    if (!has_zero_sum(rs, m))
        throw std::invalid_argument("is_indecomposable: monomial does not have zero weight");
    std::sort(m.begin(), m.end());
    PackedRoots pk(rs);
    std::vector<std::uint64_t> sums;
    for (std::size_t k = 0; k + 1 < m.size(); ++k) {
        std::uint64_t kr = pk.key(m[k]);
        if (std::binary_search(sums.begin(), sums.end(), pk.negate(kr)))
            return false;
        sums = detail::extend_sums(pk, sums, kr);
    }
    return true;
}

struct CatalogOptions {
    std::optional<int> max_degree;
    /// Scan every degree up to 2|positive roots| instead of stopping at the first empty layer.
    bool exhaustive = false;
};

struct GeneratorCatalog {
    AlgebraType type;
    int rank = 0;
    std::map<int, std::vector<RootMultiset>> layers;
    int zeta = 0;
    bool truncated = false;
    int scanned_to = 0;

    std::size_t total() const
    {
        std::size_t t = static_cast<std::size_t>(rank);
        for (const auto& [h, l] : layers)
            t += l.size();
        return t;
    }
};

inline GeneratorCatalog build_catalog(const RootSystem& rs, CatalogOptions opt = {})
{
    if (opt.max_degree && *opt.max_degree < 2)
        throw std::invalid_argument("build_catalog: max_degree must be >= 2");
    GeneratorCatalog cat;
    cat.type = rs.type;
    cat.rank = rs.rank();
    const int hard = 2 * rs.positive_count();
    for (int h = 2; h <= hard; ++h) {
        if (opt.max_degree && h > *opt.max_degree) {
            cat.truncated = true;
            break;
        }
        auto layer = enumerate_layer(rs, h);
        cat.scanned_to = h;
        if (layer.empty()) {
            if (!opt.exhaustive && h > rs.rank())
                break;
            continue;
        }
        cat.zeta = h;
        cat.layers[h] = std::move(layer);
    }
    return cat;
}

inline int max_indecomposable_degree(const AlgebraType& type, bool exhaustive = false)
{
    LieAlgebra g = build_algebra(type);
    CatalogOptions opt;
    opt.exhaustive = exhaustive;
    return build_catalog(g.roots, opt).zeta;
}

/// Polynomial of a root multiset over the basis coordinates.
inline Polynomial monomial_polynomial(const LieAlgebra& g, const RootMultiset& m)
{
    std::vector<int> vars;
    for (int r : m)
        vars.push_back(g.root_to_basis(r));
    return Polynomial(Monomial::from_factors(vars));
}

/// Members of the class [e_ij^-]: chains i -> l_1 -> ... -> j through distinct intermediates.
inline std::vector<RootMultiset> expand_class(const RootSystem& rs, int i, int j)
{
    const int d = rs.type.ambient();
    if (i < 1 || j < 1 || i > d || j > d || i == j)
        throw std::invalid_argument("expand_class: invalid endpoints");
    auto perm_root = [&](int a, int b) {
        Root v(d, 0);
        v[a - 1] = 1;
        v[b - 1] = -1;
        return rs.index_of(v);
    };
    std::vector<RootMultiset> out;
    std::vector<int> path{i};
    std::vector<bool> used(d + 1, false);
    used[i] = used[j] = true;
    auto rec = [&](auto&& self) -> void {
        RootMultiset m;
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            m.push_back(perm_root(path[k], path[k + 1]));
        m.push_back(perm_root(path.back(), j));
        std::sort(m.begin(), m.end());
        out.push_back(m);
        for (int l = 1; l <= d; ++l) {
            if (used[l])
                continue;
            used[l] = true;
            path.push_back(l);
            self(self);
            path.pop_back();
            used[l] = false;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end(), [](const RootMultiset& a, const RootMultiset& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

enum class RootKind { Permutation, Pair, Axis };

inline RootKind root_kind(const Root& v)
{
    int nz = 0, s = 0;
    for (int c : v)
        if (c != 0) {
            ++nz;
            s += c;
        }
    if (nz == 2)
        return s == 0 ? RootKind::Permutation : RootKind::Pair;
    return RootKind::Axis;
}

struct Classification {
    char tag;         ///< 'a'..'e'
    int permutation;  ///< factors e_i - e_j
    int pair;         ///< factors +-(e_i + e_j)
    int axis;         ///< factors +-e_i (B) or +-2e_i (C)
};

/// Factor profile: (a) one kind only, (b) perm+pair, (c) perm+axis, (d) pair+axis, (e) all three.
inline Classification classify(const RootSystem& rs, const RootMultiset& m)
{
    if (m.empty() || !has_zero_sum(rs, m))
        throw std::invalid_argument("classify: not a zero-weight monomial");
    Classification c{'?', 0, 0, 0};
    for (int r : m) {
        switch (root_kind(rs.roots.at(r))) {
        case RootKind::Permutation: ++c.permutation; break;
        case RootKind::Pair: ++c.pair; break;
        case RootKind::Axis: ++c.axis; break;
        }
    }
    const bool g = c.permutation > 0, m1 = c.pair > 0, m2 = c.axis > 0;
    const int kinds = g + m1 + m2;
    if (kinds == 1)
        c.tag = 'a';
    else if (kinds == 3)
        c.tag = 'e';
    else if (g && m1)
        c.tag = 'b';
    else if (g && m2)
        c.tag = 'c';
    else if (m1 && m2)
        c.tag = 'd';
    else
        throw std::logic_error("classify: monomial fits no case");
    return c;
}

/// Root index of -r for each r, used to apply the hat involution to a multiset.
inline RootMultiset hat(const RootSystem& rs, const RootMultiset& m)
{
    RootMultiset out;
    for (int r : m)
        out.push_back(rs.negative_of(r));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cce

#endif

#ifndef CCE_CLOSURE_HPP
#define CCE_CLOSURE_HPP

#include "cce/commutant.hpp"
#include "cce/naming.hpp"
#include "cce/parallel.hpp"
#include "cce/poisson.hpp"

#include <array>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cce {

struct Generator {
    std::string name;
    int degree = 0;
    int cartan = -1;    ///< Cartan index for degree-1 generators, else -1
    RootMultiset roots; ///< empty for Cartan generators
    Monomial monomial;  ///< over basis coordinates
};

/// Catalog with stable ids: Cartan coordinates first, then layers in order.
class GeneratorSet {
public:
    GeneratorSet(const LieAlgebra& g, const GeneratorCatalog& cat) : g_(&g), cat_(&cat)
    {
        if (!(cat.type == g.type))
            throw std::invalid_argument("catalog and algebra types differ");
        for (int i = 0; i < g.rank(); ++i)
            gens_.push_back({"h" + std::to_string(i + 1), 1, i, {}, Monomial::variable(i)});
        for (const auto& [h, layer] : cat.layers)
            for (const auto& m : layer) {
                std::vector<int> vars;
                for (int r : m)
                    vars.push_back(g.root_to_basis(r));
                lookup_[m] = static_cast<int>(gens_.size());
                gens_.push_back({generator_name(g.roots, m), h, -1, m, Monomial::from_factors(vars)});
            }
        for (std::size_t id = 0; id < gens_.size(); ++id)
            by_name_[gens_[id].name] = static_cast<int>(id);
    }

    const LieAlgebra& algebra() const { return *g_; }
    const GeneratorCatalog& catalog() const { return *cat_; }
    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& at(int id) const { return gens_.at(id); }
    const std::vector<Generator>& all() const { return gens_; }
    Polynomial polynomial(int id) const { return Polynomial(gens_.at(id).monomial); }

    int find(const RootMultiset& m) const
    {
        auto it = lookup_.find(m);
        return it == lookup_.end() ? -1 : it->second;
    }

    int find_name(const std::string& name) const
    {
        auto it = by_name_.find(name);
        if (it != by_name_.end())
            return it->second;
        auto parsed = parse_generator_name(g_->roots, name);
        if (parsed.size() == 1 && parsed[0] < 0)
            return -1 - parsed[0];
        return find(parsed);
    }

    /// Generator id of the hatted generator (Cartan generators map to themselves).
    int hat(int id) const
    {
        const auto& gen = gens_.at(id);
        if (gen.cartan >= 0)
            return id;
        int h = find(cce::hat(g_->roots, gen.roots));
        if (h < 0)
            throw std::logic_error("catalog is not closed under the hat involution: " + gen.name);
        return h;
    }

private:
    const LieAlgebra* g_;
    const GeneratorCatalog* cat_;
    std::vector<Generator> gens_;
    std::map<RootMultiset, int> lookup_;
    std::map<std::string, int> by_name_;
};

/// Sum of coefficient * product of generators, keyed by sorted generator-id multisets.
using GeneratorExpression = std::map<std::vector<int>, Rational>;

inline Polynomial expand(const GeneratorExpression& e, const GeneratorSet& gs)
{
    Polynomial p;
    for (const auto& [ids, c] : e) {
        Monomial m;
        for (int id : ids)
            m = m * gs.at(id).monomial;
        p.add_term(m, c);
    }
    return p;
}

inline std::string expression_to_string(const GeneratorExpression& e, const GeneratorSet& gs)
{
    if (e.empty())
        return "0";
    std::string s;
    bool first = true;
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        const auto& [ids, c] = *it;
        Rational mag = abs(c);
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string prod;
        for (int id : ids)
            prod += (prod.empty() ? "" : "*") + gs.at(id).name;
        if (prod.empty())
            s += to_display(mag);
        else
            s += (mag == 1 ? "" : to_display(mag) + "*") + prod;
    }
    return s;
}

class UnfactorableError : public std::runtime_error {
public:
    UnfactorableError(const std::string& what, RootMultiset rest) : std::runtime_error(what), rest(std::move(rest)) {}
    RootMultiset rest;
};

namespace detail {

/// Calls fn(sub) for every sub-multiset of m of size k in lexicographic order; stops when fn returns true.
inline bool for_each_submultiset(const RootMultiset& m, std::size_t k,
                                 const std::function<bool(const RootMultiset&)>& fn)
{
    RootMultiset cur;
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (cur.size() == k)
            return fn(cur);
        for (std::size_t i = pos; i < m.size(); ++i) {
            if (i > pos && m[i] == m[i - 1])
                continue;
            if (m.size() - i < k - cur.size())
                return false;
            cur.push_back(m[i]);
            if (rec(i + 1))
                return true;
            cur.pop_back();
        }
        return false;
    };
    return rec(0);
}

inline RootMultiset multiset_difference(const RootMultiset& a, const RootMultiset& b)
{
    RootMultiset out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

/// Canonical factorization of a zero-sum root multiset: smallest zero-sum factor first, lexicographic among equals.
inline std::vector<int> factor_roots(const GeneratorSet& gs, RootMultiset m)
{
    std::sort(m.begin(), m.end());
    const RootSystem& rs = gs.algebra().roots;
    std::vector<int> ids;
    while (!m.empty()) {
        RootMultiset piece;
        for (std::size_t k = 2; k <= m.size() / 2 && piece.empty(); ++k)
            detail::for_each_submultiset(m, k, [&](const RootMultiset& s) {
                if (has_zero_sum(rs, s)) {
                    piece = s;
                    return true;
                }
                return false;
            });
        if (piece.empty())
            piece = m;
        int id = gs.find(piece);
        if (id < 0)
            throw UnfactorableError("indecomposable factor " + generator_name(rs, piece) + " is not in the catalog",
                                    piece);
        ids.push_back(id);
        m = detail::multiset_difference(m, piece);
    }
    return ids;
}

/// Largest number of indecomposable factors over all factorizations of a zero-sum multiset.
inline int max_factor_count(const GeneratorSet& gs, const RootMultiset& m, std::map<RootMultiset, int>& memo)
{
    if (m.empty())
        return 0;
    if (auto it = memo.find(m); it != memo.end())
        return it->second;
    const RootSystem& rs = gs.algebra().roots;
    int best = -1;
    RootMultiset rest(m.begin() + 1, m.end());
    for (std::size_t k = 1; k <= rest.size(); ++k)
        detail::for_each_submultiset(rest, k, [&](const RootMultiset& s) {
            RootMultiset piece{m[0]};
            piece.insert(piece.end(), s.begin(), s.end());
            std::sort(piece.begin(), piece.end());
            if (has_zero_sum(rs, piece) && gs.find(piece) >= 0) {
                int sub = max_factor_count(gs, detail::multiset_difference(m, piece), memo);
                if (sub >= 0)
                    best = std::max(best, 1 + sub);
            }
            return false;
        });
    memo[m] = best;
    return best;
}

inline GeneratorExpression rewrite_in_generators(const Polynomial& p, const GeneratorSet& gs)
{
    const LieAlgebra& g = gs.algebra();
    GeneratorExpression out;
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> ids;
        RootMultiset roots;
        for (const auto& [v, k] : mono.entries()) {
            if (v >= g.dim())
                throw std::out_of_range("coordinate index out of range");
            for (int e = 0; e < k; ++e) {
                if (g.is_cartan(v))
                    ids.push_back(v);
                else
                    roots.push_back(g.basis_to_root(v));
            }
        }
        if (!has_zero_sum(g.roots, roots))
            throw std::invalid_argument("rewrite_in_generators: input is not Cartan-invariant");
        auto root_ids = factor_roots(gs, roots);
        ids.insert(ids.end(), root_ids.begin(), root_ids.end());
        std::sort(ids.begin(), ids.end());
        Rational& slot = out[ids];
        slot += c;
        if (slot == 0)
            out.erase(ids);
    }
    if (!(expand(out, gs) == p))
        throw std::logic_error("rewrite_in_generators: nonzero remainder");
    return out;
}

struct BracketEntry {
    int a = 0, b = 0;
    GeneratorExpression expr;
    int poly_degree = -1;     ///< -1 when the bracket vanishes
    int noncartan_factors = 0; ///< max non-Cartan factor count over terms, canonical form
    int all_factors = 0;       ///< max factor count including Cartan generators, canonical form
    int exhaustive_noncartan = 0; ///< max non-Cartan factor count over all factorizations
};

struct BracketTable {
    AlgebraType type;
    std::vector<BracketEntry> entries; ///< pairs a < b in lexicographic order
    int size = 0;
    int degree = 0;            ///< canonical non-Cartan factor maximum
    int degree_all = 0;        ///< canonical maximum including Cartan factors
    int degree_exhaustive = 0; ///< exhaustive non-Cartan factor maximum

    const BracketEntry& entry(int a, int b) const
    {
        if (a == b || a < 0 || b < 0 || a >= size || b >= size)
            throw std::out_of_range("bracket table index");
        int lo = std::min(a, b), hi = std::max(a, b);
        std::size_t idx = static_cast<std::size_t>(lo) * size - static_cast<std::size_t>(lo) * (lo + 1) / 2 + (hi - lo - 1);
        return entries.at(idx);
    }

    /// {p_a, p_b} as an expression, with the sign for a > b.
    GeneratorExpression bracket(int a, int b) const
    {
        if (a == b)
            return {};
        GeneratorExpression e = entry(a, b).expr;
        if (a > b)
            for (auto& [k, c] : e)
                c = -c;
        return e;
    }
};

class ClosureError : public std::runtime_error {
public:
    ClosureError(const std::string& what, int a, int b) : std::runtime_error(what), a(a), b(b) {}
    int a, b;
};

inline BracketEntry close_pair(const GeneratorSet& gs, int a, int b)
{
    const auto& sc = gs.algebra().sc;
    BracketEntry e;
    e.a = a;
    e.b = b;
    Polynomial br = bracket_monomials(gs.at(a).monomial, gs.at(b).monomial, sc);
    try {
        e.expr = rewrite_in_generators(br, gs);
    } catch (const std::exception& ex) {
        throw ClosureError("closure failed for {" + gs.at(a).name + ", " + gs.at(b).name + "}: " + ex.what() +
                               "; residue " + br.to_string(coordinate_namer(gs.algebra())),
                           a, b);
    }
    e.poly_degree = br.degree();
    if (!br.is_zero() && (!br.is_homogeneous() || e.poly_degree != gs.at(a).degree + gs.at(b).degree - 1))
        throw ClosureError("bracket of {" + gs.at(a).name + ", " + gs.at(b).name + "} breaks the degree grading", a, b);
    std::map<RootMultiset, int> memo;
    for (const auto& [ids, c] : e.expr) {
        int nc = 0;
        RootMultiset roots;
        for (int id : ids)
            if (gs.at(id).cartan < 0) {
                ++nc;
                roots.insert(roots.end(), gs.at(id).roots.begin(), gs.at(id).roots.end());
            }
        std::sort(roots.begin(), roots.end());
        e.noncartan_factors = std::max(e.noncartan_factors, nc);
        e.all_factors = std::max(e.all_factors, static_cast<int>(ids.size()));
        e.exhaustive_noncartan = std::max(e.exhaustive_noncartan, max_factor_count(gs, roots, memo));
    }
    return e;
}

/// Full bracket table over all generator pairs, verified with zero remainder.
inline BracketTable close_catalog(const GeneratorSet& gs)
{
    if (gs.catalog().truncated)
        throw std::invalid_argument("close_catalog: catalog was truncated by max_degree");
    BracketTable t;
    t.type = gs.algebra().type;
    t.size = gs.size();
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < t.size; ++a)
        for (int b = a + 1; b < t.size; ++b)
            pairs.emplace_back(a, b);
    t.entries.resize(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) { t.entries[k] = close_pair(gs, pairs[k].first, pairs[k].second); });
    for (const auto& e : t.entries) {
        t.degree = std::max(t.degree, e.noncartan_factors);
        t.degree_all = std::max(t.degree_all, e.all_factors);
        t.degree_exhaustive = std::max(t.degree_exhaustive, e.exhaustive_noncartan);
    }
    return t;
}

/// Polynomial of {p_a, p_b} read from the table.
inline Polynomial table_bracket(const BracketTable& t, const GeneratorSet& gs, int a, int b)
{
    return expand(t.bracket(a, b), gs);
}

struct JacobiReport {
    std::vector<std::array<int, 3>> triples;
    bool pass = true;
};

class JacobiError : public std::runtime_error {
public:
    JacobiError(const std::string& what, std::array<int, 3> triple) : std::runtime_error(what), triple(triple) {}
    std::array<int, 3> triple;
};

inline Polynomial jacobiator(const BracketTable& t, const GeneratorSet& gs, int a, int b, int c)
{
    const auto& sc = gs.algebra().sc;
    Polynomial j = bracket_fast(table_bracket(t, gs, a, b), gs.polynomial(c), sc);
    j += bracket_fast(table_bracket(t, gs, b, c), gs.polynomial(a), sc);
    j += bracket_fast(table_bracket(t, gs, c, a), gs.polynomial(b), sc);
    return j;
}

/// samples < 0 checks every unordered triple with repetition.
inline JacobiReport jacobi_spot_check(const BracketTable& t, const GeneratorSet& gs, int samples, std::uint64_t seed)
{
    JacobiReport rep;
    if (samples < 0) {
        for (int a = 0; a < t.size; ++a)
            for (int b = a; b < t.size; ++b)
                for (int c = b; c < t.size; ++c)
                    rep.triples.push_back({a, b, c});
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, t.size - 1);
        for (int s = 0; s < samples; ++s)
            rep.triples.push_back({pick(rng), pick(rng), pick(rng)});
    }
    parallel_for(rep.triples.size(), [&](std::size_t k) {
        auto [a, b, c] = rep.triples[k];
        if (!jacobiator(t, gs, a, b, c).is_zero())
            throw JacobiError("Jacobi identity fails for (" + gs.at(a).name + ", " + gs.at(b).name + ", " +
                                  gs.at(c).name + ")",
                              rep.triples[k]);
    });
    return rep;
}

/// Image of a polynomial under x_b -> -x_{hat b}, the coordinate form of X -> -X^T.
inline Polynomial chevalley_involution(const LieAlgebra& g, const Polynomial& p)
{
    std::vector<Polynomial> images;
    for (int b = 0; b < g.dim(); ++b) {
        int target = g.is_cartan(b) ? b : g.root_to_basis(g.roots.negative_of(g.basis_to_root(b)));
        images.push_back(-Polynomial::variable(target));
    }
    return p.substitute(images);
}

/// Checks {p_hat(a), p_hat(b)} = (-1)^(deg a + deg b) theta({p_a, p_b}) on every table entry.
inline bool verify_hat_symmetry(const BracketTable& t, const GeneratorSet& gs)
{
    const LieAlgebra& g = gs.algebra();
    std::vector<char> ok(t.entries.size(), 1);
    parallel_for(t.entries.size(), [&](std::size_t k) {
        const auto& e = t.entries[k];
        int ha = gs.hat(e.a), hb = gs.hat(e.b);
        Polynomial lhs = ha == hb ? Polynomial() : table_bracket(t, gs, ha, hb);
        Polynomial rhs = chevalley_involution(g, expand(e.expr, gs));
        if ((gs.at(e.a).degree + gs.at(e.b).degree) % 2)
            rhs = -rhs;
        ok[k] = lhs == rhs;
    });
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

/// Linear map on root coordinates, sup_ambient x sub_ambient integer matrix.
struct RootInjection {
    std::vector<std::vector<int>> matrix;

    Root apply(const Root& v) const
    {
        Root out(matrix.size(), 0);
        for (std::size_t i = 0; i < matrix.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                out[i] += matrix[i][j] * v[j];
        return out;
    }

    /// Identity on the first coordinates, zero padding above.
    static RootInjection padding(int sub_ambient, int sup_ambient)
    {
        RootInjection f;
        f.matrix.assign(sup_ambient, std::vector<int>(sub_ambient, 0));
        for (int i = 0; i < std::min(sub_ambient, sup_ambient); ++i)
            f.matrix[i][i] = 1;
        return f;
    }
};

struct EmbeddingReport {
    bool roots_ok = false;
    bool generators_ok = false;
    bool brackets_ok = false;
    bool ok() const { return roots_ok && generators_ok && brackets_ok; }
    std::vector<std::string> failures;
};

/// Checks that the root injection induces a Poisson map carrying sub generators to sup generators.
inline EmbeddingReport verify_embedding(const GeneratorSet& sub, const GeneratorSet& sup, const RootInjection& f)
{
    const LieAlgebra& gs = sub.algebra();
    const LieAlgebra& gp = sup.algebra();
    EmbeddingReport rep;
    const int P = gs.roots.size();
    std::vector<int> image(P);
    for (int r = 0; r < P; ++r) {
        Root v = f.apply(gs.roots.roots[r]);
        image[r] = gp.roots.index_of(v);
        if (image[r] < 0)
            throw std::invalid_argument("root injection: image of " + root_token(gs.roots.roots[r]) +
                                        " is not a root of " + gp.type.name());
    }
    for (int r = 0; r < P; ++r)
        for (int s = 0; s < P; ++s) {
            Root sum = gs.roots.roots[r] + gs.roots.roots[s];
            int rs = gs.roots.index_of(sum);
            Root isum = gp.roots.roots[image[r]] + gp.roots.roots[image[s]];
            bool ok = rs >= 0 ? isum == gp.roots.roots[image[rs]] : (is_zero(sum) ? is_zero(isum) : true);
            if (!ok || (image[r] == image[s] && r != s))
                throw std::invalid_argument("root injection is not sum-preserving or not injective");
        }
    rep.roots_ok = true;

    // Lie map on basis elements: root vectors go to root vectors, coroots through [E_a, E_-a].
    std::vector<Polynomial> phi(gs.dim());
    for (int r = 0; r < P; ++r)
        phi[gs.root_to_basis(r)] = Polynomial::variable(gp.root_to_basis(image[r]));
    const int n = gs.rank();
    Matrix a(n);
    std::vector<Polynomial> brackets(n);
    for (int i = 0; i < n; ++i) {
        int r = simple_root_index(gs.roots, i);
        int br = gs.root_to_basis(r), bn = gs.root_to_basis(gs.roots.negative_of(r));
        for (const auto& [k, c] : gs.sc.bracket(br, bn)) {
            if (!gs.is_cartan(k))
                throw std::logic_error("[E_a, E_-a] leaves the Cartan subalgebra");
            a(i, k) = c;
        }
        brackets[i] = bracket_fast(phi[br], phi[bn], gp.sc);
    }
    Matrix ainv = inverse(a);
    for (int k = 0; k < n; ++k) {
        Polynomial hk;
        for (int i = 0; i < n; ++i)
            hk += brackets[i] * ainv(k, i);
        phi[k] = hk;
    }
    for (int i = 0; i < gs.dim(); ++i)
        for (int j = i + 1; j < gs.dim(); ++j) {
            Polynomial lhs;
            for (const auto& [k, c] : gs.sc.bracket(i, j))
                lhs += phi[k] * c;
            if (!(lhs == bracket_fast(phi[i], phi[j], gp.sc))) {
                rep.failures.push_back("basis map is not a Lie homomorphism at (" + coordinate_name(gs, i) + ", " +
                                       coordinate_name(gs, j) + ")");
                return rep;
            }
        }

    std::vector<Polynomial> images(sub.size());
    rep.generators_ok = true;
    for (int id = 0; id < sub.size(); ++id) {
        const Generator& gen = sub.at(id);
        images[id] = sub.polynomial(id).substitute(phi);
        if (gen.cartan >= 0) {
            for (const auto& [m, c] : images[id].terms())
                if (m.degree() != 1 || !gp.is_cartan(m.entries()[0].first)) {
                    rep.generators_ok = false;
                    rep.failures.push_back(gen.name + " does not map into the Cartan span");
                }
            continue;
        }
        RootMultiset target;
        for (int r : gen.roots)
            target.push_back(image[r]);
        std::sort(target.begin(), target.end());
        int tid = sup.find(target);
        if (tid < 0 || !(images[id] == sup.polynomial(tid))) {
            rep.generators_ok = false;
            rep.failures.push_back(gen.name + " does not map to a generator of " + gp.type.name());
        }
    }

    std::vector<char> ok(static_cast<std::size_t>(sub.size()) * sub.size(), 1);
    parallel_for(sub.size(), [&](std::size_t a_) {
        int a = static_cast<int>(a_);
        for (int b = a + 1; b < sub.size(); ++b) {
            Polynomial lhs = bracket_monomials(sub.at(a).monomial, sub.at(b).monomial, gs.sc).substitute(phi);
            Polynomial rhs = bracket_fast(images[a], images[b], gp.sc);
            ok[a * sub.size() + b] = lhs == rhs;
        }
    });
    rep.brackets_ok = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    if (!rep.brackets_ok)
        rep.failures.push_back("brackets do not commute with the embedding");
    return rep;
}

} // namespace cce

#endif

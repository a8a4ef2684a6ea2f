#ifndef CCE_SUPERINT_HPP
#define CCE_SUPERINT_HPP

#include "cce/closure.hpp"
#include "cce/poisson.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cce {

/// Uniform rationals with numerators in [-10^4, 10^4] and denominators in [1, 100].
inline std::vector<Rational> random_point(int dim, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 100);
    std::vector<Rational> pt(dim);
    for (auto& x : pt) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return pt;
}

/// Generic rank of a matrix-valued function: max over samples, accepted once two samples attain it.
template <class RankAt>
int generic_rank(int dim, std::uint64_t seed, RankAt&& rank_at, int max_samples = 5)
{
    std::mt19937_64 rng(seed);
    int best = -1, hits = 0;
    for (int s = 0; s < max_samples; ++s) {
        int r = rank_at(random_point(dim, rng));
        if (r > best) {
            best = r;
            hits = 1;
        } else if (r == best) {
            ++hits;
        }
        if (hits >= 2)
            return best;
    }
    throw std::runtime_error("rank unstable across " + std::to_string(max_samples) + " random points");
}

/// N(g) = dim g - rank(C_{ji}^l x_l) with j over the Cartan rows.
inline int independence_bound(const LieAlgebra& g, std::uint64_t seed = 0)
{
    const int n = g.rank(), dim = g.dim();
    int r = generic_rank(dim, seed, [&](const std::vector<Rational>& pt) {
        Matrix m(n, dim);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < dim; ++i)
                for (const auto& [l, c] : g.sc.bracket(j, i))
                    m(j, i) += c * pt[l];
        return static_cast<int>(rank(m));
    });
    return dim - r;
}

struct IndependenceReport {
    int jacobian_rank = 0;
    int candidate_count = 0;
    std::vector<int> certified_subset; ///< positions into the input list
    int N_bound = 0;
};

namespace detail {

/// Incremental row echelon form; insert returns true when the row raises the rank.
class Echelon {
public:
    explicit Echelon(int cols) : cols_(cols) {}

    bool insert(std::vector<Rational> row)
    {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational& x = row[pivots_[k]];
            if (x == 0)
                continue;
            Rational f = x / rows_[k][pivots_[k]];
            for (int c = 0; c < cols_; ++c)
                if (rows_[k][c] != 0)
                    row[c] -= f * rows_[k][c];
        }
        for (int c = 0; c < cols_; ++c)
            if (row[c] != 0) {
                rows_.push_back(std::move(row));
                pivots_.push_back(c);
                return true;
            }
        return false;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

inline std::vector<Rational> gradient(const Polynomial& p, const std::vector<Rational>& pt)
{
    std::vector<Rational> row(pt.size());
    for (int v : p.variables())
        row[v] = p.derivative(v).evaluate(pt);
    return row;
}

} // namespace detail

/// Jacobian rank at generic rational points, with a greedy full-rank subset.
inline IndependenceReport functional_rank(const std::vector<Polynomial>& polys, const LieAlgebra& g,
                                          std::uint64_t seed = 0)
{
    if (polys.empty())
        throw std::invalid_argument("functional_rank: empty generator set");
    IndependenceReport rep;
    rep.candidate_count = static_cast<int>(polys.size());
    rep.N_bound = independence_bound(g, seed);
    std::vector<int> subset;
    rep.jacobian_rank = generic_rank(g.dim(), seed + 1, [&](const std::vector<Rational>& pt) {
        detail::Echelon ech(g.dim());
        std::vector<int> chosen;
        for (std::size_t k = 0; k < polys.size(); ++k)
            if (ech.insert(detail::gradient(polys[k], pt)))
                chosen.push_back(static_cast<int>(k));
        if (ech.rank() >= static_cast<int>(subset.size()))
            subset = chosen;
        return ech.rank();
    });
    rep.certified_subset = subset;
    return rep;
}

struct Relation {
    std::string label;
    std::vector<std::string> lhs; ///< product of named generators
    std::vector<std::string> rhs;
};

struct RelationResult {
    std::string label;
    bool holds = false;
    std::string residue;
};

inline Polynomial named_product(const GeneratorSet& gs, const std::vector<std::string>& names)
{
    Polynomial p(1);
    for (const auto& n : names) {
        int id = gs.find_name(n);
        if (id < 0)
            throw std::invalid_argument("malformed relation name '" + n + "': not a generator of " +
                                        gs.algebra().type.name());
        p = p * gs.polynomial(id);
    }
    return p;
}

inline std::vector<RelationResult> verify_dependencies(const std::vector<Relation>& relations, const GeneratorSet& gs)
{
    std::vector<RelationResult> out;
    for (const auto& rel : relations) {
        Polynomial diff = named_product(gs, rel.lhs) - named_product(gs, rel.rhs);
        out.push_back({rel.label, diff.is_zero(), diff.to_string(coordinate_namer(gs.algebra()))});
    }
    return out;
}

struct Integral {
    std::string name;
    Polynomial poly;
};

struct Certificate {
    std::string hamiltonian;
    std::vector<std::string> integrals;
    int rank = 0;                   ///< Jacobian rank of {H} and the integrals
    int rank_excluding_hamiltonian = 0;
    int bound = 0;                  ///< N(g)
    int r = 0;                      ///< independent integrals besides H
    int r_bound = 0;                ///< dim g - dim h - 1
    bool bound_ok = false;
    bool mutually_commuting = false;
};

class CertificationError : public std::runtime_error {
public:
    CertificationError(const std::string& what, std::vector<std::string> offending)
        : std::runtime_error(what), offending(std::move(offending))
    {
    }
    std::vector<std::string> offending;
};

/// H = sum a_i h_i + sum_{i<=j} b_ij h_i h_j with small positive integer coefficients drawn from the seed.
inline Polynomial cartan_hamiltonian(const LieAlgebra& g, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(1, 9);
    Polynomial h;
    for (int i = 0; i < g.rank(); ++i)
        h.add_term(Monomial::variable(i), coef(rng));
    for (int i = 0; i < g.rank(); ++i)
        for (int j = i; j < g.rank(); ++j)
            h.add_term(Monomial::variable(i) * Monomial::variable(j), coef(rng));
    return h;
}

inline Certificate certify_system(const Polynomial& H, const std::vector<Integral>& integrals, const LieAlgebra& g,
                                  std::uint64_t seed = 0)
{
    std::vector<std::string> bad;
    for (const auto& in : integrals)
        if (!poisson_bracket(H, in.poly, g.sc).is_zero())
            bad.push_back(in.name);
    if (!bad.empty()) {
        std::string msg = "integrals not commuting with the Hamiltonian:";
        for (const auto& b : bad)
            msg += " " + b;
        throw CertificationError(msg, bad);
    }
    Certificate c;
    c.hamiltonian = H.to_string(coordinate_namer(g));
    std::vector<Polynomial> polys{H};
    for (const auto& in : integrals) {
        c.integrals.push_back(in.name);
        polys.push_back(in.poly);
    }
    c.bound = independence_bound(g, seed);
    c.rank = functional_rank(polys, g, seed).jacobian_rank;
    c.rank_excluding_hamiltonian =
        integrals.empty() ? 0 : functional_rank(std::vector<Polynomial>(polys.begin() + 1, polys.end()), g, seed).jacobian_rank;
    c.r = c.rank - 1;
    c.r_bound = g.dim() - g.rank() - 1;
    c.bound_ok = c.r <= c.r_bound && c.rank <= c.bound;
    c.mutually_commuting = true;
    for (std::size_t a = 0; a < integrals.size() && c.mutually_commuting; ++a)
        for (std::size_t b = a + 1; b < integrals.size(); ++b)
            if (!bracket_fast(integrals[a].poly, integrals[b].poly, g.sc).is_zero()) {
                c.mutually_commuting = false;
                break;
            }
    return c;
}

} // namespace cce

#endif

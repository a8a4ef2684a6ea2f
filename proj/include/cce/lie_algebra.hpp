#ifndef CCE_LIE_ALGEBRA_HPP
#define CCE_LIE_ALGEBRA_HPP

#include "cce/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cce {

enum class Family { A, B, C, D };

inline char family_letter(Family f) { return "ABCD"[static_cast<int>(f)]; }

struct AlgebraType {
    Family family = Family::A;
    int rank = 1;

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

    void validate() const
    {
        if (rank < 1)
            throw std::invalid_argument(name() + ": rank must be >= 1");
        if (family == Family::D && rank < 2)
            throw std::invalid_argument(name() + ": type D requires rank >= 2");
        if (rank > 8)
            throw std::invalid_argument(name() + ": rank must be <= 8");
    }

    static AlgebraType parse(const std::string& family, int rank)
    {
        if (family.size() != 1)
            throw std::invalid_argument("unknown family '" + family + "'");
        AlgebraType t;
        switch (family[0]) {
        case 'A': case 'a': t.family = Family::A; break;
        case 'B': case 'b': t.family = Family::B; break;
        case 'C': case 'c': t.family = Family::C; break;
        case 'D': case 'd': t.family = Family::D; break;
        default: throw std::invalid_argument("unknown family '" + family + "'");
        }
        t.rank = rank;
        t.validate();
        return t;
    }

    /// Number of coordinates of a root vector: n+1 for A_n, n otherwise.
    int ambient() const { return family == Family::A ? rank + 1 : rank; }

    int matrix_size() const
    {
        switch (family) {
        case Family::A: return rank + 1;
        case Family::B: return 2 * rank + 1;
        default: return 2 * rank;
        }
    }

    int positive_count() const
    {
        const int n = rank;
        switch (family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        default: return n * (n - 1);
        }
    }

    int dim() const { return rank + 2 * positive_count(); }

    friend bool operator==(const AlgebraType&, const AlgebraType&) = default;
};

using Root = std::vector<int>;

inline Root operator-(const Root& r)
{
    Root s(r.size());
    for (std::size_t k = 0; k < r.size(); ++k)
        s[k] = -r[k];
    return s;
}

inline Root operator+(const Root& a, const Root& b)
{
    Root s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        s[k] = a[k] + b[k];
    return s;
}

inline bool is_zero(const Root& r)
{
    return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

enum class CartanBasis {
    Coroot,      ///< H_i = simple coroots (weights are Cartan integers)
    Orthonormal, ///< H_i = E_ii - E_{n+i,n+i}; B, C, D only
};

/// Roots are indexed 0..2P-1: positives first, then negatives in matching order.
struct RootSystem {
    AlgebraType type;
    std::vector<Root> positive;
    std::vector<Root> simple;
    std::vector<Root> roots;
    std::vector<int> height;                   ///< per root index, negative for negative roots
    std::vector<std::vector<int>> weights;     ///< weights[i][r] = roots[r](H_i)
    std::vector<std::vector<int>> cartan_matrix; ///< a_ij = alpha_j(H_i) for the simple coroots

    int positive_count() const { return static_cast<int>(positive.size()); }
    int size() const { return static_cast<int>(roots.size()); }
    int rank() const { return type.rank; }

    int negative_of(int r) const
    {
        const int P = positive_count();
        return r < P ? r + P : r - P;
    }

    bool is_positive(int r) const { return r < positive_count(); }

    /// Index of a root, or -1 if v is not a root.
    int index_of(const Root& v) const
    {
        auto it = lookup_.find(v);
        return it == lookup_.end() ? -1 : it->second;
    }

    int weight(int r, int i) const { return weights.at(i).at(r); }

    int weight(const Root& v, int i) const
    {
        int r = index_of(v);
        if (r < 0)
            throw std::invalid_argument("weight: not a root of " + type.name());
        return weight(r, i);
    }

    void build_lookup()
    {
        lookup_.clear();
        for (int r = 0; r < size(); ++r)
            lookup_[roots[r]] = r;
    }

private:
    std::map<Root, int> lookup_;
};

struct BasisElement {
    enum class Kind { Cartan, RootVector };
    Kind kind;
    int index; ///< Cartan index or root index
    Matrix matrix;
};

/// Sparse C_{ij}^k over the ordered basis.
class StructureConstants {
public:
    using Term = std::pair<int, Rational>;

    StructureConstants() = default;
    explicit StructureConstants(int dim) : dim_(dim), table_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }

    const std::vector<Term>& bracket(int i, int j) const
    {
        check(i);
        check(j);
        return table_[static_cast<std::size_t>(i) * dim_ + j];
    }

    Rational coefficient(int i, int j, int k) const
    {
        for (const auto& [kk, c] : bracket(i, j))
            if (kk == k)
                return c;
        return 0;
    }

    void set(int i, int j, std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        table_[static_cast<std::size_t>(i) * dim_ + j] = std::move(terms);
    }

    void check(int i) const
    {
        if (i < 0 || i >= dim_)
            throw std::out_of_range("coordinate index " + std::to_string(i) + " out of range [0," +
                                    std::to_string(dim_) + ")");
    }

private:
    int dim_ = 0;
    std::vector<std::vector<Term>> table_;
};

struct LieAlgebra {
    AlgebraType type;
    CartanBasis cartan_basis = CartanBasis::Coroot;
    RootSystem roots;
    std::vector<BasisElement> basis;
    StructureConstants sc;

    int rank() const { return type.rank; }
    int dim() const { return static_cast<int>(basis.size()); }
    int root_to_basis(int r) const { return rank() + r; }
    int basis_to_root(int b) const { return b < rank() ? -1 : b - rank(); }
    bool is_cartan(int b) const { return b < rank(); }
};

namespace detail {

inline Root unit_root(int dim, std::initializer_list<std::pair<int, int>> entries)
{
    Root r(dim, 0);
    for (auto [k, v] : entries)
        r[k] += v;
    return r;
}

inline std::vector<Root> positive_roots(const AlgebraType& t)
{
    const int n = t.rank;
    const int d = t.ambient();
    std::vector<Root> out;
    if (t.family == Family::A) {
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                out.push_back(unit_root(d, {{i, 1}, {j, -1}}));
        return out;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            out.push_back(unit_root(d, {{i, 1}, {j, -1}}));
            out.push_back(unit_root(d, {{i, 1}, {j, 1}}));
        }
    if (t.family == Family::B)
        for (int i = 0; i < n; ++i)
            out.push_back(unit_root(d, {{i, 1}}));
    if (t.family == Family::C)
        for (int i = 0; i < n; ++i)
            out.push_back(unit_root(d, {{i, 2}}));
    return out;
}

inline std::vector<Root> simple_roots(const AlgebraType& t)
{
    const int n = t.rank;
    const int d = t.ambient();
    std::vector<Root> out;
    const int chain = t.family == Family::A ? n : n - 1;
    for (int i = 0; i < chain; ++i)
        out.push_back(unit_root(d, {{i, 1}, {i + 1, -1}}));
    switch (t.family) {
    case Family::A: break;
    case Family::B: out.push_back(unit_root(d, {{n - 1, 1}})); break;
    case Family::C: out.push_back(unit_root(d, {{n - 1, 2}})); break;
    case Family::D: out.push_back(unit_root(d, {{n - 2, 1}, {n - 1, 1}})); break;
    }
    return out;
}

/// Expansion of v over the simple roots; throws if not integral.
inline std::vector<int> simple_coefficients(const std::vector<Root>& simple, const Root& v)
{
    const std::size_t n = simple.size();
    const std::size_t d = v.size();
    Matrix m(d, n + 1);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t s = 0; s < n; ++s)
            m(k, s) = simple[s][k];
        m(k, n) = v[k];
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n && r < d; ++c) {
        std::size_t piv = r;
        while (piv < d && m(piv, c) == 0)
            ++piv;
        if (piv == d)
            continue;
        for (std::size_t j = 0; j <= n; ++j)
            std::swap(m(piv, j), m(r, j));
        Rational p = m(r, c);
        for (std::size_t j = 0; j <= n; ++j)
            m(r, j) /= p;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j <= n; ++j)
                m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < d; ++i)
        if (m(i, n) != 0)
            throw std::logic_error("vector outside the root lattice span");
    std::vector<int> coeff(n, 0);
    for (std::size_t i = 0; i < r; ++i) {
        if (m(i, n).get_den() != 1)
            throw std::logic_error("non-integral simple-root expansion");
        coeff[pivot_col[i]] = static_cast<int>(m(i, n).get_num().get_si());
    }
    return coeff;
}

/// Matrix realization of the root vector for root v.
inline Matrix root_matrix(const AlgebraType& t, const Root& v)
{
    const int N = t.matrix_size();
    const int n = t.rank;
    std::vector<std::pair<int, int>> nz;
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (v[k] != 0)
            nz.emplace_back(k, v[k]);
    Matrix m(N);
    auto add = [&](int i, int j, int s) { m(i, j) += s; };
    if (t.family == Family::A) {
        int i = nz[0].second > 0 ? nz[0].first : nz[1].first;
        int j = nz[0].second > 0 ? nz[1].first : nz[0].first;
        add(i, j, 1);
        return m;
    }
    if (nz.size() == 2 && nz[0].second * nz[1].second < 0) {
        int i = nz[0].second > 0 ? nz[0].first : nz[1].first;
        int j = nz[0].second > 0 ? nz[1].first : nz[0].first;
        add(i, j, 1);
        add(n + j, n + i, -1);
        return m;
    }
    if (nz.size() == 2) {
        int i = nz[0].first, j = nz[1].first;
        int sign = t.family == Family::C ? 1 : -1;
        if (nz[0].second > 0) {
            add(i, n + j, 1);
            add(j, n + i, sign);
        } else {
            add(n + j, i, 1);
            add(n + i, j, sign);
        }
        return m;
    }
    int i = nz[0].first;
    int c = nz[0].second;
    if (t.family == Family::C) {
        if (c > 0)
            add(i, n + i, 1);
        else
            add(n + i, i, 1);
        return m;
    }
    if (c > 0) {
        add(i, 2 * n, 1);
        add(2 * n, n + i, -1);
    } else {
        add(2 * n, i, 1);
        add(n + i, 2 * n, -1);
    }
    return m;
}

/// Eigenvalue lambda with [h, e] = lambda e; throws if e is not an eigenvector.
inline Rational ad_eigenvalue(const Matrix& h, const Matrix& e)
{
    Matrix c = commutator(h, e);
    Rational lambda = 0;
    bool found = false;
    for (std::size_t i = 0; i < e.rows() && !found; ++i)
        for (std::size_t j = 0; j < e.cols(); ++j)
            if (e(i, j) != 0) {
                lambda = c(i, j) / e(i, j);
                found = true;
                break;
            }
    if (!found || !(c == e * lambda))
        throw std::logic_error("root vector is not an ad-eigenvector");
    return lambda;
}

/// Expands matrices over the basis using the disjoint supports of root vectors.
class BasisExpander {
public:
    BasisExpander(const std::vector<BasisElement>& basis, int rank) : basis_(basis), rank_(rank)
    {
        const std::size_t N = basis.front().matrix.rows();
        for (std::size_t b = rank; b < basis.size(); ++b) {
            const Matrix& m = basis[b].matrix;
            bool done = false;
            for (std::size_t i = 0; i < N && !done; ++i)
                for (std::size_t j = 0; j < N; ++j)
                    if (m(i, j) != 0) {
                        pivots_.push_back({i, j});
                        done = true;
                        break;
                    }
        }
        Matrix diag(N, rank);
        for (int c = 0; c < rank; ++c)
            for (std::size_t i = 0; i < N; ++i)
                diag(i, c) = basis[c].matrix(i, i);
        for (std::size_t i = 0; i < N && diag_rows_.size() < static_cast<std::size_t>(rank); ++i) {
            Matrix trial(diag_rows_.size() + 1, rank);
            for (std::size_t r = 0; r < diag_rows_.size(); ++r)
                for (int c = 0; c < rank; ++c)
                    trial(r, c) = diag(diag_rows_[r], c);
            for (int c = 0; c < rank; ++c)
                trial(diag_rows_.size(), c) = diag(i, c);
            if (cce::rank(trial) == diag_rows_.size() + 1)
                diag_rows_.push_back(i);
        }
        if (diag_rows_.size() != static_cast<std::size_t>(rank))
            throw std::logic_error("Cartan matrices are linearly dependent");
        Matrix sq(rank);
        for (int r = 0; r < rank; ++r)
            for (int c = 0; c < rank; ++c)
                sq(r, c) = diag(diag_rows_[r], c);
        diag_inverse_ = inverse(sq);
    }

    std::vector<StructureConstants::Term> expand(const Matrix& x) const
    {
        std::vector<StructureConstants::Term> out;
        for (int r = 0; r < rank_; ++r) {
            Rational c = 0;
            for (int s = 0; s < rank_; ++s)
                c += diag_inverse_(r, s) * x(diag_rows_[s], diag_rows_[s]);
            if (c != 0)
                out.emplace_back(r, c);
        }
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            auto [i, j] = pivots_[k];
            if (x(i, j) != 0)
                out.emplace_back(rank_ + static_cast<int>(k), x(i, j) / basis_[rank_ + k].matrix(i, j));
        }
        Matrix rebuilt(x.rows());
        for (const auto& [b, c] : out)
            rebuilt += basis_[b].matrix * c;
        if (!(rebuilt == x))
            throw std::logic_error("matrix is not in the span of the basis");
        return out;
    }

private:
    const std::vector<BasisElement>& basis_;
    int rank_;
    std::vector<std::pair<std::size_t, std::size_t>> pivots_;
    std::vector<std::size_t> diag_rows_;
    Matrix diag_inverse_;
};

} // namespace detail

/// Builds the root system, matrix basis and structure constants.
inline LieAlgebra build_algebra(const AlgebraType& type, CartanBasis cartan = CartanBasis::Coroot)
{
    type.validate();
    if (cartan == CartanBasis::Orthonormal && type.family == Family::A)
        throw std::invalid_argument("orthonormal Cartan basis is only defined for types B, C, D");

    LieAlgebra g;
    g.type = type;
    g.cartan_basis = cartan;
    RootSystem& rs = g.roots;
    rs.type = type;
    rs.simple = detail::simple_roots(type);

    std::vector<Root> pos = detail::positive_roots(type);
    struct Keyed {
        int height;
        std::vector<int> coeffs;
        Root root;
    };
    std::vector<Keyed> keyed;
    for (const Root& v : pos) {
        auto c = detail::simple_coefficients(rs.simple, v);
        keyed.push_back({std::accumulate(c.begin(), c.end(), 0), c, v});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.height != b.height)
            return a.height < b.height;
        return a.coeffs > b.coeffs;
    });
    for (const auto& k : keyed) {
        rs.positive.push_back(k.root);
        rs.height.push_back(k.height);
    }
    rs.roots = rs.positive;
    for (const Root& v : rs.positive)
        rs.roots.push_back(-v);
    for (std::size_t k = 0; k < rs.positive.size(); ++k)
        rs.height.push_back(-rs.height[k]);
    rs.build_lookup();

    const int n = type.rank;
    const int N = type.matrix_size();
    std::vector<Matrix> root_mats;
    for (const Root& v : rs.roots)
        root_mats.push_back(detail::root_matrix(type, v));

    std::vector<Matrix> cartans;
    if (cartan == CartanBasis::Orthonormal) {
        for (int i = 0; i < n; ++i)
            cartans.push_back(unit(N, i, i) - unit(N, n + i, n + i));
    } else {
        for (const Root& s : rs.simple) {
            int r = rs.index_of(s);
            Matrix h = commutator(root_mats[r], root_mats[rs.negative_of(r)]);
            Rational lambda = detail::ad_eigenvalue(h, root_mats[r]);
            if (lambda == 0)
                throw std::logic_error("degenerate simple coroot");
            cartans.push_back(h * (Rational(2) / lambda));
        }
    }

    for (int i = 0; i < n; ++i)
        g.basis.push_back({BasisElement::Kind::Cartan, i, cartans[i]});
    for (int r = 0; r < rs.size(); ++r)
        g.basis.push_back({BasisElement::Kind::RootVector, r, root_mats[r]});

    rs.weights.assign(n, std::vector<int>(rs.size()));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < rs.size(); ++r) {
            Rational w = detail::ad_eigenvalue(cartans[i], root_mats[r]);
            if (w.get_den() != 1)
                throw std::logic_error("non-integral weight");
            rs.weights[i][r] = static_cast<int>(w.get_num().get_si());
        }

    rs.cartan_matrix.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        int ri = rs.index_of(rs.simple[i]);
        Matrix coroot = commutator(root_mats[ri], root_mats[rs.negative_of(ri)]);
        coroot *= Rational(2) / detail::ad_eigenvalue(coroot, root_mats[ri]);
        for (int j = 0; j < n; ++j) {
            Rational a = detail::ad_eigenvalue(coroot, root_mats[rs.index_of(rs.simple[j])]);
            rs.cartan_matrix[i][j] = static_cast<int>(a.get_num().get_si());
        }
    }

    const int dim = g.dim();
    g.sc = StructureConstants(dim);
    detail::BasisExpander expander(g.basis, n);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            auto terms = expander.expand(commutator(g.basis[i].matrix, g.basis[j].matrix));
            std::vector<StructureConstants::Term> neg;
            for (const auto& [k, c] : terms)
                neg.emplace_back(k, -c);
            g.sc.set(i, j, std::move(terms));
            g.sc.set(j, i, std::move(neg));
        }
    return g;
}

/// Bilinear form of the adjoint representation, kappa_ij = tr(ad X_i ad X_j).
inline Matrix killing_form(const StructureConstants& sc)
{
    const int n = sc.dim();
    std::vector<Matrix> ad(n, Matrix(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (const auto& [l, c] : sc.bracket(i, k))
                ad[i](l, k) = c;
    Matrix kappa(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational t = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (ad[i](k, l) != 0 && ad[j](l, k) != 0)
                        t += ad[i](k, l) * ad[j](l, k);
            kappa(i, j) = t;
            kappa(j, i) = t;
        }
    return kappa;
}

/// Index of the height-ordered simple root i within the root list.
inline int simple_root_index(const RootSystem& rs, int i) { return rs.index_of(rs.simple.at(i)); }

} // namespace cce

#endif

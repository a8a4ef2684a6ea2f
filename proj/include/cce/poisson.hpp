#ifndef CCE_POISSON_HPP
#define CCE_POISSON_HPP

#include "cce/lie_algebra.hpp"
#include "cce/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace cce {

inline void check_coordinates(const Polynomial& p, const StructureConstants& sc)
{
    for (const auto& [m, c] : p.terms())
        if (m.max_variable() >= sc.dim())
            throw std::out_of_range("coordinate index " + std::to_string(m.max_variable()) + " out of range [0," +
                                    std::to_string(sc.dim()) + ")");
}

/// {p,q} = sum C_jk^l x_l (dp/dx_j)(dq/dx_k).
inline Polynomial poisson_bracket(const Polynomial& p, const Polynomial& q, const StructureConstants& sc)
{
    check_coordinates(p, sc);
    check_coordinates(q, sc);
    Polynomial out;
    auto vp = p.variables();
    auto vq = q.variables();
    std::vector<std::pair<int, Polynomial>> dq;
    for (int k : vq)
        dq.emplace_back(k, q.derivative(k));
    for (int j : vp) {
        Polynomial dpj = p.derivative(j);
        for (const auto& [k, dqk] : dq) {
            const auto& terms = sc.bracket(j, k);
            if (terms.empty())
                continue;
            Polynomial lin;
            for (const auto& [l, c] : terms)
                lin.add_term(Monomial::variable(l), c);
            out += lin * dpj * dqk;
        }
    }
    return out;
}

/// Bracket of two monomials by the product rule over their coordinate factors.
inline Polynomial bracket_monomials(const Monomial& a, const Monomial& b, const StructureConstants& sc)
{
    Polynomial out;
    for (const auto& [j, ea] : a.entries()) {
        Monomial ra = a.divide_variable(j);
        for (const auto& [k, eb] : b.entries()) {
            const auto& terms = sc.bracket(j, k);
            if (terms.empty())
                continue;
            Monomial rest = ra * b.divide_variable(k);
            for (const auto& [l, c] : terms)
                out.add_term(rest * Monomial::variable(l), c * ea * eb);
        }
    }
    return out;
}

/// {sum a_m m, sum b_n n} by bilinearity over the monomial fast path.
inline Polynomial bracket_fast(const Polynomial& p, const Polynomial& q, const StructureConstants& sc)
{
    check_coordinates(p, sc);
    check_coordinates(q, sc);
    Polynomial out;
    for (const auto& [ma, ca] : p.terms())
        for (const auto& [mb, cb] : q.terms())
            out += bracket_monomials(ma, mb, sc) * (ca * cb);
    return out;
}

/// {prod f_a, prod g_b} expanded by the product rule over factor pairs.
inline Polynomial leibniz_expand(const std::vector<Polynomial>& fp, const std::vector<Polynomial>& fq,
                                 const StructureConstants& sc)
{
    if (fp.empty() || fq.empty())
        throw std::invalid_argument("leibniz_expand: factor lists must be nonempty");
    Polynomial out;
    for (std::size_t a = 0; a < fp.size(); ++a) {
        Polynomial rest_p(1);
        for (std::size_t x = 0; x < fp.size(); ++x)
            if (x != a)
                rest_p = rest_p * fp[x];
        for (std::size_t b = 0; b < fq.size(); ++b) {
            Polynomial br = poisson_bracket(fp[a], fq[b], sc);
            if (br.is_zero())
                continue;
            Polynomial rest_q(1);
            for (std::size_t y = 0; y < fq.size(); ++y)
                if (y != b)
                    rest_q = rest_q * fq[y];
            out += br * rest_p * rest_q;
        }
    }
    return out;
}

/// {h_i, p} from the weight table: each monomial scales by its total i-weight.
inline Polynomial derivation_action(const LieAlgebra& g, int i, const Polynomial& p)
{
    if (i < 0 || i >= g.rank())
        throw std::out_of_range("Cartan index out of range");
    check_coordinates(p, g.sc);
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        int w = 0;
        for (const auto& [v, k] : m.entries())
            if (!g.is_cartan(v))
                w += k * g.roots.weight(g.basis_to_root(v), i);
        out.add_term(m, c * w);
    }
    return out;
}

/// C_2 = sum kappa^{ij} x_i x_j with kappa^{ij} the inverse Killing form.
inline Polynomial quadratic_casimir(const StructureConstants& sc)
{
    Matrix kappa = killing_form(sc);
    Matrix inv;
    try {
        inv = inverse(kappa);
    } catch (const std::domain_error&) {
        throw std::domain_error("quadratic_casimir: Killing form is singular");
    }
    Polynomial c;
    const int n = sc.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (inv(i, j) != 0)
                c.add_term(Monomial::variable(i) * Monomial::variable(j), inv(i, j));
    return c;
}

} // namespace cce

#endif

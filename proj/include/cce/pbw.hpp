#ifndef CCE_PBW_HPP
#define CCE_PBW_HPP

#include "cce/lie_algebra.hpp"
#include "cce/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cce {

/// Exponents over the ordered basis: X_0^{a_0} X_1^{a_1} ... in that order.
using PBWMonomial = std::vector<std::uint8_t>;

class PBWElement {
public:
    using TermMap = std::map<PBWMonomial, Rational>;

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const PBWMonomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                t_.erase(it);
        }
    }

    void add(const PBWElement& o, const Rational& s = 1)
    {
        for (const auto& [m, c] : o.t_)
            add_term(m, c * s);
    }

    /// Filtration degree; -1 for zero.
    int degree() const
    {
        int d = -1;
        for (const auto& [m, c] : t_)
            d = std::max(d, total(m));
        return d;
    }

    /// Degree-k part read as a commutative polynomial.
    Polynomial graded_component(int k) const
    {
        Polynomial p;
        for (const auto& [m, c] : t_) {
            if (total(m) != k)
                continue;
            Monomial mono;
            for (std::size_t v = 0; v < m.size(); ++v)
                if (m[v])
                    mono = mono * Monomial::variable(static_cast<int>(v), m[v]);
            p.add_term(mono, c);
        }
        return p;
    }

    static int total(const PBWMonomial& m)
    {
        int d = 0;
        for (auto e : m)
            d += e;
        return d;
    }

    friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.t_ == b.t_; }

    friend PBWElement operator-(const PBWElement& a, const PBWElement& b)
    {
        PBWElement r = a;
        r.add(b, -1);
        return r;
    }

    std::string to_string(const std::function<std::string(int)>& name) const
    {
        if (t_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : t_) {
            s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            first = false;
            std::string word;
            for (std::size_t v = 0; v < m.size(); ++v)
                if (m[v]) {
                    word += (word.empty() ? "" : " ") + name(static_cast<int>(v));
                    if (m[v] > 1)
                        word += "^" + std::to_string(m[v]);
                }
            Rational mag = abs(c);
            if (word.empty())
                s += to_display(mag);
            else
                s += (mag == 1 ? "" : to_display(mag) + " ") + word;
        }
        return s;
    }

private:
    TermMap t_;
};

/// Normal-ordered arithmetic in U(g) for a fixed structure tensor. Not thread-safe (memo tables).
class PBWAlgebra {
public:
    explicit PBWAlgebra(const StructureConstants& sc) : sc_(&sc), dim_(sc.dim()) {}

    int dim() const { return dim_; }

    PBWElement one() const
    {
        PBWElement e;
        e.add_term(PBWMonomial(dim_, 0), 1);
        return e;
    }

    PBWElement generator(int i) const
    {
        sc_->check(i);
        PBWMonomial m(dim_, 0);
        m[i] = 1;
        PBWElement e;
        e.add_term(m, 1);
        return e;
    }

    /// X_i * m in normal form.
    const PBWElement& left_multiply(int i, const PBWMonomial& m)
    {
        auto key = std::make_pair(i, m);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        int j = 0;
        while (j < dim_ && m[j] == 0)
            ++j;
        PBWElement result;
        if (i <= j) {
            PBWMonomial out = m;
            if (out[i] == 255)
                throw std::overflow_error("PBW exponent overflow");
            ++out[i];
            result.add_term(out, 1);
        } else {
            PBWMonomial rest = m;
            --rest[j];
            PBWElement xi_rest = left_multiply(i, rest);
            for (const auto& [u, c] : xi_rest.terms())
                result.add(left_multiply(j, u), c);
            for (const auto& [k, c] : sc_->bracket(i, j)) {
                PBWElement t = left_multiply(k, rest);
                result.add(t, c);
            }
        }
        return memo_.emplace(std::move(key), std::move(result)).first->second;
    }

    PBWElement left_multiply(int i, const PBWElement& a)
    {
        PBWElement r;
        for (const auto& [m, c] : a.terms())
            r.add(left_multiply(i, m), c);
        return r;
    }

    PBWElement multiply(const PBWElement& a, const PBWElement& b)
    {
        PBWElement out;
        for (const auto& [u, cu] : a.terms()) {
            PBWElement r = b;
            for (int v = dim_ - 1; v >= 0; --v)
                for (int e = 0; e < u[v]; ++e)
                    r = left_multiply(v, r);
            out.add(r, cu);
        }
        return out;
    }

    PBWElement commutator(const PBWElement& a, const PBWElement& b) { return multiply(a, b) - multiply(b, a); }

    /// Symmetrization: average over all orderings of each monomial's factor word.
    PBWElement symmetrize(const Polynomial& p)
    {
        PBWElement out;
        for (const auto& [m, c] : p.terms()) {
            if (m.max_variable() >= dim_)
                throw std::out_of_range("coordinate index out of range");
            out.add(symmetrize_monomial(m), c);
        }
        return out;
    }

    const PBWElement& symmetrize_monomial(const Monomial& m)
    {
        if (auto it = sym_memo_.find(m); it != sym_memo_.end())
            return it->second;
        PBWElement result;
        const int n = m.degree();
        if (n == 0) {
            result = one();
        } else {
            for (const auto& [v, k] : m.entries()) {
                PBWElement rest = symmetrize_monomial(m.divide_variable(v));
                Rational w(k, n);
                w.canonicalize();
                result.add(left_multiply(v, rest), w);
            }
        }
        return sym_memo_.emplace(m, std::move(result)).first->second;
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    const StructureConstants* sc_;
    int dim_;
    std::map<std::pair<int, PBWMonomial>, PBWElement> memo_;
    std::map<Monomial, PBWElement> sym_memo_;
};

enum class RewriteStrategy { Leftmost, Rightmost };

/// Normal form of a word by direct adjacent-swap rewriting, without memoization.
inline PBWElement normal_order_word(const StructureConstants& sc, const std::vector<int>& word,
                                    RewriteStrategy strategy)
{
    const int dim = sc.dim();
    for (int w : word)
        sc.check(w);
    std::map<std::vector<int>, Rational> pending{{word, Rational(1)}};
    PBWElement out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<int>& w = node.key();
        const Rational c = node.mapped();
        if (c == 0)
            continue;
        int pos = -1;
        for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p)
            if (w[p] > w[p + 1]) {
                pos = p;
                if (strategy == RewriteStrategy::Leftmost)
                    break;
            }
        if (pos < 0) {
            PBWMonomial m(dim, 0);
            for (int x : w)
                ++m[x];
            out.add_term(m, c);
            continue;
        }
        std::vector<int> swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        pending[swapped] += c;
        for (const auto& [k, ck] : sc.bracket(w[pos], w[pos + 1])) {
            std::vector<int> shorter(w.begin(), w.begin() + pos);
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
            pending[shorter] += c * ck;
        }
    }
    return out;
}

/// dim U^k(g) = binom(dim g + k - 1, k).
inline mpz_class filtration_dim(const StructureConstants& sc, int k)
{
    if (k < 0)
        throw std::invalid_argument("filtration_dim: k must be >= 0");
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(sc.dim() + k - 1), static_cast<unsigned long>(k));
    if (k == 0)
        r = 1;
    return r;
}

} // namespace cce

#endif

#ifndef CCE_POLYNOMIAL_HPP
#define CCE_POLYNOMIAL_HPP

#include "cce/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cce {

/// Sparse exponent map, sorted by coordinate, no zero exponents.
class Monomial {
public:
    using Entry = std::pair<int, int>;

    Monomial() = default;

    static Monomial variable(int v, int power = 1)
    {
        if (v < 0)
            throw std::out_of_range("negative coordinate index");
        Monomial m;
        if (power > 0)
            m.e_.emplace_back(v, power);
        return m;
    }

    /// From an unsorted list of coordinates, one entry per factor.
    static Monomial from_factors(std::vector<int> vars)
    {
        std::sort(vars.begin(), vars.end());
        Monomial m;
        for (int v : vars) {
            if (v < 0)
                throw std::out_of_range("negative coordinate index");
            if (!m.e_.empty() && m.e_.back().first == v)
                ++m.e_.back().second;
            else
                m.e_.emplace_back(v, 1);
        }
        return m;
    }

    const std::vector<Entry>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }

    int degree() const
    {
        int d = 0;
        for (const auto& [v, k] : e_)
            d += k;
        return d;
    }

    int exponent(int v) const
    {
        auto it = std::lower_bound(e_.begin(), e_.end(), Entry{v, 0});
        return it != e_.end() && it->first == v ? it->second : 0;
    }

    /// Factor list with multiplicity, ascending.
    std::vector<int> factors() const
    {
        std::vector<int> out;
        for (const auto& [v, k] : e_)
            out.insert(out.end(), k, v);
        return out;
    }

    int max_variable() const { return e_.empty() ? -1 : e_.back().first; }

    /// this / x_v; requires exponent(v) > 0.
    Monomial divide_variable(int v) const
    {
        Monomial m = *this;
        auto it = std::lower_bound(m.e_.begin(), m.e_.end(), Entry{v, 0});
        if (it == m.e_.end() || it->first != v)
            throw std::logic_error("divide_variable: variable absent");
        if (--it->second == 0)
            m.e_.erase(it);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial m;
        m.e_.reserve(a.e_.size() + b.e_.size());
        auto i = a.e_.begin(), j = b.e_.begin();
        while (i != a.e_.end() || j != b.e_.end()) {
            if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first))
                m.e_.push_back(*i++);
            else if (i == a.e_.end() || j->first < i->first)
                m.e_.push_back(*j++);
            else {
                m.e_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return m;
    }

    bool divides(const Monomial& b) const
    {
        for (const auto& [v, k] : e_)
            if (b.exponent(v) < k)
                return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    /// Graded-lex: total degree first, then the earlier coordinate with the larger exponent wins.
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        auto i = a.e_.begin(), j = b.e_.begin();
        for (; i != a.e_.end() && j != b.e_.end(); ++i, ++j) {
            if (i->first != j->first)
                return i->first > j->first;
            if (i->second != j->second)
                return i->second < j->second;
        }
        return false;
    }

    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull;
        for (const auto& [v, k] : e_) {
            h ^= static_cast<std::size_t>(v * 131 + k);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::vector<Entry> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse commutative polynomial with exact coefficients, canonical (no zero terms).
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c)
    {
        if (c != 0)
            t_.emplace(Monomial(), c);
    }
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(const Monomial& m, const Rational& c = 1)
    {
        if (c != 0)
            t_.emplace(m, c);
    }

    static Polynomial variable(int v) { return Polynomial(Monomial::variable(v)); }

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    void add_term(const Monomial& m, const Rational& c)
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

    Rational coefficient(const Monomial& m) const
    {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const { return t_.empty() ? -1 : t_.rbegin()->first.degree(); }

    int min_degree() const { return t_.empty() ? -1 : t_.begin()->first.degree(); }

    bool is_homogeneous() const { return t_.empty() || degree() == min_degree(); }

    /// Homogeneous component of degree k.
    Polynomial component(int k) const
    {
        Polynomial p;
        for (const auto& [m, c] : t_)
            if (m.degree() == k)
                p.t_.emplace(m, c);
        return p;
    }

    std::set<int> variables() const
    {
        std::set<int> vs;
        for (const auto& [m, c] : t_)
            for (const auto& [v, k] : m.entries())
                vs.insert(v);
        return vs;
    }

    Polynomial derivative(int v) const
    {
        Polynomial p;
        for (const auto& [m, c] : t_) {
            int k = m.exponent(v);
            if (k > 0)
                p.add_term(m.divide_variable(v), c * k);
        }
        return p;
    }

    Rational evaluate(const std::vector<Rational>& point) const
    {
        Rational total = 0;
        for (const auto& [m, c] : t_) {
            Rational term = c;
            for (const auto& [v, k] : m.entries()) {
                if (v >= static_cast<int>(point.size()))
                    throw std::out_of_range("evaluation point too short");
                for (int e = 0; e < k; ++e)
                    term *= point[v];
            }
            total += term;
        }
        return total;
    }

    /// Replaces each coordinate v by images[v].
    Polynomial substitute(const std::vector<Polynomial>& images) const
    {
        Polynomial out;
        for (const auto& [m, c] : t_) {
            Polynomial term(c);
            for (const auto& [v, k] : m.entries()) {
                if (v >= static_cast<int>(images.size()))
                    throw std::out_of_range("substitution map too short");
                for (int e = 0; e < k; ++e)
                    term = term * images[v];
            }
            out += term;
        }
        return out;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        for (const auto& [m, c] : o.t_)
            add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        for (const auto& [m, c] : o.t_)
            add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            t_.clear();
            return *this;
        }
        for (auto& [m, c] : t_)
            c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial p;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_)
                p.add_term(ma * mb, ca * cb);
        return p;
    }

    Polynomial pow(int k) const
    {
        Polynomial p(1);
        for (int i = 0; i < k; ++i)
            p = p * *this;
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }

    /// Renders terms leading-first using a coordinate namer.
    std::string to_string(const std::function<std::string(int)>& name) const
    {
        if (t_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational mag = abs(c);
            if (first)
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            first = false;
            std::string mono;
            for (const auto& [v, k] : m.entries()) {
                if (!mono.empty())
                    mono += "*";
                mono += name(v);
                if (k > 1)
                    mono += "^" + std::to_string(k);
            }
            if (mono.empty())
                s += to_display(mag);
            else if (mag == 1)
                s += mono;
            else
                s += to_display(mag) + "*" + mono;
        }
        return s;
    }

private:
    TermMap t_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << p.to_string([](int v) { return "x" + std::to_string(v); });
}

inline Polynomial product(const std::vector<Polynomial>& factors)
{
    Polynomial p(1);
    for (const auto& f : factors)
        p = p * f;
    return p;
}

} // namespace cce

#endif

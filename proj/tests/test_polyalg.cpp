#include "cce/closure.hpp"
#include "cce/poisson.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cce;

namespace {

Polynomial var(int v) { return Polynomial::variable(v); }

int coord(const LieAlgebra& g, const Root& v) { return g.root_to_basis(g.roots.index_of(v)); }

Polynomial random_polynomial(std::mt19937_64& rng, int dim, int max_degree, int terms)
{
    std::uniform_int_distribution<int> pick(0, dim - 1), deg(0, max_degree), coef(-5, 5);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> f;
        for (int k = deg(rng); k > 0; --k)
            f.push_back(pick(rng));
        p.add_term(Monomial::from_factors(f), coef(rng));
    }
    return p;
}

} // namespace

TEST(Polynomial, CanonicalArithmetic)
{
    Polynomial x = var(0), y = var(1);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ((x + y) * (x - y), x * x - y * y);
    EXPECT_EQ(((x + y) * Rational(1, 2)).coefficient(Monomial::variable(0)), Rational(1, 2));
    EXPECT_EQ((x * y * y).degree(), 3);
    EXPECT_EQ((x * y).derivative(1), x);
    EXPECT_EQ(Polynomial().degree(), -1);
    EXPECT_TRUE((x * y + x).is_homogeneous() == false);
}

TEST(Polynomial, GradedLexOrder)
{
    Monomial a = Monomial::from_factors({0, 0});
    Monomial b = Monomial::from_factors({0, 1});
    Monomial c = Monomial::from_factors({1, 1});
    Monomial d = Monomial::from_factors({0, 0, 0});
    EXPECT_TRUE(c < b);
    EXPECT_TRUE(b < a);
    EXPECT_TRUE(a < d);
    EXPECT_FALSE(a < a);
}

TEST(Polynomial, RingAxiomsOnRandomSamples)
{
    std::mt19937_64 rng(7);
    for (int s = 0; s < 30; ++s) {
        auto p = random_polynomial(rng, 6, 3, 4), q = random_polynomial(rng, 6, 3, 4), r = random_polynomial(rng, 6, 2, 3);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ((p + q) + r, p + (q + r));
    }
}

TEST(Poisson, CartanCoordinatesCommute)
{
    auto g = build_algebra({Family::B, 3});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            EXPECT_TRUE(poisson_bracket(var(i), var(j), g.sc).is_zero());
}

TEST(Poisson, B3CartanActsByWeight)
{
    auto g = build_algebra({Family::B, 3});
    int e = coord(g, {1, -1, 0});
    EXPECT_EQ(poisson_bracket(var(0), var(e), g.sc), var(e) * Rational(2));
}

TEST(Poisson, A1CoordinatesMatchMatrixOracle)
{
    auto g = build_algebra({Family::A, 1});
    std::vector<Matrix> mats;
    for (const auto& b : g.basis)
        mats.push_back(b.matrix);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto c = *oracle::coordinates(mats, commutator(mats[i], mats[j]));
            Polynomial expected;
            for (int k = 0; k < 3; ++k)
                expected.add_term(Monomial::variable(k), c[k]);
            EXPECT_EQ(poisson_bracket(var(i), var(j), g.sc), expected);
        }
    EXPECT_EQ(poisson_bracket(var(1), var(2), g.sc), var(0));
    EXPECT_EQ(poisson_bracket(var(0), var(1), g.sc), var(1) * Rational(2));
}

TEST(Poisson, OutOfRangeCoordinateThrows)
{
    auto g = build_algebra({Family::A, 1});
    EXPECT_THROW(poisson_bracket(var(3), var(0), g.sc), std::out_of_range);
    EXPECT_THROW(bracket_fast(var(0), var(7), g.sc), std::out_of_range);
}

TEST(Poisson, BilinearAntisymmetricLeibnizJacobi)
{
    for (auto t : {AlgebraType{Family::B, 2}, AlgebraType{Family::A, 2}, AlgebraType{Family::D, 3},
                   AlgebraType{Family::C, 3}}) {
        auto g = build_algebra(t);
        std::mt19937_64 rng(11);
        for (int s = 0; s < 12; ++s) {
            auto p = random_polynomial(rng, g.dim(), 3, 3);
            auto q = random_polynomial(rng, g.dim(), 3, 3);
            auto r = random_polynomial(rng, g.dim(), 3, 3);
            const auto& sc = g.sc;
            EXPECT_EQ(poisson_bracket(p, q, sc), -poisson_bracket(q, p, sc));
            EXPECT_EQ(poisson_bracket(p + r * Rational(3), q, sc),
                      poisson_bracket(p, q, sc) + poisson_bracket(r, q, sc) * Rational(3));
            EXPECT_EQ(poisson_bracket(p * q, r, sc), p * poisson_bracket(q, r, sc) + q * poisson_bracket(p, r, sc));
            Polynomial jac = poisson_bracket(poisson_bracket(p, q, sc), r, sc) +
                             poisson_bracket(poisson_bracket(q, r, sc), p, sc) +
                             poisson_bracket(poisson_bracket(r, p, sc), q, sc);
            EXPECT_TRUE(jac.is_zero()) << t.name();
            EXPECT_EQ(bracket_fast(p, q, sc), poisson_bracket(p, q, sc));
        }
    }
}

TEST(Poisson, GradingOfHomogeneousBrackets)
{
    auto g = build_algebra({Family::B, 2});
    std::mt19937_64 rng(3);
    for (int s = 0; s < 40; ++s) {
        auto p = random_polynomial(rng, g.dim(), 3, 2).component(2);
        auto q = random_polynomial(rng, g.dim(), 3, 3).component(3);
        auto b = poisson_bracket(p, q, g.sc);
        if (!b.is_zero()) {
            EXPECT_TRUE(b.is_homogeneous());
            EXPECT_EQ(b.degree(), 4);
        }
    }
}

TEST(Poisson, DerivationActionMatchesBracket)
{
    for (auto t : {AlgebraType{Family::B, 2}, AlgebraType{Family::C, 3}, AlgebraType{Family::D, 3}}) {
        for (auto cb : {CartanBasis::Coroot, CartanBasis::Orthonormal}) {
            auto g = build_algebra(t, cb);
            std::mt19937_64 rng(5);
            for (int s = 0; s < 10; ++s) {
                auto p = random_polynomial(rng, g.dim(), 4, 4);
                for (int i = 0; i < g.rank(); ++i)
                    EXPECT_EQ(derivation_action(g, i, p), poisson_bracket(var(i), p, g.sc));
            }
        }
    }
}

TEST(Poisson, DerivationActionExamples)
{
    auto g = build_algebra({Family::B, 2});
    for (int r = 0; r < g.roots.positive_count(); ++r) {
        Polynomial p = var(g.root_to_basis(r)) * var(g.root_to_basis(g.roots.negative_of(r)));
        for (int i = 0; i < 2; ++i)
            EXPECT_TRUE(derivation_action(g, i, p).is_zero());
    }
    Polynomial m = var(coord(g, {1, -1})) * var(coord(g, {0, 1})) * var(coord(g, {-1, 0}));
    for (int i = 0; i < 2; ++i)
        EXPECT_TRUE(derivation_action(g, i, m).is_zero());
    int e = coord(g, {1, -1});
    for (int i = 0; i < 2; ++i)
        EXPECT_EQ(derivation_action(g, i, var(e)), var(e) * Rational(g.roots.weight(Root{1, -1}, i)));
}

TEST(Poisson, LeibnizExpandSingleFactorsAndRepeatedFactor)
{
    auto g = build_algebra({Family::B, 2});
    std::mt19937_64 rng(9);
    auto p = random_polynomial(rng, g.dim(), 2, 3), q = random_polynomial(rng, g.dim(), 2, 3);
    EXPECT_EQ(leibniz_expand({p}, {q}, g.sc), poisson_bracket(p, q, g.sc));
    auto f = random_polynomial(rng, g.dim(), 2, 2), h = f;
    EXPECT_EQ(leibniz_expand({f, p}, {h}, g.sc), f * poisson_bracket(p, h, g.sc));
    EXPECT_THROW(leibniz_expand({}, {q}, g.sc), std::invalid_argument);
}

TEST(Poisson, LeibnizAgreesOnGeneratorPairs)
{
    for (auto t : {AlgebraType{Family::B, 2}, AlgebraType{Family::D, 3}}) {
        auto g = build_algebra(t);
        auto cat = build_catalog(g.roots);
        GeneratorSet gs(g, cat);
        auto factors = [&](int id) {
            std::vector<Polynomial> f;
            for (int v : gs.at(id).monomial.factors())
                f.push_back(var(v));
            return f;
        };
        for (int a = 0; a < gs.size(); ++a)
            for (int b = 0; b < gs.size(); ++b) {
                Polynomial direct = poisson_bracket(gs.polynomial(a), gs.polynomial(b), g.sc);
                EXPECT_EQ(leibniz_expand(factors(a), factors(b), g.sc), direct);
                EXPECT_EQ(bracket_monomials(gs.at(a).monomial, gs.at(b).monomial, g.sc), direct);
            }
    }
}

TEST(Casimir, CommutesWithAllCoordinates)
{
    for (int n = 1; n <= 3; ++n)
        for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
            if (f == Family::D && n < 2)
                continue;
            auto g = build_algebra({f, n});
            Polynomial c = quadratic_casimir(g.sc);
            EXPECT_EQ(c.degree(), 2);
            for (int k = 0; k < g.dim(); ++k)
                EXPECT_TRUE(poisson_bracket(c, var(k), g.sc).is_zero()) << g.type.name();
        }
}

TEST(Casimir, A1Explicit)
{
    auto g = build_algebra({Family::A, 1});
    Polynomial c = quadratic_casimir(g.sc);
    // kappa = [[8,0,0],[0,0,4],[0,4,0]]
    Polynomial expected = var(0) * var(0) * Rational(1, 8) + var(1) * var(2) * Rational(1, 2);
    EXPECT_EQ(c, expected);
}

TEST(Casimir, D2SplitsIntoTwoCommutingSl2Casimirs)
{
    auto g = build_algebra({Family::D, 2});
    int e1 = coord(g, {1, -1}), f1 = coord(g, {-1, 1});
    int e2 = coord(g, {1, 1}), f2 = coord(g, {-1, -1});
    // each simple ideal is spanned by (h_i, e_i, f_i) with sl(2) brackets
    for (auto [h, e, f] : {std::array<int, 3>{0, e1, f1}, std::array<int, 3>{1, e2, f2}}) {
        EXPECT_EQ(poisson_bracket(var(e), var(f), g.sc), var(h));
        EXPECT_EQ(poisson_bracket(var(h), var(e), g.sc), var(e) * Rational(2));
    }
    for (int a : {0, e1, f1})
        for (int b : {1, e2, f2})
            EXPECT_TRUE(poisson_bracket(var(a), var(b), g.sc).is_zero());
    auto sl2 = [&](int h, int e, int f) { return var(h) * var(h) * Rational(1, 2) + var(e) * var(f) * Rational(2); };
    Polynomial c1 = sl2(0, e1, f1), c2 = sl2(1, e2, f2);
    Polynomial c = quadratic_casimir(g.sc);
    EXPECT_EQ(c * Rational(4), c1 + c2);
    EXPECT_TRUE(poisson_bracket(c1, c2, g.sc).is_zero());
}

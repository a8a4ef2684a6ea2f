#include "cce/closure.hpp"
#include "cce/commutant.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace cce;

namespace {

RootMultiset ms(const RootSystem& rs, std::vector<Root> roots)
{
    RootMultiset m;
    for (const auto& v : roots) {
        int r = rs.index_of(v);
        EXPECT_GE(r, 0);
        m.push_back(r);
    }
    std::sort(m.begin(), m.end());
    return m;
}

std::map<int, std::size_t> counts(const GeneratorCatalog& c)
{
    std::map<int, std::size_t> out;
    for (const auto& [h, l] : c.layers)
        out[h] = l.size();
    return out;
}

} // namespace

TEST(Commutant, LayersMatchBruteForceOracle)
{
    struct Case {
        AlgebraType t;
        int max_h;
    };
    for (auto c : {Case{{Family::A, 1}, 4}, Case{{Family::A, 2}, 6}, Case{{Family::A, 3}, 6}, Case{{Family::B, 2}, 7},
                   Case{{Family::C, 2}, 7}, Case{{Family::D, 2}, 4}, Case{{Family::D, 3}, 6}, Case{{Family::B, 3}, 6},
                   Case{{Family::C, 3}, 6}}) {
        auto g = build_algebra(c.t);
        for (int h = 2; h <= c.max_h; ++h)
            EXPECT_EQ(enumerate_layer(g.roots, h), oracle::brute_force_layer(g.roots, h)) << c.t.name() << " h=" << h;
    }
}

TEST(Commutant, B3QuadraticLayer)
{
    auto g = build_algebra({Family::B, 3});
    const auto& rs = g.roots;
    auto l = enumerate_layer(rs, 2);
    EXPECT_EQ(l.size(), 9u);
    for (int r = 0; r < rs.positive_count(); ++r)
        EXPECT_NE(std::find(l.begin(), l.end(), RootMultiset{r, rs.negative_of(r)}), l.end());
}

TEST(Commutant, D2QuadraticLayer)
{
    auto g = build_algebra({Family::D, 2});
    const auto& rs = g.roots;
    auto l = enumerate_layer(rs, 2);
    std::vector<RootMultiset> expected{ms(rs, {{1, -1}, {-1, 1}}), ms(rs, {{1, 1}, {-1, -1}})};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(l, expected);
    EXPECT_TRUE(enumerate_layer(rs, 3).empty());
}

TEST(Commutant, B3SexticMember)
{
    auto g = build_algebra({Family::B, 3});
    const auto& rs = g.roots;
    auto m = ms(rs, {{0, -1, 1}, {1, 1, 0}, {1, 1, 0}, {0, -1, -1}, {-1, 0, 0}, {-1, 0, 0}});
    auto l = enumerate_layer(rs, 6);
    EXPECT_NE(std::find(l.begin(), l.end(), m), l.end());
    EXPECT_EQ(generator_name(rs, m), "p_{32-;12+^2,23h+;1h^2}");
}

TEST(Commutant, IsIndecomposable)
{
    auto g = build_algebra({Family::A, 2});
    const auto& rs = g.roots;
    auto pair = ms(rs, {{1, -1, 0}, {-1, 1, 0}});
    EXPECT_TRUE(is_indecomposable(rs, pair));
    RootMultiset sq = pair;
    sq.insert(sq.end(), pair.begin(), pair.end());
    EXPECT_FALSE(is_indecomposable(rs, sq));
    EXPECT_TRUE(is_indecomposable(rs, ms(rs, {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}})));
    EXPECT_THROW(is_indecomposable(rs, ms(rs, {{1, -1, 0}})), std::invalid_argument);
    for (int h = 2; h <= 4; ++h)
        for (const auto& m : oracle::brute_force_layer(rs, h))
            EXPECT_TRUE(is_indecomposable(rs, m));
}

TEST(Commutant, IsIndecomposableAgreesWithSubsetOracle)
{
    auto g = build_algebra({Family::B, 2});
    const auto& rs = g.roots;
    // every zero-sum multiset of size <= 5
    for (int h = 2; h <= 5; ++h) {
        std::vector<int> cur(h, 0);
        for (;;) {
            if (is_zero(oracle::root_sum(rs, cur))) {
                ASSERT_EQ(is_indecomposable(rs, cur), oracle::indecomposable_by_subsets(rs, cur));
            }
            int k = h - 1;
            while (k >= 0 && cur[k] == rs.size() - 1)
                --k;
            if (k < 0)
                break;
            ++cur[k];
            for (int j = k + 1; j < h; ++j)
                cur[j] = cur[k];
        }
    }
}

TEST(Commutant, CatalogsSmallRank)
{
    auto b2 = build_catalog(build_algebra({Family::B, 2}).roots);
    EXPECT_EQ(counts(b2), (std::map<int, std::size_t>{{2, 4}, {3, 4}, {4, 4}}));
    EXPECT_EQ(b2.total(), 14u);
    EXPECT_EQ(b2.zeta, 4);
    auto d3 = build_catalog(build_algebra({Family::D, 3}).roots);
    EXPECT_EQ(counts(d3), (std::map<int, std::size_t>{{2, 6}, {3, 8}, {4, 6}}));
    EXPECT_EQ(d3.total(), 23u);
    EXPECT_EQ(d3.zeta, 4);
    auto d2 = build_catalog(build_algebra({Family::D, 2}).roots);
    EXPECT_EQ(d2.total(), 4u);
    EXPECT_EQ(d2.zeta, 2);
}

TEST(Commutant, RankThreeCatalogCounts)
{
    auto b3 = build_catalog(build_algebra({Family::B, 3}).roots);
    EXPECT_EQ(counts(b3), (std::map<int, std::size_t>{{2, 9}, {3, 20}, {4, 42}, {5, 48}, {6, 24}}));
    EXPECT_EQ(b3.zeta, 6);
    auto c3 = build_catalog(build_algebra({Family::C, 3}).roots);
    EXPECT_EQ(counts(c3), (std::map<int, std::size_t>{{2, 9}, {3, 20}, {4, 42}, {5, 48}, {6, 32}}));
    EXPECT_EQ(c3.zeta, 6);
}

TEST(Commutant, PracticalCutoffAgreesWithExhaustiveScan)
{
    for (auto t : {AlgebraType{Family::A, 2}, AlgebraType{Family::A, 3}, AlgebraType{Family::B, 2},
                   AlgebraType{Family::C, 2}, AlgebraType{Family::D, 2}, AlgebraType{Family::D, 3},
                   AlgebraType{Family::B, 3}, AlgebraType{Family::C, 3}}) {
        auto g = build_algebra(t);
        auto practical = build_catalog(g.roots);
        CatalogOptions opt;
        opt.exhaustive = true;
        auto full = build_catalog(g.roots, opt);
        EXPECT_EQ(full.scanned_to, 2 * g.roots.positive_count());
        EXPECT_EQ(practical.layers, full.layers) << t.name();
    }
}

TEST(Commutant, MaxDegreeOption)
{
    auto g = build_algebra({Family::B, 2});
    CatalogOptions opt;
    opt.max_degree = 1;
    EXPECT_THROW(build_catalog(g.roots, opt), std::invalid_argument);
    opt.max_degree = 3;
    auto c = build_catalog(g.roots, opt);
    EXPECT_TRUE(c.truncated);
    EXPECT_EQ(c.zeta, 3);
    EXPECT_THROW(enumerate_layer(g.roots, 1), std::invalid_argument);
}

TEST(Commutant, MaxIndecomposableDegree)
{
    EXPECT_EQ(max_indecomposable_degree({Family::B, 2}), 4);
    EXPECT_EQ(max_indecomposable_degree({Family::D, 3}), 4);
    EXPECT_EQ(max_indecomposable_degree({Family::B, 3}), 6);
    EXPECT_EQ(max_indecomposable_degree({Family::C, 3}), 6);
}

TEST(Commutant, CatalogMembersAreCartanInvariant)
{
    for (auto t : {AlgebraType{Family::B, 3}, AlgebraType{Family::C, 3}, AlgebraType{Family::D, 3}}) {
        auto g = build_algebra(t);
        auto cat = build_catalog(g.roots);
        for (const auto& [h, l] : cat.layers)
            for (const auto& m : l) {
                Polynomial p = monomial_polynomial(g, m);
                EXPECT_EQ(p.degree(), h);
                for (int i = 0; i < g.rank(); ++i)
                    EXPECT_TRUE(derivation_action(g, i, p).is_zero());
            }
    }
}

TEST(Commutant, NoMemberContainsAnother)
{
    auto g = build_algebra({Family::B, 3});
    auto cat = build_catalog(g.roots);
    std::vector<RootMultiset> all;
    for (const auto& [h, l] : cat.layers)
        all.insert(all.end(), l.begin(), l.end());
    for (const auto& a : all)
        for (const auto& b : all)
            if (a != b && a.size() <= b.size()) {
                EXPECT_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
            }
}

TEST(Commutant, CatalogClosedUnderHat)
{
    for (auto t : {AlgebraType{Family::B, 3}, AlgebraType{Family::C, 3}, AlgebraType{Family::D, 3}}) {
        auto g = build_algebra(t);
        auto cat = build_catalog(g.roots);
        for (const auto& [h, l] : cat.layers) {
            std::set<RootMultiset> layer(l.begin(), l.end());
            for (const auto& m : l)
                EXPECT_TRUE(layer.count(hat(g.roots, m)));
        }
    }
}

TEST(Commutant, BAndCTotalsAtRankTwoAndThree)
{
    auto total = [](AlgebraType t) { return build_catalog(build_algebra(t).roots).total(); };
    EXPECT_EQ(total({Family::B, 2}), total({Family::C, 2}));
    EXPECT_EQ(total({Family::B, 3}), 146u);
    EXPECT_EQ(total({Family::C, 3}), 154u);
}

TEST(Commutant, ExpandClass)
{
    auto g = build_algebra({Family::B, 3});
    const auto& rs = g.roots;
    auto c13 = expand_class(rs, 1, 3);
    EXPECT_EQ(c13, (std::vector<RootMultiset>{ms(rs, {{1, 0, -1}}), ms(rs, {{1, -1, 0}, {0, 1, -1}})}));
    auto c12 = expand_class(rs, 1, 2);
    EXPECT_EQ(c12, (std::vector<RootMultiset>{ms(rs, {{1, -1, 0}}), ms(rs, {{1, 0, -1}, {0, -1, 1}})}));
    auto g2 = build_algebra({Family::B, 2});
    EXPECT_EQ(expand_class(g2.roots, 1, 2).size(), 1u);
    EXPECT_THROW(expand_class(rs, 1, 1), std::invalid_argument);
    for (const auto& m : expand_class(rs, 2, 1)) {
        // substituting a member for e21- in e12- e21- keeps zero weight
        RootMultiset p = m;
        p.push_back(rs.index_of(Root{1, -1, 0}));
        EXPECT_TRUE(has_zero_sum(rs, p));
    }
    auto g4 = build_algebra({Family::B, 4});
    EXPECT_EQ(expand_class(g4.roots, 1, 4).size(), 5u);
}

TEST(Commutant, ClassifyExamples)
{
    auto g = build_algebra({Family::B, 3});
    const auto& rs = g.roots;
    EXPECT_EQ(classify(rs, ms(rs, {{1, 1, 0}, {-1, 0, 0}, {0, -1, 0}})).tag, 'd');
    EXPECT_EQ(classify(rs, ms(rs, {{1, 0, -1}, {0, 1, 1}, {-1, -1, 0}})).tag, 'b');
    EXPECT_EQ(classify(rs, ms(rs, {{1, -1, 0}, {-1, 1, 0}})).tag, 'a');
    EXPECT_EQ(classify(rs, ms(rs, {{1, -1, 0}, {-1, 0, 0}, {0, 1, 0}})).tag, 'c');
    EXPECT_THROW(classify(rs, ms(rs, {{1, 0, -1}, {1, 1, 0}, {0, -1, -1}})), std::invalid_argument);
}

TEST(Commutant, ClassifyCoversCatalogs)
{
    for (auto t : {AlgebraType{Family::B, 3}, AlgebraType{Family::C, 3}, AlgebraType{Family::D, 3},
                   AlgebraType{Family::D, 4}}) {
        auto g = build_algebra(t);
        auto cat = build_catalog(g.roots);
        std::map<char, int> seen;
        for (const auto& [h, l] : cat.layers)
            for (const auto& m : l) {
                auto c = classify(g.roots, m);
                ++seen[c.tag];
                if (t.family == Family::D) {
                    EXPECT_TRUE(c.tag == 'a' || c.tag == 'b');
                }
                if (t.family == Family::B && c.tag == 'e') {
                    EXPECT_EQ(c.axis, 2);
                }
            }
        if (t.family != Family::D) {
            EXPECT_EQ(seen.size(), 5u) << t.name();
        }
    }
}

TEST(Commutant, DeterministicAcrossThreadCounts)
{
    auto g = build_algebra({Family::C, 3});
    setenv("CCE_THREADS", "1", 1);
    auto one = enumerate_layer(g.roots, 5);
    setenv("CCE_THREADS", "4", 1);
    auto four = enumerate_layer(g.roots, 5);
    unsetenv("CCE_THREADS");
    EXPECT_EQ(one, four);
    EXPECT_EQ(one, enumerate_layer(g.roots, 5));
}

TEST(Commutant, RankFourStretchDegrees)
{
    EXPECT_EQ(max_indecomposable_degree({Family::D, 4}), 6);
    EXPECT_EQ(max_indecomposable_degree({Family::B, 4}), 8);
    EXPECT_EQ(max_indecomposable_degree({Family::C, 4}), 8);
}

#include <gtest/gtest.h>

#include <set>

#include "qfl/noncrossing.hpp"
#include "qfl/permutation.hpp"

using namespace qfl;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

}  // namespace

TEST(Permutation, CycleNotationAndComposition) {
    auto w = Permutation::from_cycles(6, {{6, 3, 2, 1}, {5, 4}});
    EXPECT_EQ(w.one_line(), "612543");
    EXPECT_EQ(Permutation::long_cycle(3).one_line(), "312");
    auto a = Permutation::simple(3, 1), b = Permutation::simple(3, 2);
    EXPECT_EQ((a * b)(1), a(b(1)));
    EXPECT_EQ(Permutation::long_cycle(4), Permutation::simple(4, 3) * Permutation::simple(4, 2) * Permutation::simple(4, 1));
    EXPECT_EQ(w * w.inverse(), Permutation::identity(6));
}

TEST(Permutation, LengthAndParse) {
    EXPECT_EQ(P("4321").length(), 6);
    EXPECT_EQ(P("3 1 2"), P("3,1,2"));
    EXPECT_THROW(P("112"), std::invalid_argument);
}

TEST(Noncrossing, Examples) {
    EXPECT_TRUE(is_noncrossing(P("612543")));
    EXPECT_TRUE(is_noncrossing(Permutation::identity(5)));
    EXPECT_FALSE(is_noncrossing(P("3412")));
    EXPECT_FALSE(is_noncrossing(P("231")));
    EXPECT_THROW(NoncrossingPartition(P("231")), std::invalid_argument);
}

TEST(Noncrossing, KrewerasExamples) {
    auto small = Permutation::from_cycles(6, {{6, 3}, {2, 1}, {5, 4}});
    auto big = P("612543");
    EXPECT_TRUE(kreweras_leq(small, big));
    EXPECT_FALSE(kreweras_leq(big, small));
    for (const auto& w : enumerate_nc(5)) {
        EXPECT_TRUE(kreweras_leq(w, w));
        EXPECT_TRUE(kreweras_leq(Permutation::identity(5), w));
    }
}

TEST(Noncrossing, CayleyEdge) {
    auto id = Permutation::identity(3);
    auto s1 = Permutation::simple(3, 1);
    EXPECT_EQ(cayley_edge(id, s1), Transposition(1, 2));
    EXPECT_FALSE(cayley_edge(s1, s1).has_value());
    auto u = Permutation::from_cycles(3, {{2, 1}});
    auto w = Permutation::from_cycles(3, {{3, 2, 1}});
    auto e = cayley_edge(u, w);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(*e, Transposition(2, 3));
    EXPECT_EQ(w, u * Permutation::transposition(3, 1, 3));
}

TEST(Noncrossing, BruhatMatchesCoverClosure) {
    for (int n = 1; n <= 5; ++n) {
        auto all = all_permutations(n);
        std::map<Permutation, std::set<Permutation>> up;
        for (const auto& u : all) up[u].insert(u);
        // covers: multiply by a transposition, length goes up by one
        std::sort(all.begin(), all.end(), [](auto& a, auto& b) { return a.length() > b.length(); });
        for (const auto& u : all)
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    auto v = Permutation::transposition(n, a, b) * u;
                    if (v.length() == u.length() + 1) up[u].insert(up[v].begin(), up[v].end());
                }
        for (const auto& u : all)
            for (const auto& v : all) EXPECT_EQ(bruhat_leq(u, v), up[u].count(v) > 0) << u.one_line() << " " << v.one_line();
    }
    EXPECT_FALSE(bruhat_leq(Permutation::simple(3, 1), Permutation::simple(3, 2)));
}

TEST(Noncrossing, Inversions) {
    auto w = P("612543");
    EXPECT_EQ(inversions(w).size(), 8u);
    EXPECT_EQ(noncrossing_inversions(w).size(), 5u);
    EXPECT_TRUE(inversions(Permutation::identity(4)).empty());
    EXPECT_TRUE(noncrossing_inversions(Permutation::identity(4)).empty());
    std::vector<Transposition> expect{{1, 2}, {1, 3}};
    EXPECT_EQ(noncrossing_inversions(Permutation::long_cycle(3)), expect);
}

TEST(Noncrossing, EnumerationRoutesAgree) {
    EXPECT_EQ(enumerate_nc(1), std::vector<Permutation>{Permutation::identity(1)});
    EXPECT_EQ(enumerate_nc(3).size(), 5u);
    EXPECT_EQ(enumerate_nc(4).size(), 14u);
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_nc_by_blocks(n), enumerate_nc_by_filter(n));
}

TEST(Noncrossing, MeetJoinAreBounds) {
    auto nc = enumerate_nc(4);
    for (const auto& u : nc)
        for (const auto& v : nc) {
            auto m = kreweras_meet(u, v), j = kreweras_join(u, v);
            EXPECT_TRUE(kreweras_leq(m, u) && kreweras_leq(m, v));
            EXPECT_TRUE(kreweras_leq(u, j) && kreweras_leq(v, j));
        }
}

TEST(Noncrossing, CoversCountedByLength) {
    auto covers = kreweras_covers(4);
    for (const auto& [u, v] : covers) EXPECT_EQ(NoncrossingPartition(v).absolute_length(), NoncrossingPartition(u).absolute_length() + 1);
    EXPECT_EQ(kreweras_covers(3).size(), 6u);
}

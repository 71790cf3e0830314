#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "qfl/counts.hpp"
#include "qfl/families.hpp"
#include "qfl/forest.hpp"
#include "qfl/noncrossing.hpp"
#include "qfl/tamari.hpp"

using namespace qfl;

namespace {

BnForest W(const std::string& s) { return forest_from_reseq(ReseqWord::parse(s)); }
Permutation C(int n, std::vector<std::vector<int>> cyc) { return Permutation::from_cycles(n, cyc); }

// the non-normal tree and its normal form
const char* kTamariLeft = "W(1,W(B(2,3),B(B(4,W(5,6)),7)))";
const char* kTamariRight = "W(W(1,B(2,3)),B(W(B(4,5),6),7))";

std::vector<int> choices(std::size_t k, int code) {
    std::vector<int> c(k);
    for (auto& x : c) {
        x = code % 3;
        code /= 3;
    }
    return c;
}

}  // namespace

TEST(Reseq, ParseAndBounds) {
    auto w = ReseqWord::parse("r1- r1+ r2- e1 e3 r2+");
    EXPECT_EQ(w.size(), 6);
    EXPECT_EQ(w.black_count(), 2);
    EXPECT_EQ(w.str(), "r1- r1+ r2- e1 e3 r2+");
    EXPECT_THROW(ReseqWord::parse("r1+"), std::invalid_argument);
    EXPECT_THROW(ReseqWord::parse("r1- e2"), std::invalid_argument);
    EXPECT_THROW(ReseqWord::parse("q1"), std::invalid_argument);
    EXPECT_EQ(enumerate_reseq(3).size(), 1u * 4 * 7);
}

TEST(Forest, InsertionExample) {
    auto f = W("r1- r1+ r2- e1 e3 r2+");
    EXPECT_EQ(f.n(), 6);
    EXPECT_EQ(f.num_internal(), 4);
    EXPECT_EQ(f.black_count(), 2);
    EXPECT_EQ(ncperm(f), C(6, {{6, 3, 2, 1}, {5, 4}}));
    EXPECT_EQ(f.roots().size(), 2u);
}

TEST(Forest, SingleLeafAndComb) {
    auto f = W("r1-");
    EXPECT_EQ(f.n(), 1);
    EXPECT_EQ(f.num_internal(), 0);
    for (int n = 2; n <= 7; ++n) {
        std::string s = "r1-";
        for (int k = 2; k <= n; ++k) s += " e" + std::to_string(k - 1);
        auto comb = W(s);
        EXPECT_EQ(comb.black_count(), n - 1);
        EXPECT_EQ(ncperm(comb), Permutation::long_cycle(n));
    }
    auto left = W("r1- e1 e1 e1");
    EXPECT_EQ(left.black_count(), 3);
    EXPECT_EQ(ncperm(left), Permutation::long_cycle(4));
}

TEST(Forest, ParsePrintRoundTrip) {
    for (const auto& f : enumerate_bnfor(4)) EXPECT_EQ(BnForest::parse(f.str(), 4), f) << f.str();
    EXPECT_THROW(BnForest::parse("B(1,", 3), std::invalid_argument);
}

TEST(Forest, WordEquivalence) {
    EXPECT_TRUE(words_equivalent(ReseqWord::parse("r1- r1- e2 e1"), ReseqWord::parse("r1- r1- e1 e3")));
    EXPECT_FALSE(words_equivalent(ReseqWord::parse("r1- e1"), ReseqWord::parse("r1- r1+")));
    std::set<BnForest> classes;
    for (const auto& w : enumerate_reseq(4)) classes.insert(forest_from_reseq(w));
    EXPECT_EQ(classes.size(), 93u);
    EXPECT_EQ(enumerate_bnfor(4).size(), 93u);
}

TEST(Forest, NcpermExamples) {
    auto f = BnForest::parse("B(B(1,3),7) B(B(4,5),6)", 7);
    EXPECT_EQ(ncperm(f), C(7, {{7, 3, 1}, {6, 5, 4}}));
    EXPECT_EQ(ncperm(BnForest::leaves(5)), Permutation::identity(5));
    for (const auto& g : enumerate_bnfor(5)) {
        EXPECT_EQ(ncperm_by_tau(g), ncperm(g));
        EXPECT_EQ(ncperm_by_tau(g, true), ncperm(g));
    }
}

TEST(Forest, TauLabels) {
    auto f = BnForest::parse(kTamariLeft, 7);
    std::multiset<Transposition> got, want{{1, 7}, {3, 7}, {6, 7}, {4, 6}, {5, 6}, {2, 3}};
    Permutation prod = Permutation::identity(7);
    for (int v : linear_extension(f)) {
        got.insert(f.tau(v));
        prod = prod * Permutation::transposition(7, f.tau(v).first, f.tau(v).second);
    }
    EXPECT_EQ(got, want);
    EXPECT_EQ(prod, Permutation::long_cycle(7));
    auto g = BnForest::parse("B(3,4)", 5);
    int v = g.internal_nodes().front();
    EXPECT_EQ(g.tau(v), Transposition(3, 4));
    EXPECT_EQ(g.spread(v), Transposition(3, 4));
    EXPECT_EQ(g.canonical_label(v), 3);
}

TEST(Forest, FaceSetIsCube) {
    for (const auto& f : enumerate_bnfor(4)) {
        auto faces = face_set(f);
        std::size_t k = f.black_nodes().size();
        std::size_t cube = 1;
        for (std::size_t i = 0; i < k; ++i) cube *= 3;
        ASSERT_EQ(faces.size(), cube) << f.str();
        std::vector<BnForest> img;
        for (std::size_t a = 0; a < cube; ++a) img.push_back(f.apply_face(choices(k, static_cast<int>(a))));
        for (std::size_t a = 0; a < cube; ++a)
            for (std::size_t b = 0; b < cube; ++b) {
                auto ca = choices(k, static_cast<int>(a)), cb = choices(k, static_cast<int>(b));
                bool prod = true;
                for (std::size_t i = 0; i < k; ++i) prod = prod && (ca[i] == cb[i] || cb[i] == 0);
                EXPECT_EQ(leq_re(img[a], img[b]), prod) << f.str();
            }
    }
    auto leaf = BnForest::leaves(3);
    EXPECT_EQ(face_set(leaf), std::vector<BnForest>{leaf});
}

TEST(Forest, FixedSetExample) {
    auto f = W("r1- r1+ r2- e1 e3 r2+");
    std::vector<Permutation> want{C(6, {{6, 3, 2, 1}, {5, 4}}), C(6, {{6, 3, 2, 1}}), C(6, {{6, 3, 2}, {5, 4}}),
                                  C(6, {{6, 3, 2}})};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(fixed_set(f), want);
    EXPECT_EQ(fixed_set_via_vert(f), want);
    // the three displayed smaller forests lie in the face set
    auto faces = face_set(f);
    for (auto* s : {"W(W(1,W(2,3)),6) W(4,5)", "W(W(1,W(2,3)),6)"}) {
        auto g = BnForest::parse(s, 6);
        EXPECT_TRUE(leq_re(g, f)) << s;
    }
}

TEST(Forest, FixedSetsAreBooleanSublattices) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& f : enumerate_bnfor(n)) {
            auto fs = fixed_set(f);
            EXPECT_EQ(fs.size(), std::size_t{1} << f.black_count());
            for (const auto& u : fs) {
                EXPECT_TRUE(is_noncrossing(u));
                for (const auto& v : fs) {
                    auto m = kreweras_meet(u, v), j = kreweras_join(u, v);
                    EXPECT_TRUE(std::binary_search(fs.begin(), fs.end(), m));
                    EXPECT_TRUE(std::binary_search(fs.begin(), fs.end(), j));
                }
            }
        }
    auto leaf = BnForest::parse("W(1,2)", 3);
    EXPECT_EQ(fixed_set(leaf), std::vector<Permutation>{ncperm(leaf)});
}

TEST(Tamari, NormalFormExample) {
    auto l = BnForest::parse(kTamariLeft, 7), r = BnForest::parse(kTamariRight, 7);
    EXPECT_FALSE(is_normal(l));
    EXPECT_TRUE(is_normal(r));
    EXPECT_EQ(tamari_normal_form(l), r);
    EXPECT_EQ(tamari_normal_form(l, true), r);
    EXPECT_EQ(tamari_normal_form(r), r);
    EXPECT_EQ(fixed_set(l), fixed_set(r));
    EXPECT_EQ(for_to_nc(r), C(7, {{7, 3, 1}, {6, 5, 4}}));
}

TEST(Tamari, RotationPreservesFixedSet) {
    for (const auto& f : enumerate_bnfor(4)) {
        for (int u : rotation_sites(f)) EXPECT_EQ(fixed_set(f.rotate(u)), fixed_set(f)) << f.str();
        auto nf = tamari_normal_form(f);
        EXPECT_TRUE(is_normal(nf));
        EXPECT_EQ(tamari_normal_form(nf), nf);
    }
}

TEST(Tamari, ForToNcIsBruhatMax) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& f : enumerate_normal_forms(n)) {
            auto top = for_to_nc(f);
            for (const auto& w : fixed_set(f)) EXPECT_TRUE(bruhat_leq(w, top));
            if (right_children(f).empty()) EXPECT_EQ(top, ncperm(f));
        }
}

TEST(Tamari, PairRoundTrip) {
    for (const auto& g : enumerate_normal_forms(4)) {
        auto [F, S] = forest_to_pair(g);
        EXPECT_TRUE(is_indexed_forest(F));
        EXPECT_EQ(pair_to_forest(F, S), g);
    }
    for (const auto& F : enumerate_forests(4)) EXPECT_EQ(pair_to_forest(F, {}), F);
}

TEST(Tamari, PairsForCombExample) {
    auto F = BnForest::parse("B(B(B(1,2),3),4)", 4);
    auto nodes = F.internal_nodes();
    std::set<BnForest> outs;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> S;
        for (int b = 0; b < 3; ++b)
            if (mask >> b & 1) S.push_back(nodes[b]);
        auto g = pair_to_forest(F, S);
        EXPECT_TRUE(is_normal(g));
        EXPECT_EQ(for_to_nc(g), for_to_nc(F));
        outs.insert(g);
    }
    EXPECT_EQ(outs.size(), 8u);
}

TEST(Tamari, ForestForNc) {
    EXPECT_EQ(forest_for_nc(Permutation::identity(4)), BnForest::leaves(4));
    EXPECT_EQ(forest_for_nc(Permutation::long_cycle(3)), W("r1- e1 e1"));
    for (const auto& w : enumerate_nc(6)) {
        auto f = forest_for_nc(w);
        EXPECT_TRUE(is_indexed_forest(f));
        EXPECT_EQ(for_to_nc(f), w);
        std::vector<Transposition> spreads;
        for (int v : f.internal_nodes()) spreads.push_back(f.spread(v));
        std::sort(spreads.begin(), spreads.end());
        EXPECT_EQ(spreads, noncrossing_inversions(w)) << w.one_line();
    }
}

TEST(Families, Counts) {
    EXPECT_EQ(enumerate_trees(4).size(), 5u);
    auto forests = enumerate_forests(3);
    EXPECT_EQ(forests.size(), 5u);
    std::vector<int> by(3);
    for (const auto& f : forests) ++by[f.num_internal()];
    EXPECT_EQ(by, (std::vector<int>{1, 2, 2}));
    std::vector<int> nf(3);
    for (const auto& f : enumerate_normal_forms(3)) ++nf[f.black_count()];
    EXPECT_EQ(nf, (std::vector<int>{5, 6, 2}));
    EXPECT_EQ(lter(BnForest::parse("B(1,2)", 3)), std::vector<int>{1});
    EXPECT_EQ(lter(BnForest::parse("B(B(1,2),B(3,4))", 4)), (std::vector<int>{1, 3}));
}

TEST(Families, ZigzagForestsHaveTerminalN) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& z : enumerate_zigzag(n, n)) EXPECT_EQ(lter(z), std::vector<int>{n}) << z.str();
}

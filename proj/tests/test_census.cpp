#include <gtest/gtest.h>

#include "qfl/counts.hpp"
#include "qfl/flags.hpp"
#include "qfl/json_io.hpp"
#include "qfl/series.hpp"
#include "qfl/suites.hpp"

using namespace qfl;

namespace {

std::vector<mpz_class> Z(std::initializer_list<long> xs) {
    std::vector<mpz_class> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST(Counts, SmallTables) {
    EXPECT_EQ(count_faces(3).by_k, Z({5, 6, 2}));
    EXPECT_EQ(count_faces(1).by_k, Z({1}));
    EXPECT_EQ(count_forests(3).by_k, Z({1, 2, 2}));
    EXPECT_EQ(count_faces(4).total(), 67);
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(count_forests(n).total(), catalan(n));
        EXPECT_EQ(faces_closed_form(n).by_k[0], catalan(n));
    }
    EXPECT_EQ(catalan(8), 1430);
    EXPECT_EQ(binomial(10, 3), 120);
}

TEST(Counts, RowSumsMatchSeries) {
    auto g = series_G(7);
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(faces_closed_form(n).total(), g.at_u1(n));
        for (int k = 0; k < n; ++k) EXPECT_EQ(g.at(n, k), face_number(n, k));
    }
    EXPECT_EQ(count_faces(6).total(), 2307);
    EXPECT_EQ(count_faces(7).total(), 14589);
}

TEST(Counts, Hhmp) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(hhmp_closed_form(n), hhmp_by_words(n));
}

TEST(Series, Gcox) {
    auto s = series_Gcox(7);
    std::vector<long> want{1, 2, 6, 22, 90, 394, 1806};
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(s.at_u1(n), want[n - 1]);
        EXPECT_EQ(s.at_u1(n), large_schroeder(n - 1));
    }
    EXPECT_EQ(s.at(3, 0), 1);
    EXPECT_EQ(s.at(3, 1), 3);
    EXPECT_EQ(s.at(3, 2), 2);
}

TEST(Series, NewtonMatchesDirect) {
    for (int order : {1, 4, 9, kMaxSeriesOrder}) EXPECT_EQ(series_G(order), series_G_direct(order));
    EXPECT_EQ(series_G(5).at(1, 0), 1);
}

TEST(Fq, SmallCases) {
    EXPECT_EQ(fq_count(2).by_forests, Z({1, 1}));
    EXPECT_EQ(fq_count(3).by_forests, Z({1, 2, 2}));
    for (int n = 1; n <= 8; ++n) EXPECT_TRUE(fq_count(n).agree()) << n;
}

TEST(Json, Rationals) {
    EXPECT_EQ(rational_string(mpq_class(3)), "3/1");
    EXPECT_EQ(rational_string(mpq_class(-1, 2)), "-1/2");
    EXPECT_EQ(parse_rational("6/4"), mpq_class(3, 2));
    EXPECT_EQ(parse_rational("7"), mpq_class(7));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(Json, MatrixRoundTrip) {
    auto m = sample_orbit_point(BnForest::parse("B(B(1,2),3)", 3), 2);
    EXPECT_EQ(matrix_from_json(to_json(m)), m);
    EXPECT_EQ(matrix_from_json(nlohmann::json::parse(to_json(m).dump())), m);
}

TEST(Json, ReportRoundTrip) {
    Report r;
    r.suite = "duality";
    r.n = 3;
    r.seed = 9;
    r.cases = 25;
    r.failure_count = 1;
    r.failures.push_back({"F=B(1,2)", "nonzero"});
    r.stats["checks"] = 25;
    auto j = to_json(r);
    EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
    EXPECT_FALSE(j["passed"].get<bool>());
    auto back = report_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.suite, r.suite);
    EXPECT_EQ(back.n, 3);
    EXPECT_EQ(back.seed, 9u);
    EXPECT_EQ(back.failure_count, 1);
    ASSERT_EQ(back.failures.size(), 1u);
    EXPECT_EQ(back.failures[0].detail, "nonzero");
    EXPECT_EQ(back.stats, r.stats);
}

TEST(Suites, Registry) {
    EXPECT_EQ(suite_names().size(), 12u);
    for (const auto& s : suite_names()) {
        EXPECT_TRUE(is_suite(s));
        EXPECT_GE(suite_criterion(s), 1);
        EXPECT_LE(suite_criterion(s), 11);
    }
    EXPECT_FALSE(is_suite("nope"));
    EXPECT_THROW(run_suite("nope", {}), std::invalid_argument);
    SuiteParams p;
    p.n = 99;
    EXPECT_THROW(run_suite("duality", p), std::invalid_argument);
}

TEST(Suites, SmallRunsPass) {
    SuiteParams p;
    p.n = 3;
    for (const auto& s : suite_names()) {
        auto r = run_suite(s, p);
        EXPECT_TRUE(r.passed()) << s;
    }
    p.n = 4;
    auto d = run_suite("duality", p);
    EXPECT_TRUE(d.passed());
    EXPECT_EQ(d.cases, 196);
}

TEST(Suites, DeterministicAcrossJobs) {
    SuiteParams a;
    a.n = 3;
    a.seed = 42;
    auto b = a;
    b.jobs = 4;
    for (auto* s : {"plucker", "borel", "paving"}) EXPECT_EQ(to_json(run_suite(s, a)), to_json(run_suite(s, b))) << s;
}

TEST(Suites, ParallelForCoversRange) {
    std::vector<int> hit(1000);
    parallel_for(hit.size(), 4, [&](std::size_t i) { hit[i]++; });
    for (int h : hit) EXPECT_EQ(h, 1);
}

#include "qfl/suites.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "qfl/counts.hpp"
#include "qfl/eqsym.hpp"
#include "qfl/families.hpp"
#include "qfl/flags.hpp"
#include "qfl/forest_poly.hpp"
#include "qfl/gkm.hpp"
#include "qfl/noncrossing.hpp"
#include "qfl/operators.hpp"
#include "qfl/polytope.hpp"
#include "qfl/schubert.hpp"
#include "qfl/series.hpp"
#include "qfl/tamari.hpp"

namespace qfl {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
    int width = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (width <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < width; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

namespace {

struct Suite {
    std::string name;
    int criterion;
    int max_n;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> s = {
        {"enumeration", 1, 8}, {"series", 2, kMaxSeriesOrder}, {"fq", 3, 12},       {"tamari", 4, 5},
        {"duality", 5, 5},     {"flowup", 6, 5},               {"gkm", 6, 5},       {"plucker", 7, 5},
        {"paving", 8, 5},      {"borel", 9, 5},                {"positivity", 10, 5}, {"polytope", 11, 6},
    };
    return s;
}

// per-case results, merged in case order so reports do not depend on scheduling
struct Sink {
    long cases = 0;
    std::vector<Failure> failures;
    std::map<std::string, long> stats;

    void check(bool ok, const std::string& id, const std::string& detail = {}) {
        ++cases;
        if (!ok) failures.push_back({id, detail});
    }
    void fail(const std::string& id, const std::string& detail) { failures.push_back({id, detail}); }
};

void merge(Report& r, const Sink& s) {
    r.cases += s.cases;
    r.failure_count += static_cast<long>(s.failures.size());
    for (const auto& f : s.failures)
        if (r.failures.size() < kMaxListedFailures) r.failures.push_back(f);
    for (const auto& [k, v] : s.stats) r.stats[k] += v;
}

template <class F>
void run_cases(Report& r, std::size_t count, int jobs, F&& body) {
    std::vector<Sink> sinks(count);
    parallel_for(count, jobs, [&](std::size_t i) { body(i, sinks[i]); });
    for (const auto& s : sinks) merge(r, s);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                      static_cast<std::uint32_t>(c)};
    std::uint32_t w[2];
    seq.generate(w, w + 2);
    return (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
}

std::string join_perms(const std::vector<Permutation>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : ",") + w.one_line();
    return s;
}

// ---------------------------------------------------------------- enumeration

void suite_enumeration(Report& r, const SuiteParams& p) {
    Sink s;
    int n = p.n;
    auto a = enumerate_nc(n), b = enumerate_nc_by_filter(n), c = enumerate_nc_by_blocks(n);
    s.check(mpz_class(static_cast<long>(a.size())) == catalan(n), "nc", "|NC| = " + std::to_string(a.size()));
    s.check(a == b && b == c, "nc-routes", "enumeration routes disagree");
    auto trees = enumerate_trees(n);
    s.check(mpz_class(static_cast<long>(trees.size())) == catalan(n - 1), "trees",
            "|Tree| = " + std::to_string(trees.size()));
    auto fc = forests_closed_form(n), fe = forests_by_enumeration(n);
    s.check(fc == fe, "forest-census", fc.str() + " vs " + fe.str());
    s.check(fe.total() == catalan(n), "forest-total");
    if (n <= 7) {
        auto gc = faces_closed_form(n), ge = faces_by_enumeration(n);
        s.check(gc == ge, "face-census", gc.str() + " vs " + ge.str());
    } else {
        s.stats["face_census_skipped"] = 1;
    }
    merge(r, s);
}

// ---------------------------------------------------------------- series

void suite_series(Report& r, const SuiteParams& p) {
    Sink s;
    int ord = p.n;
    auto g = series_G(ord), gd = series_G_direct(ord), gc = series_Gcox(ord);
    s.check(g == gd, "routes", "Newton and direct expansions differ");
    for (int m = 1; m <= ord; ++m) {
        for (int k = 0; k < m; ++k) s.check(g.at(m, k) == face_number(m, k), "G[" + std::to_string(m) + "," + std::to_string(k) + "]");
        if (m <= 7) {
            auto fe = faces_by_enumeration(m);
            for (int k = 0; k < m; ++k)
                s.check(g.at(m, k) == fe.by_k[k], "G-enum[" + std::to_string(m) + "," + std::to_string(k) + "]");
        }
        s.check(gc.at_u1(m) == large_schroeder(m - 1), "Gcox-schroeder[" + std::to_string(m) + "]",
                gc.at_u1(m).get_str());
        if (m <= 7) {
            std::vector<mpz_class> by(m, 0);
            for (const auto& f : enumerate_normal_forms(m))
                if (f.roots().size() == 1) by[f.black_count()] += 1;
            for (int k = 0; k < m; ++k)
                s.check(gc.at(m, k) == by[k], "Gcox-enum[" + std::to_string(m) + "," + std::to_string(k) + "]",
                        gc.at(m, k).get_str() + " vs " + by[k].get_str());
        }
        if (m <= 6) s.check(hhmp_closed_form(m) == hhmp_by_words(m), "hhmp[" + std::to_string(m) + "]");
    }
    merge(r, s);
}

// ---------------------------------------------------------------- fq

void suite_fq(Report& r, const SuiteParams& p) {
    Sink s;
    int n = p.n;
    auto f = fq_count(n);
    s.check(f.agree(), "identity", f.str());
    mpz_class at1 = 0;
    for (const auto& c : f.by_forests) at1 += c;
    s.check(at1 == catalan(n), "q=1", at1.get_str());
    s.check(f.by_forests.back() == catalan(n - 1), "leading", f.by_forests.back().get_str());
    if (n <= 7) {
        auto fe = forests_by_enumeration(n), ge = faces_by_enumeration(n);
        QPoly lhs(n, 0), rhs(n, 0);
        for (int k = 0; k < n; ++k) {
            lhs[k] = fe.by_k[k];
            for (int j = 0; j <= k; ++j) rhs[j] += ge.by_k[k] * binomial(k, j) * ((k - j) % 2 ? -1 : 1);
        }
        s.check(lhs == rhs, "identity-enumerated");
    }
    merge(r, s);
}

// ---------------------------------------------------------------- tamari

// included sets S (complement of the skip mask) map to products; checks the Boolean sublattice property
void boolean_sublattice(const BnForest& f, Sink& s, const std::string& id) {
    auto by = fixed_set_by_mask(f);
    std::size_t full = by.size() - 1;
    auto at = [&](std::size_t inc) { return by[full & ~inc]; };
    std::set<Permutation> distinct(by.begin(), by.end());
    s.check(distinct.size() == by.size(), id + "/injective");
    bool order_ok = true, meet_ok = true, join_ok = true;
    for (std::size_t a = 0; a <= full; ++a)
        for (std::size_t b = 0; b <= full; ++b) {
            bool sub = (a & ~b) == 0;
            if (sub != kreweras_leq(at(a), at(b))) order_ok = false;
            if (kreweras_meet(at(a), at(b)) != at(a & b)) meet_ok = false;
            if (kreweras_join(at(a), at(b)) != at(a | b)) join_ok = false;
        }
    s.check(order_ok, id + "/order");
    s.check(meet_ok, id + "/meet");
    s.check(join_ok, id + "/join");
}

void suite_tamari(Report& r, const SuiteParams& p) {
    int n = p.n;
    auto all = enumerate_bnfor(n);
    std::vector<BnForest> nfs(all.size());
    std::vector<std::vector<Permutation>> fixed(all.size());
    run_cases(r, all.size(), p.jobs, [&](std::size_t i, Sink& s) {
        const auto& f = all[i];
        std::string id = f.str();
        fixed[i] = fixed_set(f);
        s.check(fixed[i] == fixed_set_via_vert(f), id + "/vert", join_perms(fixed[i]));
        boolean_sublattice(f, s, id);
        nfs[i] = tamari_normal_form(f);
        s.check(nfs[i] == tamari_normal_form(f, true), id + "/nf-order");
        s.check(is_normal(nfs[i]), id + "/nf-normal");
        auto top = for_to_nc(nfs[i]);
        bool is_max = std::find(fixed[i].begin(), fixed[i].end(), top) != fixed[i].end();
        for (const auto& u : fixed[i]) is_max = is_max && bruhat_leq(u, top);
        s.check(is_max, id + "/bruhat-max", top.one_line());
        for (const auto& u : fixed[i]) s.check(is_noncrossing(u), id + "/nc", u.one_line());
    });
    Sink s;
    std::map<BnForest, std::vector<Permutation>> by_nf;
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto [it, fresh] = by_nf.emplace(nfs[i], fixed[i]);
        if (!fresh) s.check(it->second == fixed[i], all[i].str() + "/class-fixed", "same normal form, different fixed set");
    }
    std::set<std::vector<Permutation>> seen;
    for (const auto& [nf, fs] : by_nf) s.check(seen.insert(fs).second, nf.str() + "/class-distinct");
    r.stats["classes"] = static_cast<long>(by_nf.size());
    merge(r, s);
    if (n > 4) return;
    std::vector<BnForest> reps;
    for (const auto& [nf, fs] : by_nf) reps.push_back(nf);
    run_cases(r, reps.size(), p.jobs, [&](std::size_t i, Sink& s2) {
        const auto& f = reps[i];
        std::set<BnForest> faces;
        for (const auto& h : face_set(f)) faces.insert(tamari_normal_form(h));
        const auto& fi = by_nf.at(f);
        for (const auto& g : reps) {
            const auto& gi = by_nf.at(g);
            bool sub = std::includes(fi.begin(), fi.end(), gi.begin(), gi.end());
            s2.check(sub == (faces.count(g) > 0), f.str() + ">" + g.str() + "/containment",
                     sub ? "fixed sets nested but not a face" : "face without nested fixed sets");
        }
    });
}

// ---------------------------------------------------------------- duality

void suite_duality(Report& r, const SuiteParams& p) {
    int n = p.n;
    auto fs = enumerate_forests(n);
    std::vector<MPoly> polys(fs.size());
    parallel_for(fs.size(), p.jobs, [&](std::size_t i) { polys[i] = forest_poly_double(fs[i], n); });
    run_cases(r, fs.size(), p.jobs, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < fs.size(); ++j) {
            MPoly v = phi_forest(fs[i], polys[j]);
            s.check(v == MPoly(i == j ? 1 : 0), fs[i].str() + "|" + fs[j].str(), v.str());
        }
    });
}

// ---------------------------------------------------------------- flowup / gkm

void suite_flowup(Report& r, const SuiteParams& p) {
    auto fr = verify_flowup_basis(p.n);
    Sink s;
    s.cases = fr.checks;
    for (const auto& f : fr.failures) s.fail("flowup", f);
    long counted = fr.vanishing_failures + fr.diagonal_failures + fr.edge_product_failures;
    for (long k = static_cast<long>(fr.failures.size()); k < counted; ++k) s.fail("flowup", "unlisted failure");
    s.stats["literal_sign_match"] = fr.sign_plus;
    s.stats["literal_sign_opposite"] = fr.sign_minus;
    // exact sign: every factor is a positive root t_{v(i)} - t_{v(j)}
    for (const auto& f : enumerate_forests(p.n)) {
        auto v = for_to_nc(f);
        MPoly prod(1);
        for (auto [i, j] : noncrossing_inversions(v)) prod *= MPoly::t(v(i)) - MPoly::t(v(j));
        s.check(ev(forest_poly_double(f, p.n), v) == prod, f.str() + "/diagonal-positive-roots");
    }
    merge(r, s);
}

void suite_gkm(Report& r, const SuiteParams& p) {
    int n = p.n;
    Sink s;
    auto g = build_nc_gkm(n);
    std::set<std::pair<Permutation, Permutation>> brute;
    auto nc = enumerate_nc(n);
    std::set<Permutation> ncset(nc.begin(), nc.end());
    for (const auto& w : nc)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                auto v = Permutation::transposition(n, a, b) * w;
                if (ncset.count(v)) brute.insert(std::minmax(w, v));
            }
    std::set<std::pair<Permutation, Permutation>> built;
    for (const auto& e : g.edges) built.insert(std::minmax(g.vertices[e.u], g.vertices[e.v]));
    s.check(built == brute, "edges", std::to_string(built.size()) + " vs " + std::to_string(brute.size()));
    auto basis = forest_flowup_basis(n);
    for (std::size_t k = 0; k < basis.classes.size(); ++k)
        s.check(is_gkm_class(basis.graph, basis.classes[k]), basis.forests[k].str() + "/class");
    std::mt19937_64 rng(mix(p.seed, static_cast<std::uint64_t>(n), 17));
    for (int trial = 0; trial < 10; ++trial) {
        MPoly f;
        for (int t = 0; t < 4; ++t) {
            Monomial m;
            int d = static_cast<int>(rng() % 4);
            for (int j = 0; j < d; ++j) {
                int v = static_cast<int>(rng() % (2 * n));
                if (v < n) m.set_x(v + 1, m.x(v + 1) + 1);
                else m.set_t(v - n + 1, m.t(v - n + 1) + 1);
            }
            f += MPoly::monomial(m, static_cast<long>(rng() % 7) - 3);
        }
        auto c = class_from_poly(basis.graph, f);
        auto coeffs = expand_in_flowup(basis, c);
        GkmClass back(c.size());
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            for (std::size_t v = 0; v < back.size(); ++v) back[v] += coeffs[k] * basis.classes[k][v];
        bool t_only = std::all_of(coeffs.begin(), coeffs.end(), [](const MPoly& q) { return !q.has_x(); });
        s.check(back == c && t_only, "expand/" + std::to_string(trial), f.str());
    }
    merge(r, s);
}

// ---------------------------------------------------------------- plucker

void suite_plucker(Report& r, const SuiteParams& p) {
    int n = p.n;
    auto all = enumerate_bnfor(n);
    run_cases(r, all.size(), p.jobs, [&](std::size_t i, Sink& s) {
        const auto& f = all[i];
        auto fixed = fixed_set(f);
        for (int k = 0; k < p.samples; ++k) {
            std::string id = f.str() + "/sample" + std::to_string(k);
            int misses = 0;
            for (int attempt = 0;; ++attempt) {
                auto m = sample_orbit_point(f, mix(p.seed, i, static_cast<std::uint64_t>(k) << 8 | attempt));
                auto sp = plucker_support(m);
                bool sub = std::includes(fixed.begin(), fixed.end(), sp.begin(), sp.end());
                if (sp != fixed && sub) {
                    ++s.stats["genericity_retries"];
                    if (++misses == 3) {
                        s.check(false, id, "three consecutive non-generic samples");
                        break;
                    }
                    continue;
                }
                s.check(sp == fixed, id, "support " + join_perms(sp));
                bool nc = std::all_of(sp.begin(), sp.end(), [](const Permutation& w) { return is_noncrossing(w); });
                s.check(nc, id + "/nc");
                break;
            }
        }
    });
    Sink s;
    std::mt19937_64 rng(mix(p.seed, static_cast<std::uint64_t>(n), 7));
    if (n >= 3) {
        auto w0 = Permutation::longest(n);
        for (int k = 0; k < 50; ++k) {
            int misses = 0;
            while (true) {
                auto m = random_flag(n, rng);
                if (flag_canonical_form(m).w != w0) {
                    ++s.stats["generic_flag_retries"];
                    if (++misses == 3) {
                        s.check(false, "generic/" + std::to_string(k), "three consecutive non-generic flags");
                        break;
                    }
                    continue;
                }
                s.check(!in_qfl(m), "generic/" + std::to_string(k), "generic flag inside QFl");
                break;
            }
        }
    }
    if (n >= 2) {
        auto all = enumerate_bnfor(n);
        int done = 0;
        for (int tries = 0; done < 50 && tries < 500; ++tries) {
            const auto& f = all[rng() % all.size()];
            auto m = sample_orbit_point(f, rng());
            std::vector<int> sites;
            for (int i = 1; i < n; ++i)
                if (relation_condition(m, i)) sites.push_back(i);
            if (sites.empty()) {
                ++s.stats["step_no_site"];
                continue;
            }
            int i = sites[rng() % sites.size()];
            auto m2 = *relation_step(m, i, rng);
            std::string id = "step/" + f.str() + "/" + std::to_string(i);
            s.check(related_i(m, m2, i), id + "/related");
            s.check(in_qfl(m2), id + "/qfl");
            ++done;
        }
        s.check(done == 50, "steps", "only " + std::to_string(done) + " steps found");
        for (int k = 0; k < 20; ++k) {
            auto h = random_flag(n - 1, rng);
            int i = 1 + static_cast<int>(rng() % (n - 1));
            s.check(related_i(psi_minus(i, h), psi_plus(i, h), i), "psi-pair/" + std::to_string(k));
        }
    }
    merge(r, s);
}

// ---------------------------------------------------------------- paving

void suite_paving(Report& r, const SuiteParams& p) {
    int n = p.n;
    auto all = enumerate_bnfor(n);
    run_cases(r, all.size(), p.jobs, [&](std::size_t i, Sink& s) {
        const auto& f = all[i];
        std::mt19937_64 rng(mix(p.seed, i, 3));
        for (int k = 0; k < p.samples; ++k) {
            auto m = sample_orbit_point(f, mix(p.seed, i, static_cast<std::uint64_t>(k) << 8));
            auto cm = cell_membership(m);
            s.check(cm.fits_nc, f.str() + "/sample" + std::to_string(k), cm.w.one_line());
            auto u = random_upper_triangular(n, rng);
            s.check(flag_canonical_form(m * u).r == flag_canonical_form(m).r, f.str() + "/coset" + std::to_string(k));
        }
    });
    Sink s;
    std::mt19937_64 rng(mix(p.seed, static_cast<std::uint64_t>(n), 5));
    auto g = build_nc_gkm(n);
    for (const auto& w : enumerate_nc(n)) {
        auto key = [](std::vector<MPoly> v) {
            std::vector<std::string> out;
            for (auto& q : v) out.push_back(q.str());
            std::sort(out.begin(), out.end());
            return out;
        };
        s.check(key(chart_weights(w)) == key(down_edge_labels(g, g.index_of(w))), w.one_line() + "/chart");
        auto full = bruhat_cell_pattern(w);
        if (full.stars() == nc_cell_pattern(w).stars()) continue;
        QMatrix m(n, n);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if (full.at(a, b) == Cell::One) m(a, b) = 1;
                else if (full.at(a, b) == Cell::Star) m(a, b) = draw_c(rng);
        auto cm = cell_membership(m * random_upper_triangular(n, rng));
        s.check(cm.w == w && !cm.fits_nc, w.one_line() + "/non-nc-star");
        s.check(!in_qfl(m), w.one_line() + "/non-nc-star-qfl");
    }
    for (int m = 1; m <= std::max(n, p.cone_n); ++m)
        for (const auto& w : enumerate_nc(m)) {
            auto c = check_inversion_cone(w);
            s.check(c.independent, w.one_line() + "/cone-independent");
            s.check(c.no_extra_roots, w.one_line() + "/cone-roots");
        }
    merge(r, s);
}

// ---------------------------------------------------------------- borel

MPoly random_poly(int n, int max_deg, std::mt19937_64& rng) {
    MPoly f;
    int terms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int d = static_cast<int>(rng() % (max_deg + 1));
        for (int j = 0; j < d; ++j) {
            int v = static_cast<int>(rng() % (2 * n));
            if (v < n) m.set_x(v + 1, m.x(v + 1) + 1);
            else m.set_t(v - n + 1, m.t(v - n + 1) + 1);
        }
        f += MPoly::monomial(m, static_cast<long>(rng() % 7) - 3);
    }
    return f;
}

void suite_borel(Report& r, const SuiteParams& p) {
    int n = p.n;
    std::vector<MPoly> fs;
    std::mt19937_64 rng(mix(p.seed, static_cast<std::uint64_t>(n), 9));
    for (int k = 0; k < p.polys; ++k) fs.push_back(random_poly(n, 4, rng));
    run_cases(r, fs.size(), p.jobs, [&](std::size_t i, Sink& s) {
        auto ex = expand_forest_basis(fs[i], n);
        MPoly back = ex.remainder;
        bool t_only = true;
        for (const auto& [F, c] : ex.coefficients) {
            back += c * forest_poly_double(F, n);
            t_only = t_only && !c.has_x();
        }
        std::string id = "expand/" + std::to_string(i);
        s.check(back == fs[i], id + "/reconstruct", fs[i].str());
        s.check(t_only, id + "/coefficients");
        s.check(ex.remainder_in_ideal && ideal_member(ex.remainder, n), id + "/remainder", ex.remainder.str());
    });
    Sink s;
    int cap = std::min(n, 3);
    for (const auto& z : enumerate_zigzag(n, cap)) {
        auto pz = fundamental_double(z, n);
        s.check(pz.is_zero() || ideal_member(pz, n), z.str() + "/zigzag-ev");
        s.check(is_eqsym(pz, n), z.str() + "/zigzag-eqsym");
        s.check(ideal_member(random_poly(n, 2, rng) * pz, n), z.str() + "/zigzag-multiple");
        ++s.stats["zigzag"];
    }
    for (const auto& f : enumerate_ltforest(n, cap)) {
        auto lt = lter(f);
        if (std::find(lt.begin(), lt.end(), n) == lt.end()) continue;
        auto pd = forest_poly_double(f, n);
        s.check(ideal_member(pd, n), f.str() + "/single-lift");
        s.check(t_to_zero(pd) == forest_poly_single(f, n), f.str() + "/single-t0");
        ++s.stats["single"];
    }
    merge(r, s);
}

// ---------------------------------------------------------------- positivity

void suite_positivity(Report& r, const SuiteParams& p) {
    int n = p.n;
    auto fs = enumerate_forests(n);
    auto ws = all_permutations(n);
    std::vector<MPoly> schub(ws.size());
    parallel_for(ws.size(), p.jobs, [&](std::size_t i) { schub[i] = schubert_double(ws[i]); });
    run_cases(r, fs.size(), p.jobs, [&](std::size_t i, Sink& s) {
        for (std::size_t j = 0; j < ws.size(); ++j) {
            MPoly v = phi_forest(fs[i], schub[j]);
            Graham g = graham_positive(v, n);
            s.check(g == Graham::Positive, fs[i].str() + "|" + ws[j].one_line(), to_string(g) + ": " + v.str());
            if (!v.is_zero()) ++s.stats["nonzero"];
        }
    });
}

// ---------------------------------------------------------------- polytope

void suite_polytope(Report& r, const SuiteParams& p) {
    int n = p.n;
    Point lam;
    for (int k = n; k >= 1; --k) lam.push_back(k);
    Sink s;
    for (const auto& t : enumerate_trees(n)) {
        auto facets = polypositroid_facets(t);
        auto verts = moment_vertices(t, lam);
        s.check(verts.size() == (std::size_t{1} << (n - 1)), t.str() + "/vertex-count");
        for (const auto& f : facets) {
            bool tight = false;
            for (const auto& v : verts) {
                s.check(f.holds(v, lam), t.str() + "/" + f.str());
                tight = tight || f.tight(v, lam);
            }
            s.check(tight, t.str() + "/" + f.str() + "/tight");
        }
    }
    for (const auto& f : enumerate_bnfor(n)) {
        auto e = check_cube_edges(f, lam);
        s.check(e.ok(), f.str() + "/edges");
        s.stats["edges"] += e.edges;
    }
    merge(r, s);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : suites()) v.push_back(s.name);
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    const auto& v = suite_names();
    return std::find(v.begin(), v.end(), name) != v.end();
}

int suite_criterion(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name) return s.criterion;
    throw std::invalid_argument("unknown suite: " + name);
}

Report run_suite(const std::string& name, const SuiteParams& params) {
    const Suite* def = nullptr;
    for (const auto& s : suites())
        if (s.name == name) def = &s;
    if (!def) throw std::invalid_argument("unknown suite: " + name);
    if (params.n < 1 || params.n > def->max_n)
        throw std::invalid_argument("suite " + name + " supports 1 <= n <= " + std::to_string(def->max_n));
    Report r;
    r.suite = name;
    r.n = params.n;
    r.seed = params.seed;
    static const std::map<std::string, void (*)(Report&, const SuiteParams&)> table = {
        {"enumeration", suite_enumeration}, {"series", suite_series},   {"fq", suite_fq},
        {"tamari", suite_tamari},           {"duality", suite_duality}, {"flowup", suite_flowup},
        {"gkm", suite_gkm},                 {"plucker", suite_plucker}, {"paving", suite_paving},
        {"borel", suite_borel},             {"positivity", suite_positivity}, {"polytope", suite_polytope},
    };
    table.at(name)(r, params);
    return r;
}

}  // namespace qfl

#include "qfl/forest_poly.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "modp_solver.hpp"
#include "qfl/families.hpp"
#include "qfl/operators.hpp"

namespace qfl {

namespace {

std::mutex g_mutex;
std::map<std::pair<std::string, int>, MPoly> g_cache;
ForestSolverStats g_stats;

void monomials(int d, const std::vector<int>& slots, std::size_t k, Monomial& cur, std::vector<Monomial>& out) {
    if (k + 1 == slots.size()) {
        cur.e[slots[k]] = static_cast<std::uint8_t>(d);
        out.push_back(cur);
        cur.e[slots[k]] = 0;
        return;
    }
    for (int a = d; a >= 0; --a) {
        cur.e[slots[k]] = static_cast<std::uint8_t>(a);
        monomials(d - a, slots, k + 1, cur, out);
    }
    cur.e[slots[k]] = 0;
}

MPoly x_to_t(const MPoly& f, int n) {
    VarMap m = identity_map();
    for (int i = 1; i <= n; ++i) m[x_slot(i)] = t_slot(i);
    return rename(f, m);
}

std::optional<MPoly> try_solve(int d, int n, int xv, const std::vector<MPoly>& targets) {
    std::vector<int> slots;
    for (int i = 1; i <= xv; ++i) slots.push_back(x_slot(i));
    for (int i = 1; i <= n; ++i) slots.push_back(t_slot(i));
    std::vector<Monomial> cols;
    Monomial cur;
    monomials(d, slots, 0, cur, cols);
    const int C = static_cast<int>(cols.size());

    // rows keyed by (constraint, monomial); constraint 0 is x = t, i >= 1 is e_i
    std::map<std::pair<int, Monomial>, int> row_id;
    std::vector<std::vector<std::pair<int, std::uint64_t>>> rows;
    std::vector<std::uint64_t> rhs;
    auto row = [&](int k, const Monomial& m) -> int {
        auto [it, fresh] = row_id.try_emplace({k, m}, static_cast<int>(rows.size()));
        if (fresh) {
            rows.emplace_back();
            rhs.push_back(0);
        }
        return it->second;
    };
    std::vector<std::pair<Monomial, int>> buf;
    for (int c = 0; c < C; ++c) {
        const Monomial& u = cols[c];
        Monomial ev;
        for (int i = 1; i <= n; ++i) ev.set_t(i, u.t(i) + u.x(i));
        rows[row(0, ev)].emplace_back(c, 1);
        for (int i = 1; i <= std::min(xv, n); ++i) {
            buf.clear();
            quasi_dd_monomial(i, u, buf);
            for (const auto& [m, s] : buf) rows[row(i, m)].emplace_back(c, s > 0 ? 1 : detail::kPrime - 1);
        }
    }
    for (int i = 1; i <= n; ++i)
        for (const auto& [m, c] : targets[i].terms()) rhs[row(i, m)] = detail::to_mod(c);

    detail::SparseSolver solver(C);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!solver.add_row(std::move(rows[r]), rhs[r])) return std::nullopt;
    auto sol = solver.solve();
    if (!sol) throw std::logic_error("forest polynomial system is underdetermined");
    std::vector<MPoly::Term> terms;
    for (int c = 0; c < C; ++c)
        if ((*sol)[c]) terms.emplace_back(cols[c], detail::lift_symmetric((*sol)[c]));
    MPoly p = MPoly::from_terms(std::move(terms));

    if (x_to_t(p, n) != MPoly()) return std::nullopt;
    for (int i = 1; i <= n; ++i)
        if (quasi_dd(i, p) != targets[i]) return std::nullopt;
    return p;
}

BnForest normalized(const BnForest& F, int n) {
    BnForest g = F.trimmed();
    return g.n() < n ? g.padded(n) : g;
}

MPoly truncated(const BnForest& F, int n) {
    if (F.black_count() != F.num_internal()) throw std::invalid_argument("forest polynomials need an all-black forest");
    if (n < 1 || n >= kMaxVars) throw std::invalid_argument("alphabet size out of range");
    BnForest key_forest = normalized(F, n);
    auto lt = lter(key_forest);
    if (!lt.empty() && lt.back() > n) throw std::invalid_argument("LTer(F) is not within [n]: " + F.str());
    int d = key_forest.num_internal();
    if (d == 0) return MPoly(1);
    auto key = std::make_pair(key_forest.str() + "#" + std::to_string(key_forest.n()), n);
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) {
            ++g_stats.cache_hits;
            return it->second;
        }
    }
    std::vector<MPoly> targets(n + 1);
    for (const auto& [x, G] : key_forest.peel()) {
        if (x.kind != LetterKind::E || x.index > n) continue;
        MPoly pg = truncated(G, n);
        VarMap m = identity_map();
        m[t_slot(n)] = -1;
        targets[x.index] = skip_t(rename(pg, m), x.index);
    }
    int L = lt.back();
    std::optional<MPoly> p = try_solve(d, n, L, targets);
    bool widened = false;
    if (!p && L < n) {
        widened = true;
        p = try_solve(d, n, n, targets);
    }
    if (!p) throw std::logic_error("no forest polynomial found for " + F.str());
    std::lock_guard<std::mutex> lock(g_mutex);
    ++g_stats.solves;
    if (widened) ++g_stats.widened;
    g_cache.emplace(key, *p);
    return *p;
}

}  // namespace

MPoly forest_poly_double(const BnForest& F, int n) { return truncated(F, n); }

MPoly forest_poly_stable(const BnForest& F) { return truncated(F, std::max(1, F.support())); }

MPoly forest_poly_single(const BnForest& F, int n) { return t_to_zero(truncated(F, n)); }

MPoly fundamental_double(const BnForest& Z, int n) {
    auto lt = lter(Z);
    if (lt.size() != 1 || lt[0] != n) throw std::invalid_argument("not a zigzag forest for this n");
    return truncated(Z, n);
}

ForestSolverStats forest_solver_stats() {
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_stats;
}

void clear_forest_poly_cache() {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache.clear();
    g_stats = {};
}

}  // namespace qfl

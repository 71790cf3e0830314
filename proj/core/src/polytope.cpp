#include "qfl/polytope.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qfl/noncrossing.hpp"
#include "qfl/qmatrix.hpp"

namespace qfl {

Point weight_action(const Permutation& w, const Point& lambda) {
    if (static_cast<int>(lambda.size()) != w.size()) throw std::invalid_argument("weight size mismatch");
    Point out(lambda.size());
    for (int i = 1; i <= w.size(); ++i) out[w(i) - 1] = lambda[i - 1];
    return out;
}

bool strictly_dominant(const Point& lambda) {
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (!(lambda[i - 1] > lambda[i])) return false;
    return true;
}

std::vector<Point> moment_vertices(const BnForest& f, const Point& lambda) {
    if (!strictly_dominant(lambda)) throw std::invalid_argument("lambda must be strictly decreasing");
    std::vector<Point> out;
    for (const auto& w : fixed_set(f)) out.push_back(weight_action(w, lambda));
    std::sort(out.begin(), out.end());
    return out;
}

std::string Facet::str() const {
    auto sum = [](const std::vector<int>& idx, const char* var) {
        std::string s;
        for (int j : idx) {
            if (!s.empty()) s += " + ";
            s += var + std::to_string(j);
        }
        return s;
    };
    return sum(z, "z") + (sense == Sense::Ge ? " >= " : " <= ") + sum(lambda, "l");
}

namespace {

mpq_class side(const std::vector<int>& idx, const Point& p) {
    mpq_class s = 0;
    for (int j : idx) s += p.at(j - 1);
    return s;
}

void collect_labels(const BnForest& t, int v, std::vector<int>& out) {
    if (t.is_leaf(v)) return;
    out.push_back(t.canonical_label(v));
    collect_labels(t, t.left(v), out);
    collect_labels(t, t.right(v), out);
}

}  // namespace

bool Facet::holds(const Point& p, const Point& lam) const {
    mpq_class l = side(z, p), r = side(lambda, lam);
    return sense == Sense::Ge ? l >= r : l <= r;
}

bool Facet::tight(const Point& p, const Point& lam) const { return side(z, p) == side(lambda, lam); }

std::vector<int> right_labels(const BnForest& t, int v) {
    std::vector<int> out{t.canonical_label(v)};
    collect_labels(t, t.right(v), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> left_labels(const BnForest& t, int v) {
    std::vector<int> out{t.canonical_label(v)};
    collect_labels(t, t.left(v), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Facet> polypositroid_facets(const BnForest& tree) {
    if (tree.roots().size() != 1 || tree.num_internal() != tree.n() - 1)
        throw std::invalid_argument("polypositroid facets need a single tree: " + tree.str());
    auto nodes = tree.internal_nodes();
    std::sort(nodes.begin(), nodes.end(),
              [&](int a, int b) { return tree.canonical_label(a) < tree.canonical_label(b); });
    std::vector<Facet> out;
    for (int v : nodes) {
        auto r = right_labels(tree, v);
        std::vector<int> rl;
        for (int j : r) rl.push_back(j + 1);
        out.push_back({r, rl, Sense::Ge});
        auto l = left_labels(tree, v);
        out.push_back({l, l, Sense::Le});
    }
    return out;
}

std::vector<NumericInequality> polypositroid_inequalities(const BnForest& tree, const Point& lambda) {
    if (!strictly_dominant(lambda)) throw std::invalid_argument("lambda must be strictly decreasing");
    std::vector<NumericInequality> out;
    for (const auto& f : polypositroid_facets(tree)) {
        NumericInequality q{std::vector<mpq_class>(tree.n(), 0), side(f.lambda, lambda), f.sense};
        for (int j : f.z) q.coeffs[j - 1] = 1;
        out.push_back(std::move(q));
    }
    return out;
}

EdgeCheck check_cube_edges(const BnForest& f, const Point& lambda) {
    auto verts = fixed_set_by_mask(f);
    int k = static_cast<int>(f.black_nodes().size());
    EdgeCheck out;
    for (unsigned s = 0; s < verts.size(); ++s)
        for (int b = 0; b < k; ++b) {
            if (s >> b & 1u) continue;
            const Permutation& u = verts[s];
            const Permutation& v = verts[s | 1u << b];
            ++out.edges;
            auto d = v * u.inverse();
            auto cyc = d.cycles();
            if (cyc.size() != 1 || cyc[0].size() != 2) {
                ++out.non_transposition;
                continue;
            }
            Point p = weight_action(u, lambda), q = weight_action(v, lambda);
            int nz = 0;
            mpq_class sum = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[i] != q[i]) {
                    ++nz;
                    sum += q[i] - p[i];
                }
            if (nz != 2 || sum != 0) ++out.not_root_parallel;
        }
    return out;
}

ConeCheck check_inversion_cone(const Permutation& w) {
    int n = w.size();
    auto inv = noncrossing_inversions(w);
    QMatrix a(n, static_cast<int>(inv.size()));
    std::vector<std::pair<int, int>> rays;
    for (std::size_t c = 0; c < inv.size(); ++c) {
        auto [i, j] = inv[c];
        a(w(j), static_cast<int>(c) + 1) = 1;
        a(w(i), static_cast<int>(c) + 1) = -1;
        rays.emplace_back(w(j), w(i));
    }
    ConeCheck out;
    out.independent = inv.empty() || a.rank() == static_cast<int>(inv.size());
    out.no_extra_roots = true;
    if (!out.independent) return out;
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            if (p == q || std::find(rays.begin(), rays.end(), std::make_pair(p, q)) != rays.end()) continue;
            std::vector<mpq_class> b(n, 0);
            b[p - 1] = 1;
            b[q - 1] = -1;
            if (inv.empty()) continue;
            auto x = a.solve(b);
            if (x && std::all_of(x->begin(), x->end(), [](const mpq_class& c) { return c >= 0; }))
                out.no_extra_roots = false;
        }
    return out;
}

}  // namespace qfl

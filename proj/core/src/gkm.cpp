#include "qfl/gkm.hpp"

#include <algorithm>
#include <stdexcept>

#include "qfl/families.hpp"
#include "qfl/forest_poly.hpp"
#include "qfl/noncrossing.hpp"
#include "qfl/operators.hpp"
#include "qfl/tamari.hpp"

namespace qfl {

int GkmGraph::index_of(const Permutation& w) const {
    auto it = std::find(vertices.begin(), vertices.end(), w);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

namespace {

GkmGraph build(int n, std::vector<Permutation> verts, bool kreweras_only) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::sort(verts.begin(), verts.end(), bruhat_extension_less);
    GkmGraph g;
    g.n = n;
    g.vertices = std::move(verts);
    for (int x = 0; x < static_cast<int>(g.vertices.size()); ++x)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                Permutation w = Permutation::transposition(n, a, b) * g.vertices[x];
                int y = g.index_of(w);
                if (y <= x) continue;
                if (kreweras_only && !kreweras_leq(g.vertices[x], w) && !kreweras_leq(w, g.vertices[x])) continue;
                g.edges.push_back({x, y, a, b, MPoly::t(a) - MPoly::t(b)});
            }
    return g;
}

}  // namespace

GkmGraph build_nc_gkm(int n) { return build(n, enumerate_nc(n), true); }

GkmGraph build_sn_gkm(int n) { return build(n, all_permutations(n), false); }

bool is_gkm_class(const GkmGraph& g, const GkmClass& c) {
    if (c.size() != g.vertices.size()) return false;
    for (const auto& e : g.edges) {
        MPoly d = c[e.v] - c[e.u];
        if (d.is_zero()) continue;
        try {
            divide_by_linear_form(d, e.label);
        } catch (const std::domain_error&) {
            return false;
        }
    }
    return true;
}

GkmClass class_from_poly(const GkmGraph& g, const MPoly& f) {
    GkmClass c;
    c.reserve(g.vertices.size());
    for (const auto& w : g.vertices) c.push_back(ev(f, w));
    return c;
}

GkmClass flowup_class(const GkmGraph& g, const BnForest& F) { return class_from_poly(g, forest_poly_double(F, g.n)); }

std::vector<MPoly> down_edge_labels(const GkmGraph& g, int w) {
    std::vector<MPoly> out;
    for (const auto& e : g.edges) {
        int other = e.u == w ? e.v : e.v == w ? e.u : -1;
        if (other >= 0 && bruhat_leq(g.vertices[other], g.vertices[w])) out.push_back(e.label);
    }
    return out;
}

namespace {

std::vector<MPoly> diagonal_factors(const Permutation& v) {
    std::vector<MPoly> out;
    for (auto [i, j] : noncrossing_inversions(v)) out.push_back(MPoly::t(v(j)) - MPoly::t(v(i)));
    return out;
}

MPoly product(const std::vector<MPoly>& fs) {
    MPoly p(1);
    for (const auto& f : fs) p *= f;
    return p;
}

}  // namespace

FlowupBasis forest_flowup_basis(int n) {
    FlowupBasis b;
    b.graph = build_nc_gkm(n);
    std::vector<BnForest> by_vertex(b.graph.vertices.size());
    for (const auto& F : enumerate_forests(n)) by_vertex[b.graph.index_of(for_to_nc(F))] = F;
    b.forests = by_vertex;
    for (std::size_t k = 0; k < by_vertex.size(); ++k) {
        b.classes.push_back(flowup_class(b.graph, by_vertex[k]));
        b.diagonal_factors.push_back(diagonal_factors(b.graph.vertices[k]));
    }
    return b;
}

FlowupReport verify_flowup_basis(int n) {
    FlowupReport r;
    r.n = n;
    FlowupBasis b = forest_flowup_basis(n);
    const auto& g = b.graph;
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        const Permutation& v = g.vertices[k];
        const GkmClass& c = b.classes[k];
        for (std::size_t w = 0; w < g.vertices.size(); ++w) {
            ++r.checks;
            if (!bruhat_leq(v, g.vertices[w]) && !c[w].is_zero()) {
                ++r.vanishing_failures;
                r.failures.push_back("nonzero below: F=" + b.forests[k].str() + " at " + g.vertices[w].one_line());
            }
        }
        MPoly prod = product(b.diagonal_factors[k]);
        if (c[k] == prod) {
            ++r.sign_plus;
        } else if (c[k] == -prod) {
            ++r.sign_minus;
        } else {
            ++r.diagonal_failures;
            r.failures.push_back("diagonal: F=" + b.forests[k].str() + " value " + c[k].str());
        }
        MPoly edge_prod = product(down_edge_labels(g, static_cast<int>(k)));
        if (c[k] != edge_prod && c[k] != -edge_prod) {
            ++r.edge_product_failures;
            r.failures.push_back("edge product: F=" + b.forests[k].str());
        }
    }
    return r;
}

std::vector<MPoly> expand_in_flowup(const FlowupBasis& basis, const GkmClass& c) {
    const auto& g = basis.graph;
    if (!is_gkm_class(g, c)) throw std::domain_error("not a GKM class");
    GkmClass residual = c;
    std::vector<MPoly> coeff(g.vertices.size());
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        if (residual[k].is_zero()) continue;
        MPoly q = residual[k];
        const MPoly& diag = basis.classes[k][k];
        for (const auto& f : basis.diagonal_factors[k]) q = divide_by_linear_form(q, f);
        if (diag != product(basis.diagonal_factors[k])) q = -q;
        coeff[k] = q;
        for (std::size_t w = 0; w < g.vertices.size(); ++w)
            if (!basis.classes[k][w].is_zero()) residual[w] -= q * basis.classes[k][w];
    }
    for (const auto& r : residual)
        if (!r.is_zero()) throw std::logic_error("flowup expansion left a residual");
    return coeff;
}

}  // namespace qfl

#pragma once

#include <string>
#include <vector>

#include "qfl/forest.hpp"
#include "qfl/mpoly.hpp"
#include "qfl/permutation.hpp"

namespace qfl {

struct GkmEdge {
    int u = 0;  // vertex indices, u < v in the vertex order
    int v = 0;
    int a = 0;  // vertices[v] = (a b) vertices[u], a < b
    int b = 0;
    MPoly label;  // t_a - t_b, first nonzero coefficient positive
};

struct GkmGraph {
    int n = 0;
    std::vector<Permutation> vertices;  // Bruhat linear extension order
    std::vector<GkmEdge> edges;
    int index_of(const Permutation& w) const;
};

GkmGraph build_nc_gkm(int n);
GkmGraph build_sn_gkm(int n);

using GkmClass = std::vector<MPoly>;  // aligned with GkmGraph::vertices

bool is_gkm_class(const GkmGraph& g, const GkmClass& c);
GkmClass class_from_poly(const GkmGraph& g, const MPoly& f);
// class of the double forest polynomial of the forest with ForToNC(F) = v
GkmClass flowup_class(const GkmGraph& g, const BnForest& F);

// labels of edges from w down to Bruhat-smaller neighbours
std::vector<MPoly> down_edge_labels(const GkmGraph& g, int w);

struct FlowupReport {
    int n = 0;
    long checks = 0;
    long vanishing_failures = 0;
    long diagonal_failures = 0;
    long sign_plus = 0;   // diagonal equals prod (t_{v(j)} - t_{v(i)})
    long sign_minus = 0;  // diagonal equals minus that product
    long edge_product_failures = 0;
    std::vector<std::string> failures;
    bool ok() const { return vanishing_failures == 0 && diagonal_failures == 0 && edge_product_failures == 0; }
};
FlowupReport verify_flowup_basis(int n);

struct FlowupBasis {
    GkmGraph graph;
    std::vector<BnForest> forests;  // forests[k] indexes vertex k
    std::vector<GkmClass> classes;
    std::vector<std::vector<MPoly>> diagonal_factors;
};
FlowupBasis forest_flowup_basis(int n);
// coefficients per vertex; throws std::domain_error if c is not a class
std::vector<MPoly> expand_in_flowup(const FlowupBasis& basis, const GkmClass& c);

}  // namespace qfl

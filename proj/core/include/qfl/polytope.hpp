#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qfl/forest.hpp"

namespace qfl {

using Point = std::vector<mpq_class>;

// (w.lambda)_{w(i)} = lambda_i
Point weight_action(const Permutation& w, const Point& lambda);
bool strictly_dominant(const Point& lambda);

// sorted; throws std::invalid_argument unless lambda is strictly decreasing
std::vector<Point> moment_vertices(const BnForest& f, const Point& lambda);

enum class Sense { Ge, Le };

// sum_{j in z} z_j (>= or <=) sum_{k in lambda} lambda_k
struct Facet {
    std::vector<int> z;
    std::vector<int> lambda;
    Sense sense;

    std::string str() const;
    bool holds(const Point& p, const Point& lam) const;
    bool tight(const Point& p, const Point& lam) const;
    bool operator==(const Facet&) const = default;
};

// internal-node label sets of the tree containing label i
std::vector<int> right_labels(const BnForest& tree, int v);
std::vector<int> left_labels(const BnForest& tree, int v);

// two facets per internal node in label order; throws unless the forest is a single tree on n leaves
std::vector<Facet> polypositroid_facets(const BnForest& tree);

struct NumericInequality {
    std::vector<mpq_class> coeffs;
    mpq_class rhs;
    Sense sense;
};
std::vector<NumericInequality> polypositroid_inequalities(const BnForest& tree, const Point& lambda);

struct EdgeCheck {
    int edges = 0;
    int non_transposition = 0;
    int not_root_parallel = 0;
    bool ok() const { return non_transposition == 0 && not_root_parallel == 0; }
};
// edges join the tau-products for S and S + {v}
EdgeCheck check_cube_edges(const BnForest& f, const Point& lambda);

struct ConeCheck {
    bool independent = false;
    bool no_extra_roots = false;
    bool ok() const { return independent && no_extra_roots; }
};
// rays e_{w(j)} - e_{w(i)} over the noncrossing inversions (i, j)
ConeCheck check_inversion_cone(const Permutation& w);

}  // namespace qfl

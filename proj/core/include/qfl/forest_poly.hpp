#pragma once

#include <cstddef>

#include "qfl/forest.hpp"
#include "qfl/mpoly.hpp"

namespace qfl {

// n-truncated double forest polynomial; F is an all-black forest with LTer(F) within [n].
// For F in Forest_n this is the ordinary double forest polynomial.
MPoly forest_poly_double(const BnForest& F, int n);
// stable polynomial, computed in the alphabet of the support
MPoly forest_poly_stable(const BnForest& F);
MPoly forest_poly_single(const BnForest& F, int n);
// requires LTer(Z) = {n}
MPoly fundamental_double(const BnForest& Z, int n);

struct ForestSolverStats {
    std::size_t solves = 0;
    std::size_t widened = 0;  // solves that needed the full x alphabet
    std::size_t cache_hits = 0;
};
ForestSolverStats forest_solver_stats();
void clear_forest_poly_cache();

}  // namespace qfl

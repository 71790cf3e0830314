#pragma once

#include <utility>
#include <vector>

#include "qfl/forest.hpp"
#include "qfl/mpoly.hpp"

namespace qfl {

bool is_eqsym(const MPoly& f, int n);
// ev_w(f) = 0 for every w in NC_n
bool ideal_member(const MPoly& f, int n);

struct ForestExpansion {
    std::vector<std::pair<BnForest, MPoly>> coefficients;  // over Forest_n, t-only
    MPoly remainder;
    bool remainder_in_ideal = false;
};
ForestExpansion expand_forest_basis(const MPoly& f, int n);
// [Phi_F] f using the canonical word of F
MPoly phi_forest(const BnForest& F, const MPoly& f);

}  // namespace qfl

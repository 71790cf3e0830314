#pragma once

#include "qfl/mpoly.hpp"
#include "qfl/permutation.hpp"

namespace qfl {

// top-down from w_0 by divided differences; the default route takes the first ascent
MPoly schubert_double(const Permutation& w);
MPoly schubert_double_via(const Permutation& w, bool last_ascent);
// prod_{i+j<=n} (x_i - t_j)
MPoly schubert_top(int n);

}  // namespace qfl

#include "qfl/eqsym.hpp"

#include <stdexcept>

#include "qfl/families.hpp"
#include "qfl/forest_poly.hpp"
#include "qfl/noncrossing.hpp"
#include "qfl/operators.hpp"

namespace qfl {

bool is_eqsym(const MPoly& f, int n) {
    for (int i = 1; i < n; ++i)
        if (bergeron_sottile(i, Sign::Minus, f) != bergeron_sottile(i, Sign::Plus, f)) return false;
    return true;
}

bool ideal_member(const MPoly& f, int n) {
    for (const auto& w : enumerate_nc(n))
        if (!ev(f, w).is_zero()) return false;
    return true;
}

MPoly phi_forest(const BnForest& F, const MPoly& f) { return phi_apply(canonical_word(F), f); }

ForestExpansion expand_forest_basis(const MPoly& f, int n) {
    if (f.max_x_index() > n || f.max_t_index() > n) throw std::invalid_argument("alphabet mismatch in expand_forest_basis");
    ForestExpansion out;
    out.remainder = f;
    for (const auto& F : enumerate_forests(n)) {
        MPoly c = phi_forest(F, f);
        if (!c.is_zero()) out.remainder -= c * forest_poly_double(F, n);
        out.coefficients.emplace_back(F, std::move(c));
    }
    out.remainder_in_ideal = ideal_member(out.remainder, n);
    return out;
}

}  // namespace qfl

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qfl/mpoly.hpp"
#include "qfl/permutation.hpp"
#include "qfl/reseq.hpp"

namespace qfl {

// slot images for a renaming substitution; -1 sends the variable to zero
using VarMap = std::array<int, 2 * kMaxVars>;
VarMap identity_map();
MPoly rename(const MPoly& f, const VarMap& m);
// general substitution: slot s -> images[s] (slots beyond images.size() fixed)
MPoly substitute(const MPoly& f, const std::vector<MPoly>& images);

MPoly swap_x(const MPoly& f, int i);
MPoly divided_difference(int i, const MPoly& f);

enum class Sign { Minus, Plus };
MPoly bergeron_sottile(int i, Sign s, const MPoly& f);
// e_i = (r_i^+ f - r_i^- f) / (x_i - t_i)
MPoly quasi_dd(int i, const MPoly& f);
// e_i via r_i^- d_i, term by term
MPoly quasi_dd_fast(int i, const MPoly& f);
// t_index 0 means t_i
void quasi_dd_monomial(int i, const Monomial& m, std::vector<std::pair<Monomial, int>>& out, int t_index = 0);

// exact quotient by (var_a - var_b); throws std::domain_error if not divisible
MPoly divide_linear(const MPoly& f, int slot_a, int slot_b);
// quotient by a linear form with unit leading coefficient; throws if not divisible
MPoly divide_by_linear_form(const MPoly& f, const MPoly& form);

// f(t_{w(1)}, ..., t_{w(n)}; t)
MPoly ev(const MPoly& f, const Permutation& w);
// t_j -> t_{j + [j >= i]}
MPoly skip_t(const MPoly& f, int i);
// x_j -> 0, t_j -> 0 for j > n
MPoly truncate(const MPoly& f, int n);
MPoly t_to_zero(const MPoly& f);

struct SubsetMask {
    int n = 0;
    std::uint32_t bits = 0;

    static SubsetMask from_elements(int n, const std::vector<int>& elems);
    bool contains(int i) const { return bits >> (i - 1) & 1u; }
    int size() const;
    std::vector<int> elements() const;
    // ([n] \ A)_i
    int complement_at(int i) const;
    std::string str() const;
    bool operator==(const SubsetMask&) const = default;
};
SubsetMask star(const SubsetMask& a, const SubsetMask& b);
SubsetMask star(int i, const SubsetMask& b);

MPoly r_shifted(int i, const SubsetMask& a, Sign s, const MPoly& f);
MPoly e_shifted(int i, const SubsetMask& a, const MPoly& f);

struct PhiOp {
    LetterKind kind;
    int index;
    SubsetMask mask;
    std::string str() const;
};
// outermost operator first, as written left to right
std::vector<PhiOp> phi_program(const ReseqWord& w);
std::string phi_program_str(const ReseqWord& w);
MPoly phi_apply(const ReseqWord& w, const MPoly& f);

enum class Graham { Positive, NotPositive, NotApplicable };
Graham graham_positive(const MPoly& p, int n);
std::string to_string(Graham g);

}  // namespace qfl

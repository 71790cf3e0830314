#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qfl/forest.hpp"
#include "qfl/mpoly.hpp"
#include "qfl/qmatrix.hpp"
#include "qfl/reseq.hpp"

namespace qfl {

// insert row i and column j with a 1 at (i, j)
QMatrix psi(int i, int j, const QMatrix& m);
QMatrix psi_minus(int i, const QMatrix& m);
QMatrix psi_plus(int i, const QMatrix& m);
// psi_plus with entry (i, i) set to c != 0
QMatrix g_insert(int i, const QMatrix& m, const mpq_class& c);
// requires column i of m to be e_j with j < i; psi_minus with entry (j, i) set to c
QMatrix g_insert_shifted(int i, const QMatrix& m, const mpq_class& c);

// {±1, ±2, ±3, ±1/2, ±5}
const std::vector<mpq_class>& c_pool();
mpq_class draw_c(std::mt19937_64& rng);

// one c per e-letter, in word order
QMatrix build_from_word(const ReseqWord& w, const std::vector<mpq_class>& cs);
// c of each e-letter keyed by the node it creates, so equivalent words give the same point
QMatrix orbit_point_from_word(const ReseqWord& w, std::uint64_t seed);
QMatrix sample_orbit_point(const BnForest& f, std::uint64_t seed);

struct CanonicalForm {
    Permutation w;
    QMatrix r;
};
// throws std::domain_error on singular input
CanonicalForm flag_canonical_form(const QMatrix& m);

mpq_class plucker(const QMatrix& m, const Permutation& w);

struct PluckerVector {
    int n = 0;
    std::map<Permutation, mpq_class> coords;
    std::vector<Permutation> support() const;
};
PluckerVector plucker_vector(const QMatrix& m);
std::vector<Permutation> plucker_support(const QMatrix& m);
bool in_qfl(const QMatrix& m);

enum class Cell { Zero, One, Star };

struct CellPattern {
    Permutation w;
    std::vector<Cell> cells;  // row major

    int n() const { return w.size(); }
    Cell at(int i, int j) const { return cells[static_cast<std::size_t>(i - 1) * n() + (j - 1)]; }
    int stars() const;
    std::string str() const;
};
// stars at (w(j), i) for every inversion
CellPattern bruhat_cell_pattern(const Permutation& w);
// stars only for noncrossing inversions
CellPattern nc_cell_pattern(const Permutation& w);
bool fits_pattern(const QMatrix& r, const CellPattern& p);

struct CellMembership {
    Permutation w;
    bool fits_nc = false;
};
CellMembership cell_membership(const QMatrix& m);

std::vector<MPoly> chart_weights(const Permutation& w);

bool spans_equal(const QMatrix& a, const QMatrix& b, int k);
// e_i lies in the span of the first i+1 columns and the first i-1 columns vanish in row i
bool relation_condition(const QMatrix& m, int i);
bool related_i(const QMatrix& a, const QMatrix& b, int i);

// invertible with entries from c_pool() and zero
QMatrix random_flag(int n, std::mt19937_64& rng);
QMatrix random_upper_triangular(int n, std::mt19937_64& rng);
// replaces column i by a m_i + b m_{i+1} and column i+1 by m_i; nullopt if condition (2) fails
std::optional<QMatrix> relation_step(const QMatrix& m, int i, std::mt19937_64& rng);

}  // namespace qfl

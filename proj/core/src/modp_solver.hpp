#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qfl::detail {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_inv(std::uint64_t a);
std::uint64_t to_mod(const mpz_class& v);
std::uint64_t to_mod(long v);
mpz_class lift_symmetric(std::uint64_t v);

// Sparse Gaussian elimination over Z/p for A x = b with ncols unknowns.
class SparseSolver {
public:
    explicit SparseSolver(int ncols) : ncols_(ncols), pivot_(ncols) {}
    // entries (col, value mod p), any order, duplicates summed; returns false on inconsistency
    bool add_row(std::vector<std::pair<int, std::uint64_t>> row, std::uint64_t rhs);
    int rank() const { return rank_; }
    bool inconsistent() const { return inconsistent_; }
    // unique solution, or nullopt when the rank is short
    std::optional<std::vector<std::uint64_t>> solve() const;

private:
    using Row = std::vector<std::pair<int, std::uint64_t>>;  // sorted by column; column ncols_ is the rhs
    int ncols_;
    int rank_ = 0;
    bool inconsistent_ = false;
    std::vector<Row> pivot_;
};

}  // namespace qfl::detail

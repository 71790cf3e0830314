#include "modp_solver.hpp"

#include <algorithm>

namespace qfl::detail {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(z & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t mod_inv(std::uint64_t a) {
    std::uint64_t r = 1, e = kPrime - 2;
    while (e) {
        if (e & 1) r = mod_mul(r, a);
        a = mod_mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t to_mod(const mpz_class& v) {
    return mpz_fdiv_ui(v.get_mpz_t(), kPrime);
}

std::uint64_t to_mod(long v) {
    long long r = static_cast<long long>(v % static_cast<long long>(kPrime));
    if (r < 0) r += static_cast<long long>(kPrime);
    return static_cast<std::uint64_t>(r);
}

mpz_class lift_symmetric(std::uint64_t v) {
    mpz_class r(static_cast<unsigned long>(v));
    if (v > kPrime / 2) r -= mpz_class(static_cast<unsigned long>(kPrime));
    return r;
}

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}

}  // namespace

bool SparseSolver::add_row(std::vector<std::pair<int, std::uint64_t>> entries, std::uint64_t rhs) {
    std::sort(entries.begin(), entries.end());
    Row row;
    for (const auto& [c, v] : entries) {
        if (!row.empty() && row.back().first == c)
            row.back().second = add(row.back().second, v);
        else
            row.emplace_back(c, v);
    }
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    if (rhs) row.emplace_back(ncols_, rhs);

    Row tmp;
    while (!row.empty() && row.front().first < ncols_) {
        int c = row.front().first;
        const Row& p = pivot_[c];
        if (p.empty()) {
            std::uint64_t inv = mod_inv(row.front().second);
            for (auto& e : row) e.second = mod_mul(e.second, inv);
            pivot_[c] = std::move(row);
            ++rank_;
            return true;
        }
        // row -= row[c] * p, with p[c] == 1
        std::uint64_t f = kPrime - row.front().second;
        tmp.clear();
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < p.size()) {
            if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                tmp.push_back(row[i++]);
            } else if (i == row.size() || p[j].first < row[i].first) {
                tmp.emplace_back(p[j].first, mod_mul(f, p[j].second));
                ++j;
            } else {
                std::uint64_t v = add(row[i].second, mod_mul(f, p[j].second));
                if (v) tmp.emplace_back(row[i].first, v);
                ++i;
                ++j;
            }
        }
        row.swap(tmp);
    }
    if (!row.empty()) {
        inconsistent_ = true;
        return false;
    }
    return true;
}

std::optional<std::vector<std::uint64_t>> SparseSolver::solve() const {
    if (inconsistent_ || rank_ < ncols_) return std::nullopt;
    std::vector<std::uint64_t> x(ncols_, 0);
    for (int c = ncols_ - 1; c >= 0; --c) {
        std::uint64_t v = 0;
        for (const auto& [col, a] : pivot_[c]) {
            if (col == c) continue;
            if (col == ncols_)
                v = add(v, a);
            else
                v = add(v, kPrime - mod_mul(a, x[col]));
        }
        x[c] = v;
    }
    return x;
}

}  // namespace qfl::detail

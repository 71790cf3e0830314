#pragma once

#include <optional>
#include <vector>

#include "qfl/permutation.hpp"

namespace qfl {

// A permutation whose cycles are backwards cycles on noncrossing blocks.
class NoncrossingPartition {
public:
    explicit NoncrossingPartition(Permutation w);  // throws if w is not noncrossing
    static NoncrossingPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    const Permutation& perm() const { return w_; }
    int size() const { return w_.size(); }
    // decreasing blocks ordered by their smallest element, singletons included
    std::vector<std::vector<int>> blocks() const;
    int absolute_length() const;

    bool operator==(const NoncrossingPartition& o) const { return w_ == o.w_; }

private:
    Permutation w_;
};

bool is_noncrossing(const Permutation& w);
bool kreweras_leq(const Permutation& u, const Permutation& v);
inline bool kreweras_leq(const NoncrossingPartition& u, const NoncrossingPartition& v) {
    return kreweras_leq(u.perm(), v.perm());
}

// (i,j), i<j, with w = (i j) u
std::optional<Transposition> cayley_edge(const Permutation& u, const Permutation& w);

Permutation kreweras_meet(const Permutation& u, const Permutation& v);
Permutation kreweras_join(const Permutation& u, const Permutation& v);

bool bruhat_leq(const Permutation& u, const Permutation& v);

std::vector<Transposition> inversions(const Permutation& w);
std::vector<Transposition> noncrossing_inversions(const Permutation& w);

// sorted by one-line word
std::vector<Permutation> enumerate_nc(int n);
std::vector<Permutation> enumerate_nc_by_filter(int n);
std::vector<Permutation> enumerate_nc_by_blocks(int n);

// pairs (u, v) with u covered by v in Kreweras order
std::vector<std::pair<Permutation, Permutation>> kreweras_covers(int n);

}  // namespace qfl

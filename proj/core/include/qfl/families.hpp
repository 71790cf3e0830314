#pragma once

#include <vector>

#include "qfl/forest.hpp"

namespace qfl {

// all results sorted and duplicate free
std::vector<BnForest> enumerate_trees(int n);
std::vector<BnForest> enumerate_forests(int n);
std::vector<BnForest> enumerate_bnfor(int n);
std::vector<BnForest> enumerate_normal_forms(int n);
// LTer(F) within [n] and at most cap internal nodes; minimal support, padded to n leaves
std::vector<BnForest> enumerate_ltforest(int n, int cap);
std::vector<BnForest> enumerate_zigzag(int n, int cap);

std::vector<int> lter(const BnForest& f);
// member of Forest_n: all black and every tree on a contiguous interval
bool is_indexed_forest(const BnForest& f);

}  // namespace qfl

#pragma once

#include <utility>
#include <vector>

#include "qfl/forest.hpp"

namespace qfl {

// internal nodes that are right children (RC)
std::vector<int> right_children(const BnForest& f);
bool is_normal(const BnForest& f);
// internal nodes whose right child is a white internal node
std::vector<int> rotation_sites(const BnForest& f);
// last_site picks the last rotation site instead of the first at every step
BnForest tamari_normal_form(const BnForest& f, bool last_site = false);

Permutation for_to_nc(const BnForest& f);

// F all black and un-nested, S a subset of its internal node ids
BnForest pair_to_forest(const BnForest& F, const std::vector<int>& S);
std::pair<BnForest, std::vector<int>> forest_to_pair(const BnForest& g);

BnForest forest_for_nc(const Permutation& w);

}  // namespace qfl

#pragma once

#include <vector>

#include "qfl/forest.hpp"

namespace qfl {

// Mutable pointer-style forest used for surgery; build() canonicalizes.
struct ForestBuilder {
    struct RNode {
        int left = -1;
        int right = -1;
        Color color = Color::Black;
        int label = 0;  // leaf label, 0 for internal nodes
        int parent = -1;
    };

    int n = 0;
    std::vector<RNode> nodes;
    std::vector<int> roots;

    ForestBuilder() = default;
    // raw index == canonical id of f
    explicit ForestBuilder(const BnForest& f);

    bool is_leaf(int x) const { return nodes[x].label > 0; }
    int add_leaf(int label);
    int add_internal(int l, int r, Color c);
    void replace_in_parent(int old_node, int new_node);
    void detach_as_root(int x);

    void whiten(int v) { nodes[v].color = Color::White; }
    void delete_left_edge(int v);
    void rotate(int u);
    void insert_leaf(int i);               // r_i^-
    void split_leaf(int i, Color c);       // r_i^+ / e_i
    int find_leaf(int label) const;

    // idmap[raw index] = canonical id, or -1 when unreachable
    BnForest build(std::vector<int>* idmap = nullptr) const;
};

}  // namespace qfl

#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qfl/permutation.hpp"
#include "qfl/reseq.hpp"

namespace qfl {

enum class Color : unsigned char { Black = 0, White = 1 };

// Bicolored nested forest on leaves 1..n.
// Node ids: leaf with label i has id i-1; internal nodes have ids n, n+1, ... in
// canonical order (trees by smallest leaf, preorder, left before right).
class BnForest {
public:
    struct Node {
        int left = -1;
        int right = -1;
        Color color = Color::Black;
        auto operator<=>(const Node&) const = default;
    };

    BnForest() = default;
    static BnForest leaves(int n);
    static BnForest from_word(const ReseqWord& w);
    // "W(B(1,W(2,3)),6) B(4,5)": trees separated by spaces, isolated leaves may be omitted
    static BnForest parse(const std::string& text, int n = 0);

    int n() const { return n_; }
    int num_internal() const { return static_cast<int>(nodes_.size()); }
    int black_count() const;
    int num_nodes() const { return n_ + num_internal(); }

    bool is_leaf(int id) const { return id < n_; }
    int left(int v) const { return nodes_[v - n_].left; }
    int right(int v) const { return nodes_[v - n_].right; }
    Color color(int v) const { return nodes_[v - n_].color; }
    int parent(int id) const { return parent_[id]; }
    int lo(int id) const { return lo_[id]; }
    int hi(int id) const { return hi_[id]; }
    const std::vector<int>& roots() const { return roots_; }
    std::vector<int> internal_nodes() const;
    std::vector<int> black_nodes() const;
    bool is_right_child(int id) const;
    bool is_terminal(int v) const;

    int canonical_label(int v) const;
    Transposition tau(int v) const;
    Transposition spread(int v) const;

    BnForest append(const Letter& x) const;
    BnForest whiten(int v) const;
    BnForest delete_left_edge(int v) const;
    // u(A, v(B, C)) -> v(u(A, B), C) where v = right(u) is internal and white
    BnForest rotate(int u) const;
    // per black node (in black_nodes() order): 0 keep, 1 whiten, 2 delete left edge
    BnForest apply_face(const std::vector<int>& choice) const;

    // trailing isolated leaves removed / appended
    BnForest trimmed() const;
    BnForest padded(int m) const;
    // largest leaf lying in a nontrivial tree, 0 if none
    int support() const;

    // all (x, G) with G.append(x) == *this
    std::vector<std::pair<Letter, BnForest>> peel() const;

    std::string str() const;

    bool operator==(const BnForest& o) const {
        return n_ == o.n_ && roots_ == o.roots_ && nodes_ == o.nodes_;
    }
    bool operator<(const BnForest& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (roots_ != o.roots_) return roots_ < o.roots_;
        return nodes_ < o.nodes_;
    }

private:
    friend struct ForestBuilder;
    int n_ = 0;
    std::vector<Node> nodes_;
    std::vector<int> roots_;
    std::vector<int> parent_, lo_, hi_;
};

BnForest forest_from_reseq(const ReseqWord& w);
bool words_equivalent(const ReseqWord& a, const ReseqWord& b);
ReseqWord canonical_word(const BnForest& f);
// up to limit distinct words of the class, canonical word first
std::vector<ReseqWord> representative_words(const BnForest& f, std::size_t limit);

// ancestors first; alt = trees right to left, right subtree before left
std::vector<int> linear_extension(const BnForest& f, bool alt = false);
Permutation ncperm(const BnForest& f);
Permutation ncperm_by_tau(const BnForest& f, bool alt = false);

std::vector<BnForest> face_set(const BnForest& f);
std::vector<BnForest> vert_set(const BnForest& f);
bool leq_re(const BnForest& g, const BnForest& f);

// sorted
std::vector<Permutation> fixed_set(const BnForest& f);
std::vector<Permutation> fixed_set_via_vert(const BnForest& f);
// entry S: product of tau_v over black nodes v whose bit in S (indexed as black_nodes()) is clear
std::vector<Permutation> fixed_set_by_mask(const BnForest& f);

}  // namespace qfl

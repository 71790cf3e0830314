#include "qfl/tamari.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "forest_builder.hpp"
#include "qfl/families.hpp"
#include "qfl/noncrossing.hpp"

namespace qfl {

std::vector<int> right_children(const BnForest& f) {
    std::vector<int> out;
    for (int v : f.internal_nodes())
        if (f.is_right_child(v)) out.push_back(v);
    return out;
}

bool is_normal(const BnForest& f) {
    for (int v : right_children(f))
        if (f.color(v) != Color::Black) return false;
    return true;
}

std::vector<int> rotation_sites(const BnForest& f) {
    std::vector<int> out;
    for (int u : f.internal_nodes()) {
        int v = f.right(u);
        if (!f.is_leaf(v) && f.color(v) == Color::White) out.push_back(u);
    }
    return out;
}

BnForest tamari_normal_form(const BnForest& f, bool last_site) {
    BnForest g = f;
    while (true) {
        auto sites = rotation_sites(g);
        if (sites.empty()) return g;
        g = g.rotate(last_site ? sites.back() : sites.front());
    }
}

Permutation for_to_nc(const BnForest& f) {
    if (!is_normal(f)) throw std::invalid_argument("ForToNC needs a normal form forest: " + f.str());
    ForestBuilder b(f);
    for (int v : right_children(f)) b.delete_left_edge(v);
    return ncperm(b.build());
}

BnForest pair_to_forest(const BnForest& F, const std::vector<int>& S) {
    if (!is_indexed_forest(F)) throw std::invalid_argument("pair_to_forest needs an indexed forest");
    for (int v : S)
        if (v < F.n() || v >= F.num_nodes()) throw std::invalid_argument("S is not a set of internal nodes");
    ForestBuilder b(F);
    for (int v : S)
        if (!F.is_right_child(v)) b.whiten(v);
    for (int v : S)
        if (F.is_right_child(v)) b.delete_left_edge(v);
    return b.build();
}

std::pair<BnForest, std::vector<int>> forest_to_pair(const BnForest& g) {
    if (!is_normal(g)) throw std::invalid_argument("forest_to_pair needs a normal form forest");
    ForestBuilder b(g);
    std::vector<char> in_s(g.num_nodes(), 0);
    for (int v : g.internal_nodes())
        if (g.color(v) == Color::White) in_s[v] = 1;

    for (int u : g.internal_nodes()) {
        int a = g.hi(g.left(u)), c = g.lo(g.right(u));
        std::vector<int> inside;
        for (int r : g.roots())
            if (g.lo(r) > a && g.hi(r) < c) inside.push_back(r);
        std::vector<int> outer;
        for (int r : inside) {
            bool nested = false;
            for (int r2 : inside)
                if (r2 != r && g.lo(r2) < g.lo(r) && g.hi(r) < g.hi(r2)) nested = true;
            if (!nested) outer.push_back(r);
        }
        if (outer.empty()) continue;
        std::sort(outer.begin(), outer.end(), [&](int x, int y) { return g.lo(x) < g.lo(y); });
        int cur = b.nodes[u].right;
        for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
            b.roots.erase(std::find(b.roots.begin(), b.roots.end(), *it));
            cur = b.add_internal(*it, cur, Color::Black);
            in_s.push_back(1);
        }
        b.nodes[u].right = cur;
        b.nodes[cur].parent = u;
    }
    for (auto& nd : b.nodes) nd.color = Color::Black;
    std::vector<int> idmap;
    BnForest F = b.build(&idmap);
    std::vector<int> S;
    for (std::size_t x = 0; x < idmap.size(); ++x)
        if (x < in_s.size() && in_s[x] && idmap[x] >= 0) S.push_back(idmap[x]);
    std::sort(S.begin(), S.end());
    if (!is_indexed_forest(F)) throw std::logic_error("forest_to_pair produced a nested forest");
    return {F, S};
}

BnForest forest_for_nc(const Permutation& w) {
    auto spreads = noncrossing_inversions(w);
    int n = w.size();
    ForestBuilder b;
    b.n = n;
    std::vector<int> leaf(n + 1);
    for (int i = 1; i <= n; ++i) leaf[i] = b.add_leaf(i);
    std::sort(spreads.begin(), spreads.end(),
              [](auto x, auto y) { return x.second - x.first < y.second - y.first; });
    std::map<Transposition, int> node;
    auto part = [&](int i, int j) -> int {
        if (i == j) return leaf[i];
        auto it = node.find({i, j});
        return it == node.end() ? -1 : it->second;
    };
    for (auto [i, j] : spreads) {
        int made = -1;
        for (int k = i; k < j && made < 0; ++k) {
            int l = part(i, k), r = part(k + 1, j);
            if (l >= 0 && r >= 0 && b.nodes[l].parent < 0 && b.nodes[r].parent < 0)
                made = b.add_internal(l, r, Color::Black);
        }
        if (made < 0) throw std::logic_error("spreads do not form a forest for " + w.one_line());
        node[{i, j}] = made;
    }
    for (int x = 0; x < static_cast<int>(b.nodes.size()); ++x)
        if (b.nodes[x].parent < 0) b.roots.push_back(x);
    BnForest F = b.build();
    if (for_to_nc(F) != w) throw std::logic_error("forest_for_nc mismatch for " + w.one_line());
    return F;
}

}  // namespace qfl

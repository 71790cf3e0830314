#include "qfl/noncrossing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qfl {

namespace {

std::vector<int> block_ids(const Permutation& w) {
    std::vector<int> id(w.size() + 1, -1);
    int next = 0;
    for (int a = 1; a <= w.size(); ++a) {
        if (id[a] >= 0) continue;
        for (int b = a; id[b] < 0; b = w(b)) id[b] = next;
        ++next;
    }
    return id;
}

bool blocks_noncrossing(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<int> id(n + 1), lo(blocks.size()), hi(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        lo[b] = *std::min_element(blocks[b].begin(), blocks[b].end());
        hi[b] = *std::max_element(blocks[b].begin(), blocks[b].end());
        for (int a : blocks[b]) id[a] = static_cast<int>(b);
    }
    for (const auto& blk : blocks) {
        std::vector<int> s(blk);
        std::sort(s.begin(), s.end());
        for (std::size_t k = 0; k + 1 < s.size(); ++k)
            for (int x = s[k] + 1; x < s[k + 1]; ++x)
                if (lo[id[x]] < s[k] || hi[id[x]] > s[k + 1]) return false;
    }
    return true;
}

}  // namespace

bool is_noncrossing(const Permutation& w) {
    auto cs = w.cycles(true);
    for (const auto& c : cs)
        for (std::size_t k = 0; k + 1 < c.size(); ++k)
            if (c[k] < c[k + 1]) return false;
    return blocks_noncrossing(cs, w.size());
}

NoncrossingPartition::NoncrossingPartition(Permutation w) : w_(std::move(w)) {
    if (!is_noncrossing(w_)) throw std::invalid_argument("not noncrossing: " + w_.one_line());
}

NoncrossingPartition NoncrossingPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<std::vector<int>> cyc;
    for (auto b : blocks) {
        std::sort(b.rbegin(), b.rend());
        cyc.push_back(std::move(b));
    }
    return NoncrossingPartition(Permutation::from_cycles(n, cyc));
}

std::vector<std::vector<int>> NoncrossingPartition::blocks() const {
    auto cs = w_.cycles(true);
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.back() < b.back(); });
    return cs;
}

int NoncrossingPartition::absolute_length() const {
    return w_.size() - static_cast<int>(w_.cycles(true).size());
}

bool kreweras_leq(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("size mismatch");
    auto bu = block_ids(u), bv = block_ids(v);
    for (int a = 1; a <= u.size(); ++a)
        if (bv[a] != bv[u(a)]) return false;
    return true;
}

std::optional<Transposition> cayley_edge(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw std::invalid_argument("size mismatch");
    Permutation d = w * u.inverse();
    std::vector<int> moved;
    for (int i = 1; i <= d.size(); ++i)
        if (d(i) != i) moved.push_back(i);
    if (moved.size() != 2) return std::nullopt;
    return Transposition{moved[0], moved[1]};
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    int n = u.size();
    if (n != v.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> a, b;
    for (int k = 1; k < n; ++k) {
        a.insert(std::upper_bound(a.begin(), a.end(), u(k)), u(k));
        b.insert(std::upper_bound(b.begin(), b.end(), v(k)), v(k));
        for (int i = 0; i < k; ++i)
            if (a[i] > b[i]) return false;
    }
    return true;
}

std::vector<Transposition> inversions(const Permutation& w) {
    std::vector<Transposition> out;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) out.emplace_back(i, j);
    return out;
}

std::vector<Transposition> noncrossing_inversions(const Permutation& w) {
    if (!is_noncrossing(w)) throw std::invalid_argument("not noncrossing: " + w.one_line());
    std::vector<Transposition> out;
    for (auto [i, j] : inversions(w))
        if (is_noncrossing(w * Permutation::transposition(w.size(), i, j))) out.emplace_back(i, j);
    return out;
}

std::vector<Permutation> enumerate_nc_by_filter(int n) {
    std::vector<Permutation> out;
    for (auto& w : all_permutations(n))
        if (is_noncrossing(w)) out.push_back(std::move(w));
    return out;
}

std::vector<Permutation> enumerate_nc_by_blocks(int n) {
    // noncrossing set partitions of [lo, hi]; the block of lo is chosen first, gaps filled recursively
    std::function<std::vector<std::vector<std::vector<int>>>(int, int)> parts = [&](int lo, int hi) {
        std::vector<std::vector<std::vector<int>>> res;
        if (lo > hi) {
            res.emplace_back();
            return res;
        }
        std::function<void(std::vector<int>&, std::vector<std::vector<int>>&)> grow =
            [&](std::vector<int>& blk, std::vector<std::vector<int>>& acc) {
                int last = blk.back();
                // close the block: everything after last is a separate region
                for (auto& tail : parts(last + 1, hi)) {
                    auto all = acc;
                    all.push_back(blk);
                    all.insert(all.end(), tail.begin(), tail.end());
                    res.push_back(std::move(all));
                }
                for (int nxt = last + 1; nxt <= hi; ++nxt) {
                    for (auto& inner : parts(last + 1, nxt - 1)) {
                        auto acc2 = acc;
                        acc2.insert(acc2.end(), inner.begin(), inner.end());
                        blk.push_back(nxt);
                        grow(blk, acc2);
                        blk.pop_back();
                    }
                }
            };
        std::vector<int> blk{lo};
        std::vector<std::vector<int>> acc;
        grow(blk, acc);
        return res;
    };
    std::vector<Permutation> out;
    for (const auto& p : parts(1, n)) out.push_back(NoncrossingPartition::from_blocks(n, p).perm());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enumerate_nc(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return n <= 8 ? enumerate_nc_by_filter(n) : enumerate_nc_by_blocks(n);
}

std::vector<std::pair<Permutation, Permutation>> kreweras_covers(int n) {
    auto nc = enumerate_nc(n);
    std::vector<std::pair<Permutation, Permutation>> out;
    for (const auto& u : nc) {
        int lu = NoncrossingPartition(u).absolute_length();
        for (const auto& v : nc) {
            if (u == v || !kreweras_leq(u, v)) continue;
            if (NoncrossingPartition(v).absolute_length() == lu + 1) out.emplace_back(u, v);
        }
    }
    return out;
}

}  // namespace qfl

namespace qfl {

namespace {

std::vector<std::vector<int>> groups(std::vector<int> parent) {
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    int n = static_cast<int>(parent.size()) - 1;
    std::vector<std::vector<int>> out(n + 1);
    for (int a = 1; a <= n; ++a) out[find(a)].push_back(a);
    std::erase_if(out, [](const auto& g) { return g.empty(); });
    return out;
}

}  // namespace

Permutation kreweras_meet(const Permutation& u, const Permutation& v) {
    int n = u.size();
    auto bu = block_ids(u), bv = block_ids(v);
    std::vector<std::vector<int>> blocks;
    std::vector<std::pair<int, int>> keys;
    for (int a = 1; a <= n; ++a) {
        auto key = std::make_pair(bu[a], bv[a]);
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(key);
            blocks.push_back({a});
        } else {
            blocks[it - keys.begin()].push_back(a);
        }
    }
    return NoncrossingPartition::from_blocks(n, blocks).perm();
}

Permutation kreweras_join(const Permutation& u, const Permutation& v) {
    int n = u.size();
    std::vector<int> parent(n + 1);
    for (int a = 0; a <= n; ++a) parent[a] = a;
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (int a = 1; a <= n; ++a) {
        parent[find(a)] = find(u(a));
        parent[find(a)] = find(v(a));
    }
    auto crossing = [](const std::vector<int>& x, const std::vector<int>& y) {
        for (int a1 : x)
            for (int a2 : x)
                for (int b1 : y)
                    for (int b2 : y)
                        if (a1 < b1 && b1 < a2 && a2 < b2) return true;
        return false;
    };
    while (true) {
        auto blocks = groups(parent);
        bool merged = false;
        for (std::size_t x = 0; x < blocks.size() && !merged; ++x)
            for (std::size_t y = 0; y < blocks.size() && !merged; ++y)
                if (x != y && crossing(blocks[x], blocks[y])) {
                    parent[find(blocks[y][0])] = find(blocks[x][0]);
                    merged = true;
                }
        if (!merged) return NoncrossingPartition::from_blocks(n, blocks).perm();
    }
}

}  // namespace qfl

#include "qfl/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "qfl/tamari.hpp"

namespace qfl {

namespace {

// all-black binary trees on leaves a..b, as text
const std::vector<std::string>& tree_texts(int a, int b, std::map<std::pair<int, int>, std::vector<std::string>>& memo) {
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::string> out;
    if (a == b) {
        out.push_back(std::to_string(a));
    } else {
        for (int k = a; k < b; ++k) {
            const auto& ls = tree_texts(a, k, memo);
            const auto& rs = tree_texts(k + 1, b, memo);
            for (const auto& l : ls)
                for (const auto& r : rs) out.push_back("B(" + l + "," + r + ")");
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

std::vector<BnForest> sorted_unique(std::vector<BnForest> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<BnForest> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::map<std::pair<int, int>, std::vector<std::string>> memo;
    std::vector<BnForest> out;
    for (const auto& t : tree_texts(1, n, memo)) out.push_back(BnForest::parse(t, n));
    return sorted_unique(std::move(out));
}

std::vector<BnForest> enumerate_forests(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::map<std::pair<int, int>, std::vector<std::string>> memo;
    std::vector<BnForest> out;
    std::vector<std::string> parts;
    auto rec = [&](auto&& self, int start) -> void {
        if (start > n) {
            std::string s;
            for (const auto& p : parts) s += p + " ";
            out.push_back(BnForest::parse(s, n));
            return;
        }
        for (int end = start; end <= n; ++end) {
            for (const auto& t : tree_texts(start, end, memo)) {
                parts.push_back(t);
                self(self, end + 1);
                parts.pop_back();
            }
        }
    };
    rec(rec, 1);
    return sorted_unique(std::move(out));
}

namespace {

std::vector<BnForest> grow(int n, bool normal_only) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::set<BnForest> level{BnForest::leaves(1)};
    for (int k = 2; k <= n; ++k) {
        std::set<BnForest> next;
        for (const auto& f : level) {
            auto add = [&](const Letter& x) {
                BnForest g = f.append(x);
                if (!normal_only || is_normal(g)) next.insert(std::move(g));
            };
            for (int i = 1; i <= k; ++i) add(Letter::rminus(i));
            for (int i = 1; i < k; ++i) {
                add(Letter::rplus(i));
                add(Letter::e(i));
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

}  // namespace

std::vector<BnForest> enumerate_bnfor(int n) { return grow(n, false); }

std::vector<BnForest> enumerate_normal_forms(int n) { return grow(n, true); }

std::vector<int> lter(const BnForest& f) {
    std::vector<int> out;
    for (int v : f.internal_nodes())
        if (f.is_terminal(v) && f.right(v) == f.left(v) + 1) out.push_back(f.left(v) + 1);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_indexed_forest(const BnForest& f) {
    if (f.black_count() != f.num_internal()) return false;
    for (int r : f.roots()) {
        int count = 0;
        for (int i = 0; i < f.n(); ++i) {
            int x = i;
            while (f.parent(x) >= 0) x = f.parent(x);
            if (x == r) ++count;
        }
        if (count != f.hi(r) - f.lo(r) + 1) return false;
    }
    return true;
}

std::vector<BnForest> enumerate_ltforest(int n, int cap) {
    if (n < 1 || cap < 0) throw std::invalid_argument("bad LTForest bounds");
    std::vector<BnForest> out;
    for (int m = n; m <= n + cap; ++m) {
        for (const auto& f : enumerate_forests(m)) {
            if (f.num_internal() > cap) continue;
            if (m > n && f.support() != m) continue;
            auto lt = lter(f);
            if (!lt.empty() && lt.back() > n) continue;
            out.push_back(f);
        }
    }
    return sorted_unique(std::move(out));
}

std::vector<BnForest> enumerate_zigzag(int n, int cap) {
    std::vector<BnForest> out;
    for (const auto& f : enumerate_ltforest(n, cap)) {
        auto lt = lter(f);
        if (lt.size() == 1 && lt[0] == n) out.push_back(f);
    }
    return out;
}

}  // namespace qfl

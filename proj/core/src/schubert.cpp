#include "qfl/schubert.hpp"

#include <map>
#include <mutex>

#include "qfl/operators.hpp"

namespace qfl {

MPoly schubert_top(int n) {
    MPoly p(1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j) p *= MPoly::x(i) - MPoly::t(j);
    return p;
}

namespace {

MPoly compute(const Permutation& w, bool last, std::map<Permutation, MPoly>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    int n = w.size();
    MPoly out;
    if (w == Permutation::longest(n)) {
        out = schubert_top(n);
    } else {
        int asc = 0;
        for (int i = 1; i < n; ++i)
            if (w(i) < w(i + 1) && (last || asc == 0)) asc = i;
        out = divided_difference(asc, compute(w * Permutation::simple(n, asc), last, memo));
    }
    memo.emplace(w, out);
    return out;
}

std::mutex g_mutex;
std::map<Permutation, MPoly> g_first, g_last;

}  // namespace

MPoly schubert_double_via(const Permutation& w, bool last_ascent) {
    std::lock_guard<std::mutex> lock(g_mutex);
    return compute(w, last_ascent, last_ascent ? g_last : g_first);
}

MPoly schubert_double(const Permutation& w) { return schubert_double_via(w, false); }

}  // namespace qfl

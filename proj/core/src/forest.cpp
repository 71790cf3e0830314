#include "qfl/forest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "forest_builder.hpp"

namespace qfl {

// ---------------------------------------------------------------- builder

ForestBuilder::ForestBuilder(const BnForest& f) : n(f.n()) {
    nodes.resize(f.num_nodes());
    for (int i = 0; i < f.n(); ++i) nodes[i].label = i + 1;
    for (int v = f.n(); v < f.num_nodes(); ++v) {
        nodes[v].left = f.left(v);
        nodes[v].right = f.right(v);
        nodes[v].color = f.color(v);
    }
    for (int x = 0; x < f.num_nodes(); ++x) nodes[x].parent = f.parent(x);
    roots = f.roots();
}

int ForestBuilder::add_leaf(int label) {
    nodes.push_back(RNode{-1, -1, Color::Black, label, -1});
    return static_cast<int>(nodes.size()) - 1;
}

int ForestBuilder::add_internal(int l, int r, Color c) {
    nodes.push_back(RNode{l, r, c, 0, -1});
    int id = static_cast<int>(nodes.size()) - 1;
    nodes[l].parent = id;
    nodes[r].parent = id;
    return id;
}

void ForestBuilder::replace_in_parent(int old_node, int new_node) {
    int p = nodes[old_node].parent;
    nodes[new_node].parent = p;
    if (p < 0) {
        std::replace(roots.begin(), roots.end(), old_node, new_node);
    } else if (nodes[p].left == old_node) {
        nodes[p].left = new_node;
    } else {
        nodes[p].right = new_node;
    }
}

void ForestBuilder::detach_as_root(int x) {
    nodes[x].parent = -1;
    roots.push_back(x);
}

void ForestBuilder::delete_left_edge(int v) {
    if (is_leaf(v)) throw std::invalid_argument("left edge deletion at a leaf");
    int l = nodes[v].left, r = nodes[v].right;
    replace_in_parent(v, r);
    detach_as_root(l);
    nodes[v].left = nodes[v].right = -1;
}

void ForestBuilder::rotate(int u) {
    int v = nodes[u].right;
    if (is_leaf(u) || is_leaf(v) || nodes[v].color != Color::White)
        throw std::invalid_argument("rotation needs a white internal right child");
    int b = nodes[v].left;
    replace_in_parent(u, v);
    nodes[u].right = b;
    nodes[b].parent = u;
    nodes[v].left = u;
    nodes[u].parent = v;
}

int ForestBuilder::find_leaf(int label) const {
    for (int x = 0; x < static_cast<int>(nodes.size()); ++x)
        if (nodes[x].label == label) return x;
    throw std::invalid_argument("no leaf " + std::to_string(label));
}

void ForestBuilder::insert_leaf(int i) {
    if (i < 1 || i > n + 1) throw std::invalid_argument("r- index out of range");
    for (auto& x : nodes)
        if (x.label >= i) ++x.label;
    roots.push_back(add_leaf(i));
    ++n;
}

void ForestBuilder::split_leaf(int i, Color c) {
    if (i < 1 || i > n) throw std::invalid_argument("leaf index out of range");
    int x = find_leaf(i);
    for (auto& y : nodes)
        if (y.label > i) ++y.label;
    int a = add_leaf(i), b = add_leaf(i + 1);
    nodes[x].label = 0;
    nodes[x].left = a;
    nodes[x].right = b;
    nodes[x].color = c;
    nodes[a].parent = x;
    nodes[b].parent = x;
    ++n;
}

BnForest ForestBuilder::build(std::vector<int>* idmap) const {
    int total = static_cast<int>(nodes.size());
    std::vector<int> minleaf(total, 0);
    std::function<int(int)> lo = [&](int x) -> int {
        if (is_leaf(x)) return minleaf[x] = nodes[x].label;
        int a = lo(nodes[x].left);
        lo(nodes[x].right);
        return minleaf[x] = a;
    };
    std::vector<int> rs = roots;
    for (int r : rs) lo(r);
    std::sort(rs.begin(), rs.end(), [&](int a, int b) { return minleaf[a] < minleaf[b]; });

    BnForest f;
    f.n_ = n;
    std::vector<int> map(total, -1);
    std::vector<char> seen(n + 1, 0);
    std::vector<int> order;
    std::function<void(int)> visit = [&](int x) {
        if (is_leaf(x)) {
            int lab = nodes[x].label;
            if (lab < 1 || lab > n || seen[lab]) throw std::logic_error("bad leaf labels in forest");
            seen[lab] = 1;
            map[x] = lab - 1;
            return;
        }
        map[x] = n + static_cast<int>(order.size());
        order.push_back(x);
        visit(nodes[x].left);
        visit(nodes[x].right);
    };
    for (int r : rs) visit(r);
    for (int i = 1; i <= n; ++i)
        if (!seen[i]) throw std::logic_error("missing leaf in forest");
    for (int x : order)
        f.nodes_.push_back(BnForest::Node{map[nodes[x].left], map[nodes[x].right], nodes[x].color});
    for (int r : rs) f.roots_.push_back(map[r]);

    int m = f.num_nodes();
    f.parent_.assign(m, -1);
    f.lo_.assign(m, 0);
    f.hi_.assign(m, 0);
    for (int i = 0; i < n; ++i) f.lo_[i] = f.hi_[i] = i + 1;
    for (int v = m - 1; v >= n; --v) {
        const auto& nd = f.nodes_[v - n];
        f.parent_[nd.left] = v;
        f.parent_[nd.right] = v;
        f.lo_[v] = f.lo_[nd.left];
        f.hi_[v] = f.hi_[nd.right];
    }
    if (idmap) *idmap = std::move(map);
    return f;
}

// ---------------------------------------------------------------- BnForest

BnForest BnForest::leaves(int n) {
    ForestBuilder b;
    b.n = n;
    for (int i = 1; i <= n; ++i) b.roots.push_back(b.add_leaf(i));
    return b.build();
}

BnForest BnForest::from_word(const ReseqWord& w) {
    ForestBuilder b;
    for (const auto& x : w.letters()) {
        switch (x.kind) {
            case LetterKind::RMinus: b.insert_leaf(x.index); break;
            case LetterKind::RPlus: b.split_leaf(x.index, Color::White); break;
            case LetterKind::E: b.split_leaf(x.index, Color::Black); break;
        }
    }
    return b.build();
}

BnForest BnForest::parse(const std::string& text, int n) {
    ForestBuilder b;
    std::size_t pos = 0;
    int maxlab = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto bad = [&] { return std::invalid_argument("bad forest text at " + std::to_string(pos) + ": " + text); };
    std::function<int()> node = [&]() -> int {
        skip();
        if (pos >= text.size()) throw bad();
        char ch = text[pos];
        if (ch == 'B' || ch == 'W') {
            ++pos;
            skip();
            if (pos >= text.size() || text[pos] != '(') throw bad();
            ++pos;
            int l = node();
            skip();
            if (pos >= text.size() || text[pos] != ',') throw bad();
            ++pos;
            int r = node();
            skip();
            if (pos >= text.size() || text[pos] != ')') throw bad();
            ++pos;
            return b.add_internal(l, r, ch == 'B' ? Color::Black : Color::White);
        }
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        if (v < 1) throw bad();
        maxlab = std::max(maxlab, v);
        return b.add_leaf(v);
    };
    for (skip(); pos < text.size(); skip()) b.roots.push_back(node());
    b.n = std::max(n, maxlab);
    std::vector<char> present(b.n + 1, 0);
    for (const auto& x : b.nodes)
        if (x.label > 0) {
            if (present[x.label]) throw bad();
            present[x.label] = 1;
        }
    for (int i = 1; i <= b.n; ++i)
        if (!present[i]) b.roots.push_back(b.add_leaf(i));
    return b.build();
}

int BnForest::black_count() const {
    int k = 0;
    for (const auto& nd : nodes_)
        if (nd.color == Color::Black) ++k;
    return k;
}

std::vector<int> BnForest::internal_nodes() const {
    std::vector<int> v(num_internal());
    for (int k = 0; k < num_internal(); ++k) v[k] = n_ + k;
    return v;
}

std::vector<int> BnForest::black_nodes() const {
    std::vector<int> v;
    for (int k = 0; k < num_internal(); ++k)
        if (nodes_[k].color == Color::Black) v.push_back(n_ + k);
    return v;
}

bool BnForest::is_right_child(int id) const {
    int p = parent_[id];
    return p >= 0 && right(p) == id;
}

bool BnForest::is_terminal(int v) const {
    return !is_leaf(v) && is_leaf(left(v)) && is_leaf(right(v));
}

int BnForest::canonical_label(int v) const {
    if (is_leaf(v)) throw std::invalid_argument("canonical label of a leaf");
    return hi_[left(v)];
}

Transposition BnForest::tau(int v) const {
    if (is_leaf(v)) throw std::invalid_argument("tau of a leaf");
    return {hi_[left(v)], hi_[v]};
}

Transposition BnForest::spread(int v) const {
    if (is_leaf(v)) throw std::invalid_argument("spread of a leaf");
    return {lo_[v], hi_[v]};
}

BnForest BnForest::append(const Letter& x) const {
    if (!letter_allowed(x, n_ + 1)) throw std::invalid_argument("letter " + x.str() + " not allowed");
    ForestBuilder b(*this);
    switch (x.kind) {
        case LetterKind::RMinus: b.insert_leaf(x.index); break;
        case LetterKind::RPlus: b.split_leaf(x.index, Color::White); break;
        case LetterKind::E: b.split_leaf(x.index, Color::Black); break;
    }
    return b.build();
}

BnForest BnForest::whiten(int v) const {
    if (is_leaf(v)) throw std::invalid_argument("whiten a leaf");
    ForestBuilder b(*this);
    b.whiten(v);
    return b.build();
}

BnForest BnForest::delete_left_edge(int v) const {
    ForestBuilder b(*this);
    b.delete_left_edge(v);
    return b.build();
}

BnForest BnForest::rotate(int u) const {
    ForestBuilder b(*this);
    b.rotate(u);
    return b.build();
}

BnForest BnForest::apply_face(const std::vector<int>& choice) const {
    auto bl = black_nodes();
    if (choice.size() != bl.size()) throw std::invalid_argument("face choice size");
    ForestBuilder b(*this);
    for (std::size_t k = 0; k < bl.size(); ++k)
        if (choice[k] == 1) b.whiten(bl[k]);
    for (std::size_t k = 0; k < bl.size(); ++k)
        if (choice[k] == 2) b.delete_left_edge(bl[k]);
    return b.build();
}

int BnForest::support() const {
    int s = 0;
    for (int r : roots_)
        if (!is_leaf(r)) s = std::max(s, hi_[r]);
    return s;
}

BnForest BnForest::trimmed() const {
    int s = support();
    if (s == n_) return *this;
    ForestBuilder b(*this);
    b.roots.erase(std::remove_if(b.roots.begin(), b.roots.end(),
                                 [&](int r) { return b.is_leaf(r) && b.nodes[r].label > s; }),
                  b.roots.end());
    b.n = s;
    return b.build();
}

BnForest BnForest::padded(int m) const {
    if (m < n_) throw std::invalid_argument("cannot pad to a smaller size");
    ForestBuilder b(*this);
    for (int i = n_ + 1; i <= m; ++i) b.roots.push_back(b.add_leaf(i));
    b.n = m;
    return b.build();
}

std::vector<std::pair<Letter, BnForest>> BnForest::peel() const {
    std::vector<std::pair<Letter, BnForest>> out;
    for (int r : roots_) {
        if (!is_leaf(r)) continue;
        int i = r + 1;
        ForestBuilder b(*this);
        b.roots.erase(std::find(b.roots.begin(), b.roots.end(), r));
        b.nodes[r].label = 0;
        for (auto& x : b.nodes)
            if (x.label > i) --x.label;
        b.n = n_ - 1;
        out.emplace_back(Letter::rminus(i), b.build());
    }
    for (int v = n_; v < num_nodes(); ++v) {
        if (!is_terminal(v)) continue;
        int a = left(v), c = right(v);
        if (c != a + 1) continue;
        int i = a + 1;
        ForestBuilder b(*this);
        b.nodes[v].left = b.nodes[v].right = -1;
        b.nodes[v].label = i;
        b.nodes[a].label = 0;
        b.nodes[c].label = 0;
        for (auto& x : b.nodes)
            if (x.label > i + 1) --x.label;
        b.n = n_ - 1;
        out.emplace_back(color(v) == Color::Black ? Letter::e(i) : Letter::rplus(i), b.build());
    }
    return out;
}

std::string BnForest::str() const {
    std::function<std::string(int)> rec = [&](int x) -> std::string {
        if (is_leaf(x)) return std::to_string(x + 1);
        return std::string(color(x) == Color::Black ? "B(" : "W(") + rec(left(x)) + "," + rec(right(x)) + ")";
    };
    std::string s;
    for (int r : roots_) {
        if (!s.empty()) s += ' ';
        s += rec(r);
    }
    return s;
}

// ---------------------------------------------------------------- words

BnForest forest_from_reseq(const ReseqWord& w) { return BnForest::from_word(w); }

bool words_equivalent(const ReseqWord& a, const ReseqWord& b) {
    if (a.size() != b.size()) return false;
    return forest_from_reseq(a) == forest_from_reseq(b);
}

namespace {

const ReseqWord& lexmin_word(const BnForest& f, std::map<BnForest, ReseqWord>& memo) {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    ReseqWord best;
    if (f.n() > 0) {
        bool have = false;
        for (auto& [x, g] : f.peel()) {
            ReseqWord cand = lexmin_word(g, memo) + x;
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
        }
        if (!have) throw std::logic_error("forest has no insertion word: " + f.str());
    }
    return memo.emplace(f, std::move(best)).first->second;
}

}  // namespace

ReseqWord canonical_word(const BnForest& f) {
    std::map<BnForest, ReseqWord> memo;
    return lexmin_word(f, memo);
}

std::vector<ReseqWord> representative_words(const BnForest& f, std::size_t limit) {
    std::vector<ReseqWord> out{canonical_word(f)};
    std::set<ReseqWord> seen(out.begin(), out.end());
    std::vector<Letter> suffix;
    std::function<void(const BnForest&)> rec = [&](const BnForest& g) {
        if (out.size() >= limit) return;
        if (g.n() == 0) {
            ReseqWord w(std::vector<Letter>(suffix.rbegin(), suffix.rend()));
            if (seen.insert(w).second) out.push_back(std::move(w));
            return;
        }
        for (auto& [x, h] : g.peel()) {
            suffix.push_back(x);
            rec(h);
            suffix.pop_back();
            if (out.size() >= limit) return;
        }
    };
    rec(f);
    return out;
}

// ---------------------------------------------------------------- permutations

std::vector<int> linear_extension(const BnForest& f, bool alt) {
    std::vector<int> out;
    std::function<void(int)> rec = [&](int x) {
        if (f.is_leaf(x)) return;
        out.push_back(x);
        if (alt) {
            rec(f.right(x));
            rec(f.left(x));
        } else {
            rec(f.left(x));
            rec(f.right(x));
        }
    };
    auto rs = f.roots();
    if (alt) std::reverse(rs.begin(), rs.end());
    for (int r : rs) rec(r);
    return out;
}

Permutation ncperm(const BnForest& f) {
    std::vector<std::vector<int>> cycles;
    std::function<void(int, std::vector<int>&)> collect = [&](int x, std::vector<int>& acc) {
        if (f.is_leaf(x)) {
            acc.push_back(x + 1);
            return;
        }
        collect(f.left(x), acc);
        collect(f.right(x), acc);
    };
    for (int r : f.roots()) {
        std::vector<int> leaves;
        collect(r, leaves);
        std::reverse(leaves.begin(), leaves.end());
        cycles.push_back(std::move(leaves));
    }
    return Permutation::from_cycles(f.n(), cycles);
}

namespace {

Permutation tau_product(const BnForest& f, const std::vector<int>& order, const std::vector<char>& skip) {
    std::vector<int> w(f.n());
    for (int i = 0; i < f.n(); ++i) w[i] = i + 1;
    // w <- w * tau, so the first factor of the product is applied last
    for (int v : order) {
        if (skip[v]) continue;
        auto [a, b] = f.tau(v);
        std::swap(w[a - 1], w[b - 1]);
    }
    return Permutation(std::move(w));
}

}  // namespace

Permutation ncperm_by_tau(const BnForest& f, bool alt) {
    return tau_product(f, linear_extension(f, alt), std::vector<char>(f.num_nodes(), 0));
}

std::vector<BnForest> face_set(const BnForest& f) {
    int k = f.black_count();
    std::vector<BnForest> out;
    std::vector<int> choice(k, 0);
    while (true) {
        out.push_back(f.apply_face(choice));
        int pos = 0;
        while (pos < k && choice[pos] == 2) choice[pos++] = 0;
        if (pos == k) break;
        ++choice[pos];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BnForest> vert_set(const BnForest& f) {
    int k = f.black_count();
    std::vector<BnForest> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> choice(k);
        for (int j = 0; j < k; ++j) choice[j] = (mask >> j & 1) ? 2 : 1;
        out.push_back(f.apply_face(choice));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool leq_re(const BnForest& g, const BnForest& f) {
    if (g.n() != f.n()) return false;
    auto faces = face_set(f);
    return std::binary_search(faces.begin(), faces.end(), g);
}

std::vector<Permutation> fixed_set_by_mask(const BnForest& f) {
    auto order = linear_extension(f);
    auto bl = f.black_nodes();
    std::vector<Permutation> out;
    for (unsigned mask = 0; mask < (1u << bl.size()); ++mask) {
        std::vector<char> skip(f.num_nodes(), 0);
        for (std::size_t j = 0; j < bl.size(); ++j)
            if (mask >> j & 1) skip[bl[j]] = 1;
        out.push_back(tau_product(f, order, skip));
    }
    return out;
}

std::vector<Permutation> fixed_set(const BnForest& f) {
    auto out = fixed_set_by_mask(f);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Permutation> fixed_set_via_vert(const BnForest& f) {
    std::vector<Permutation> out;
    for (const auto& g : vert_set(f)) out.push_back(ncperm(g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace qfl

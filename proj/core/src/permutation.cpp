#include "qfl/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfl {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > size() || seen[v])
            throw std::invalid_argument("not a permutation word");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw std::invalid_argument("bad transposition");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[a - 1], w[b - 1]);
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::long_cycle(int n) {
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = i == 1 ? n : i - 1;
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = n + 1 - i;
    return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<char> used(n + 1, 0);
    for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            int a = c[k];
            if (a < 1 || a > n || used[a]) throw std::invalid_argument("bad cycle");
            used[a] = 1;
            w[a - 1] = c[(k + 1) % c.size()];
        }
    }
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    bool separated = text.find_first_of(" ,") != std::string::npos;
    if (separated) {
        std::string s = text;
        std::replace(s.begin(), s.end(), ',', ' ');
        std::istringstream in(s);
        int v;
        while (in >> v) w.push_back(v);
        if (!in.eof()) throw std::invalid_argument("bad permutation: " + text);
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("bad permutation: " + text);
            w.push_back(ch - '0');
        }
    }
    if (w.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (o.size() != size()) throw std::invalid_argument("size mismatch");
    std::vector<int> w(size());
    for (int i = 0; i < size(); ++i) w[i] = w_[o.w_[i] - 1];
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(size());
    for (int i = 0; i < size(); ++i) w[w_[i] - 1] = i + 1;
    return Permutation(std::move(w));
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (w_[i] != i + 1) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles(bool with_fixed) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(size() + 1, 0);
    for (int start = size(); start >= 1; --start) {
        if (seen[start]) continue;
        std::vector<int> c;
        for (int a = start; !seen[a]; a = (*this)(a)) {
            seen[a] = 1;
            c.push_back(a);
        }
        if (c.size() > 1 || with_fixed) out.push_back(std::move(c));
    }
    return out;
}

std::string Permutation::one_line() const {
    std::string s;
    bool wide = size() >= 10;
    for (int i = 0; i < size(); ++i) {
        if (wide && i) s += ' ';
        s += std::to_string(w_[i]);
    }
    return s;
}

std::string Permutation::cycle_string() const {
    auto cs = cycles(false);
    if (cs.empty()) return "()";
    std::string s;
    bool wide = size() >= 10;
    for (const auto& c : cs) {
        s += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (wide && k) s += ' ';
            s += std::to_string(c[k]);
        }
        s += ')';
    }
    return s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

bool bruhat_extension_less(const Permutation& a, const Permutation& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.word() < b.word();
}

}  // namespace qfl

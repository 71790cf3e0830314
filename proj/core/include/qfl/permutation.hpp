#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qfl {

// A permutation of [n] in one-line notation, 1-based values.
// Products are ordinary composition: (u * v)(i) = u(v(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation simple(int n, int i);
    static Permutation transposition(int n, int a, int b);
    // c = (n n-1 ... 1) = s_{n-1} ... s_1
    static Permutation long_cycle(int n);
    static Permutation longest(int n);
    // cycle (a b c) sends a -> b -> c -> a
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    // "312", "3 1 2" or "3,1,2"
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& word() const { return w_; }

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    int length() const;
    bool is_identity() const;

    // Cycles of length >= 2 unless with_fixed, each listed from its maximum.
    std::vector<std::vector<int>> cycles(bool with_fixed = false) const;

    std::string one_line() const;
    std::string cycle_string() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

std::vector<Permutation> all_permutations(int n);

// (length, one-line lexicographic)
bool bruhat_extension_less(const Permutation& a, const Permutation& b);

using Transposition = std::pair<int, int>;

}  // namespace qfl

template <>
struct std::hash<qfl::Permutation> {
    std::size_t operator()(const qfl::Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.word()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};

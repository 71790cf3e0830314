#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qfl {

enum class LetterKind : unsigned char { RMinus = 0, RPlus = 1, E = 2 };

struct Letter {
    LetterKind kind = LetterKind::RMinus;
    int index = 1;

    static Letter rminus(int i) { return {LetterKind::RMinus, i}; }
    static Letter rplus(int i) { return {LetterKind::RPlus, i}; }
    static Letter e(int i) { return {LetterKind::E, i}; }

    std::string str() const;
    static Letter parse(const std::string& token);

    auto operator<=>(const Letter&) const = default;
};

class ReseqWord {
public:
    ReseqWord() = default;
    explicit ReseqWord(std::vector<Letter> letters);  // validates the positional bounds
    static ReseqWord parse(const std::string& text);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& operator[](int k) const { return letters_[k]; }
    int black_count() const;
    std::string str() const;

    ReseqWord operator+(const Letter& x) const;

    auto operator<=>(const ReseqWord&) const = default;

private:
    std::vector<Letter> letters_;
};

// letter allowed in position k (1-based)
bool letter_allowed(const Letter& x, int k);

std::vector<ReseqWord> enumerate_reseq(int n);

}  // namespace qfl

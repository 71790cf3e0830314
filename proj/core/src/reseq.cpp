#include "qfl/reseq.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qfl {

std::string Letter::str() const {
    switch (kind) {
        case LetterKind::RMinus: return "r" + std::to_string(index) + "-";
        case LetterKind::RPlus: return "r" + std::to_string(index) + "+";
        case LetterKind::E: return "e" + std::to_string(index);
    }
    return {};
}

Letter Letter::parse(const std::string& t) {
    auto bad = [&] { return std::invalid_argument("bad letter: " + t); };
    if (t.size() < 2) throw bad();
    std::size_t end = 1;
    while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
    if (end == 1) throw bad();
    int idx = std::stoi(t.substr(1, end - 1));
    if (idx < 1) throw bad();
    std::string rest = t.substr(end);
    if (t[0] == 'e' && rest.empty()) return e(idx);
    if (t[0] == 'r' && rest == "-") return rminus(idx);
    if (t[0] == 'r' && rest == "+") return rplus(idx);
    throw bad();
}

bool letter_allowed(const Letter& x, int k) {
    if (x.index < 1) return false;
    return x.kind == LetterKind::RMinus ? x.index <= k : x.index <= k - 1;
}

ReseqWord::ReseqWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (int k = 1; k <= size(); ++k)
        if (!letter_allowed(letters_[k - 1], k))
            throw std::invalid_argument("letter " + letters_[k - 1].str() + " not allowed at position " +
                                        std::to_string(k));
}

ReseqWord ReseqWord::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<Letter> ls;
    std::string tok;
    while (in >> tok) ls.push_back(Letter::parse(tok));
    return ReseqWord(std::move(ls));
}

int ReseqWord::black_count() const {
    int k = 0;
    for (const auto& x : letters_)
        if (x.kind == LetterKind::E) ++k;
    return k;
}

std::string ReseqWord::str() const {
    std::string s;
    for (const auto& x : letters_) {
        if (!s.empty()) s += ' ';
        s += x.str();
    }
    return s;
}

ReseqWord ReseqWord::operator+(const Letter& x) const {
    auto ls = letters_;
    ls.push_back(x);
    return ReseqWord(std::move(ls));
}

std::vector<ReseqWord> enumerate_reseq(int n) {
    std::vector<std::vector<Letter>> cur{{}};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : cur) {
            for (int i = 1; i <= k; ++i) {
                auto a = w;
                a.push_back(Letter::rminus(i));
                next.push_back(std::move(a));
            }
            for (int i = 1; i < k; ++i) {
                auto a = w;
                a.push_back(Letter::rplus(i));
                next.push_back(std::move(a));
                auto b = w;
                b.push_back(Letter::e(i));
                next.push_back(std::move(b));
            }
        }
        cur = std::move(next);
    }
    std::vector<ReseqWord> out;
    out.reserve(cur.size());
    for (auto& w : cur) out.emplace_back(std::move(w));
    return out;
}

}  // namespace qfl

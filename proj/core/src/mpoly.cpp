#include "qfl/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qfl {

int Monomial::degree() const { return x_degree() + t_degree(); }

int Monomial::x_degree() const {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += e[i];
    return d;
}

int Monomial::t_degree() const {
    int d = 0;
    for (int i = kMaxVars; i < 2 * kMaxVars; ++i) d += e[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    for (int s = 0; s < 2 * kMaxVars; ++s) {
        int v = e[s] + o.e[s];
        if (v > 255) throw std::overflow_error("exponent overflow");
        m.e[s] = static_cast<std::uint8_t>(v);
    }
    return m;
}

MPoly::MPoly(long c) {
    if (c != 0) terms_.emplace_back(Monomial{}, mpz_class(c));
}

MPoly::MPoly(const mpz_class& c) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MPoly MPoly::var(int slot) {
    if (slot < 0 || slot >= 2 * kMaxVars) throw std::out_of_range("variable slot");
    Monomial m;
    m.e[slot] = 1;
    return monomial(m);
}

MPoly MPoly::x(int i) {
    if (i < 1 || i > kMaxVars) throw std::out_of_range("x index");
    return var(x_slot(i));
}

MPoly MPoly::t(int i) {
    if (i < 1 || i > kMaxVars) throw std::out_of_range("t index");
    return var(t_slot(i));
}

MPoly MPoly::monomial(const Monomial& m, const mpz_class& c) {
    MPoly p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
    MPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void MPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < terms_.size();) {
        std::size_t j = k + 1;
        mpz_class c = terms_[k].second;
        while (j < terms_.size() && terms_[j].first == terms_[k].first) c += terms_[j++].second;
        if (c != 0) {
            terms_[out].first = terms_[k].first;
            terms_[out].second = c;
            ++out;
        }
        k = j;
    }
    terms_.resize(out);
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool MPoly::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool MPoly::has_x() const {
    for (const auto& [m, c] : terms_)
        if (m.x_degree() > 0) return true;
    return false;
}

int MPoly::max_x_index() const {
    int r = 0;
    for (const auto& [m, c] : terms_)
        for (int i = 1; i <= kMaxVars; ++i)
            if (m.x(i)) r = std::max(r, i);
    return r;
}

int MPoly::max_t_index() const {
    int r = 0;
    for (const auto& [m, c] : terms_)
        for (int i = 1; i <= kMaxVars; ++i)
            if (m.t(i)) r = std::max(r, i);
    return r;
}

mpz_class MPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& a, const Monomial& b) { return a.first < b; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

mpz_class MPoly::constant_term() const { return coefficient(Monomial{}); }

MPoly MPoly::operator-() const {
    MPoly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            merged.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            merged.push_back(o.terms_[j++]);
        } else {
            mpz_class c = terms_[i].second + o.terms_[j].second;
            if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    std::vector<MPoly::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
    return MPoly::from_terms(std::move(out));
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    MPoly r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

namespace {

// graded, x before t, lower indices dominate
bool print_before(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.e > b.e;
}

}  // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return print_before(a->first, b->first); });
    std::string s;
    bool first = true;
    for (const Term* t : order) {
        mpz_class c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::vector<std::string> factors;
        const Monomial& m = t->first;
        bool is_const = m.degree() == 0;
        if (c != 1 || is_const) factors.push_back(c.get_str());
        for (int i = 1; i <= kMaxVars; ++i)
            if (m.x(i)) factors.push_back("x" + std::to_string(i) + (m.x(i) > 1 ? "^" + std::to_string(m.x(i)) : ""));
        for (int i = 1; i <= kMaxVars; ++i)
            if (m.t(i)) factors.push_back("t" + std::to_string(i) + (m.t(i) > 1 ? "^" + std::to_string(m.t(i)) : ""));
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) s += " * ";
            s += factors[k];
        }
    }
    return s;
}

MPoly MPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    auto bad = [&] { return std::invalid_argument("bad polynomial: " + text); };
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!terms.empty()) {
            throw bad();
        }
        mpz_class coef = sign;
        Monomial mono;
        bool any = false;
        while (true) {
            if (pos >= s.size()) throw bad();
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::size_t e = pos;
                while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
                coef *= mpz_class(s.substr(pos, e - pos));
                pos = e;
            } else if (s[pos] == 'x' || s[pos] == 't') {
                char v = s[pos++];
                std::size_t e = pos;
                while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
                if (e == pos) throw bad();
                int idx = std::stoi(s.substr(pos, e - pos));
                if (idx < 1 || idx > kMaxVars) throw bad();
                pos = e;
                int ex = 1;
                if (pos < s.size() && s[pos] == '^') {
                    e = ++pos;
                    while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
                    if (e == pos) throw bad();
                    ex = std::stoi(s.substr(pos, e - pos));
                    pos = e;
                }
                int slot = v == 'x' ? x_slot(idx) : t_slot(idx);
                int tot = mono.e[slot] + ex;
                if (tot > 255) throw bad();
                mono.e[slot] = static_cast<std::uint8_t>(tot);
            } else {
                throw bad();
            }
            any = true;
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) throw bad();
        terms.emplace_back(mono, coef);
    }
    return from_terms(std::move(terms));
}

}  // namespace qfl

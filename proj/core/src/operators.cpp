#include "qfl/operators.hpp"

#include <map>
#include <stdexcept>

namespace qfl {

VarMap identity_map() {
    VarMap m{};
    for (int s = 0; s < 2 * kMaxVars; ++s) m[s] = s;
    return m;
}

MPoly rename(const MPoly& f, const VarMap& m) {
    std::vector<MPoly::Term> out;
    out.reserve(f.size());
    for (const auto& [mono, c] : f.terms()) {
        Monomial r;
        bool zero = false;
        for (int s = 0; s < 2 * kMaxVars && !zero; ++s) {
            if (!mono.e[s]) continue;
            if (m[s] < 0) {
                zero = true;
            } else {
                int v = r.e[m[s]] + mono.e[s];
                if (v > 255) throw std::overflow_error("exponent overflow");
                r.e[m[s]] = static_cast<std::uint8_t>(v);
            }
        }
        if (!zero) out.emplace_back(r, c);
    }
    return MPoly::from_terms(std::move(out));
}

MPoly substitute(const MPoly& f, const std::vector<MPoly>& images) {
    std::map<std::pair<int, int>, MPoly> powers;
    auto power = [&](int s, int e) -> const MPoly& {
        auto key = std::make_pair(s, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, images[s].pow(e)).first->second;
    };
    MPoly out;
    for (const auto& [mono, c] : f.terms()) {
        Monomial kept;
        MPoly term(c);
        for (int s = 0; s < 2 * kMaxVars; ++s) {
            if (!mono.e[s]) continue;
            if (s < static_cast<int>(images.size()))
                term *= power(s, mono.e[s]);
            else
                kept.e[s] = mono.e[s];
        }
        out += term * MPoly::monomial(kept);
    }
    return out;
}

MPoly swap_x(const MPoly& f, int i) {
    VarMap m = identity_map();
    std::swap(m[x_slot(i)], m[x_slot(i + 1)]);
    return rename(f, m);
}

MPoly divided_difference(int i, const MPoly& f) {
    if (i < 1 || i >= kMaxVars) throw std::out_of_range("divided difference index");
    std::vector<MPoly::Term> out;
    for (const auto& [mono, c] : f.terms()) {
        int a = mono.x(i), b = mono.x(i + 1);
        if (a == b) continue;
        int lo = std::min(a, b), gap = std::abs(a - b);
        mpz_class sc = a > b ? c : mpz_class(-c);
        for (int k = 0; k < gap; ++k) {
            Monomial r = mono;
            r.set_x(i, lo + k);
            r.set_x(i + 1, lo + gap - 1 - k);
            out.emplace_back(r, sc);
        }
    }
    return MPoly::from_terms(std::move(out));
}

namespace {

VarMap r_map(int i, Sign s, int t_index) {
    VarMap m = identity_map();
    int hole = s == Sign::Minus ? i : i + 1;
    m[x_slot(hole)] = t_slot(t_index);
    for (int j = hole + 1; j <= kMaxVars; ++j) m[x_slot(j)] = x_slot(j - 1);
    return m;
}

}  // namespace

MPoly bergeron_sottile(int i, Sign s, const MPoly& f) {
    if (i < 1 || i >= kMaxVars) throw std::out_of_range("r index");
    return rename(f, r_map(i, s, i));
}

MPoly quasi_dd(int i, const MPoly& f) {
    MPoly num = bergeron_sottile(i, Sign::Plus, f) - bergeron_sottile(i, Sign::Minus, f);
    return divide_linear(num, x_slot(i), t_slot(i));
}

void quasi_dd_monomial(int i, const Monomial& m, std::vector<std::pair<Monomial, int>>& out, int t_index) {
    if (t_index == 0) t_index = i;
    int a = m.x(i), b = m.x(i + 1);
    if (a == b) return;
    int lo = std::min(a, b), gap = std::abs(a - b);
    int sign = a > b ? 1 : -1;
    // d_i then x_i -> t_i, x_{j+1} -> x_j
    Monomial base = m;
    for (int j = i; j < kMaxVars; ++j) base.set_x(j, m.x(j + 1));
    base.set_x(kMaxVars, 0);
    for (int k = 0; k < gap; ++k) {
        Monomial r = base;
        r.set_t(t_index, m.t(t_index) + lo + k);
        r.set_x(i, lo + gap - 1 - k);
        out.emplace_back(r, sign);
    }
}

namespace {

MPoly e_kernel(int i, int t_index, const MPoly& f) {
    if (i < 1 || i >= kMaxVars) throw std::out_of_range("e index");
    std::vector<MPoly::Term> out;
    std::vector<std::pair<Monomial, int>> buf;
    for (const auto& [mono, c] : f.terms()) {
        buf.clear();
        quasi_dd_monomial(i, mono, buf, t_index);
        for (const auto& [r, s] : buf) out.emplace_back(r, s > 0 ? c : mpz_class(-c));
    }
    return MPoly::from_terms(std::move(out));
}

}  // namespace

MPoly quasi_dd_fast(int i, const MPoly& f) { return e_kernel(i, i, f); }

MPoly divide_by_linear_form(const MPoly& f, const MPoly& form) {
    if (form.is_zero() || !form.is_homogeneous(1)) throw std::invalid_argument("not a linear form");
    int v = -1;
    mpz_class c;
    for (int s = 0; s < 2 * kMaxVars && v < 0; ++s) {
        Monomial m;
        m.e[s] = 1;
        mpz_class k = form.coefficient(m);
        if (k != 0) {
            v = s;
            c = k;
        }
    }
    if (c != 1 && c != -1) throw std::invalid_argument("linear form needs a unit coefficient");
    Monomial vm;
    vm.e[v] = 1;
    MPoly rest = form - MPoly::monomial(vm, c);

    std::map<int, std::vector<MPoly::Term>> by_power;
    for (const auto& [mono, k] : f.terms()) {
        Monomial r = mono;
        r.e[v] = 0;
        by_power[mono.e[v]].emplace_back(r, k);
    }
    if (by_power.empty()) return {};
    int top = by_power.rbegin()->first;
    std::vector<MPoly> fk(top + 1);
    for (auto& [p, terms] : by_power) fk[p] = MPoly::from_terms(std::move(terms));
    if (top == 0) throw std::domain_error("not divisible by linear form");
    std::vector<MPoly> q(top);
    q[top - 1] = fk[top] * c;
    for (int k = top - 1; k >= 1; --k) q[k - 1] = (fk[k] - rest * q[k]) * c;
    if (fk[0] - rest * q[0] != MPoly()) throw std::domain_error("not divisible by linear form");
    MPoly out;
    for (int k = 0; k < top; ++k) {
        Monomial m;
        m.e[v] = static_cast<std::uint8_t>(k);
        out += q[k] * MPoly::monomial(m);
    }
    return out;
}

MPoly divide_linear(const MPoly& f, int slot_a, int slot_b) {
    return divide_by_linear_form(f, MPoly::var(slot_a) - MPoly::var(slot_b));
}

MPoly ev(const MPoly& f, const Permutation& w) {
    int n = w.size();
    if (f.max_x_index() > n) throw std::invalid_argument("polynomial uses x beyond the permutation size");
    VarMap m = identity_map();
    for (int i = 1; i <= n; ++i) m[x_slot(i)] = t_slot(w(i));
    return rename(f, m);
}

MPoly skip_t(const MPoly& f, int i) {
    if (f.max_t_index() >= kMaxVars) throw std::overflow_error("t alphabet exhausted");
    VarMap m = identity_map();
    for (int j = i; j < kMaxVars; ++j) m[t_slot(j)] = t_slot(j + 1);
    return rename(f, m);
}

MPoly truncate(const MPoly& f, int n) {
    VarMap m = identity_map();
    for (int j = n + 1; j <= kMaxVars; ++j) {
        m[x_slot(j)] = -1;
        m[t_slot(j)] = -1;
    }
    return rename(f, m);
}

MPoly t_to_zero(const MPoly& f) {
    VarMap m = identity_map();
    for (int j = 1; j <= kMaxVars; ++j) m[t_slot(j)] = -1;
    return rename(f, m);
}

SubsetMask SubsetMask::from_elements(int n, const std::vector<int>& elems) {
    SubsetMask a;
    a.n = n;
    for (int e : elems) {
        if (e < 1 || e > n) throw std::out_of_range("subset element outside [n]");
        a.bits |= 1u << (e - 1);
    }
    return a;
}

int SubsetMask::size() const { return __builtin_popcount(bits); }

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

int SubsetMask::complement_at(int i) const {
    if (i < 1) throw std::out_of_range("complement index");
    int seen = 0;
    for (int j = 1; j <= n; ++j)
        if (!contains(j) && ++seen == i) return j;
    throw std::out_of_range("complement index beyond n - |A|");
}

std::string SubsetMask::str() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

SubsetMask star(const SubsetMask& a, const SubsetMask& b) {
    if (a.n != b.n) throw std::invalid_argument("star of masks over different n");
    if (a.size() + b.size() > a.n) throw std::invalid_argument("star needs |A| + |B| <= n");
    SubsetMask r = b;
    for (int i : a.elements()) r.bits |= 1u << (b.complement_at(i) - 1);
    return r;
}

SubsetMask star(int i, const SubsetMask& b) { return star(SubsetMask::from_elements(b.n, {i}), b); }

MPoly r_shifted(int i, const SubsetMask& a, Sign s, const MPoly& f) {
    return rename(f, r_map(i, s, a.complement_at(i)));
}

MPoly e_shifted(int i, const SubsetMask& a, const MPoly& f) {
    return e_kernel(i, a.complement_at(i), f);
}

std::string PhiOp::str() const {
    std::string s = kind == LetterKind::E ? "e" : "r";
    s += std::to_string(index);
    if (kind == LetterKind::RMinus) s += "-";
    if (kind == LetterKind::RPlus) s += "+";
    if (mask.size()) s += "," + mask.str();
    return s;
}

std::vector<PhiOp> phi_program(const ReseqWord& w) {
    int n = w.size();
    SubsetMask a;
    a.n = n;
    std::vector<PhiOp> ops(n);
    for (int k = n - 1; k >= 0; --k) {
        const Letter& x = w[k];
        ops[k] = PhiOp{x.kind, x.index, a};
        a = star(x.index, a);
    }
    return ops;
}

std::string phi_program_str(const ReseqWord& w) {
    std::string s;
    for (const auto& op : phi_program(w)) {
        if (!s.empty()) s += " ";
        s += op.str();
    }
    return s;
}

MPoly phi_apply(const ReseqWord& w, const MPoly& f) {
    int n = w.size();
    if (f.max_x_index() > n || f.max_t_index() > n) throw std::invalid_argument("alphabet mismatch in phi_apply");
    auto ops = phi_program(w);
    MPoly g = f;
    for (auto it = ops.rbegin(); it != ops.rend() && !g.is_zero(); ++it) {
        if (it->kind == LetterKind::E)
            g = e_shifted(it->index, it->mask, g);
        else
            g = r_shifted(it->index, it->mask, it->kind == LetterKind::RMinus ? Sign::Minus : Sign::Plus, g);
    }
    if (g.has_x()) throw std::logic_error("phi_apply left x variables behind");
    return g;
}

Graham graham_positive(const MPoly& p, int n) {
    if (p.has_x()) throw std::invalid_argument("graham_positive expects a t-only polynomial");
    if (p.max_t_index() > n || n >= kMaxVars) throw std::invalid_argument("alphabet mismatch in graham_positive");
    MPoly s = MPoly::t(kMaxVars);
    std::vector<MPoly> shift(2 * kMaxVars);
    for (int slot = 0; slot < 2 * kMaxVars; ++slot) shift[slot] = MPoly::var(slot);
    for (int i = 1; i <= n; ++i) shift[t_slot(i)] = MPoly::t(i) + s;
    if (substitute(p, shift) != p) return Graham::NotApplicable;
    std::vector<MPoly> roots(2 * kMaxVars);
    for (int slot = 0; slot < 2 * kMaxVars; ++slot) roots[slot] = MPoly::var(slot);
    MPoly acc;
    for (int i = 1; i <= n; ++i) {
        roots[t_slot(i)] = acc;
        acc += MPoly::x(i);
    }
    for (const auto& [m, c] : substitute(p, roots).terms())
        if (c < 0) return Graham::NotPositive;
    return Graham::Positive;
}

std::string to_string(Graham g) {
    switch (g) {
        case Graham::Positive: return "positive";
        case Graham::NotPositive: return "not positive";
        case Graham::NotApplicable: return "not applicable";
    }
    return "";
}

}  // namespace qfl

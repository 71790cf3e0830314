#include "qfl/counts.hpp"

#include "qfl/families.hpp"
#include "qfl/reseq.hpp"

namespace qfl {

mpz_class CountTable::total() const {
    mpz_class s = 0;
    for (const auto& c : by_k) s += c;
    return s;
}

std::string CountTable::str() const {
    std::string s = "n=" + std::to_string(n) + ":";
    for (const auto& c : by_k) s += " " + c.get_str();
    return s;
}

CountMismatch::CountMismatch(const std::string& what, CountTable closed, CountTable enumerated)
    : std::runtime_error(what + " mismatch: closed " + closed.str() + " vs enumerated " + enumerated.str()),
      closed_form(std::move(closed)),
      enumerated(std::move(enumerated)) {}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class catalan(int n) { return binomial(2L * n, n) / (n + 1); }

mpz_class large_schroeder(int n) {
    mpz_class s = 0;
    for (int k = 0; k <= n; ++k) s += binomial(n + k, 2L * k) * catalan(k);
    return s;
}

mpz_class face_number(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) return 0;
    mpz_class v = binomial(2L * n, n - k - 1) * binomial(n + k - 1, k);
    return v / n;
}

mpz_class forest_number(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) return 0;
    mpz_class v = binomial(n + k, k) * (n - k);
    return v / (n + k);
}

CountTable faces_closed_form(int n) {
    CountTable t{n, {}};
    for (int k = 0; k < n; ++k) t.by_k.push_back(face_number(n, k));
    return t;
}

CountTable forests_closed_form(int n) {
    CountTable t{n, {}};
    for (int k = 0; k < n; ++k) t.by_k.push_back(forest_number(n, k));
    return t;
}

CountTable faces_by_enumeration(int n) {
    CountTable t{n, std::vector<mpz_class>(n, 0)};
    for (const auto& f : enumerate_normal_forms(n)) t.by_k.at(f.black_count()) += 1;
    return t;
}

CountTable forests_by_enumeration(int n) {
    CountTable t{n, std::vector<mpz_class>(n, 0)};
    for (const auto& f : enumerate_forests(n)) t.by_k.at(f.num_internal()) += 1;
    return t;
}

CountTable count_faces(int n) {
    auto a = faces_closed_form(n), b = faces_by_enumeration(n);
    if (!(a == b)) throw CountMismatch("face census", a, b);
    return a;
}

CountTable count_forests(int n) {
    auto a = forests_closed_form(n), b = forests_by_enumeration(n);
    if (!(a == b)) throw CountMismatch("forest census", a, b);
    return a;
}

CountTable hhmp_closed_form(int n) {
    std::vector<mpz_class> p{1};
    for (int k = 1; k <= n; ++k) {
        std::vector<mpz_class> q(p.size() + 1, 0);
        for (std::size_t d = 0; d < p.size(); ++d) {
            q[d] += p[d] * k;
            q[d + 1] += p[d] * (k - 1);
        }
        p = std::move(q);
    }
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return {n, p};
}

CountTable hhmp_by_words(int n) {
    std::vector<mpz_class> by(n > 0 ? n : 1, 0);
    for (const auto& w : enumerate_reseq(n)) {
        bool plus = false;
        for (const auto& x : w.letters())
            if (x.kind == LetterKind::RPlus) plus = true;
        if (!plus) by.at(w.black_count()) += 1;
    }
    while (by.size() > 1 && by.back() == 0) by.pop_back();
    return {n, by};
}

std::string FqCount::str() const {
    std::string s;
    for (std::size_t k = 0; k < by_forests.size(); ++k) {
        if (by_forests[k] == 0) continue;
        if (!s.empty()) s += " + ";
        s += by_forests[k].get_str();
        if (k) s += k == 1 ? " q" : " q^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

FqCount fq_count(int n) {
    FqCount out{n, QPoly(n, 0), QPoly(n, 0)};
    for (int k = 0; k < n; ++k) out.by_forests[k] = forest_number(n, k);
    for (int k = 0; k < n; ++k) {
        mpz_class f = face_number(n, k);
        // (q - 1)^k
        for (int j = 0; j <= k; ++j) {
            mpz_class term = f * binomial(k, j);
            if ((k - j) % 2) term = -term;
            out.by_faces[j] += term;
        }
    }
    return out;
}

}  // namespace qfl

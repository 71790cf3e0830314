#include "qfl/series.hpp"

#include <stdexcept>

namespace qfl {

namespace {

using UPoly = std::vector<mpz_class>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly add(const UPoly& a, const UPoly& b, int sign = 1) {
    UPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += sign * b[k];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// series in z, truncated at degree ord
using Ser = std::vector<UPoly>;

Ser sadd(const Ser& a, const Ser& b, int sign = 1) {
    Ser r(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) r[n] = add(a[n], b[n], sign);
    return r;
}

Ser smul(const Ser& a, const Ser& b) {
    Ser r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    return r;
}

Ser shift_z(const Ser& a) {
    Ser r(a.size());
    for (std::size_t n = 1; n < a.size(); ++n) r[n] = a[n - 1];
    return r;
}

// 1 / a when [z^0] a = 1
Ser sinv(const Ser& a) {
    if (a[0] != UPoly{1}) throw std::logic_error("series inverse needs constant term 1");
    Ser r(a.size());
    r[0] = {1};
    for (std::size_t n = 1; n < a.size(); ++n) {
        UPoly s;
        for (std::size_t k = 1; k <= n; ++k) s = add(s, mul(a[k], r[n - k]));
        r[n] = add({}, s, -1);
    }
    return r;
}

// sum_n c[n] y^n by Horner, c given as a z-series read as coefficients
Ser compose(const Ser& c, const Ser& y) {
    Ser r(y.size());
    for (std::size_t n = c.size(); n-- > 0;) {
        r = smul(r, y);
        r[0] = add(r[0], c[n]);
    }
    return r;
}

Ser derivative(const Ser& c) {
    Ser r(c.size());
    for (std::size_t n = 1; n < c.size(); ++n) r[n - 1] = mul(c[n], UPoly{mpz_class(static_cast<long>(n))});
    return r;
}

void check_order(int order) {
    if (order < 0 || order > kMaxSeriesOrder)
        throw std::invalid_argument("series order must be in [0, " + std::to_string(kMaxSeriesOrder) + "]");
}

Ser gcox(int order) {
    Ser g(order + 1);
    g[0] = {1};
    for (int n = 1; n <= order; ++n) {
        UPoly s;
        for (int a = 1; a < n; ++a) s = add(s, mul(g[a], g[n - a]));
        g[n] = add(g[n - 1], mul(UPoly{0, 1}, s));
    }
    return g;
}

SeriesExpansion wrap(int order, Ser s) {
    SeriesExpansion e(order);
    for (int n = 0; n <= order; ++n) {
        trim(s[n]);
        e.coeffs[n] = std::move(s[n]);
    }
    return e;
}

}  // namespace

SeriesExpansion::SeriesExpansion(int order) : order(order), coeffs(order + 1) {}

mpz_class SeriesExpansion::at(int n, int k) const {
    if (n < 0 || n > order || k < 0 || k >= static_cast<int>(coeffs[n].size())) return 0;
    return coeffs[n][k];
}

mpz_class SeriesExpansion::at_u1(int n) const {
    mpz_class s = 0;
    if (n < 0 || n > order) return s;
    for (const auto& c : coeffs[n]) s += c;
    return s;
}

std::string SeriesExpansion::str() const {
    std::string s;
    for (int n = 0; n <= order; ++n) {
        s += "z^" + std::to_string(n) + ":";
        for (const auto& c : coeffs[n]) s += " " + c.get_str();
        s += "\n";
    }
    return s;
}

bool SeriesExpansion::operator==(const SeriesExpansion& o) const {
    return order == o.order && coeffs == o.coeffs;
}

SeriesExpansion series_Gcox(int order) {
    check_order(order);
    return wrap(order, gcox(order));
}

SeriesExpansion series_G(int order) {
    check_order(order);
    Ser c = gcox(order), dc = derivative(c);
    Ser g(order + 1);
    g[0] = {1};
    // F(G) = G - C(zG); Newton step G -= F(G) / (1 - z C'(zG))
    for (int prec = 1;; prec *= 2) {
        Ser zg = shift_z(g);
        Ser f = sadd(g, compose(c, zg), -1);
        Ser d = sadd(Ser(order + 1), shift_z(compose(dc, zg)), -1);
        d[0] = add(d[0], UPoly{1});
        g = sadd(g, smul(f, sinv(d)), -1);
        if (prec > order) break;
    }
    Ser resid = sadd(g, compose(c, shift_z(g)), -1);
    for (const auto& r : resid)
        if (!r.empty()) throw std::logic_error("series fixed point did not converge");
    return wrap(order, g);
}

SeriesExpansion series_G_direct(int order) {
    check_order(order);
    Ser g(order + 1);
    g[0] = {1};
    for (int n = 1; n <= order; ++n) {
        UPoly s, t;
        for (int a = 0; a <= n - 1; ++a) s = add(s, mul(g[a], g[n - 1 - a]));
        for (int a = 1; a < n; ++a) t = add(t, mul(g[a], g[n - a]));
        g[n] = add(s, mul(UPoly{0, 1}, t));
    }
    return wrap(order, g);
}

}  // namespace qfl

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qfl {

// truncated power series in z with polynomial coefficients in u
struct SeriesExpansion {
    int order = 0;
    std::vector<std::vector<mpz_class>> coeffs;  // coeffs[n][k] = [z^n u^k]

    explicit SeriesExpansion(int order = 0);
    mpz_class at(int n, int k) const;
    // [z^n] at u = 1
    mpz_class at_u1(int n) const;
    std::string str() const;
    bool operator==(const SeriesExpansion& o) const;
};

constexpr int kMaxSeriesOrder = 12;

// g_0 = 1, g_n = g_{n-1} + u sum_{a=1}^{n-1} g_a g_{n-a}
SeriesExpansion series_Gcox(int order);
// Newton iteration on G = G_cox(z G, u)
SeriesExpansion series_G(int order);
// coefficientwise from (z + u) G^2 - (1 + 2u) G + (1 + u) = 0
SeriesExpansion series_G_direct(int order);

}  // namespace qfl

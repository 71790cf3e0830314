#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qfl {

constexpr int kMaxVars = 16;

// exponents of x_1..x_16 followed by t_1..t_16
struct Monomial {
    std::array<std::uint8_t, 2 * kMaxVars> e{};

    int x(int i) const { return e[i - 1]; }
    int t(int i) const { return e[kMaxVars + i - 1]; }
    void set_x(int i, int v) { e[i - 1] = static_cast<std::uint8_t>(v); }
    void set_t(int i, int v) { e[kMaxVars + i - 1] = static_cast<std::uint8_t>(v); }
    int degree() const;
    int x_degree() const;
    int t_degree() const;
    Monomial operator*(const Monomial& o) const;

    auto operator<=>(const Monomial&) const = default;
};

// slot s < kMaxVars is x_{s+1}, otherwise t_{s-kMaxVars+1}
inline int x_slot(int i) { return i - 1; }
inline int t_slot(int i) { return kMaxVars + i - 1; }

class MPoly {
public:
    using Term = std::pair<Monomial, mpz_class>;

    MPoly() = default;
    MPoly(long c);  // NOLINT: integer constants convert implicitly
    explicit MPoly(const mpz_class& c);
    static MPoly x(int i);
    static MPoly t(int i);
    static MPoly var(int slot);
    static MPoly monomial(const Monomial& m, const mpz_class& c = 1);
    static MPoly from_terms(std::vector<Term> terms);
    static MPoly parse(const std::string& text);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // -1 for the zero polynomial
    int degree() const;
    bool is_homogeneous(int d) const;
    bool has_x() const;
    int max_x_index() const;
    int max_t_index() const;
    mpz_class coefficient(const Monomial& m) const;
    mpz_class constant_term() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const mpz_class& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const mpz_class& c) { return a *= c; }
    MPoly pow(int k) const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // e.g. "2 * x1^2 * t2 - x1 + 3"
    std::string str() const;

private:
    void normalize();
    std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

}  // namespace qfl

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qfl/permutation.hpp"

namespace qfl {

// Dense matrix over Q, indexed from 1.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);
    // entry (u(i), i) = 1
    static QMatrix permutation(const Permutation& u);
    static QMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool square() const { return r_ == c_; }

    mpq_class& operator()(int i, int j) { return a_[idx(i, j)]; }
    const mpq_class& operator()(int i, int j) const { return a_[idx(i, j)]; }

    QMatrix operator*(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    QMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    // first k columns
    QMatrix leading_columns(int k) const;
    QMatrix hcat(const QMatrix& o) const;

    mpq_class det() const;
    int rank() const;
    // some x with A x = b (free variables zero), or nullopt
    std::optional<std::vector<mpq_class>> solve(const std::vector<mpq_class>& b) const;

    // rows separated by newlines, entries "p/q"
    std::string str() const;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i - 1) * c_ + (j - 1); }
    int r_ = 0;
    int c_ = 0;
    std::vector<mpq_class> a_;
};

}  // namespace qfl

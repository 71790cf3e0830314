#include "qfl/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace qfl {

QMatrix::QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::permutation(const Permutation& u) {
    QMatrix m(u.size(), u.size());
    for (int i = 1; i <= u.size(); ++i) m(u(i), i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    QMatrix m(r, c);
    for (int i = 1; i <= r; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 1; j <= c; ++j) m(i, j) = rows[i - 1][j - 1];
    }
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix size mismatch");
    QMatrix m(r_, o.c_);
    for (int i = 1; i <= r_; ++i)
        for (int k = 1; k <= c_; ++k) {
            const mpq_class& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 1; j <= o.c_; ++j) m(i, j) += x * o(k, j);
        }
    return m;
}

QMatrix QMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int i = 1; i <= m.r_; ++i)
        for (int j = 1; j <= m.c_; ++j) m(i, j) = (*this)(rows[i - 1], cols[j - 1]);
    return m;
}

QMatrix QMatrix::leading_columns(int k) const {
    std::vector<int> rs(r_), cs(k);
    for (int i = 0; i < r_; ++i) rs[i] = i + 1;
    for (int j = 0; j < k; ++j) cs[j] = j + 1;
    return submatrix(rs, cs);
}

QMatrix QMatrix::hcat(const QMatrix& o) const {
    if (r_ != o.r_) throw std::invalid_argument("row count mismatch");
    QMatrix m(r_, c_ + o.c_);
    for (int i = 1; i <= r_; ++i) {
        for (int j = 1; j <= c_; ++j) m(i, j) = (*this)(i, j);
        for (int j = 1; j <= o.c_; ++j) m(i, c_ + j) = o(i, j);
    }
    return m;
}

namespace {

// row echelon in place; returns rank and accumulates the determinant sign/pivots
int eliminate(QMatrix& m, mpq_class* det) {
    int rank = 0;
    if (det) *det = 1;
    for (int j = 1; j <= m.cols() && rank < m.rows(); ++j) {
        int p = 0;
        for (int i = rank + 1; i <= m.rows(); ++i)
            if (m(i, j) != 0) {
                p = i;
                break;
            }
        if (!p) {
            if (det) *det = 0;
            continue;
        }
        ++rank;
        if (p != rank) {
            for (int k = 1; k <= m.cols(); ++k) std::swap(m(p, k), m(rank, k));
            if (det) *det = -*det;
        }
        mpq_class piv = m(rank, j);
        if (det) *det *= piv;
        for (int i = rank + 1; i <= m.rows(); ++i) {
            if (m(i, j) == 0) continue;
            mpq_class f = m(i, j) / piv;
            for (int k = j; k <= m.cols(); ++k) m(i, k) -= f * m(rank, k);
        }
    }
    return rank;
}

}  // namespace

mpq_class QMatrix::det() const {
    if (!square()) throw std::invalid_argument("determinant of non-square matrix");
    if (r_ == 0) return 1;
    QMatrix m = *this;
    mpq_class d;
    int rk = eliminate(m, &d);
    return rk == r_ ? d : mpq_class(0);
}

int QMatrix::rank() const {
    QMatrix m = *this;
    return eliminate(m, nullptr);
}

std::optional<std::vector<mpq_class>> QMatrix::solve(const std::vector<mpq_class>& b) const {
    if (static_cast<int>(b.size()) != r_) throw std::invalid_argument("right-hand side size mismatch");
    QMatrix aug(r_, c_ + 1);
    for (int i = 1; i <= r_; ++i) {
        for (int j = 1; j <= c_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, c_ + 1) = b[i - 1];
    }
    std::vector<int> pivcol;
    int row = 0;
    for (int j = 1; j <= c_ && row < r_; ++j) {
        int p = 0;
        for (int i = row + 1; i <= r_; ++i)
            if (aug(i, j) != 0) {
                p = i;
                break;
            }
        if (!p) continue;
        ++row;
        for (int k = 1; k <= c_ + 1; ++k) std::swap(aug(p, k), aug(row, k));
        mpq_class inv = 1 / aug(row, j);
        for (int k = 1; k <= c_ + 1; ++k) aug(row, k) *= inv;
        for (int i = 1; i <= r_; ++i) {
            if (i == row || aug(i, j) == 0) continue;
            mpq_class f = aug(i, j);
            for (int k = 1; k <= c_ + 1; ++k) aug(i, k) -= f * aug(row, k);
        }
        pivcol.push_back(j);
    }
    for (int i = row + 1; i <= r_; ++i)
        if (aug(i, c_ + 1) != 0) return std::nullopt;
    std::vector<mpq_class> x(c_);
    for (int k = 0; k < row; ++k) x[pivcol[k] - 1] = aug(k + 1, c_ + 1);
    return x;
}

std::string QMatrix::str() const {
    std::string s;
    for (int i = 1; i <= r_; ++i) {
        if (i > 1) s += '\n';
        for (int j = 1; j <= c_; ++j) {
            if (j > 1) s += ' ';
            s += (*this)(i, j).get_str();
        }
    }
    return s;
}

}  // namespace qfl

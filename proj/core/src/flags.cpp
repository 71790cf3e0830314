#include "qfl/flags.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "forest_builder.hpp"
#include "qfl/noncrossing.hpp"

namespace qfl {

QMatrix psi(int i, int j, const QMatrix& m) {
    if (!m.square()) throw std::invalid_argument("psi needs a square matrix");
    int n = m.rows() + 1;
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("psi index");
    QMatrix out(n, n);
    for (int k = 1; k <= n; ++k) {
        if (k == i) continue;
        for (int l = 1; l <= n; ++l) {
            if (l == j) continue;
            out(k, l) = m(k - (k > i), l - (l > j));
        }
    }
    out(i, j) = 1;
    return out;
}

QMatrix psi_minus(int i, const QMatrix& m) { return psi(i, i, m); }

QMatrix psi_plus(int i, const QMatrix& m) {
    if (i > m.rows()) throw std::out_of_range("psi_plus index");
    return psi(i, i + 1, m);
}

QMatrix g_insert(int i, const QMatrix& m, const mpq_class& c) {
    if (c == 0) throw std::invalid_argument("g_insert needs c != 0");
    QMatrix out = psi_plus(i, m);
    out(i, i) = c;
    return out;
}

QMatrix g_insert_shifted(int i, const QMatrix& m, const mpq_class& c) {
    if (c == 0) throw std::invalid_argument("g_insert_shifted needs c != 0");
    if (i < 1 || i > m.cols()) throw std::out_of_range("g_insert_shifted index");
    int j = 0;
    for (int k = 1; k <= m.rows(); ++k) {
        if (m(k, i) == 0) continue;
        if (j || m(k, i) != 1) {
            j = -1;
            break;
        }
        j = k;
    }
    if (j < 1 || j >= i) throw std::invalid_argument("column i is not a unit vector e_j with j < i");
    QMatrix out = psi_minus(i, m);
    out(j, i) = c;
    return out;
}

const std::vector<mpq_class>& c_pool() {
    static const std::vector<mpq_class> pool = {1, -1, 2, -2, 3, -3, mpq_class(1, 2), mpq_class(-1, 2), 5, -5};
    return pool;
}

mpq_class draw_c(std::mt19937_64& rng) {
    const auto& p = c_pool();
    return p[rng() % p.size()];
}

QMatrix build_from_word(const ReseqWord& w, const std::vector<mpq_class>& cs) {
    if (static_cast<int>(cs.size()) != w.black_count()) throw std::invalid_argument("need one c per e-letter");
    QMatrix m;
    std::size_t next = 0;
    for (const auto& x : w.letters()) {
        switch (x.kind) {
            case LetterKind::RMinus: m = psi_minus(x.index, m); break;
            case LetterKind::RPlus: m = psi_plus(x.index, m); break;
            case LetterKind::E: m = g_insert(x.index, m, cs[next++]); break;
        }
    }
    return m;
}

QMatrix orbit_point_from_word(const ReseqWord& w, std::uint64_t seed) {
    ForestBuilder b;
    std::vector<int> created;
    for (const auto& x : w.letters()) {
        switch (x.kind) {
            case LetterKind::RMinus: b.insert_leaf(x.index); break;
            case LetterKind::RPlus: b.split_leaf(x.index, Color::White); break;
            case LetterKind::E:
                created.push_back(b.find_leaf(x.index));
                b.split_leaf(x.index, Color::Black);
                break;
        }
    }
    std::vector<int> idmap;
    b.build(&idmap);
    std::vector<mpq_class> cs;
    for (int raw : created) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(idmap[raw])};
        std::mt19937_64 rng(seq);
        cs.push_back(draw_c(rng));
    }
    return build_from_word(w, cs);
}

QMatrix sample_orbit_point(const BnForest& f, std::uint64_t seed) {
    return orbit_point_from_word(canonical_word(f), seed);
}

CanonicalForm flag_canonical_form(const QMatrix& m) {
    if (!m.square()) throw std::invalid_argument("canonical form needs a square matrix");
    int n = m.rows();
    QMatrix r = m;
    std::vector<char> used(n + 1, 0);
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) {
        int p = 0;
        for (int k = n; k >= 1; --k)
            if (!used[k] && r(k, i) != 0) {
                p = k;
                break;
            }
        if (!p) throw std::domain_error("singular matrix has no canonical form");
        used[p] = 1;
        w[i - 1] = p;
        mpq_class inv = 1 / r(p, i);
        for (int k = 1; k <= n; ++k) r(k, i) *= inv;
        for (int j = i + 1; j <= n; ++j) {
            if (r(p, j) == 0) continue;
            mpq_class f = r(p, j);
            for (int k = 1; k <= n; ++k) r(k, j) -= f * r(k, i);
        }
    }
    return {Permutation(std::move(w)), std::move(r)};
}

namespace {

// minors on rows S (bitmask, sorted) and the first |S| columns
class MinorTable {
public:
    explicit MinorTable(const QMatrix& m) : m_(m), have_(std::size_t{1} << m.rows(), 0), val_(have_.size()) {}

    const mpq_class& get(unsigned s) {
        if (!have_[s]) {
            std::vector<int> rows, cols;
            for (int k = 0; k < m_.rows(); ++k)
                if (s >> k & 1u) rows.push_back(k + 1);
            for (std::size_t j = 1; j <= rows.size(); ++j) cols.push_back(static_cast<int>(j));
            val_[s] = m_.submatrix(rows, cols).det();
            have_[s] = 1;
        }
        return val_[s];
    }

private:
    const QMatrix& m_;
    std::vector<char> have_;
    std::vector<mpq_class> val_;
};

// minor with rows ordered w(1..k): sorted minor times the sign of the sort
mpq_class plucker_with(MinorTable& t, const Permutation& w) {
    mpq_class prod = 1;
    unsigned s = 0;
    int sign = 1;
    for (int k = 1; k <= w.size(); ++k) {
        int larger = 0;
        for (int a = w(k); a < w.size(); ++a)
            if (s >> a & 1u) ++larger;
        // appending w(k) last, moving it past the larger rows already chosen
        if (larger % 2) sign = -sign;
        s |= 1u << (w(k) - 1);
        const mpq_class& d = t.get(s);
        if (d == 0) return 0;
        prod *= d * sign;
    }
    return prod;
}

}  // namespace

mpq_class plucker(const QMatrix& m, const Permutation& w) {
    if (!m.square() || m.rows() != w.size()) throw std::invalid_argument("plucker size mismatch");
    MinorTable t(m);
    return plucker_with(t, w);
}

std::vector<Permutation> PluckerVector::support() const {
    std::vector<Permutation> out;
    for (const auto& [w, c] : coords)
        if (c != 0) out.push_back(w);
    return out;
}

PluckerVector plucker_vector(const QMatrix& m) {
    if (!m.square()) throw std::invalid_argument("plucker needs a square matrix");
    PluckerVector v;
    v.n = m.rows();
    MinorTable t(m);
    for (auto& w : all_permutations(v.n)) {
        mpq_class c = plucker_with(t, w);
        v.coords.emplace(std::move(w), std::move(c));
    }
    return v;
}

std::vector<Permutation> plucker_support(const QMatrix& m) { return plucker_vector(m).support(); }

bool in_qfl(const QMatrix& m) {
    for (const auto& w : plucker_support(m))
        if (!is_noncrossing(w)) return false;
    return true;
}

int CellPattern::stars() const { return static_cast<int>(std::count(cells.begin(), cells.end(), Cell::Star)); }

std::string CellPattern::str() const {
    std::string s;
    for (int i = 1; i <= n(); ++i) {
        if (i > 1) s += '\n';
        for (int j = 1; j <= n(); ++j) {
            if (j > 1) s += ' ';
            Cell c = at(i, j);
            s += c == Cell::One ? "1" : c == Cell::Star ? "*" : "0";
        }
    }
    return s;
}

namespace {

CellPattern pattern_for(const Permutation& w, const std::vector<Transposition>& inv) {
    int n = w.size();
    CellPattern p{w, std::vector<Cell>(static_cast<std::size_t>(n) * n, Cell::Zero)};
    auto put = [&](int r, int c, Cell v) { p.cells[static_cast<std::size_t>(r - 1) * n + (c - 1)] = v; };
    for (int i = 1; i <= n; ++i) put(w(i), i, Cell::One);
    for (auto [i, j] : inv) put(w(j), i, Cell::Star);
    return p;
}

}  // namespace

CellPattern bruhat_cell_pattern(const Permutation& w) { return pattern_for(w, inversions(w)); }

CellPattern nc_cell_pattern(const Permutation& w) { return pattern_for(w, noncrossing_inversions(w)); }

bool fits_pattern(const QMatrix& r, const CellPattern& p) {
    if (r.rows() != p.n() || r.cols() != p.n()) return false;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.n(); ++j) {
            Cell c = p.at(i, j);
            if (c == Cell::Zero && r(i, j) != 0) return false;
            if (c == Cell::One && r(i, j) != 1) return false;
        }
    return true;
}

CellMembership cell_membership(const QMatrix& m) {
    auto cf = flag_canonical_form(m);
    CellMembership out{cf.w, false};
    if (is_noncrossing(cf.w)) out.fits_nc = fits_pattern(cf.r, nc_cell_pattern(cf.w));
    return out;
}

std::vector<MPoly> chart_weights(const Permutation& w) {
    std::vector<MPoly> out;
    for (auto [i, j] : noncrossing_inversions(w)) out.push_back(MPoly::t(w(j)) - MPoly::t(w(i)));
    return out;
}

bool spans_equal(const QMatrix& a, const QMatrix& b, int k) {
    QMatrix x = a.leading_columns(k), y = b.leading_columns(k);
    int r = x.rank();
    return r == y.rank() && x.hcat(y).rank() == r;
}

bool relation_condition(const QMatrix& m, int i) {
    int n = m.rows();
    if (i < 1 || i >= n) return false;
    QMatrix e(n, 1);
    e(i, 1) = 1;
    QMatrix f = m.leading_columns(i + 1);
    if (f.hcat(e).rank() != f.rank()) return false;
    for (int j = 1; j < i; ++j)
        if (m(i, j) != 0) return false;
    return true;
}

bool related_i(const QMatrix& a, const QMatrix& b, int i) {
    if (!a.square() || a.rows() != b.rows() || !b.square()) throw std::invalid_argument("related_i size mismatch");
    int n = a.rows();
    for (int j = 1; j < n; ++j)
        if (j != i && !spans_equal(a, b, j)) return false;
    return relation_condition(a, i) && relation_condition(b, i);
}

QMatrix random_flag(int n, std::mt19937_64& rng) {
    while (true) {
        QMatrix m(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m(i, j) = draw_c(rng);
        if (m.det() != 0) return m;
    }
}

QMatrix random_upper_triangular(int n, std::mt19937_64& rng) {
    QMatrix u(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) u(i, j) = i == j || rng() % 3 ? draw_c(rng) : mpq_class(0);
    return u;
}

std::optional<QMatrix> relation_step(const QMatrix& m, int i, std::mt19937_64& rng) {
    if (!relation_condition(m, i)) return std::nullopt;
    mpq_class a = draw_c(rng), b = draw_c(rng);
    QMatrix out = m;
    for (int k = 1; k <= m.rows(); ++k) {
        out(k, i) = a * m(k, i) + b * m(k, i + 1);
        out(k, i + 1) = m(k, i);
    }
    return out;
}

}  // namespace qfl

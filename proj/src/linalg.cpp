#include "weylcoinv/linalg.hpp"

#include <stdexcept>

namespace weylcoinv {

namespace {

void require_square(size_t rows, size_t cols, const char* who) {
    if (rows == 0 || rows != cols) throw std::invalid_argument(std::string(who) + ": not square");
}

}  // namespace

IntMatrix int_identity(int n) {
    IntMatrix m(n, IntVector(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    if (a.empty() || a[0].size() != k) throw std::invalid_argument("int_mul: shape mismatch");
    IntMatrix c(n, IntVector(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            long ail = a[i][l];
            if (ail == 0) continue;
            for (size_t j = 0; j < p; ++j) c[i][j] += ail * b[l][j];
        }
    return c;
}

IntVector int_apply(const IntMatrix& m, const IntVector& v) {
    if (m.empty() || m[0].size() != v.size()) throw std::invalid_argument("int_apply: shape mismatch");
    IntVector out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

long int_det(IntMatrix m) {
    require_square(m.size(), m.empty() ? 0 : m[0].size(), "int_det");
    QMatrix q(m.size(), QVector(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) q[i][j] = Rational(m[i][j]);
    Rational d = q_det(std::move(q));
    if (d.get_den() != 1) throw std::logic_error("int_det: non-integer result");
    if (!d.get_num().fits_slong_p()) throw std::overflow_error("int_det: overflow");
    return d.get_num().get_si();
}

IntMatrix int_inverse(const IntMatrix& m) {
    long d = int_det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("int_inverse: determinant not a unit");
    QMatrix q(m.size(), QVector(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) q[i][j] = Rational(m[i][j]);
    QMatrix inv = q_inverse(q);
    IntMatrix out(m.size(), IntVector(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) {
            if (inv[i][j].get_den() != 1) throw std::logic_error("int_inverse: non-integer entry");
            out[i][j] = inv[i][j].get_num().get_si();
        }
    return out;
}

QMatrix q_identity(int n) {
    QMatrix m(n, QVector(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    if (a.empty() || a[0].size() != k) throw std::invalid_argument("q_mul: shape mismatch");
    QMatrix c(n, QVector(p, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

QVector q_apply(const QMatrix& m, const QVector& v) {
    if (m.empty() || m[0].size() != v.size()) throw std::invalid_argument("q_apply: shape mismatch");
    QVector out(m.size(), Rational(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

QMatrix q_transpose(const QMatrix& m) {
    if (m.empty()) return {};
    QMatrix t(m[0].size(), QVector(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Rational q_det(QMatrix m) {
    require_square(m.size(), m.empty() ? 0 : m[0].size(), "q_det");
    size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv_p = 1 / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational factor = m[r][col] * inv_p;
            for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

QMatrix q_inverse(const QMatrix& m) {
    require_square(m.size(), m.empty() ? 0 : m[0].size(), "q_inverse");
    size_t n = m.size();
    QMatrix aug(n, QVector(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<size_t> pivots;
    size_t rank = rref(aug, &pivots);
    // The left block must carry all pivots; otherwise m is singular (the
    // identity block keeps the augmented rank at n regardless).
    if (rank != n || pivots[n - 1] >= n)
        throw std::invalid_argument("q_inverse: singular matrix");
    QMatrix inv(n, QVector(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Rational q_trace(const QMatrix& m) {
    require_square(m.size(), m.empty() ? 0 : m[0].size(), "q_trace");
    Rational t(0);
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

size_t rref(QMatrix& m, std::vector<size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        Rational inv_p = 1 / m[row][col];
        for (size_t c = col; c < cols; ++c) m[row][c] *= inv_p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return row;
}

size_t q_rank(QMatrix m) { return rref(m); }

std::optional<QVector> row_dependency(const QMatrix& m) {
    if (m.empty()) return std::nullopt;
    // lambda^T m = 0  <=>  m^T lambda = 0: kernel of the transpose.
    QMatrix t = q_transpose(m);
    std::vector<size_t> pivots;
    size_t rank = rref(t, &pivots);
    size_t k = m.size();
    if (rank == k) return std::nullopt;
    // First free column of the reduced transpose yields a kernel vector.
    std::vector<bool> is_pivot(k, false);
    for (size_t p : pivots) is_pivot[p] = true;
    size_t free_col = 0;
    while (free_col < k && is_pivot[free_col]) ++free_col;
    QVector lambda(k, Rational(0));
    lambda[free_col] = 1;
    for (size_t r = 0; r < rank; ++r)
        if (pivots[r] < k) lambda[pivots[r]] = -t[r][free_col];
    return lambda;
}

bool is_positive_definite(const QMatrix& m) {
    size_t n = m.size();
    if (n == 0 || m[0].size() != n) return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (m[i][j] != m[j][i]) return false;
    for (size_t k = 1; k <= n; ++k) {
        QMatrix lead(k, QVector(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
        if (q_det(std::move(lead)) <= 0) return false;
    }
    return true;
}

}  // namespace weylcoinv

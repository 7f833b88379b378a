#pragma once

#include <optional>
#include <vector>

#include "weylcoinv/rational.hpp"

namespace weylcoinv {

// Small dense matrices over the integers (group elements) and rationals
// (everything else). Row-major vectors of rows.
using IntMatrix = std::vector<std::vector<long>>;
using IntVector = std::vector<long>;
using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

IntMatrix int_identity(int n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);
IntVector int_apply(const IntMatrix& m, const IntVector& v);
long int_det(IntMatrix m);  // by fraction-free elimination; exact for our sizes
IntMatrix int_inverse(const IntMatrix& m);  // requires det = +-1

QMatrix q_identity(int n);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);
QVector q_apply(const QMatrix& m, const QVector& v);
QMatrix q_transpose(const QMatrix& m);
Rational q_det(QMatrix m);
QMatrix q_inverse(const QMatrix& m);  // throws on singular input
Rational q_trace(const QMatrix& m);

// In-place reduced row echelon form; returns rank. pivot_cols, when given,
// receives the pivot column of each nonzero row.
size_t rref(QMatrix& m, std::vector<size_t>* pivot_cols = nullptr);
size_t q_rank(QMatrix m);

// First nonzero kernel vector of the row space interpreted as a dependency
// among the ROWS of m (i.e. lambda with lambda^T m = 0), if any.
std::optional<QVector> row_dependency(const QMatrix& m);

// Leading principal minors all positive <=> symmetric positive definite.
bool is_positive_definite(const QMatrix& m);

}  // namespace weylcoinv

// Exact linear algebra over field scalars (Rat, CycNum) and over Int.
// Everything here is pivoted on "first nonzero", never on magnitude:
// there is no tolerance anywhere, so any nonzero pivot is as good as
// any other.

#pragma once

#include "mckay/numeric.hpp"

#include <optional>
#include <vector>

namespace mckay {

// Row echelon rank over a field.
template <class S>
long rank_of(Mat<S> a) {
  const long rows = a.rows(), cols = a.cols();
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long pivot = -1;
    for (long r = rank; r < rows; ++r)
      if (!is_zero(a(r, c))) { pivot = r; break; }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(rank));
    for (long r = rank + 1; r < rows; ++r) {
      if (is_zero(a(r, c))) continue;
      S f = a(r, c) / a(rank, c);
      for (long j = c; j < cols; ++j) a(r, j) = a(r, j) - f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Solves a*x = b for square a; empty result if a is singular.
template <class S>
std::optional<Vec<S>> solve_linear(Mat<S> a, Vec<S> b) {
  const long n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_linear: shape");
  for (long c = 0; c < n; ++c) {
    long pivot = -1;
    for (long r = c; r < n; ++r)
      if (!is_zero(a(r, c))) { pivot = r; break; }
    if (pivot < 0) return std::nullopt;
    a.row(pivot).swap(a.row(c));
    std::swap(b(pivot), b(c));
    for (long r = c + 1; r < n; ++r) {
      if (is_zero(a(r, c))) continue;
      S f = a(r, c) / a(c, c);
      for (long j = c; j < n; ++j) a(r, j) = a(r, j) - f * a(c, j);
      b(r) = b(r) - f * b(c);
    }
  }
  Vec<S> x(n);
  for (long r = n - 1; r >= 0; --r) {
    S acc = b(r);
    for (long j = r + 1; j < n; ++j) acc = acc - a(r, j) * x(j);
    x(r) = acc / a(r, r);
  }
  return x;
}

// Determinant over a field, by elimination.
template <class S>
S determinant(Mat<S> a) {
  const long n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant: not square");
  S det = S(1);
  for (long c = 0; c < n; ++c) {
    long pivot = -1;
    for (long r = c; r < n; ++r)
      if (!is_zero(a(r, c))) { pivot = r; break; }
    if (pivot < 0) return S(0);
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      det = S(0) - det;
    }
    det = det * a(c, c);
    for (long r = c + 1; r < n; ++r) {
      if (is_zero(a(r, c))) continue;
      S f = a(r, c) / a(c, c);
      for (long j = c; j < n; ++j) a(r, j) = a(r, j) - f * a(c, j);
    }
  }
  return det;
}

// Integer determinant by fraction-free (Bareiss) elimination.
Int bareiss_determinant(MatZ a);

// Diagonal of the Smith normal form of an integer matrix, as nonnegative
// entries d_1 | d_2 | ... (zeros trail for rank deficiency).
std::vector<Int> smith_diagonal(MatZ a);

// Gcd of the entries, nonnegative; 0 for the zero vector.
Int content(const VecZ& v);

// v divided by its content; the zero vector is returned unchanged.
VecZ primitive_part(VecZ v);

}  // namespace mckay

#include "mckay/exact.hpp"

#include <algorithm>

namespace mckay {

Int bareiss_determinant(MatZ a) {
  const long n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("bareiss_determinant: not square");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (long c = 0; c < n - 1; ++c) {
    long pivot = -1;
    for (long r = c; r < n; ++r)
      if (!a(r, c).is_zero()) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      sign = -sign;
    }
    for (long r = c + 1; r < n; ++r) {
      for (long j = c + 1; j < n; ++j) {
        Int num = a(r, j) * a(c, c) - a(r, c) * a(c, j);
        a(r, j) = num / prev;  // exact by Bareiss
      }
      a(r, c) = 0;
    }
    prev = a(c, c);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

bool find_nonzero(const MatZ& a, long t, long& ri, long& ci) {
  // smallest nonzero |entry| in the trailing block, to keep growth down
  bool found = false;
  Int best = 0;
  for (long r = t; r < a.rows(); ++r)
    for (long c = t; c < a.cols(); ++c) {
      if (a(r, c).is_zero()) continue;
      Int v = abs(a(r, c));
      if (!found || v < best) {
        found = true;
        best = v;
        ri = r;
        ci = c;
      }
    }
  return found;
}

}  // namespace

std::vector<Int> smith_diagonal(MatZ a) {
  const long m = std::min(a.rows(), a.cols());
  std::vector<Int> diag;
  for (long t = 0; t < m; ++t) {
    long ri = t, ci = t;
    if (!find_nonzero(a, t, ri, ci)) break;
    a.row(ri).swap(a.row(t));
    a.col(ci).swap(a.col(t));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (long r = t + 1; r < a.rows(); ++r) {
        if (a(r, t).is_zero()) continue;
        Int q = a(r, t) / a(t, t);
        a.row(r) -= (q * a.row(t)).eval();
        if (!a(r, t).is_zero()) {
          a.row(r).swap(a.row(t));
          clean = false;
        }
      }
      for (long c = t + 1; c < a.cols(); ++c) {
        if (a(t, c).is_zero()) continue;
        Int q = a(t, c) / a(t, t);
        a.col(c) -= (q * a.col(t)).eval();
        if (!a(t, c).is_zero()) {
          a.col(c).swap(a.col(t));
          clean = false;
        }
      }
    }
    diag.push_back(abs(a(t, t)));
  }
  // enforce the divisibility chain
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j)
      if (!Int(diag[j] % diag[i]).is_zero()) {
        Int g = gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
  while (diag.size() < static_cast<size_t>(m)) diag.push_back(0);
  return diag;
}

Int content(const VecZ& v) {
  Int g = 0;
  for (long i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return abs(g);
}

VecZ primitive_part(VecZ v) {
  Int g = content(v);
  if (g.is_zero() || g == 1) return v;
  for (long i = 0; i < v.size(); ++i) v(i) /= g;
  return v;
}

}  // namespace mckay

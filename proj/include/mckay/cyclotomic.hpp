// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum is a polynomial in zeta_N reduced modulo the N-th cyclotomic
// polynomial Phi_N, with rational coefficients in the power basis
// 1, zeta, ..., zeta^{phi(N)-1}.  Two values of equal order are equal
// exactly when their coefficient vectors are equal.  Operations between
// different orders embed both operands into Q(zeta_L), L = lcm of the
// orders; results are never descended to a smaller field.

#pragma once

#include "mckay/errors.hpp"
#include "mckay/numeric.hpp"

#include <iosfwd>
#include <vector>

namespace mckay {

long euler_phi(long n);

// Coefficients of Phi_N, low degree first (integral, monic); cached.
const std::vector<Int>& cyclotomic_polynomial(long n);

class CycNum {
 public:
  CycNum() : order_(1), coeffs_(VecQ::Zero(1)) {}
  explicit CycNum(const Rat& q) : order_(1), coeffs_(VecQ::Constant(1, q)) {}
  CycNum(long v) : CycNum(Rat(v)) {}
  CycNum(int v) : CycNum(Rat(v)) {}

  // zeta_N^k, reduced mod Phi_N.
  static CycNum root_of_unity(long n, long k);

  // Raw constructor: coefficient vector of length phi(order) in the
  // power basis (assumed already reduced).
  static CycNum from_coeffs(long order, VecQ coeffs);

  long order() const { return order_; }
  const VecQ& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rat as_rational() const;

  // Same value viewed in Q(zeta_L); requires order() | L.
  CycNum embedded(long l) const;

  CycNum inverse() const;  // throws DivisionByZero on 0
  CycNum pow(long k) const;

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a);
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

  // Galois conjugation zeta |-> zeta^{-1} (complex conjugation).
  friend CycNum conj(const CycNum& a);

  // Deterministic total order on (order, coeffs); used for canonical
  // sorting and map keys, with no numeric meaning.
  static int compare_key(const CycNum& a, const CycNum& b);

  friend std::ostream& operator<<(std::ostream& os, const CycNum& a);

 private:
  long order_;
  VecQ coeffs_;
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }

// Smallest m >= 1 with a^m == 1, searched up to `bound`; 0 if none found.
long multiplicative_order(const CycNum& a, long bound);

}  // namespace mckay

namespace Eigen {

// CycNum matrices are containers for exact values; nothing here may ever
// consult a magnitude or a precision.
template <>
struct NumTraits<mckay::CycNum> : GenericNumTraits<mckay::CycNum> {
  typedef mckay::CycNum Real;
  typedef mckay::CycNum NonInteger;
  typedef mckay::CycNum Nested;
  typedef mckay::CycNum Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 64,
    MulCost = 128
  };
  static inline Real epsilon() { return mckay::CycNum(0); }
  static inline Real dummy_precision() { return mckay::CycNum(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

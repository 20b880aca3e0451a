// Exact scalar types and Eigen aliases used across the library.
//
// All arithmetic in this project is exact: arbitrary-precision integers
// and rationals from Boost.Multiprecision, cyclotomic numbers built on
// top of them, and Eigen dense containers templated on those scalars.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

// Boost 1.74's byte-container constructor trait chokes on Eigen types
// (iterator_traits<void> is instantiated for matrix-shaped expressions).
// Declaring the trait false for Eigen templates keeps overload
// resolution of mixed scalar/matrix operators well-formed.
namespace boost::multiprecision::detail {
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : public std::false_type {};
template <class B, class L, class R>
struct is_byte_container<Eigen::CwiseBinaryOp<B, L, R>> : public std::false_type {};
template <class U, class X>
struct is_byte_container<Eigen::CwiseUnaryOp<U, X>> : public std::false_type {};
template <class N, class P>
struct is_byte_container<Eigen::CwiseNullaryOp<N, P>> : public std::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : public std::false_type {};
template <class X>
struct is_byte_container<Eigen::Transpose<X>> : public std::false_type {};
template <class X, int R, int C, bool P>
struct is_byte_container<Eigen::Block<X, R, C, P>> : public std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mckay {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatZ = Mat<Int>;
using VecZ = Vec<Int>;
using MatQ = Mat<Rat>;
using VecQ = Vec<Rat>;
using MatL = Mat<long>;
using VecL = Vec<long>;

inline bool is_zero(const Int& x) { return x.is_zero(); }
inline bool is_zero(const Rat& x) { return x.is_zero(); }

inline long checked_long(const Int& x) {
  if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min())
    throw std::overflow_error("integer does not fit in long");
  return static_cast<long>(x);
}

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline long lcm_long(long a, long b) { return std::lcm(a, b); }
inline long gcd_long(long a, long b) { return std::gcd(a, b); }

// Positive residue of a mod m, for m >= 1.
inline long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace mckay

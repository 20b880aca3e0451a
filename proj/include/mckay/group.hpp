// Finite matrix groups from exact generators, and the diagonal shorthand
// 1/r(a_1,...,a_n) for abelian subgroups of GL(n,C).
//
// Elements carry a deterministic breadth-first index starting at the
// identity, so every downstream artifact (character tables, fans, Ext
// tables) is byte-reproducible.

#pragma once

#include "mckay/cyclotomic.hpp"
#include "mckay/errors.hpp"
#include "mckay/numeric.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace mckay {

struct CyclicFactor {
  long r = 1;
  std::vector<long> weights;  // 0 <= a_i < r, one per coordinate
};

struct GroupSpec {
  enum class Kind { Diagonal, Matrix };

  Kind kind = Kind::Diagonal;
  long n = 0;
  std::vector<CyclicFactor> factors;        // Diagonal
  std::vector<Mat<CycNum>> generators;      // Matrix
  std::optional<long> order_hint;

  // 1/r(a_1,...,a_n), the cyclic group generated by diag(zeta_r^{a_i}).
  static GroupSpec diagonal(long r, std::vector<long> weights);
  static GroupSpec product(std::vector<CyclicFactor> factors, long n);
  static GroupSpec matrix(long n, std::vector<Mat<CycNum>> generators);
};

class GroupData {
 public:
  long dim() const { return n_; }
  long order() const { return static_cast<long>(size_); }
  long num_classes() const { return static_cast<long>(classes_.size()); }
  bool is_diagonal() const { return diagonal_; }
  bool is_abelian() const { return abelian_; }
  long exponent() const { return exponent_; }

  long mult(long i, long j) const;
  long inverse(long i) const;
  long power(long i, long k) const;
  long element_order(long i) const;

  const std::vector<std::vector<long>>& classes() const { return classes_; }
  long class_of(long i) const { return class_of_[i]; }
  long class_size(long c) const { return static_cast<long>(classes_[c].size()); }
  long centralizer_order(long c) const { return order() / class_size(c); }
  long representative(long c) const { return classes_[c][0]; }

  // class -> class of g^k
  std::vector<long> power_map(long k) const;

  Mat<CycNum> matrix_of(long i) const;
  CycNum trace_of(long i) const;
  CycNum det_of(long i) const;

  // Diagonal data (valid when is_diagonal()):
  long lattice_scale() const { return scale_; }  // L = lcm of factor orders
  const std::vector<long>& weight_vector(long i) const { return weights_[i]; }
  const std::vector<CyclicFactor>& factors() const { return factors_; }
  const std::set<std::vector<long>>& weight_set() const { return weight_index_keys_; }

  const std::vector<long>& generator_indices() const { return generator_indices_; }

  friend GroupData enumerate(const GroupSpec& spec, long cap);

 private:
  GroupData() = default;
  void finish();  // classes, exponent, inverses

  long n_ = 0;
  size_t size_ = 0;
  bool diagonal_ = false;
  bool abelian_ = false;
  long exponent_ = 1;

  // diagonal representation
  long scale_ = 1;
  std::vector<CyclicFactor> factors_;
  std::vector<std::vector<long>> weights_;
  std::map<std::vector<long>, long> weight_index_;
  std::set<std::vector<long>> weight_index_keys_;

  // matrix representation
  long common_order_ = 1;  // all entries live in Q(zeta_common_order_)
  std::vector<Mat<CycNum>> elements_;
  std::map<std::vector<std::pair<long, std::vector<Rat>>>, long> element_index_;

  std::vector<long> generator_indices_;
  std::vector<long> inverse_;
  std::vector<long> order_of_;
  std::vector<std::vector<long>> classes_;
  std::vector<long> class_of_;
  mutable std::vector<long> mult_table_;  // |G|^2 when small, else empty
};

GroupData enumerate(const GroupSpec& spec, long cap = 10000);

// det g = 1 for every element (checked on generators).
bool is_special_linear(const GroupData& g);

// No non-identity element fixes a nonzero vector.
bool acts_freely_off_origin(const GroupData& g);

}  // namespace mckay

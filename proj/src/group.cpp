#include "mckay/group.hpp"

#include "mckay/exact.hpp"

#include <algorithm>
#include <deque>

namespace mckay {

GroupSpec GroupSpec::diagonal(long r, std::vector<long> weights) {
  GroupSpec s;
  s.kind = Kind::Diagonal;
  s.n = static_cast<long>(weights.size());
  s.factors.push_back({r, std::move(weights)});
  return s;
}

GroupSpec GroupSpec::product(std::vector<CyclicFactor> factors, long n) {
  GroupSpec s;
  s.kind = Kind::Diagonal;
  s.n = n;
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::matrix(long n, std::vector<Mat<CycNum>> generators) {
  GroupSpec s;
  s.kind = Kind::Matrix;
  s.n = n;
  s.generators = std::move(generators);
  return s;
}

namespace {

std::vector<std::pair<long, std::vector<Rat>>> matrix_key(const Mat<CycNum>& m) {
  std::vector<std::pair<long, std::vector<Rat>>> key;
  key.reserve(m.size());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) {
      const CycNum& e = m(i, j);
      std::vector<Rat> c(e.coeffs().data(), e.coeffs().data() + e.coeffs().size());
      key.emplace_back(e.order(), std::move(c));
    }
  return key;
}

}  // namespace

GroupData enumerate(const GroupSpec& spec, long cap) {
  if (spec.n < 1) throw std::invalid_argument("enumerate: dimension must be positive");
  GroupData g;
  g.n_ = spec.n;

  if (spec.kind == GroupSpec::Kind::Diagonal) {
    g.diagonal_ = true;
    g.abelian_ = true;
    g.factors_ = spec.factors;
    long scale = 1;
    for (const auto& f : spec.factors) {
      if (f.r < 1) throw std::invalid_argument("enumerate: factor order must be positive");
      if (static_cast<long>(f.weights.size()) != spec.n)
        throw std::invalid_argument("enumerate: weight vector length mismatch");
      for (long a : f.weights)
        if (a < 0 || a >= f.r) throw std::invalid_argument("enumerate: weights must satisfy 0 <= a < r");
      scale = lcm_long(scale, f.r);
    }
    g.scale_ = scale;

    // generators as weight vectors in (Z/L)^n
    std::vector<std::vector<long>> gens;
    for (const auto& f : spec.factors) {
      std::vector<long> b(spec.n);
      for (long i = 0; i < spec.n; ++i) b[i] = mod_pos(f.weights[i] * (scale / f.r), scale);
      gens.push_back(std::move(b));
    }

    std::vector<long> id(spec.n, 0);
    g.weights_.push_back(id);
    g.weight_index_[id] = 0;
    std::deque<long> queue{0};
    while (!queue.empty()) {
      long x = queue.front();
      queue.pop_front();
      for (const auto& b : gens) {
        std::vector<long> y(spec.n);
        for (long i = 0; i < spec.n; ++i) y[i] = mod_pos(g.weights_[x][i] + b[i], scale);
        if (g.weight_index_.count(y)) continue;
        if (static_cast<long>(g.weights_.size()) + 1 > cap)
          throw CapExceeded("group closure exceeded cap");
        long idx = static_cast<long>(g.weights_.size());
        g.weight_index_[y] = idx;
        g.weights_.push_back(std::move(y));
        queue.push_back(idx);
      }
    }
    g.size_ = g.weights_.size();
    for (const auto& [k, v] : g.weight_index_) g.weight_index_keys_.insert(k);
    for (const auto& b : gens) g.generator_indices_.push_back(g.weight_index_.at(b));
  } else {
    long common = 1;
    for (const auto& m : spec.generators) {
      if (m.rows() != spec.n || m.cols() != spec.n)
        throw std::invalid_argument("enumerate: generator must be n x n");
      for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) common = lcm_long(common, m(i, j).order());
    }
    g.common_order_ = common;

    std::vector<Mat<CycNum>> gens;
    for (const auto& m : spec.generators) {
      Mat<CycNum> e(spec.n, spec.n);
      for (long i = 0; i < spec.n; ++i)
        for (long j = 0; j < spec.n; ++j) e(i, j) = m(i, j).embedded(common);
      if (determinant<CycNum>(e).is_zero()) throw NotInvertible("generator is singular");
      gens.push_back(std::move(e));
    }

    Mat<CycNum> id(spec.n, spec.n);
    for (long i = 0; i < spec.n; ++i)
      for (long j = 0; j < spec.n; ++j)
        id(i, j) = (i == j ? CycNum(1).embedded(common) : CycNum(0).embedded(common));
    g.elements_.push_back(id);
    g.element_index_[matrix_key(id)] = 0;
    std::deque<long> queue{0};
    while (!queue.empty()) {
      long x = queue.front();
      queue.pop_front();
      for (const auto& gen : gens) {
        Mat<CycNum> y = g.elements_[x] * gen;
        auto key = matrix_key(y);
        if (g.element_index_.count(key)) continue;
        if (static_cast<long>(g.elements_.size()) + 1 > cap)
          throw CapExceeded("group closure exceeded cap");
        long idx = static_cast<long>(g.elements_.size());
        g.element_index_[std::move(key)] = idx;
        g.elements_.push_back(std::move(y));
        queue.push_back(idx);
      }
    }
    g.size_ = g.elements_.size();
    for (const auto& gen : gens) g.generator_indices_.push_back(g.element_index_.at(matrix_key(gen)));

    g.abelian_ = true;
    for (size_t a = 0; a < gens.size() && g.abelian_; ++a)
      for (size_t b = a + 1; b < gens.size() && g.abelian_; ++b)
        g.abelian_ = (gens[a] * gens[b] == gens[b] * gens[a]);
  }

  g.finish();
  return g;
}

long GroupData::mult(long i, long j) const {
  if (!mult_table_.empty()) return mult_table_[i * order() + j];
  if (diagonal_) {
    std::vector<long> y(n_);
    for (long k = 0; k < n_; ++k) y[k] = mod_pos(weights_[i][k] + weights_[j][k], scale_);
    return weight_index_.at(y);
  }
  return element_index_.at(matrix_key((elements_[i] * elements_[j]).eval()));
}

long GroupData::inverse(long i) const { return inverse_[i]; }

long GroupData::power(long i, long k) const {
  long e = element_order(i);
  long m = mod_pos(k, e);
  long acc = 0;  // identity
  long base = i;
  while (m) {
    if (m & 1) acc = mult(acc, base);
    base = mult(base, base);
    m >>= 1;
  }
  return acc;
}

long GroupData::element_order(long i) const { return order_of_[i]; }

std::vector<long> GroupData::power_map(long k) const {
  std::vector<long> pm(classes_.size());
  for (size_t c = 0; c < classes_.size(); ++c) pm[c] = class_of_[power(representative(c), k)];
  return pm;
}

Mat<CycNum> GroupData::matrix_of(long i) const {
  if (!diagonal_) return elements_[i];
  Mat<CycNum> m(n_, n_);
  for (long r = 0; r < n_; ++r)
    for (long c = 0; c < n_; ++c)
      m(r, c) = (r == c) ? CycNum::root_of_unity(scale_, weights_[i][r]) : CycNum(0);
  return m;
}

CycNum GroupData::trace_of(long i) const {
  if (diagonal_) {
    CycNum t(0);
    for (long k = 0; k < n_; ++k) t = t + CycNum::root_of_unity(scale_, weights_[i][k]);
    return t;
  }
  CycNum t(0);
  for (long k = 0; k < n_; ++k) t = t + elements_[i](k, k);
  return t;
}

CycNum GroupData::det_of(long i) const {
  if (diagonal_) {
    long s = 0;
    for (long k = 0; k < n_; ++k) s += weights_[i][k];
    return CycNum::root_of_unity(scale_, s);
  }
  return determinant<CycNum>(elements_[i]);
}

void GroupData::finish() {
  const long n = order();
  if (!diagonal_ && n <= 256) {
    mult_table_.assign(static_cast<size_t>(n) * n, 0);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        mult_table_[i * n + j] = element_index_.at(matrix_key((elements_[i] * elements_[j]).eval()));
  }

  order_of_.assign(n, 0);
  inverse_.assign(n, 0);
  if (diagonal_) {
    for (long i = 0; i < n; ++i) {
      long ord = 1;
      std::vector<long> neg(n_);
      for (long k = 0; k < n_; ++k) {
        long w = weights_[i][k];
        if (w) ord = lcm_long(ord, scale_ / gcd_long(scale_, w));
        neg[k] = mod_pos(-w, scale_);
      }
      order_of_[i] = ord;
      inverse_[i] = weight_index_.at(neg);
      exponent_ = lcm_long(exponent_, ord);
    }
  } else {
    for (long i = 0; i < n; ++i) {
      long ord = 1, x = i;
      while (x != 0) {
        x = mult(x, i);
        ++ord;
      }
      order_of_[i] = ord;
      // g^{ord-1} is the inverse
      long inv = 0;
      for (long k = 1; k < ord; ++k) inv = mult(inv, i);
      inverse_[i] = inv;
      exponent_ = lcm_long(exponent_, ord);
    }
  }

  class_of_.assign(n, -1);
  if (abelian_) {
    for (long i = 0; i < n; ++i) {
      class_of_[i] = i;
      classes_.push_back({i});
    }
    return;
  }
  for (long i = 0; i < n; ++i) {
    if (class_of_[i] >= 0) continue;
    std::vector<long> orbit{i};
    class_of_[i] = static_cast<long>(classes_.size());
    std::deque<long> queue{i};
    while (!queue.empty()) {
      long x = queue.front();
      queue.pop_front();
      for (long gen : generator_indices_) {
        long y = mult(mult(inverse_[gen], x), gen);
        if (class_of_[y] >= 0) continue;
        class_of_[y] = class_of_[i];
        orbit.push_back(y);
        queue.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes_.push_back(std::move(orbit));
  }
}

bool is_special_linear(const GroupData& g) {
  const CycNum one(1);
  for (long gen : g.generator_indices())
    if (g.det_of(gen) != one) return false;
  return true;
}

bool acts_freely_off_origin(const GroupData& g) {
  for (long i = 1; i < g.order(); ++i) {
    if (g.is_diagonal()) {
      for (long w : g.weight_vector(i))
        if (w == 0) return false;
    } else {
      Mat<CycNum> m = g.matrix_of(i);
      for (long k = 0; k < g.dim(); ++k) m(k, k) = m(k, k) - CycNum(1);
      if (rank_of<CycNum>(m) < g.dim()) return false;
    }
  }
  return true;
}

}  // namespace mckay

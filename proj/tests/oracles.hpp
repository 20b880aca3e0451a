// Test-only oracles, kept independent of the library code paths they check:
// generator-order-insensitive closure, conjugation orbits by all elements,
// brute-force order-ideal enumeration, and a facet-coverage check for cones.

#pragma once

#include "mckay/cyclotomic.hpp"
#include "mckay/group.hpp"
#include "mckay/numeric.hpp"

#include <set>
#include <vector>

namespace oracle {

using mckay::CycNum;
using mckay::Mat;
using mckay::Rat;

inline std::vector<std::pair<long, std::vector<Rat>>> key_of(const Mat<CycNum>& m) {
  std::vector<std::pair<long, std::vector<Rat>>> key;
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) {
      const CycNum& e = m(i, j);
      key.emplace_back(e.order(), std::vector<Rat>(e.coeffs().data(), e.coeffs().data() + e.coeffs().size()));
    }
  return key;
}

// Closure by saturating pairwise products; no BFS, no generator order.
inline std::vector<Mat<CycNum>> closure_by_saturation(std::vector<Mat<CycNum>> gens, long common_order,
                                                      size_t cap = 100000) {
  const long n = gens.empty() ? 1 : gens.front().rows();
  Mat<CycNum> id(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) id(i, j) = CycNum(i == j ? 1 : 0).embedded(common_order);
  for (auto& g : gens)
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) g(i, j) = g(i, j).embedded(common_order);

  std::set<decltype(key_of(id))> seen;
  std::vector<Mat<CycNum>> elems{id};
  seen.insert(key_of(id));
  for (const auto& g : gens)
    if (seen.insert(key_of(g)).second) elems.push_back(g);
  bool grew = true;
  while (grew) {
    grew = false;
    size_t sz = elems.size();
    for (size_t a = 0; a < sz; ++a)
      for (size_t b = 0; b < sz; ++b) {
        Mat<CycNum> p = elems[a] * elems[b];
        if (seen.insert(key_of(p)).second) {
          elems.push_back(p);
          grew = true;
          if (elems.size() > cap) throw std::runtime_error("oracle closure cap");
        }
      }
  }
  return elems;
}

// Conjugacy classes as orbits under conjugation by every element.
inline std::vector<std::set<size_t>> conjugacy_by_all(const std::vector<Mat<CycNum>>& elems) {
  std::map<decltype(key_of(elems[0])), size_t> index;
  for (size_t i = 0; i < elems.size(); ++i) index[key_of(elems[i])] = i;
  auto inverse_of = [&](size_t i) {
    for (size_t j = 0; j < elems.size(); ++j)
      if (index.at(key_of((elems[i] * elems[j]).eval())) == 0) return j;
    throw std::runtime_error("oracle: no inverse");
  };
  std::vector<std::set<size_t>> classes;
  std::vector<bool> done(elems.size(), false);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    std::set<size_t> cls;
    for (size_t h = 0; h < elems.size(); ++h) {
      Mat<CycNum> c = elems[inverse_of(h)] * elems[i] * elems[h];
      cls.insert(index.at(key_of(c)));
    }
    for (size_t x : cls) done[x] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

// All order ideals of exactly `size` points inside the box [0,box]^n,
// grown point by point with dedup; no weight pruning at all.
inline std::set<std::set<std::vector<long>>> all_order_ideals(long n, long box, long size) {
  using Ideal = std::set<std::vector<long>>;
  std::set<Ideal> layer{{std::vector<long>(n, 0)}};
  for (long s = 1; s < size; ++s) {
    std::set<Ideal> next;
    for (const Ideal& ideal : layer) {
      for (const auto& p : ideal) {
        for (long i = 0; i < n; ++i) {
          std::vector<long> q = p;
          q[i] += 1;
          if (q[i] > box || ideal.count(q)) continue;
          bool addable = true;
          for (long j = 0; j < n && addable; ++j) {
            if (q[j] == 0) continue;
            std::vector<long> below = q;
            below[j] -= 1;
            addable = ideal.count(below) > 0;
          }
          if (!addable) continue;
          Ideal bigger = ideal;
          bigger.insert(q);
          next.insert(std::move(bigger));
        }
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace oracle

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mckay/group.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace mckay;

namespace {

// Q8 inside SL(2,C): diag(i,-i) and the rotation [[0,1],[-1,0]].
std::vector<Mat<CycNum>> quaternion_generators() {
  Mat<CycNum> a(2, 2), b(2, 2);
  CycNum i4 = CycNum::root_of_unity(4, 1);
  a << i4, CycNum(0), CycNum(0), -i4;
  b << CycNum(0), CycNum(1), CycNum(-1), CycNum(0);
  return {a, b};
}

}  // namespace

TEST_CASE("cyclic diagonal groups") {
  GroupData g = enumerate(GroupSpec::diagonal(3, {1, 1, 1}));
  CHECK(g.order() == 3);
  CHECK(g.num_classes() == 3);
  CHECK(g.is_abelian());
  CHECK(g.exponent() == 3);

  GroupData z7 = enumerate(GroupSpec::diagonal(7, {1, 2, 4}));
  CHECK(z7.order() == 7);
  CHECK(z7.num_classes() == 7);
  CHECK(z7.exponent() == 7);
}

TEST_CASE("diagonal spec with a kernel enumerates the image") {
  // diag(zeta_4^2, zeta_4^2) = diag(-1,-1) generates Z/2, not Z/4
  GroupData g = enumerate(GroupSpec::diagonal(4, {2, 2}));
  CHECK(g.order() == 2);
  CHECK(g.element_order(1) == 2);
}

TEST_CASE("quaternion group against the saturation oracle") {
  auto gens = quaternion_generators();
  auto elems = oracle::closure_by_saturation(gens, 4);
  auto classes = oracle::conjugacy_by_all(elems);
  REQUIRE(elems.size() == 8);
  REQUIRE(classes.size() == 5);

  GroupData g = enumerate(GroupSpec::matrix(2, gens));
  CHECK(g.order() == 8);
  CHECK(g.num_classes() == 5);
  CHECK(!g.is_abelian());
  CHECK(g.exponent() == 4);

  // same element set
  std::set<std::vector<std::pair<long, std::vector<Rat>>>> ours, oracles;
  for (long i = 0; i < g.order(); ++i) ours.insert(oracle::key_of(g.matrix_of(i)));
  for (const auto& e : elems) oracles.insert(oracle::key_of(e));
  CHECK(ours == oracles);

  // same class-size multiset
  std::multiset<size_t> sizes_a, sizes_b;
  for (const auto& c : g.classes()) sizes_a.insert(c.size());
  for (const auto& c : classes) sizes_b.insert(c.size());
  CHECK(sizes_a == sizes_b);
}

TEST_CASE("closure independent of generator order") {
  auto gens = quaternion_generators();
  GroupData g1 = enumerate(GroupSpec::matrix(2, {gens[0], gens[1]}));
  GroupData g2 = enumerate(GroupSpec::matrix(2, {gens[1], gens[0]}));
  std::set<std::vector<std::pair<long, std::vector<Rat>>>> s1, s2;
  for (long i = 0; i < g1.order(); ++i) s1.insert(oracle::key_of(g1.matrix_of(i)));
  for (long i = 0; i < g2.order(); ++i) s2.insert(oracle::key_of(g2.matrix_of(i)));
  CHECK(s1 == s2);
}

TEST_CASE("group axioms hold on the stored data") {
  GroupData g = enumerate(GroupSpec::matrix(2, quaternion_generators()));
  long total = 0;
  for (long c = 0; c < g.num_classes(); ++c) {
    total += g.class_size(c);
    CHECK(g.class_size(c) * g.centralizer_order(c) == g.order());
  }
  CHECK(total == g.order());
  CHECK(g.class_of(0) == 0);
  CHECK(g.class_size(0) == 1);
  // every element is in exactly one class
  std::vector<long> seen(g.order(), 0);
  for (const auto& cls : g.classes())
    for (long x : cls) seen[x] += 1;
  CHECK(std::count(seen.begin(), seen.end(), 1) == g.order());
  // power map: k = 1 is the identity map, and only k mod exponent matters
  auto pm1 = g.power_map(1);
  for (long c = 0; c < g.num_classes(); ++c) CHECK(pm1[c] == c);
  CHECK(g.power_map(3) == g.power_map(3 + g.exponent()));
  // inverses
  for (long i = 0; i < g.order(); ++i) CHECK(g.mult(i, g.inverse(i)) == 0);
}

TEST_CASE("abelian groups have singleton classes") {
  GroupData g = enumerate(GroupSpec::product({{2, {1, 0, 1}}, {3, {0, 1, 2}}}, 3));
  CHECK(g.order() == 6);
  CHECK(g.num_classes() == g.order());
}

TEST_CASE("is_special_linear") {
  CHECK(is_special_linear(enumerate(GroupSpec::diagonal(3, {1, 1, 1}))));
  CHECK(!is_special_linear(enumerate(GroupSpec::diagonal(3, {1, 1, 0}))));
  CHECK(is_special_linear(enumerate(GroupSpec::matrix(2, quaternion_generators()))));
}

TEST_CASE("acts_freely_off_origin") {
  CHECK(acts_freely_off_origin(enumerate(GroupSpec::diagonal(3, {1, 1, 1}))));
  // the square of diag(zeta_6, zeta_6^2, zeta_6^3) fixes the z-axis
  CHECK(!acts_freely_off_origin(enumerate(GroupSpec::diagonal(6, {1, 2, 3}))));
  CHECK(acts_freely_off_origin(enumerate(GroupSpec::diagonal(1, {0, 0}))));
  CHECK(acts_freely_off_origin(enumerate(GroupSpec::matrix(2, quaternion_generators()))));
}

TEST_CASE("cap and invertibility errors") {
  CHECK_THROWS_AS(enumerate(GroupSpec::diagonal(11, {1, 2, 8}), 5), CapExceeded);
  Mat<CycNum> sing(2, 2);
  sing << CycNum(1), CycNum(1), CycNum(1), CycNum(1);
  CHECK_THROWS_AS(enumerate(GroupSpec::matrix(2, {sing})), NotInvertible);
}

TEST_CASE("matrix data of diagonal elements") {
  GroupData g = enumerate(GroupSpec::diagonal(3, {1, 1, 1}));
  CHECK(g.trace_of(0) == CycNum(3));
  CycNum z3 = CycNum::root_of_unity(3, 1);
  CHECK(g.trace_of(1) == CycNum(3) * z3);
  CHECK(g.det_of(1) == CycNum(1));
  Mat<CycNum> m = g.matrix_of(1);
  CHECK(m(0, 0) == z3);
  CHECK(m(0, 1).is_zero());
}

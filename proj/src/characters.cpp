#include "mckay/characters.hpp"

#include "mckay/errors.hpp"

#include <algorithm>
#include <set>

namespace mckay {

namespace {

void check_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group) throw GroupMismatch();
}

ClassFunction constant(const GroupData& g, const CycNum& v) {
  ClassFunction f;
  f.group = &g;
  f.values.assign(g.num_classes(), v);
  return f;
}

}  // namespace

ClassFunction trivial_character(const GroupData& g) { return constant(g, CycNum(1)); }

ClassFunction regular_character(const GroupData& g) {
  ClassFunction f = constant(g, CycNum(0));
  f.values[0] = CycNum(g.order());
  return f;
}

ClassFunction natural_character(const GroupData& g) {
  ClassFunction f;
  f.group = &g;
  for (long c = 0; c < g.num_classes(); ++c) f.values.push_back(g.trace_of(g.representative(c)));
  return f;
}

ClassFunction determinant_character(const GroupData& g) {
  ClassFunction f;
  f.group = &g;
  for (long c = 0; c < g.num_classes(); ++c) f.values.push_back(g.det_of(g.representative(c)));
  return f;
}

CycNum inner_product(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  const GroupData& g = *a.group;
  CycNum acc(0);
  for (long c = 0; c < g.num_classes(); ++c)
    acc = acc + CycNum(g.class_size(c)) * a.values[c] * conj(b.values[c]);
  return acc / CycNum(g.order());
}

ClassFunction power_character(const ClassFunction& a, long m) {
  const GroupData& g = *a.group;
  std::vector<long> pm = g.power_map(m);
  ClassFunction f;
  f.group = &g;
  f.values.resize(g.num_classes());
  for (long c = 0; c < g.num_classes(); ++c) f.values[c] = a.values[pm[c]];
  return f;
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  ClassFunction f;
  f.group = a.group;
  for (size_t i = 0; i < a.values.size(); ++i) f.values.push_back(a.values[i] + b.values[i]);
  return f;
}

ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  ClassFunction f;
  f.group = a.group;
  for (size_t i = 0; i < a.values.size(); ++i) f.values.push_back(a.values[i] - b.values[i]);
  return f;
}

ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  ClassFunction f;
  f.group = a.group;
  for (size_t i = 0; i < a.values.size(); ++i) f.values.push_back(a.values[i] * b.values[i]);
  return f;
}

ClassFunction cf_conj(const ClassFunction& a) {
  ClassFunction f;
  f.group = a.group;
  for (const CycNum& v : a.values) f.values.push_back(conj(v));
  return f;
}

ClassFunction cf_scale(const CycNum& s, const ClassFunction& a) {
  ClassFunction f;
  f.group = a.group;
  for (const CycNum& v : a.values) f.values.push_back(s * v);
  return f;
}

bool cf_is_zero(const ClassFunction& a) {
  for (const CycNum& v : a.values)
    if (!v.is_zero()) return false;
  return true;
}

bool cf_equal(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  for (size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) return false;
  return true;
}

namespace {

std::vector<CycNum> values_key(const ClassFunction& f, long common_order) {
  std::vector<CycNum> key;
  for (const CycNum& v : f.values) key.push_back(v.embedded(std::lcm(v.order(), common_order)));
  return key;
}

bool values_less(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = CycNum::compare_key(a[i], b[i]);
    if (c != 0) return c > 0;  // larger coefficient vectors sort first
  }
  return false;
}

// Deterministic table layout: trivial first, then by (dim, value order).
void sort_table(CharacterTable& t) {
  const GroupData& g = *t.group;
  long e = g.exponent();
  std::stable_sort(t.irreps.begin(), t.irreps.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    bool ta = cf_is_zero(cf_sub(a, trivial_character(g)));
    bool tb = cf_is_zero(cf_sub(b, trivial_character(g)));
    if (ta != tb) return ta;
    Rat da = a.at_identity().as_rational(), db = b.at_identity().as_rational();
    if (da != db) return da < db;
    return values_less(values_key(a, e), values_key(b, e));
  });
  t.dims.clear();
  for (const auto& chi : t.irreps) {
    Rat d = chi.at_identity().as_rational();
    t.dims.push_back(checked_long(rat_num(d)));
  }
}

void verify_table(const CharacterTable& t) {
  const GroupData& g = *t.group;
  if (t.size() != g.num_classes())
    throw InternalCheckFailed("character table: wrong number of irreducibles");
  long sum = 0;
  for (long d : t.dims) sum += d * d;
  if (sum != g.order()) throw InternalCheckFailed("character table: sum of dim^2 != |G|");
  for (long i = 0; i < t.size(); ++i)
    for (long j = i; j < t.size(); ++j) {
      CycNum ip = inner_product(t.irreps[i], t.irreps[j]);
      if (ip != CycNum(i == j ? 1 : 0))
        throw InternalCheckFailed("character table: row orthogonality failed");
    }
}

// Dual group of a diagonal group: the character of the monomial x^v is
// g |-> zeta_L^{v.w(g)}, and distinct characters are found by closing
// the coordinate characters under multiplication.
CharacterTable diagonal_dual_table(const GroupData& g) {
  const long l = g.lattice_scale();
  const long n = g.dim();
  const long size = g.order();

  auto pairing_row = [&](const std::vector<long>& v) {
    std::vector<long> row(size);
    for (long i = 0; i < size; ++i) {
      const std::vector<long>& w = g.weight_vector(i);
      long acc = 0;
      for (long k = 0; k < n; ++k) acc = mod_pos(acc + v[k] * w[k], l);
      row[i] = acc;
    }
    return row;
  };

  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> reps{std::vector<long>(n, 0)};
  seen.insert(pairing_row(reps[0]));
  for (size_t qi = 0; qi < reps.size(); ++qi) {
    for (long k = 0; k < n; ++k) {
      std::vector<long> v = reps[qi];
      v[k] = mod_pos(v[k] + 1, l);
      if (seen.insert(pairing_row(v)).second) reps.push_back(std::move(v));
    }
  }
  if (static_cast<long>(reps.size()) != size)
    throw InternalCheckFailed("diagonal dual group came out the wrong size");

  CharacterTable t;
  t.group = &g;
  for (const auto& v : reps) {
    std::vector<long> row = pairing_row(v);
    ClassFunction f;
    f.group = &g;
    for (long c = 0; c < g.num_classes(); ++c)
      f.values.push_back(CycNum::root_of_unity(l, row[g.representative(c)]));
    t.irreps.push_back(std::move(f));
  }
  return t;
}

CharacterTable abelian_table(const GroupData& g) {
  if (g.is_diagonal()) return diagonal_dual_table(g);
  CharacterTable t;
  t.group = &g;
  for (ClassFunction& chi : linear_characters(g)) t.irreps.push_back(std::move(chi));
  if (t.size() != g.num_classes())
    throw InternalCheckFailed("abelian dual group came out the wrong size");
  return t;
}

// exterior power by the Newton identity; local copy to avoid a loop
// with repring
ClassFunction lambda_sieve(const ClassFunction& v, long k) {
  const GroupData& g = *v.group;
  std::vector<ClassFunction> lam{trivial_character(g)};
  for (long j = 1; j <= k; ++j) {
    ClassFunction acc = constant(g, CycNum(0));
    int sign = 1;
    for (long m = 1; m <= j; ++m) {
      ClassFunction term = cf_mul(lam[j - m], power_character(v, m));
      acc = sign > 0 ? cf_add(acc, term) : cf_sub(acc, term);
      sign = -sign;
    }
    lam.push_back(cf_scale(CycNum(Rat(1, j)), acc));
  }
  return lam[k];
}

CharacterTable sieve_table(const GroupData& g) {
  const long k = g.num_classes();
  std::vector<ClassFunction> found = linear_characters(g);
  ClassFunction q = natural_character(g);

  std::vector<ClassFunction> seeds{q};
  for (long j = 2; j <= g.dim(); ++j) seeds.push_back(lambda_sieve(q, j));

  auto try_candidate = [&](const ClassFunction& cand) -> bool {
    ClassFunction rem = cand;
    for (const ClassFunction& chi : found) {
      CycNum m = inner_product(rem, chi);
      if (!m.is_rational() || !is_integer(m.as_rational()))
        throw InternalCheckFailed("sieve: non-integral multiplicity for a genuine character");
      if (!m.is_zero()) rem = cf_sub(rem, cf_scale(m, chi));
    }
    if (cf_is_zero(rem)) return false;
    CycNum norm = inner_product(rem, rem);
    if (norm == CycNum(1)) {
      found.push_back(rem);
      return true;
    }
    return false;
  };

  while (static_cast<long>(found.size()) < k) {
    bool progress = false;
    std::vector<ClassFunction> candidates = seeds;
    for (const ClassFunction& a : found) {
      candidates.push_back(cf_conj(a));
      candidates.push_back(cf_mul(a, q));
    }
    size_t base = found.size();
    for (size_t i = 0; i < base; ++i)
      for (size_t j = i; j < base; ++j) candidates.push_back(cf_mul(found[i], found[j]));
    for (const ClassFunction& cand : candidates) {
      if (try_candidate(cand)) progress = true;
      if (static_cast<long>(found.size()) == k) break;
    }
    if (!progress && static_cast<long>(found.size()) < k)
      throw SieveStalled("character sieve found no new irreducible in a full pass");
  }

  CharacterTable t;
  t.group = &g;
  t.irreps = std::move(found);
  return t;
}

}  // namespace

std::vector<ClassFunction> linear_characters(const GroupData& g) {
  // A linear character is determined by its root-of-unity values on the
  // generators; each assignment is validated as a homomorphism against
  // the full multiplication action.
  const std::vector<long>& gens = g.generator_indices();
  std::vector<long> gen_orders;
  for (long gi : gens) gen_orders.push_back(g.element_order(gi));

  // value of every element along a breadth-first spanning tree
  std::vector<long> parent(g.order(), -1), via(g.order(), -1);
  {
    std::vector<long> queue{0};
    std::vector<bool> seen(g.order(), false);
    seen[0] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      long x = queue[qi];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        long y = g.mult(x, gens[gi]);
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        via[y] = static_cast<long>(gi);
        queue.push_back(y);
      }
    }
  }

  std::vector<ClassFunction> result;
  std::set<std::vector<std::pair<long, std::vector<Rat>>>> dedup;

  std::vector<long> choice(gens.size(), 0);
  const long e = g.exponent();
  while (true) {
    // candidate values on generators
    std::vector<CycNum> gen_values;
    for (size_t i = 0; i < gens.size(); ++i)
      gen_values.push_back(CycNum::root_of_unity(gen_orders[i], choice[i]).embedded(
          e % gen_orders[i] == 0 ? e : gen_orders[i]));

    std::vector<CycNum> value(g.order(), CycNum(1));
    std::vector<bool> ready(g.order(), false);
    ready[0] = true;
    std::vector<long> stack;
    for (long x = 0; x < g.order(); ++x) {
      long y = x;
      stack.clear();
      while (!ready[y]) {
        stack.push_back(y);
        y = parent[y];
      }
      while (!stack.empty()) {
        long z = stack.back();
        stack.pop_back();
        value[z] = value[parent[z]] * gen_values[via[z]];
        ready[z] = true;
      }
    }

    bool hom = true;
    for (long x = 0; x < g.order() && hom; ++x)
      for (size_t gi = 0; gi < gens.size() && hom; ++gi)
        hom = (value[g.mult(x, gens[gi])] == value[x] * gen_values[gi]);

    if (hom) {
      ClassFunction f;
      f.group = &g;
      for (long c = 0; c < g.num_classes(); ++c) f.values.push_back(value[g.representative(c)]);
      std::vector<std::pair<long, std::vector<Rat>>> key;
      for (const CycNum& v : f.values) {
        CycNum w = v.embedded(std::lcm(v.order(), e));
        key.emplace_back(w.order(), std::vector<Rat>(w.coeffs().data(), w.coeffs().data() + w.coeffs().size()));
      }
      if (dedup.insert(key).second) result.push_back(std::move(f));
    }

    // next assignment
    size_t pos = 0;
    while (pos < choice.size()) {
      if (++choice[pos] < gen_orders[pos]) break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
    if (gens.empty()) break;
  }

  if (gens.empty()) result.push_back(trivial_character(g));
  return result;
}

CharacterTable character_table(const GroupData& g) {
  CharacterTable t = g.is_abelian() ? abelian_table(g) : sieve_table(g);
  sort_table(t);
  verify_table(t);
  return t;
}

VecL decompose(const CharacterTable& table, const ClassFunction& f) {
  if (table.group != f.group) throw GroupMismatch();
  VecL coords(table.size());
  ClassFunction acc = cf_scale(CycNum(0), f);
  for (long i = 0; i < table.size(); ++i) {
    CycNum m = inner_product(f, table.irreps[i]);
    if (!m.is_rational() || !is_integer(m.as_rational()))
      throw NonIntegralDecomposition("class function is not a virtual character");
    coords(i) = checked_long(rat_num(m.as_rational()));
    acc = cf_add(acc, cf_scale(m, table.irreps[i]));
  }
  if (!cf_is_zero(cf_sub(acc, f)))
    throw NonIntegralDecomposition("class function is outside the span of the irreducibles");
  return coords;
}

long find_irrep(const CharacterTable& table, const ClassFunction& f) {
  for (long i = 0; i < table.size(); ++i)
    if (cf_equal(table.irreps[i], f)) return i;
  return -1;
}

}  // namespace mckay

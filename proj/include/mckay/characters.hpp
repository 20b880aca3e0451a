// Class functions and exact irreducible character tables.
//
// Abelian groups get their table straight from the dual group; for the
// rest, linear characters are found first (homomorphisms to roots of
// unity) and the remaining irreducibles by a tensor sieve over the
// natural character: decompose products against the known irreducibles
// and accept norm-1 remainders.

#pragma once

#include "mckay/cyclotomic.hpp"
#include "mckay/group.hpp"

#include <vector>

namespace mckay {

struct ClassFunction {
  const GroupData* group = nullptr;
  std::vector<CycNum> values;  // one per conjugacy class

  CycNum at_identity() const { return values[0]; }
};

ClassFunction trivial_character(const GroupData& g);
ClassFunction regular_character(const GroupData& g);

// Trace of a class representative in the defining matrix action.
ClassFunction natural_character(const GroupData& g);

// det of a class representative; trivial exactly for subgroups of SL.
ClassFunction determinant_character(const GroupData& g);

// (1/|G|) sum over classes of |C| a(C) conj(b(C)); Hermitian in b.
CycNum inner_product(const ClassFunction& a, const ClassFunction& b);

// Value at class C is a evaluated at the class of g^m.
ClassFunction power_character(const ClassFunction& a, long m);

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_conj(const ClassFunction& a);
ClassFunction cf_scale(const CycNum& s, const ClassFunction& a);
bool cf_is_zero(const ClassFunction& a);
bool cf_equal(const ClassFunction& a, const ClassFunction& b);

struct CharacterTable {
  const GroupData* group = nullptr;
  std::vector<ClassFunction> irreps;  // index 0 is the trivial character
  std::vector<long> dims;

  long size() const { return static_cast<long>(irreps.size()); }
};

// Complete table; throws SieveStalled if the sieve cannot finish.
CharacterTable character_table(const GroupData& g);

// All degree-1 characters (the dual of the abelianization).
std::vector<ClassFunction> linear_characters(const GroupData& g);

// Coordinates of a virtual character over the irreducible basis;
// throws NonIntegralDecomposition if any multiplicity is not an integer.
VecL decompose(const CharacterTable& table, const ClassFunction& f);

// Index of the irreducible with the given value vector; -1 if absent.
long find_irrep(const CharacterTable& table, const ClassFunction& f);

}  // namespace mckay

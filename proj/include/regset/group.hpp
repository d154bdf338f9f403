#pragma once

#include <string>
#include <vector>

#include "regset/errors.hpp"

namespace regset {

/**
 * A finite group as an explicit multiplication table over element indices
 * 0..order-1. Index 0 is always the identity; every constructor and parser
 * in the library maintains this, and all other modules rely on it.
 */
struct GroupTable {
  int order = 0;
  std::vector<int> mult_table;      // row-major, order*order entries
  std::vector<int> inv_table;       // inv_table[g] * g == 0
  std::vector<std::string> labels;  // optional human-readable names

  int mult(int a, int b) const {
    return mult_table[static_cast<std::size_t>(a) * order + b];
  }
  int inv(int g) const { return inv_table[g]; }
  // x^{-1} g x
  int conjugate(int g, int x) const { return mult(mult(inv(x), g), x); }
};

/**
 * A subgroup stored as a sorted set of element indices of its parent group.
 * Construction validates closure under multiplication and inversion, the
 * presence of the identity, and Lagrange divisibility. Multiplication always
 * goes through the parent table; a Subgroup carries no table of its own.
 */
class Subgroup {
 public:
  Subgroup(const GroupTable& parent, std::vector<int> elements);

  const GroupTable& parent() const { return *parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int g) const { return member_[static_cast<std::size_t>(g)] != 0; }

 private:
  const GroupTable* parent_;
  std::vector<int> elements_;
  std::vector<char> member_;
};

using Permutation = std::vector<int>;

// Full structural validation: identity at index 0, inverse table, every row
// and column a permutation, and associativity. Associativity is checked
// exhaustively up to order 200 and on a deterministic sample beyond that.
void validate_group_table(const GroupTable& g);

bool is_abelian(const GroupTable& g);
int element_order(const GroupTable& g, int x);
std::vector<int> element_order_multiset(const GroupTable& g);  // sorted

// --- constructors ---

GroupTable make_cyclic(int n);
GroupTable make_direct_product(const GroupTable& g1, const GroupTable& g2);

// Extension of an abelian group A by an element y with y^2 = e that inverts
// A by conjugation. The copy of A occupies indices 0..|A|-1.
GroupTable make_generalized_dihedral(const GroupTable& a);

// Order-4m group <a,b | a^{2m} = e, b^2 = a^m, b^{-1} a b = a^{-1}>, m >= 2.
GroupTable make_dicyclic(int m);

// (n1,k1)(n2,k2) = (n1 * action[k1](n2), k1 k2); element (n,k) has index
// n*|K| + k. Every action table must be an automorphism of N and the map
// k -> action[k] a homomorphism from K; both are verified eagerly.
GroupTable make_semidirect_product(const GroupTable& n, const GroupTable& k,
                                   const std::vector<std::vector<int>>& action);

// Closure of a generator set acting on {0..degree-1}. Element order is
// canonical: identity first, then breadth-first products with lexicographic
// tie-break inside each frontier, so tables are reproducible.
GroupTable from_permutation_generators(int degree,
                                       const std::vector<Permutation>& generators,
                                       int closure_budget = 5000);

// --- subgroup machinery ---

Subgroup subgroup_closure(const GroupTable& g, const std::vector<int>& seed);

// All subgroups, found by closing joins of cyclic subgroups to a fixpoint;
// sorted by (order, element list).
std::vector<Subgroup> enumerate_subgroups(const GroupTable& g, int order_budget = 512);

// {g in within : g != e, g^2 = e}, sorted.
std::vector<int> involutions(const GroupTable& g, const std::vector<int>& within);

bool is_normal(const GroupTable& g, const Subgroup& h);

}  // namespace regset

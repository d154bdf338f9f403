#pragma once

// Brute-force oracles used by the unit tests and the acceptance suite. They
// enumerate inverse-closed subsets directly and never go through the
// constructive machinery they are checking.

#include <functional>
#include <vector>

#include "regset/cosets.hpp"
#include "regset/group.hpp"
#include "regset/transversals.hpp"

namespace regset::oracles {

// An orbit of the inversion map inside a region: a single involution or an
// inverse pair. Subsets of orbits are exactly the inverse-closed subsets.
struct Site {
  int rep;      // smaller element
  int partner;  // inverse; equals rep for involutions
};

std::vector<Site> inversion_sites(const GroupTable& g, const std::vector<int>& region);

// Calls fn once per inverse-closed subset of region (as a sorted vector).
// Exponential in the number of sites; intended for |region| <= ~26.
void for_each_inverse_closed_subset(const GroupTable& g, const std::vector<int>& region,
                                    const std::function<void(const std::vector<int>&)>& fn);

// achieved[a][b] = true iff some inverse-closed S in G \ {e} has |S ∩ H| = a
// and |S ∩ Hx| = b for every coset outside H. Grid is |H| x (|H|+1).
std::vector<std::vector<char>> brute_achievable_grid(const GroupTable& g, const Subgroup& h);

// Existence of an (a,b)-regular connection set along the constructive route,
// without the perfect-code gate: an inverse-closed subset of H of size a
// plus a definitive per-component bundle decision for multiplicity b.
bool constructive_exists(const GroupTable& g, const Subgroup& h,
                         const CosetDecomposition& dec,
                         const std::vector<ComponentStructure>& comps, int a, int b,
                         long long budget = -1);

// Direct neighbor count of v in H within Cay(G,S); the reduction-free route.
int neighbor_count_in_H(const GroupTable& g, const Subgroup& h, const std::vector<int>& s,
                        int v);

}  // namespace regset::oracles

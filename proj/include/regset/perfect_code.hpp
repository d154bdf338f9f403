#pragma once

#include <optional>
#include <vector>

#include "regset/cosets.hpp"
#include "regset/group.hpp"

namespace regset {

/**
 * Outcome of the perfect-code decision for a subgroup, produced by two
 * independent methods that must agree: the per-coset involution criterion
 * and an exhaustive search for an inverse-closed right transversal.
 */
struct CodeDecision {
  bool is_perfect_code = false;
  bool is_total_perfect_code = false;
  std::optional<std::vector<int>> witness_transversal;  // inverse-closed, one per coset
  std::optional<int> failing_coset;                     // coset violating the criterion
  bool method_agreement = false;
};

struct InvolutionCriterion {
  bool holds = false;
  std::optional<int> failing_coset;
};

// True iff every x outside H with x^2 in H and |H|/|H ∩ H^x| odd has an
// involution in its coset Hx.
InvolutionCriterion is_perfect_code_by_involutions(const GroupTable& g, const Subgroup& h);

// Exhaustive backtracking for a set picking exactly one element from each
// coset listed in `region` (coset indices into dec) whose union is closed
// under inversion. The region must be a union of cosets closed under set
// inversion. Absence is definitive. Picks are deterministic: cosets in
// ascending order, candidates ascending, forced inverse picks propagated
// immediately.
std::optional<std::vector<int>> find_inverse_closed_transversal(const GroupTable& g,
                                                                const Subgroup& h,
                                                                const CosetDecomposition& dec,
                                                                const std::vector<int>& region);

// Runs both methods, insists that they agree, and derives the
// total-perfect-code decision (an involution inside H plus an inverse-closed
// transversal of the cosets outside H).
CodeDecision is_perfect_code(const GroupTable& g, const Subgroup& h);

// For every g with g^2 in H there is h in H with (gh)^2 = e. For normal H
// this is equivalent to H being a perfect code and serves as a cross-check.
bool condition_square_in_H(const GroupTable& g, const Subgroup& h);

// Inverse-closed subset of H \ {e} of the given size, built greedily from
// inverse pairs (ascending) and then involutions (ascending). Exists iff
// a is even or H contains an involution; absence is reported, not thrown.
std::optional<std::vector<int>> inverse_closed_subset_of_H(const Subgroup& h, int a);

}  // namespace regset

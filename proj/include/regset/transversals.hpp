#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "regset/cosets.hpp"
#include "regset/group.hpp"

namespace regset {

enum class BundleMethod {
  DistinctKoenig,
  SelfSingleCoset,
  SelfTwoCosets,
  SelfOddComplete,
  Complement,
  Backtracking,
};

const char* bundle_method_name(BundleMethod m);

/**
 * b pairwise disjoint right transversals of H inside one component. Each
 * transversal meets every coset of the component exactly once and the union
 * of all b transversals is inverse-closed (individual transversals need not
 * be).
 */
struct TransversalBundle {
  int component_rep = 0;
  int b = 0;
  std::vector<std::vector<int>> transversals;  // each sorted
  BundleMethod method = BundleMethod::Backtracking;

  std::vector<int> union_elements() const;  // sorted
};

/**
 * Element-level multigraph of a non-self-paired component: one vertex per
 * coset on each side and one edge per inverse pair {z, z^{-1}} with z in
 * dc1. Row and column sums of the pairing counts make it |H|-regular.
 */
struct BipartiteMultigraph {
  struct Edge {
    int left = 0;
    int right = 0;
    std::pair<int, int> payload;  // an inverse pair {z, z^{-1}}
  };
  int left_count = 0;
  int right_count = 0;
  std::vector<Edge> edges;
};

// Decomposes an r-regular bipartite multigraph into exactly r edge-disjoint
// perfect matchings (returned as lists of edge indices) via repeated exact
// augmenting-path matching. Deterministic in the edge order.
std::vector<std::vector<int>> koenig_one_factorization(const BipartiteMultigraph& g, int r);

// Non-self-paired components: 1-factorize the inverse-pair multigraph and
// turn the first b matchings into transversals.
TransversalBundle bundle_distinct(const GroupTable& g, const Subgroup& h,
                                  const CosetDecomposition& dec, const ComponentStructure& comp,
                                  int b);

// Self-paired single-coset components (m = 1). Requires an involution in the
// coset whenever the selection actually needs one (b odd).
TransversalBundle bundle_self_single_coset(const GroupTable& g, const Subgroup& h,
                                           const CosetDecomposition& dec,
                                           const ComponentStructure& comp, int b);

// Self-paired two-coset components (m = 2); unconditional.
TransversalBundle bundle_self_two_cosets(const GroupTable& g, const Subgroup& h,
                                         const CosetDecomposition& dec,
                                         const ComponentStructure& comp, int b);

// Self-paired components with m = |H| odd and an involution in the double
// coset: every coset holds exactly one involution and the pairing counts
// force a unique inverse pair for each coset offset.
TransversalBundle bundle_self_odd_complete(const GroupTable& g, const Subgroup& h,
                                           const CosetDecomposition& dec,
                                           const ComponentStructure& comp, int b);

// Complement of a t-bundle inside its component: |H| - t further disjoint
// transversals whose union is the rest of the component.
TransversalBundle bundle_complement(const GroupTable& g, const Subgroup& h,
                                    const CosetDecomposition& dec,
                                    const ComponentStructure& comp,
                                    const TransversalBundle& bundle_t);

// Exact search over inverse-closed selections with b elements per coset.
// Absence is definitive; exceeding the node budget throws.
std::optional<TransversalBundle> bundle_backtracking(const GroupTable& g, const Subgroup& h,
                                                     const CosetDecomposition& dec,
                                                     const ComponentStructure& comp, int b,
                                                     long long budget = -1);

// Dispatcher over the constructions above; falls back to backtracking (with
// complement composition for b > |H|/2) where no construction applies.
// Throws NoBundleExists when the search is exhausted.
TransversalBundle bundle_for_component(const GroupTable& g, const Subgroup& h,
                                       const CosetDecomposition& dec,
                                       const ComponentStructure& comp, int b,
                                       long long budget = -1);

// Constructor-independent check of the three bundle invariants.
void validate_bundle(const GroupTable& g, const Subgroup& h, const CosetDecomposition& dec,
                     const ComponentStructure& comp, const TransversalBundle& bundle);

long long default_search_budget();

}  // namespace regset

#pragma once

#include <string>
#include <vector>

#include "regset/group.hpp"

namespace regset {

/**
 * Right cosets Hx of a subgroup, in ascending order of their minimal element.
 * Coset 0 is H itself and each coset's representative is its minimal element.
 */
struct CosetDecomposition {
  std::vector<std::vector<int>> cosets;  // each sorted
  std::vector<int> coset_of;             // element index -> coset index
  std::vector<int> reps;                 // minimal element per coset
};

CosetDecomposition right_cosets(const GroupTable& g, const Subgroup& h);

// Hx ~ Hy  iff  y lies in H x^{-1} H. Symmetric and constant on cosets.
bool coset_relation(const GroupTable& g, const Subgroup& h, int x, int y);

// m = |H| / |H ∩ x^{-1}Hx|. Computed both through the conjugate intersection
// and by counting the right cosets inside HxH; a disagreement is a
// consistency failure.
int conjugate_intersection_index(const GroupTable& g, const Subgroup& h, int x);

enum class ComponentKind { Complete, CompleteBipartite };

/**
 * One connected component of the coset relation graph on [G:H], spanned by
 * the double cosets HxH and Hx^{-1}H. When the two double cosets coincide
 * the component induces a complete graph K_m on its m cosets; otherwise it
 * induces the complete bipartite graph K_{m,m} across the two double cosets.
 */
struct ComponentStructure {
  int rep = 0;                 // minimal element of dc1 ∪ dc2
  std::vector<int> dc1, dc2;   // sorted element sets; dc2 == dc1 when self-paired
  bool self_paired = false;
  int m = 0;
  std::vector<int> cosets1, cosets2;  // coset indices, ascending

  ComponentKind kind() const {
    return self_paired ? ComponentKind::Complete : ComponentKind::CompleteBipartite;
  }
  // All elements of the component, sorted.
  std::vector<int> all_elements() const;
  // All coset indices of the component, ascending.
  std::vector<int> all_cosets() const;
};

// Components covering exactly G \ H, ordered by representative. The component
// containing H itself is excluded; H = G is an error.
std::vector<ComponentStructure> components(const GroupTable& g, const Subgroup& h,
                                           const CosetDecomposition& dec);
std::vector<ComponentStructure> components(const GroupTable& g, const Subgroup& h);

// N[u][w] = number of z in coset cosets1[u] whose inverse lies in coset
// cosets2[w]. Every row and column sums to |H|.
std::vector<std::vector<int>> inverse_pairing_counts(const GroupTable& g, const Subgroup& h,
                                                     const CosetDecomposition& dec,
                                                     const ComponentStructure& comp);

// DOT rendering of the coset relation graph (vertices are cosets labelled by
// their representative).
std::string coset_graph_dot(const GroupTable& g, const Subgroup& h,
                            const CosetDecomposition& dec,
                            const std::vector<ComponentStructure>& comps);

}  // namespace regset

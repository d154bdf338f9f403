#include "regset/perfect_code.hpp"

#include <algorithm>

namespace regset {

namespace {

void require_proper_nontrivial(const GroupTable& g, const Subgroup& h) {
  if (h.order() <= 1 || h.order() >= g.order)
    throw Error(Errc::TrivialOrFullSubgroup,
                "decision requires a nontrivial proper subgroup");
}

}  // namespace

InvolutionCriterion is_perfect_code_by_involutions(const GroupTable& g, const Subgroup& h) {
  require_proper_nontrivial(g, h);
  auto dec = right_cosets(g, h);
  // Per-coset caches; m and the involution count are constant on cosets.
  std::vector<int> m_of_coset(dec.cosets.size(), -1);
  std::vector<int> has_involution(dec.cosets.size(), -1);
  for (int x = 0; x < g.order; ++x) {
    if (h.contains(x)) continue;
    if (!h.contains(g.mult(x, x))) continue;
    int c = dec.coset_of[x];
    if (m_of_coset[c] < 0) m_of_coset[c] = conjugate_intersection_index(g, h, x);
    if (m_of_coset[c] % 2 == 0) continue;
    if (has_involution[c] < 0) {
      has_involution[c] = 0;
      for (int z : dec.cosets[c])
        if (g.mult(z, z) == 0) {
          has_involution[c] = 1;
          break;
        }
    }
    if (!has_involution[c]) return {false, c};
  }
  return {true, std::nullopt};
}

namespace {

struct TransversalSearch {
  const GroupTable& g;
  const CosetDecomposition& dec;
  std::vector<int> region;          // ascending coset indices
  std::vector<int> pick;            // per coset index, -1 if unassigned
  std::vector<char> in_region;

  bool solve(std::size_t next) {
    // Find the first unassigned region coset.
    while (next < region.size() && pick[region[next]] >= 0) ++next;
    if (next == region.size()) return true;
    int c = region[next];
    for (int z : dec.cosets[c]) {
      int zi = g.inv(z);
      int w = dec.coset_of[zi];
      if (!in_region[w])
        throw Error(Errc::OutOfRange, "region is not closed under inversion");
      if (w == c) {
        if (zi != z) continue;  // two distinct picks would land in one coset
        pick[c] = z;
        if (solve(next + 1)) return true;
        pick[c] = -1;
      } else if (pick[w] >= 0) {
        // A forced pick was already propagated into c when w was assigned,
        // so any candidate seen here conflicts.
        continue;
      } else {
        pick[c] = z;
        pick[w] = zi;
        if (solve(next + 1)) return true;
        pick[c] = -1;
        pick[w] = -1;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_inverse_closed_transversal(const GroupTable& g,
                                                                const Subgroup& h,
                                                                const CosetDecomposition& dec,
                                                                const std::vector<int>& region) {
  (void)h;
  std::vector<int> sorted_region = region;
  std::sort(sorted_region.begin(), sorted_region.end());
  sorted_region.erase(std::unique(sorted_region.begin(), sorted_region.end()),
                      sorted_region.end());
  TransversalSearch search{g, dec, sorted_region,
                           std::vector<int>(dec.cosets.size(), -1),
                           std::vector<char>(dec.cosets.size(), 0)};
  for (int c : sorted_region) search.in_region[c] = 1;
  if (!search.solve(0)) return std::nullopt;
  std::vector<int> out;
  out.reserve(sorted_region.size());
  for (int c : sorted_region) out.push_back(search.pick[c]);
  std::sort(out.begin(), out.end());
  return out;
}

CodeDecision is_perfect_code(const GroupTable& g, const Subgroup& h) {
  require_proper_nontrivial(g, h);
  auto crit = is_perfect_code_by_involutions(g, h);
  auto dec = right_cosets(g, h);
  std::vector<int> all(dec.cosets.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  auto witness = find_inverse_closed_transversal(g, h, dec, all);
  if (crit.holds != witness.has_value())
    throw ConsistencyError(Errc::MethodDisagreement,
                           "involution criterion and transversal search disagree");

  CodeDecision out;
  out.is_perfect_code = crit.holds;
  out.witness_transversal = witness;
  out.failing_coset = crit.failing_coset;
  out.method_agreement = true;

  bool h_has_involution = !involutions(g, h.elements()).empty();
  if (h_has_involution) {
    std::vector<int> outside(all.begin() + 1, all.end());
    out.is_total_perfect_code =
        find_inverse_closed_transversal(g, h, dec, outside).has_value();
  }
  return out;
}

bool condition_square_in_H(const GroupTable& g, const Subgroup& h) {
  for (int x = 0; x < g.order; ++x) {
    if (!h.contains(g.mult(x, x))) continue;
    bool found = false;
    for (int a : h.elements()) {
      int xa = g.mult(x, a);
      if (g.mult(xa, xa) == 0) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::optional<std::vector<int>> inverse_closed_subset_of_H(const Subgroup& h, int a) {
  if (a < 0 || a >= h.order())
    throw Error(Errc::OutOfRange, "size must lie in [0, |H|-1]");
  const GroupTable& g = h.parent();
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> invs;
  for (int z : h.elements()) {
    if (z == 0) continue;
    int zi = g.inv(z);
    if (zi == z)
      invs.push_back(z);
    else if (z < zi)
      pairs.emplace_back(z, zi);
  }
  int use_pairs = std::min(static_cast<int>(pairs.size()), a / 2);
  int use_invs = a - 2 * use_pairs;
  if (use_invs > static_cast<int>(invs.size())) return std::nullopt;
  std::vector<int> out;
  for (int i = 0; i < use_pairs; ++i) {
    out.push_back(pairs[i].first);
    out.push_back(pairs[i].second);
  }
  for (int i = 0; i < use_invs; ++i) out.push_back(invs[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace regset

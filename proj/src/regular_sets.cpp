#include "regset/regular_sets.hpp"

#include <algorithm>

namespace regset {

ConnectionSet ConnectionSet::checked(const GroupTable& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<char> member(g.order, 0);
  for (int z : elements) {
    if (z < 0 || z >= g.order)
      throw Error(Errc::InvalidConnectionSet, "element index out of range");
    member[z] = 1;
  }
  if (!elements.empty() && elements.front() == 0)
    throw Error(Errc::InvalidConnectionSet, "connection set must not contain the identity");
  for (int z : elements)
    if (!member[g.inv(z)])
      throw Error(Errc::InvalidConnectionSet, "connection set is not inverse-closed");
  return ConnectionSet{std::move(elements)};
}

namespace {

void merge_methods(std::vector<BundleMethod>& into, BundleMethod m) {
  if (std::find(into.begin(), into.end(), m) == into.end()) into.push_back(m);
}

std::vector<int> assemble(const std::vector<int>& subset_a,
                          const std::vector<std::vector<int>>& bundle_unions) {
  std::vector<int> s = subset_a;
  for (const auto& u : bundle_unions) s.insert(s.end(), u.begin(), u.end());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

ConnectionSet construct_regular_set(const GroupTable& g, const Subgroup& h, int a, int b,
                                    std::vector<BundleMethod>* methods, long long budget) {
  auto decision = is_perfect_code(g, h);
  if (!decision.is_perfect_code)
    throw Error(Errc::NotAPerfectCode, "subgroup is not a perfect code of the group");
  if (a < 0 || a >= h.order()) throw Error(Errc::OutOfRange, "a must lie in [0, |H|-1]");
  if (b < 0 || b > h.order())
    throw Error(Errc::MultiplicityOutOfRange, "b must lie in [0, |H|]");

  auto subset_a = inverse_closed_subset_of_H(h, a);
  if (!subset_a)
    throw Error(Errc::NoInverseClosedSubset,
                "odd a requires an involution in H");

  auto dec = right_cosets(g, h);
  auto comps = components(g, h, dec);
  std::vector<std::vector<int>> unions;
  std::vector<BundleMethod> used;
  for (const auto& comp : comps) {
    auto bundle = bundle_for_component(g, h, dec, comp, b, budget);
    merge_methods(used, bundle.method);
    unions.push_back(bundle.union_elements());
  }
  auto s = ConnectionSet::checked(g, assemble(*subset_a, unions));

  // Post-check of the defining coset counts.
  std::vector<int> counts(dec.cosets.size(), 0);
  for (int z : s.elements) ++counts[dec.coset_of[z]];
  if (counts[0] != a)
    throw ConsistencyError(Errc::CountMismatch, "|S ∩ H| differs from a");
  for (std::size_t c = 1; c < counts.size(); ++c)
    if (counts[c] != b)
      throw ConsistencyError(Errc::CountMismatch, "|S ∩ Hx| differs from b");

  if (methods) *methods = used;
  return s;
}

std::vector<long long> eigenvalue_witness(const GroupTable& g, const Subgroup& h,
                                          const ConnectionSet& s, int a, int b) {
  const int k = static_cast<int>(s.elements.size());
  const long long ell = a - b;
  std::vector<long long> u(g.order);
  if (k == a && b == 0) {
    for (int v = 0; v < g.order; ++v) u[v] = h.contains(v) ? 1 : 0;
  } else {
    for (int v = 0; v < g.order; ++v) u[v] = h.contains(v) ? (k - a) : -b;
  }
  for (int v = 0; v < g.order; ++v) {
    long long acc = 0;
    for (int z : s.elements) acc += u[g.mult(z, v)];
    if (acc != ell * u[v])
      throw ConsistencyError(Errc::WitnessCheckFailed,
                             "eigenvector identity fails at vertex " + std::to_string(v));
  }
  return u;
}

RegularSetCertificate verify_regular_set(const GroupTable& g, const Subgroup& h,
                                         const ConnectionSet& s, int a, int b) {
  // Route 1: direct neighbor counting in Cay(G,S).
  bool direct_ok = true;
  int bad_vertex = -1;
  for (int v = 0; v < g.order && direct_ok; ++v) {
    int count = 0;
    for (int z : s.elements)
      if (h.contains(g.mult(z, v))) ++count;
    int expected = h.contains(v) ? a : b;
    if (count != expected) {
      direct_ok = false;
      bad_vertex = v;
    }
  }

  // Route 2: coset intersection counts.
  auto dec = right_cosets(g, h);
  std::vector<int> counts(dec.cosets.size(), 0);
  for (int z : s.elements) ++counts[dec.coset_of[z]];
  bool coset_ok = counts[0] == a;
  for (std::size_t c = 1; c < counts.size() && coset_ok; ++c) coset_ok = (counts[c] == b);

  if (direct_ok != coset_ok)
    throw ConsistencyError(Errc::CountMismatch,
                           "neighbor counting and coset counting disagree");
  if (!direct_ok)
    throw Error(Errc::NotRegularSet,
                "regularity fails at vertex " + std::to_string(bad_vertex));

  RegularSetCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.k = static_cast<int>(s.elements.size());
  cert.connection_set = s;
  cert.per_coset_counts = std::move(counts);
  cert.quotient = {{{a, cert.k - a}, {b, cert.k - b}}};
  cert.eigenvalue = a - b;
  cert.eigenvector = eigenvalue_witness(g, h, s, a, b);
  return cert;
}

std::vector<RegularSetCertificate> full_range_construct(const GroupTable& g, const Subgroup& h,
                                                        long long budget) {
  auto decision = is_perfect_code(g, h);
  if (!decision.is_perfect_code)
    throw Error(Errc::NotAPerfectCode, "subgroup is not a perfect code of the group");

  const bool h_has_involution = !involutions(g, h.elements()).empty();
  // By Cauchy's theorem these two gates coincide; a divergence would be a
  // structural failure worth halting on.
  if (h_has_involution != (h.order() % 2 == 0))
    throw ConsistencyError(Errc::AssertionFailed,
                           "involution presence disagrees with |H| parity");

  auto dec = right_cosets(g, h);
  auto comps = components(g, h, dec);

  std::vector<RegularSetCertificate> certificates;
  for (int b = 0; b <= h.order(); ++b) {
    std::vector<std::vector<int>> unions;
    std::vector<BundleMethod> used;
    for (const auto& comp : comps) {
      auto bundle = bundle_for_component(g, h, dec, comp, b, budget);
      merge_methods(used, bundle.method);
      unions.push_back(bundle.union_elements());
    }
    for (int a = 0; a < h.order(); ++a) {
      if (a % 2 == 1 && !h_has_involution) continue;
      auto subset_a = inverse_closed_subset_of_H(h, a);
      if (!subset_a)
        throw ConsistencyError(Errc::AssertionFailed,
                               "admissible a has no inverse-closed subset");
      auto s = ConnectionSet::checked(g, assemble(*subset_a, unions));
      auto cert = verify_regular_set(g, h, s, a, b);
      cert.methods_used = used;
      certificates.push_back(std::move(cert));
    }
  }
  return certificates;
}

}  // namespace regset

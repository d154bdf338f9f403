#pragma once

#include <array>
#include <vector>

#include "regset/perfect_code.hpp"
#include "regset/transversals.hpp"

namespace regset {

/**
 * An inverse-closed subset of G \ {e}: the connection set of a Cayley graph.
 * Vertices x, y of Cay(G,S) are adjacent iff y x^{-1} lies in S.
 */
struct ConnectionSet {
  std::vector<int> elements;  // sorted

  static ConnectionSet checked(const GroupTable& g, std::vector<int> elements);
};

/**
 * A verified witness that H is an (a,b)-regular set in Cay(G,S): per-coset
 * intersection counts, the 2x2 quotient matrix of the equitable partition
 * {H, G \ H}, and an exact integer eigenvector for the eigenvalue a-b.
 */
struct RegularSetCertificate {
  int a = 0;
  int b = 0;
  int k = 0;  // valency |S|
  ConnectionSet connection_set;
  std::vector<int> per_coset_counts;        // |S ∩ Hx| by coset index
  std::array<std::array<long long, 2>, 2> quotient{};  // [[a,k-a],[b,k-b]]
  std::vector<long long> eigenvector;
  long long eigenvalue = 0;  // a - b
  std::vector<BundleMethod> methods_used;
};

// S = (inverse-closed subset of H of size a) ∪ (per-component b-bundles).
// Requires H to be a perfect code of G. Optionally reports which bundle
// constructions fired.
ConnectionSet construct_regular_set(const GroupTable& g, const Subgroup& h, int a, int b,
                                    std::vector<BundleMethod>* methods = nullptr,
                                    long long budget = -1);

// Checks (a,b)-regularity by direct neighbor counting over every vertex and
// independently by coset intersection counts; the two must agree. Fills the
// quotient matrix and the exact eigenvector witness.
RegularSetCertificate verify_regular_set(const GroupTable& g, const Subgroup& h,
                                         const ConnectionSet& s, int a, int b);

// Integer vector u with A·u = (a-b)·u in Cay(G,S), verified exactly:
// u = (k-a) on H and -b outside, or the indicator of H when k = a, b = 0.
std::vector<long long> eigenvalue_witness(const GroupTable& g, const Subgroup& h,
                                          const ConnectionSet& s, int a, int b);

// Certificates for the whole admissible grid: 0 <= a <= |H|-1, 0 <= b <= |H|,
// with odd a admitted only when H contains an involution.
std::vector<RegularSetCertificate> full_range_construct(const GroupTable& g, const Subgroup& h,
                                                        long long budget = -1);

}  // namespace regset

#include "regset/group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>

namespace regset {

namespace {

// Fills the inverse table by scanning each row for the identity and checks
// that index 0 really is a two-sided identity.
void finalize_table(GroupTable& g) {
  const int n = g.order;
  for (int x = 0; x < n; ++x) {
    if (g.mult(0, x) != x || g.mult(x, 0) != x) {
      throw ConsistencyError(Errc::InvalidGroupTable,
                             "constructed table has no identity at index 0");
    }
  }
  g.inv_table.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.mult(x, y) == 0) {
        g.inv_table[x] = y;
        break;
      }
    }
    if (g.inv_table[x] < 0 || g.mult(g.inv_table[x], x) != 0) {
      throw ConsistencyError(Errc::InvalidGroupTable,
                             "constructed table has a non-invertible element");
    }
  }
}

bool is_permutation_of_range(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

void validate_group_table(const GroupTable& g) {
  const int n = g.order;
  if (n <= 0 || static_cast<int>(g.mult_table.size()) != n * n ||
      static_cast<int>(g.inv_table.size()) != n) {
    throw Error(Errc::InvalidGroupTable, "table dimensions are inconsistent");
  }
  std::vector<int> row(n), col(n);
  for (int x = 0; x < n; ++x) {
    if (g.mult(0, x) != x || g.mult(x, 0) != x)
      throw Error(Errc::InvalidGroupTable, "index 0 is not the identity");
    if (g.mult(x, g.inv(x)) != 0 || g.mult(g.inv(x), x) != 0)
      throw Error(Errc::InvalidGroupTable, "inverse table is wrong at " + std::to_string(x));
    for (int y = 0; y < n; ++y) {
      row[y] = g.mult(x, y);
      col[y] = g.mult(y, x);
    }
    if (!is_permutation_of_range(row, n) || !is_permutation_of_range(col, n))
      throw Error(Errc::InvalidGroupTable, "row or column " + std::to_string(x) +
                                               " is not a permutation");
  }
  if (n <= 200) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c)))
            throw Error(Errc::InvalidGroupTable, "associativity fails");
  } else {
    // Deterministic sample; full cubic scan is out of reach at this size.
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < 1000000; ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      int a = static_cast<int>((state >> 33) % n);
      int b = static_cast<int>((state >> 17) % n);
      int c = static_cast<int>(state % n);
      if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c)))
        throw Error(Errc::InvalidGroupTable, "associativity fails");
    }
  }
}

bool is_abelian(const GroupTable& g) {
  for (int x = 0; x < g.order; ++x)
    for (int y = x + 1; y < g.order; ++y)
      if (g.mult(x, y) != g.mult(y, x)) return false;
  return true;
}

int element_order(const GroupTable& g, int x) {
  int k = 1;
  int p = x;
  while (p != 0) {
    p = g.mult(p, x);
    ++k;
  }
  return k;
}

std::vector<int> element_order_multiset(const GroupTable& g) {
  std::vector<int> orders(g.order);
  for (int x = 0; x < g.order; ++x) orders[x] = element_order(g, x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

GroupTable make_cyclic(int n) {
  if (n < 1) throw Error(Errc::OutOfRange, "cyclic group order must be positive");
  GroupTable g;
  g.order = n;
  g.mult_table.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mult_table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  finalize_table(g);
  return g;
}

GroupTable make_direct_product(const GroupTable& g1, const GroupTable& g2) {
  GroupTable g;
  const int n1 = g1.order, n2 = g2.order;
  g.order = n1 * n2;
  g.mult_table.resize(static_cast<std::size_t>(g.order) * g.order);
  auto idx = [n2](int a, int b) { return a * n2 + b; };
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          g.mult_table[static_cast<std::size_t>(idx(a1, a2)) * g.order + idx(b1, b2)] =
              idx(g1.mult(a1, b1), g2.mult(a2, b2));
  finalize_table(g);
  return g;
}

GroupTable make_generalized_dihedral(const GroupTable& a) {
  if (!is_abelian(a))
    throw Error(Errc::NonAbelianInput, "generalized dihedral base must be abelian");
  const int m = a.order;
  GroupTable g;
  g.order = 2 * m;
  g.mult_table.resize(static_cast<std::size_t>(g.order) * g.order);
  // index = bit*m + x encodes x (bit 0) or x*y (bit 1); y inverts A, y^2 = e.
  std::vector<int> ainv(m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y)
      if (a.mult(x, y) == 0) {
        ainv[x] = y;
        break;
      }
  }
  auto idx = [m](int x, int bit) { return bit * m + x; };
  for (int b1 = 0; b1 < 2; ++b1)
    for (int x1 = 0; x1 < m; ++x1)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int x2 = 0; x2 < m; ++x2) {
          int left = b1 ? a.mult(x1, ainv[x2]) : a.mult(x1, x2);
          g.mult_table[static_cast<std::size_t>(idx(x1, b1)) * g.order + idx(x2, b2)] =
              idx(left, b1 ^ b2);
        }
  finalize_table(g);
  return g;
}

GroupTable make_dicyclic(int m) {
  if (m < 2) throw Error(Errc::OutOfRange, "dicyclic parameter must be at least 2");
  const int c = 2 * m;  // order of a
  GroupTable g;
  g.order = 4 * m;
  g.mult_table.resize(static_cast<std::size_t>(g.order) * g.order);
  // index = j*2m + i encodes a^i b^j with i mod 2m, j in {0,1}.
  auto idx = [c](int i, int j) { return j * c + i; };
  auto mod = [c](int v) { return ((v % c) + c) % c; };
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < c; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < c; ++i2) {
          // a^i b a^k = a^{i-k} b;  (a^i b)(a^k b) = a^{i-k+m}
          int i, j;
          if (j1 == 0) {
            i = mod(i1 + i2);
            j = j2;
          } else if (j2 == 0) {
            i = mod(i1 - i2);
            j = 1;
          } else {
            i = mod(i1 - i2 + m);
            j = 0;
          }
          g.mult_table[static_cast<std::size_t>(idx(i1, j1)) * g.order + idx(i2, j2)] = idx(i, j);
        }
  finalize_table(g);
  return g;
}

GroupTable make_semidirect_product(const GroupTable& n, const GroupTable& k,
                                   const std::vector<std::vector<int>>& action) {
  if (static_cast<int>(action.size()) != k.order)
    throw Error(Errc::NotAHomomorphism, "action must have one table per element of K");
  for (int j = 0; j < k.order; ++j) {
    const auto& phi = action[j];
    if (!is_permutation_of_range(phi, n.order) || phi[0] != 0)
      throw Error(Errc::NotAnAutomorphism,
                  "action of K-element " + std::to_string(j) + " is not a bijection fixing e");
    for (int a = 0; a < n.order; ++a)
      for (int b = 0; b < n.order; ++b)
        if (phi[n.mult(a, b)] != n.mult(phi[a], phi[b]))
          throw Error(Errc::NotAnAutomorphism,
                      "action of K-element " + std::to_string(j) + " is not multiplicative");
  }
  for (int j1 = 0; j1 < k.order; ++j1)
    for (int j2 = 0; j2 < k.order; ++j2) {
      const auto& composed = action[k.mult(j1, j2)];
      for (int a = 0; a < n.order; ++a)
        if (composed[a] != action[j1][action[j2][a]])
          throw Error(Errc::NotAHomomorphism, "action is not a homomorphism from K");
    }

  GroupTable g;
  g.order = n.order * k.order;
  g.mult_table.resize(static_cast<std::size_t>(g.order) * g.order);
  auto idx = [&k](int a, int j) { return a * k.order + j; };
  for (int a1 = 0; a1 < n.order; ++a1)
    for (int j1 = 0; j1 < k.order; ++j1)
      for (int a2 = 0; a2 < n.order; ++a2)
        for (int j2 = 0; j2 < k.order; ++j2)
          g.mult_table[static_cast<std::size_t>(idx(a1, j1)) * g.order + idx(a2, j2)] =
              idx(n.mult(a1, action[j1][a2]), k.mult(j1, j2));
  finalize_table(g);
  return g;
}

namespace {

Permutation compose_perm(const Permutation& a, const Permutation& b) {
  // (a then b): image of i is b[a[i]]
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

std::string cycle_label(const Permutation& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += ' ';
      s += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace

GroupTable from_permutation_generators(int degree, const std::vector<Permutation>& generators,
                                       int closure_budget) {
  if (degree < 1) throw Error(Errc::InvalidPermutation, "degree must be positive");
  for (const auto& p : generators)
    if (!is_permutation_of_range(p, degree))
      throw Error(Errc::InvalidPermutation, "generator is not a bijection on the degree");

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<Permutation> order_list{identity};
  std::set<Permutation> seen{identity};
  std::vector<Permutation> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& cur : frontier)
      for (const auto& gen : generators) {
        Permutation prod = compose_perm(cur, gen);
        if (seen.insert(prod).second) next.push_back(prod);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (auto& p : next) order_list.push_back(p);
    if (static_cast<int>(order_list.size()) > closure_budget)
      throw Error(Errc::ClosureBudgetExceeded,
                  "generated order exceeds " + std::to_string(closure_budget));
    frontier = std::move(next);
  }

  std::vector<std::pair<Permutation, int>> lookup;
  lookup.reserve(order_list.size());
  for (std::size_t i = 0; i < order_list.size(); ++i) lookup.emplace_back(order_list[i], i);
  std::sort(lookup.begin(), lookup.end());
  auto index_of = [&lookup](const Permutation& p) {
    auto it = std::lower_bound(lookup.begin(), lookup.end(), p,
                               [](const auto& e, const Permutation& v) { return e.first < v; });
    return it->second;
  };

  GroupTable g;
  g.order = static_cast<int>(order_list.size());
  g.mult_table.resize(static_cast<std::size_t>(g.order) * g.order);
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      g.mult_table[static_cast<std::size_t>(i) * g.order + j] =
          index_of(compose_perm(order_list[i], order_list[j]));
  g.labels.reserve(order_list.size());
  for (const auto& p : order_list) g.labels.push_back(cycle_label(p));
  finalize_table(g);
  return g;
}

Subgroup::Subgroup(const GroupTable& parent, std::vector<int> elements)
    : parent_(&parent), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  member_.assign(parent.order, 0);
  for (int e : elements_) {
    if (e < 0 || e >= parent.order)
      throw Error(Errc::NotASubgroup, "element index out of range");
    member_[e] = 1;
  }
  if (elements_.empty() || !member_[0])
    throw Error(Errc::NotASubgroup, "subgroup must contain the identity");
  for (int a : elements_) {
    if (!member_[parent.inv(a)])
      throw Error(Errc::NotASubgroup, "set is not closed under inversion");
    for (int b : elements_)
      if (!member_[parent.mult(a, b)])
        throw Error(Errc::NotASubgroup, "set is not closed under multiplication");
  }
  if (parent.order % order() != 0)
    throw ConsistencyError(Errc::AssertionFailed, "Lagrange divisibility violated");
}

namespace {

// Orbit of the identity under right multiplication by the generators. Every
// word in the generators is reachable by right extension, and inverses are
// powers, so this is the generated subgroup.
std::vector<int> closure_from_generators(const GroupTable& g, const std::vector<int>& gens) {
  std::vector<char> member(g.order, 0);
  std::vector<int> elems{0};
  member[0] = 1;
  for (std::size_t next = 0; next < elems.size(); ++next) {
    for (int gen : gens) {
      int y = g.mult(elems[next], gen);
      if (!member[y]) {
        member[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// Greedy irredundant generating set of a closed element list.
std::vector<int> reduce_generators(const GroupTable& g, const std::vector<int>& elements) {
  std::vector<int> gens;
  std::vector<char> member(g.order, 0);
  member[0] = 1;
  std::size_t covered = 1;
  for (int x : elements) {
    if (member[x]) continue;
    gens.push_back(x);
    auto closed = closure_from_generators(g, gens);
    covered = closed.size();
    for (int y : closed) member[y] = 1;
    if (covered == elements.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup subgroup_closure(const GroupTable& g, const std::vector<int>& seed) {
  for (int s : seed)
    if (s < 0 || s >= g.order) throw Error(Errc::OutOfRange, "seed element out of range");
  return Subgroup(g, closure_from_generators(g, seed));
}

std::vector<Subgroup> enumerate_subgroups(const GroupTable& g, int order_budget) {
  if (g.order > order_budget)
    throw Error(Errc::BudgetExceeded,
                "subgroup enumeration budget is " + std::to_string(order_budget));
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> subs;
  std::vector<std::vector<int>> gens_of;
  std::vector<std::vector<char>> mask_of;
  auto add = [&](std::vector<int> elems) {
    if (!seen.insert(elems).second) return;
    std::vector<char> mask(g.order, 0);
    for (int e : elems) mask[e] = 1;
    gens_of.push_back(reduce_generators(g, elems));
    mask_of.push_back(std::move(mask));
    subs.push_back(std::move(elems));
  };
  for (int x = 0; x < g.order; ++x) add(closure_from_generators(g, {x}));
  std::vector<int> everything(g.order);
  for (int x = 0; x < g.order; ++x) everything[x] = x;
  // Close under pairwise joins; every subgroup is a join of cyclic ones.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& small = subs[subs[i].size() <= subs[j].size() ? i : j];
      const auto& big_mask = mask_of[subs[i].size() <= subs[j].size() ? j : i];
      int common = 0;
      for (int e : small)
        if (big_mask[e]) ++common;
      if (common == static_cast<int>(small.size())) continue;  // join is the larger one
      // |<A,B>| >= |A||B|/|A∩B|, and only G itself has index below 2.
      long long bound = static_cast<long long>(subs[i].size()) *
                        static_cast<long long>(subs[j].size()) / common;
      if (2 * bound > g.order) {
        add(everything);
        continue;
      }
      std::vector<int> gens = gens_of[i];
      gens.insert(gens.end(), gens_of[j].begin(), gens_of[j].end());
      add(closure_from_generators(g, gens));
    }
  }
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (auto& s : subs) out.emplace_back(g, std::move(s));
  return out;
}

std::vector<int> involutions(const GroupTable& g, const std::vector<int>& within) {
  std::vector<int> out;
  for (int x : within)
    if (x != 0 && g.mult(x, x) == 0) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const GroupTable& g, const Subgroup& h) {
  for (int x = 0; x < g.order; ++x)
    for (int e : h.elements())
      if (!h.contains(g.conjugate(e, x))) return false;
  return true;
}

}  // namespace regset

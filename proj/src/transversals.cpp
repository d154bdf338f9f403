#include "regset/transversals.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace regset {

const char* bundle_method_name(BundleMethod m) {
  switch (m) {
    case BundleMethod::DistinctKoenig: return "DistinctKoenig";
    case BundleMethod::SelfSingleCoset: return "SelfSingleCoset";
    case BundleMethod::SelfTwoCosets: return "SelfTwoCosets";
    case BundleMethod::SelfOddComplete: return "SelfOddComplete";
    case BundleMethod::Complement: return "Complement";
    case BundleMethod::Backtracking: return "Backtracking";
  }
  return "Unknown";
}

long long default_search_budget() {
  if (const char* env = std::getenv("REGSET_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 10000000LL;
}

std::vector<int> TransversalBundle::union_elements() const {
  std::vector<int> out;
  for (const auto& t : transversals) out.insert(out.end(), t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_multiplicity(const Subgroup& h, int b) {
  if (b < 0 || b > h.order())
    throw Error(Errc::MultiplicityOutOfRange, "b must lie in [0, |H|]");
}

// Distributes a per-coset-balanced selection into b transversals: the i-th
// smallest chosen element of every coset goes to transversal i.
std::vector<std::vector<int>> split_per_coset(const CosetDecomposition& dec,
                                              const std::vector<int>& coset_list,
                                              const std::vector<int>& chosen, int b) {
  std::map<int, std::vector<int>> by_coset;
  for (int c : coset_list) by_coset[c] = {};
  for (int z : chosen) {
    auto it = by_coset.find(dec.coset_of[z]);
    if (it == by_coset.end())
      throw ConsistencyError(Errc::InfeasibleSplit, "chosen element outside the component");
    it->second.push_back(z);
  }
  std::vector<std::vector<int>> transversals(b);
  for (auto& [c, elems] : by_coset) {
    if (static_cast<int>(elems.size()) != b)
      throw ConsistencyError(Errc::InfeasibleSplit,
                             "coset multiplicity is not b in coset " + std::to_string(c));
    std::sort(elems.begin(), elems.end());
    for (int i = 0; i < b; ++i) transversals[i].push_back(elems[i]);
  }
  for (auto& t : transversals) std::sort(t.begin(), t.end());
  return transversals;
}

struct CosetShape {
  std::vector<int> invs;                    // involutions, ascending
  std::vector<std::pair<int, int>> pairs;   // inverse pairs inside the coset, by smaller element
  std::vector<int> cross;                   // elements whose inverse lies elsewhere, ascending
};

CosetShape classify_coset(const GroupTable& g, const std::vector<int>& coset) {
  CosetShape s;
  std::vector<char> in_coset(g.order, 0);
  for (int z : coset) in_coset[z] = 1;
  for (int z : coset) {
    int zi = g.inv(z);
    if (zi == z)
      s.invs.push_back(z);
    else if (in_coset[zi]) {
      if (z < zi) s.pairs.emplace_back(z, zi);
    } else {
      s.cross.push_back(z);
    }
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// 1-factorization
// ---------------------------------------------------------------------------

namespace {

struct Matcher {
  const BipartiteMultigraph& g;
  const std::vector<char>& alive;
  std::vector<std::vector<int>> adj;   // left vertex -> edge indices
  std::vector<int> match_right;        // right vertex -> edge index or -1
  std::vector<int> match_left;         // left vertex -> edge index or -1
  std::vector<char> visited;

  explicit Matcher(const BipartiteMultigraph& graph, const std::vector<char>& alive_edges)
      : g(graph), alive(alive_edges), adj(graph.left_count) {
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (alive[e]) adj[g.edges[e].left].push_back(static_cast<int>(e));
    match_right.assign(g.right_count, -1);
    match_left.assign(g.left_count, -1);
  }

  bool augment(int u) {
    for (int e : adj[u]) {
      int w = g.edges[e].right;
      if (visited[w]) continue;
      visited[w] = 1;
      if (match_right[w] < 0 || augment(g.edges[match_right[w]].left)) {
        match_right[w] = e;
        match_left[u] = e;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<std::vector<int>> koenig_one_factorization(const BipartiteMultigraph& g, int r) {
  std::vector<int> degl(g.left_count, 0), degr(g.right_count, 0);
  for (const auto& e : g.edges) {
    if (e.left < 0 || e.left >= g.left_count || e.right < 0 || e.right >= g.right_count)
      throw Error(Errc::NotRegular, "edge endpoint out of range");
    ++degl[e.left];
    ++degr[e.right];
  }
  for (int d : degl)
    if (d != r) throw Error(Errc::NotRegular, "left side is not r-regular");
  for (int d : degr)
    if (d != r) throw Error(Errc::NotRegular, "right side is not r-regular");
  if (r > 0 && g.left_count != g.right_count)
    throw Error(Errc::NotRegular, "sides of a regular bipartite graph must have equal size");

  std::vector<char> alive(g.edges.size(), 1);
  std::vector<std::vector<int>> matchings;
  matchings.reserve(r);
  for (int round = 0; round < r; ++round) {
    Matcher m(g, alive);
    for (int u = 0; u < g.left_count; ++u) {
      if (m.match_left[u] >= 0) continue;
      m.visited.assign(g.right_count, 0);
      if (!m.augment(u))
        throw ConsistencyError(Errc::AssertionFailed,
                               "regular bipartite multigraph failed to 1-factorize");
    }
    std::vector<int> matching;
    matching.reserve(g.left_count);
    for (int u = 0; u < g.left_count; ++u) matching.push_back(m.match_left[u]);
    for (int e : matching) alive[e] = 0;
    matchings.push_back(std::move(matching));
  }
  for (char a : alive)
    if (a)
      throw ConsistencyError(Errc::AssertionFailed, "1-factorization left edges uncovered");
  return matchings;
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

TransversalBundle bundle_distinct(const GroupTable& g, const Subgroup& h,
                                  const CosetDecomposition& dec, const ComponentStructure& comp,
                                  int b) {
  if (comp.self_paired)
    throw Error(Errc::SelfPairedComponent, "distinct construction needs HxH != Hx^-1H");
  check_multiplicity(h, b);

  std::vector<int> left_of(dec.cosets.size(), -1), right_of(dec.cosets.size(), -1);
  for (int i = 0; i < comp.m; ++i) {
    left_of[comp.cosets1[i]] = i;
    right_of[comp.cosets2[i]] = i;
  }
  BipartiteMultigraph graph;
  graph.left_count = graph.right_count = comp.m;
  for (int z : comp.dc1) {
    int zi = g.inv(z);
    graph.edges.push_back({left_of[dec.coset_of[z]], right_of[dec.coset_of[zi]], {z, zi}});
  }
  auto matchings = koenig_one_factorization(graph, h.order());

  TransversalBundle bundle;
  bundle.component_rep = comp.rep;
  bundle.b = b;
  bundle.method = BundleMethod::DistinctKoenig;
  for (int i = 0; i < b; ++i) {
    std::vector<int> t;
    t.reserve(2 * comp.m);
    for (int e : matchings[i]) {
      t.push_back(graph.edges[e].payload.first);
      t.push_back(graph.edges[e].payload.second);
    }
    std::sort(t.begin(), t.end());
    bundle.transversals.push_back(std::move(t));
  }
  return bundle;
}

TransversalBundle bundle_self_single_coset(const GroupTable& g, const Subgroup& h,
                                           const CosetDecomposition& dec,
                                           const ComponentStructure& comp, int b) {
  if (!comp.self_paired || comp.m != 1)
    throw Error(Errc::WrongCosetCount, "construction needs a self-paired single coset");
  check_multiplicity(h, b);
  auto shape = classify_coset(g, dec.cosets[comp.cosets1[0]]);
  if (!shape.cross.empty())
    throw ConsistencyError(Errc::AssertionFailed,
                           "single-coset component is not inverse-closed");
  const int c = static_cast<int>(shape.invs.size());
  const int d = static_cast<int>(shape.pairs.size());

  std::vector<int> r;
  if (b > 2 * d) {
    // b - 2d <= c always, since b <= |H| = c + 2d.
    for (int i = 0; i < b - 2 * d; ++i) r.push_back(shape.invs[i]);
    for (const auto& p : shape.pairs) {
      r.push_back(p.first);
      r.push_back(p.second);
    }
  } else if (b % 2 == 1) {
    if (c == 0)
      throw Error(Errc::NoInvolutionInCoset,
                  "odd multiplicity needs an involution in the coset");
    r.push_back(shape.invs[0]);
    for (int i = 0; i < (b - 1) / 2; ++i) {
      r.push_back(shape.pairs[i].first);
      r.push_back(shape.pairs[i].second);
    }
  } else {
    for (int i = 0; i < b / 2; ++i) {
      r.push_back(shape.pairs[i].first);
      r.push_back(shape.pairs[i].second);
    }
  }
  std::sort(r.begin(), r.end());

  TransversalBundle bundle;
  bundle.component_rep = comp.rep;
  bundle.b = b;
  bundle.method = BundleMethod::SelfSingleCoset;
  for (int z : r) bundle.transversals.push_back({z});
  return bundle;
}

TransversalBundle bundle_self_two_cosets(const GroupTable& g, const Subgroup& h,
                                         const CosetDecomposition& dec,
                                         const ComponentStructure& comp, int b) {
  if (!comp.self_paired || comp.m != 2)
    throw Error(Errc::WrongCosetCount, "construction needs a self-paired pair of cosets");
  check_multiplicity(h, b);

  CosetShape sa = classify_coset(g, dec.cosets[comp.cosets1[0]]);
  CosetShape sb = classify_coset(g, dec.cosets[comp.cosets1[1]]);
  // Cross elements of one coset are exactly the inverses of the other's.
  if (sa.cross.size() != sb.cross.size())
    throw ConsistencyError(Errc::AssertionFailed, "cross classes have unequal size");
  int k = static_cast<int>(sa.pairs.size());
  int l = static_cast<int>(sb.pairs.size());
  if (k > l) std::swap(sa, sb), std::swap(k, l);
  const int u = static_cast<int>(sa.invs.size());
  const int v = static_cast<int>(sb.invs.size());
  const int s = static_cast<int>(sa.cross.size());
  if (2 * k + u + s != h.order() || 2 * l + v + s != h.order())
    throw ConsistencyError(Errc::AssertionFailed, "coset class sizes do not add up to |H|");
  if (s == 0)
    throw ConsistencyError(Errc::AssertionFailed, "two-coset component without cross pairs");

  std::vector<int> r;
  auto take_pairs = [&r](const CosetShape& s_, int count) {
    for (int i = 0; i < count; ++i) {
      r.push_back(s_.pairs[i].first);
      r.push_back(s_.pairs[i].second);
    }
  };
  auto take_invs = [&r](const CosetShape& s_, int count) {
    for (int i = 0; i < count; ++i) r.push_back(s_.invs[i]);
  };
  auto take_cross_pairs = [&](int count) {
    // A cross element and its inverse cover both cosets at once.
    for (int i = 0; i < count; ++i) {
      r.push_back(sa.cross[i]);
      r.push_back(g.inv(sa.cross[i]));
    }
  };

  if (b == 0) {
    // empty selection
  } else if (b <= 2 * k + 1 && b % 2 == 1) {
    take_pairs(sa, (b - 1) / 2);
    take_pairs(sb, (b - 1) / 2);
    take_cross_pairs(1);
  } else if (b <= 2 * k + 1) {
    take_pairs(sa, b / 2);
    take_pairs(sb, b / 2);
  } else if (b <= 2 * l + 1 && b % 2 == 1) {
    take_pairs(sa, k);
    take_invs(sa, b - 1 - 2 * k);
    take_pairs(sb, (b - 1) / 2);
    take_cross_pairs(1);
  } else if (b <= 2 * l + 1) {
    take_pairs(sa, k);
    take_invs(sa, b - 2 * k);
    take_pairs(sb, b / 2);
  } else if (b <= 2 * l + v) {
    take_pairs(sa, k);
    take_pairs(sb, l);
    take_invs(sa, b - 2 * k);
    take_invs(sb, b - 2 * l);
  } else {
    take_pairs(sa, k);
    take_pairs(sb, l);
    take_invs(sa, u);
    take_invs(sb, v);
    take_cross_pairs(b - 2 * k - u);
  }

  TransversalBundle bundle;
  bundle.component_rep = comp.rep;
  bundle.b = b;
  bundle.method = BundleMethod::SelfTwoCosets;
  bundle.transversals = split_per_coset(dec, comp.cosets1, r, b);
  return bundle;
}

TransversalBundle bundle_self_odd_complete(const GroupTable& g, const Subgroup& h,
                                           const CosetDecomposition& dec,
                                           const ComponentStructure& comp, int b) {
  if (!comp.self_paired)
    throw Error(Errc::WrongCosetCount, "construction needs a self-paired component");
  if (comp.m == 1) {
    auto bundle = bundle_self_single_coset(g, h, dec, comp, b);
    bundle.method = BundleMethod::SelfOddComplete;
    return bundle;
  }
  if (comp.m % 2 == 0) throw Error(Errc::EvenIndex, "component index m must be odd");
  if (comp.m != h.order())
    throw Error(Errc::WrongCosetCount, "construction needs m = |H|");
  check_multiplicity(h, b);
  const int m = comp.m;

  // Exactly one involution per coset, and for every offset j exactly one
  // element of coset i+j inverting into coset i-j; the pairing count matrix
  // is forced to be all-ones.
  std::vector<std::vector<int>> elem(m);  // per local coset
  std::vector<int> local_of(dec.cosets.size(), -1);
  for (int i = 0; i < m; ++i) {
    local_of[comp.cosets1[i]] = i;
    elem[i] = dec.cosets[comp.cosets1[i]];
  }
  std::vector<std::vector<int>> r(m);
  for (int i = 0; i < m; ++i) {
    auto invs = involutions(g, elem[i]);
    if (invs.size() != 1)
      throw Error(invs.empty() ? Errc::NoInvolution : Errc::AssertionFailed,
                  "expected exactly one involution per coset, found " +
                      std::to_string(invs.size()));
    r[i].push_back(invs[0]);
    for (int j = 1; j <= (m - 1) / 2; ++j) {
      int source = (i + j) % m;
      int target = (i - j + m) % m;
      std::vector<int> candidates;
      for (int z : elem[source])
        if (local_of[dec.coset_of[g.inv(z)]] == target) candidates.push_back(z);
      if (candidates.size() != 1)
        throw ConsistencyError(Errc::AssertionFailed,
                               "pairing counts do not force a unique inverse pair");
      r[i].push_back(candidates[0]);
      r[i].push_back(g.inv(candidates[0]));
    }
    std::sort(r[i].begin(), r[i].end());
  }
  // The r[i] must partition the double coset.
  std::vector<int> all;
  for (const auto& t : r) all.insert(all.end(), t.begin(), t.end());
  std::sort(all.begin(), all.end());
  if (all != comp.dc1)
    throw ConsistencyError(Errc::AssertionFailed,
                           "transversals do not partition the double coset");

  TransversalBundle bundle;
  bundle.component_rep = comp.rep;
  bundle.b = b;
  bundle.method = BundleMethod::SelfOddComplete;
  bundle.transversals.assign(r.begin(), r.begin() + b);
  return bundle;
}

TransversalBundle bundle_complement(const GroupTable& g, const Subgroup& h,
                                    const CosetDecomposition& dec,
                                    const ComponentStructure& comp,
                                    const TransversalBundle& bundle_t) {
  const int t = bundle_t.b;
  const int b = h.order() - t;
  auto used = bundle_t.union_elements();
  std::vector<char> is_used(g.order, 0);
  for (int z : used) is_used[z] = 1;
  std::vector<int> rest;
  for (int z : comp.all_elements())
    if (!is_used[z]) rest.push_back(z);

  TransversalBundle bundle;
  bundle.component_rep = comp.rep;
  bundle.b = b;
  bundle.method = BundleMethod::Complement;
  bundle.transversals = split_per_coset(dec, comp.all_cosets(), rest, b);
  return bundle;
}

// ---------------------------------------------------------------------------
// exact search
// ---------------------------------------------------------------------------

namespace {

struct Orbit {
  int rep;           // smaller element
  int partner;       // inverse; equals rep for involutions
  int coset_a;       // local coset of rep
  int coset_b;       // local coset of partner (may equal coset_a)
};

struct BundleSearch {
  const std::vector<Orbit>& orbits;
  int b;
  int coset_count;
  long long budget;
  std::vector<int> count;
  std::vector<std::vector<int>> capacity;  // capacity[i][c]: contribution of orbits i.. to c
  std::vector<char> chosen;

  bool run(std::size_t i) {
    if (--budget < 0) throw Error(Errc::SearchBudgetExceeded, "bundle search budget exhausted");
    for (int c = 0; c < coset_count; ++c)
      if (count[c] + capacity[i][c] < b) return false;
    if (i == orbits.size()) return true;
    const Orbit& o = orbits[i];
    int add_a = (o.rep == o.partner) ? 1 : (o.coset_a == o.coset_b ? 2 : 1);
    bool fits = count[o.coset_a] + add_a <= b &&
                (o.coset_a == o.coset_b || o.rep == o.partner ||
                 count[o.coset_b] + 1 <= b);
    if (fits) {
      chosen[i] = 1;
      count[o.coset_a] += add_a;
      if (o.coset_b != o.coset_a && o.rep != o.partner) count[o.coset_b] += 1;
      if (run(i + 1)) return true;
      chosen[i] = 0;
      count[o.coset_a] -= add_a;
      if (o.coset_b != o.coset_a && o.rep != o.partner) count[o.coset_b] -= 1;
    }
    return run(i + 1);
  }
};

}  // namespace

std::optional<TransversalBundle> bundle_backtracking(const GroupTable& g, const Subgroup& h,
                                                     const CosetDecomposition& dec,
                                                     const ComponentStructure& comp, int b,
                                                     long long budget) {
  check_multiplicity(h, b);
  if (budget < 0) budget = default_search_budget();

  auto coset_list = comp.all_cosets();
  const int coset_count = static_cast<int>(coset_list.size());
  std::vector<int> local_of(dec.cosets.size(), -1);
  for (int i = 0; i < coset_count; ++i) local_of[coset_list[i]] = i;

  std::vector<Orbit> orbits;
  for (int z : comp.all_elements()) {
    int zi = g.inv(z);
    if (zi < z) continue;  // orbit already recorded at its smaller element
    orbits.push_back({z, zi, local_of[dec.coset_of[z]], local_of[dec.coset_of[zi]]});
  }

  BundleSearch search{orbits, b, coset_count, budget, std::vector<int>(coset_count, 0), {}, {}};
  search.capacity.assign(orbits.size() + 1, std::vector<int>(coset_count, 0));
  for (int i = static_cast<int>(orbits.size()) - 1; i >= 0; --i) {
    search.capacity[i] = search.capacity[i + 1];
    const Orbit& o = orbits[i];
    if (o.rep == o.partner)
      search.capacity[i][o.coset_a] += 1;
    else {
      search.capacity[i][o.coset_a] += 1;
      search.capacity[i][o.coset_b] += 1;
    }
  }
  search.chosen.assign(orbits.size(), 0);

  if (!search.run(0)) return std::nullopt;

  std::vector<int> chosen_elems;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (!search.chosen[i]) continue;
    chosen_elems.push_back(orbits[i].rep);
    if (orbits[i].partner != orbits[i].rep) chosen_elems.push_back(orbits[i].partner);
  }
  TransversalBundle bundle;
  bundle.component_rep = comp.rep;
  bundle.b = b;
  bundle.method = BundleMethod::Backtracking;
  bundle.transversals = split_per_coset(dec, coset_list, chosen_elems, b);
  return bundle;
}

// ---------------------------------------------------------------------------
// dispatcher
// ---------------------------------------------------------------------------

TransversalBundle bundle_for_component(const GroupTable& g, const Subgroup& h,
                                       const CosetDecomposition& dec,
                                       const ComponentStructure& comp, int b,
                                       long long budget) {
  check_multiplicity(h, b);
  TransversalBundle result;
  if (!comp.self_paired) {
    result = bundle_distinct(g, h, dec, comp, b);
  } else if (comp.m == 1) {
    try {
      result = bundle_self_single_coset(g, h, dec, comp, b);
    } catch (const Error& e) {
      if (e.code() != Errc::NoInvolutionInCoset) throw;
      // An inverse-closed subset of odd size inside a single coset must
      // contain a self-inverse element; with no involution available the
      // selection cannot exist.
      throw Error(Errc::NoBundleExists,
                  "no inverse-closed selection of odd multiplicity in this coset");
    }
  } else if (comp.m == 2) {
    result = bundle_self_two_cosets(g, h, dec, comp, b);
  } else if (comp.m == h.order() && comp.m % 2 == 1 &&
             !involutions(g, comp.dc1).empty()) {
    result = bundle_self_odd_complete(g, h, dec, comp, b);
  } else if (b > h.order() / 2) {
    // Complementation is a bijection between multiplicities b and |H|-b, so
    // a definitive failure below transfers to b.
    auto small = bundle_for_component(g, h, dec, comp, h.order() - b, budget);
    result = bundle_complement(g, h, dec, comp, small);
  } else {
    auto found = bundle_backtracking(g, h, dec, comp, b, budget);
    if (!found)
      throw Error(Errc::NoBundleExists,
                  "component at " + std::to_string(comp.rep) +
                      " admits no inverse-closed selection of multiplicity " +
                      std::to_string(b));
    result = std::move(*found);
  }
  validate_bundle(g, h, dec, comp, result);
  return result;
}

void validate_bundle(const GroupTable& g, const Subgroup& h, const CosetDecomposition& dec,
                     const ComponentStructure& comp, const TransversalBundle& bundle) {
  if (static_cast<int>(bundle.transversals.size()) != bundle.b)
    throw ConsistencyError(Errc::AssertionFailed, "bundle size differs from b");
  auto coset_list = comp.all_cosets();
  std::vector<char> seen(g.order, 0);
  for (const auto& t : bundle.transversals) {
    std::vector<int> hit(dec.cosets.size(), 0);
    for (int z : t) {
      if (seen[z])
        throw ConsistencyError(Errc::AssertionFailed, "transversals are not disjoint");
      seen[z] = 1;
      ++hit[dec.coset_of[z]];
    }
    for (int c : coset_list)
      if (hit[c] != 1)
        throw ConsistencyError(Errc::AssertionFailed,
                               "transversal does not meet every coset exactly once");
    if (t.size() != coset_list.size())
      throw ConsistencyError(Errc::AssertionFailed, "transversal leaves the component");
  }
  auto u = bundle.union_elements();
  for (int z : u)
    if (!seen[g.inv(z)])
      throw ConsistencyError(Errc::AssertionFailed, "bundle union is not inverse-closed");
  (void)h;
}

}  // namespace regset

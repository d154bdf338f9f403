#include "regset/cosets.hpp"

#include <algorithm>
#include <sstream>

namespace regset {

namespace {

void require_parent(const GroupTable& g, const Subgroup& h) {
  if (&h.parent() != &g)
    throw Error(Errc::OutOfRange, "subgroup does not belong to this group");
}

std::vector<int> double_coset(const GroupTable& g, const Subgroup& h, int x) {
  std::vector<char> member(g.order, 0);
  for (int a : h.elements()) {
    int ax = g.mult(a, x);
    for (int b : h.elements()) member[g.mult(ax, b)] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.order; ++v)
    if (member[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<int> ComponentStructure::all_elements() const {
  if (self_paired) return dc1;
  std::vector<int> out = dc1;
  out.insert(out.end(), dc2.begin(), dc2.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ComponentStructure::all_cosets() const {
  if (self_paired) return cosets1;
  std::vector<int> out = cosets1;
  out.insert(out.end(), cosets2.begin(), cosets2.end());
  std::sort(out.begin(), out.end());
  return out;
}

CosetDecomposition right_cosets(const GroupTable& g, const Subgroup& h) {
  require_parent(g, h);
  CosetDecomposition dec;
  dec.coset_of.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (dec.coset_of[x] >= 0) continue;
    // x is minimal in its coset because smaller elements are all assigned.
    std::vector<int> coset;
    coset.reserve(h.order());
    for (int a : h.elements()) coset.push_back(g.mult(a, x));
    std::sort(coset.begin(), coset.end());
    int idx = static_cast<int>(dec.cosets.size());
    for (int v : coset) dec.coset_of[v] = idx;
    dec.reps.push_back(coset.front());
    dec.cosets.push_back(std::move(coset));
  }
  return dec;
}

bool coset_relation(const GroupTable& g, const Subgroup& h, int x, int y) {
  require_parent(g, h);
  int xinv = g.inv(x);
  for (int a : h.elements()) {
    int ax = g.mult(a, xinv);
    for (int b : h.elements())
      if (g.mult(ax, b) == y) return true;
  }
  return false;
}

int conjugate_intersection_index(const GroupTable& g, const Subgroup& h, int x) {
  require_parent(g, h);
  int common = 0;
  for (int a : h.elements())
    if (h.contains(g.conjugate(a, x))) ++common;
  if (common == 0 || h.order() % common != 0)
    throw ConsistencyError(Errc::AssertionFailed, "conjugate intersection is not a subgroup size");
  int m = h.order() / common;

  // Independent route: count the right cosets inside HxH directly.
  auto dc = double_coset(g, h, x);
  int cosets = 0;
  std::vector<char> assigned(g.order, 0);
  for (int v : dc) {
    if (assigned[v]) continue;
    ++cosets;
    for (int a : h.elements()) assigned[g.mult(a, v)] = 1;
  }
  if (cosets != m)
    throw ConsistencyError(Errc::CountMismatch,
                           "coset count of HxH disagrees with |H|/|H ∩ H^x|");
  return m;
}

std::vector<ComponentStructure> components(const GroupTable& g, const Subgroup& h,
                                           const CosetDecomposition& dec) {
  require_parent(g, h);
  if (h.order() == g.order)
    throw Error(Errc::SubgroupIsWholeGroup, "components are defined on G \\ H");
  std::vector<char> covered(g.order, 0);
  for (int a : h.elements()) covered[a] = 1;

  std::vector<ComponentStructure> out;
  for (int x = 0; x < g.order; ++x) {
    if (covered[x]) continue;
    ComponentStructure comp;
    comp.dc1 = double_coset(g, h, x);
    comp.dc2 = double_coset(g, h, g.inv(x));
    comp.self_paired = (comp.dc1 == comp.dc2);
    comp.m = conjugate_intersection_index(g, h, x);
    if (static_cast<int>(comp.dc1.size()) != comp.m * h.order() ||
        comp.dc2.size() != comp.dc1.size())
      throw ConsistencyError(Errc::AssertionFailed, "double coset size is not m*|H|");
    comp.rep = std::min(comp.dc1.front(), comp.dc2.front());
    if (comp.rep != x)
      throw ConsistencyError(Errc::AssertionFailed, "component representative is not minimal");
    auto coset_list = [&dec](const std::vector<int>& dc) {
      std::vector<int> cs;
      for (int v : dc) cs.push_back(dec.coset_of[v]);
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      return cs;
    };
    comp.cosets1 = coset_list(comp.dc1);
    comp.cosets2 = comp.self_paired ? comp.cosets1 : coset_list(comp.dc2);
    for (int v : comp.dc1) covered[v] = 1;
    for (int v : comp.dc2) covered[v] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<ComponentStructure> components(const GroupTable& g, const Subgroup& h) {
  auto dec = right_cosets(g, h);
  return components(g, h, dec);
}

std::vector<std::vector<int>> inverse_pairing_counts(const GroupTable& g, const Subgroup& h,
                                                     const CosetDecomposition& dec,
                                                     const ComponentStructure& comp) {
  require_parent(g, h);
  const int m = comp.m;
  std::vector<int> col_of(dec.cosets.size(), -1);
  for (int w = 0; w < m; ++w) col_of[comp.cosets2[w]] = w;
  std::vector<std::vector<int>> n(m, std::vector<int>(m, 0));
  for (int u = 0; u < m; ++u) {
    for (int z : dec.cosets[comp.cosets1[u]]) {
      int w = col_of[dec.coset_of[g.inv(z)]];
      if (w < 0)
        throw ConsistencyError(Errc::AssertionFailed,
                               "inverse of a component element escapes the component");
      ++n[u][w];
    }
  }
  for (int i = 0; i < m; ++i) {
    int rs = 0, cs = 0;
    for (int j = 0; j < m; ++j) {
      rs += n[i][j];
      cs += n[j][i];
    }
    if (rs != h.order() || cs != h.order())
      throw ConsistencyError(Errc::AssertionFailed, "pairing counts do not sum to |H|");
  }
  return n;
}

std::string coset_graph_dot(const GroupTable& g, const Subgroup& h,
                            const CosetDecomposition& dec,
                            const std::vector<ComponentStructure>& comps) {
  (void)g;
  (void)h;
  std::ostringstream out;
  out << "graph coset_relation {\n";
  for (std::size_t c = 0; c < dec.cosets.size(); ++c)
    out << "  c" << c << " [label=\"H*" << dec.reps[c] << "\"];\n";
  for (const auto& comp : comps) {
    if (comp.self_paired) {
      for (std::size_t i = 0; i < comp.cosets1.size(); ++i)
        for (std::size_t j = i + 1; j < comp.cosets1.size(); ++j)
          out << "  c" << comp.cosets1[i] << " -- c" << comp.cosets1[j] << ";\n";
    } else {
      for (int u : comp.cosets1)
        for (int w : comp.cosets2) out << "  c" << u << " -- c" << w << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace regset

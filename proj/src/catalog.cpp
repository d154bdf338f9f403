#include "regset/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "regset/group_io.hpp"

namespace regset {

namespace {

constexpr int kMaxCatalogOrder = 500;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// All multisets of prime-power factors with the given product, ascending.
void prime_power_factorizations(int n, std::vector<std::vector<int>>& out) {
  std::map<int, int> factor;
  int m = n;
  for (int p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      ++factor[p];
      m /= p;
    }
  if (m > 1) ++factor[m];

  // Per prime: partitions of the exponent, each part becoming p^part.
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, e] : factor) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    // partitions of e in non-increasing order
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
      if (rest == 0) {
        std::vector<int> powers;
        for (int part : cur) {
          int v = 1;
          for (int i = 0; i < part; ++i) v *= p;
          powers.push_back(v);
        }
        parts.push_back(powers);
        return;
      }
      for (int part = std::min(rest, max_part); part >= 1; --part) {
        cur.push_back(part);
        self(self, rest - part, part);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    per_prime.push_back(std::move(parts));
  }

  std::vector<int> chosen;
  auto combine = [&](auto&& self, std::size_t i) -> void {
    if (i == per_prime.size()) {
      std::vector<int> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    for (const auto& parts : per_prime[i]) {
      std::size_t before = chosen.size();
      chosen.insert(chosen.end(), parts.begin(), parts.end());
      self(self, i + 1);
      chosen.resize(before);
    }
  };
  combine(combine, 0);
  std::sort(out.begin(), out.end());
}

std::string join_factors(const std::vector<int>& factors) {
  std::ostringstream s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s << 'x';
    s << factors[i];
  }
  return s.str();
}

GroupTable abelian_from_factors(const std::vector<int>& factors) {
  GroupTable g = make_cyclic(factors.at(0));
  for (std::size_t i = 1; i < factors.size(); ++i)
    g = make_direct_product(g, make_cyclic(factors[i]));
  return g;
}

std::vector<int> parse_factor_list(const std::string& args) {
  std::vector<int> factors;
  std::istringstream in(args);
  std::string tok;
  while (std::getline(in, tok, 'x')) {
    if (tok.empty()) throw Error(Errc::ParseError, "empty factor in '" + args + "'");
    factors.push_back(std::stoi(tok));
    if (factors.back() < 1) throw Error(Errc::ParseError, "factor must be positive");
  }
  if (factors.empty()) throw Error(Errc::ParseError, "no factors in '" + args + "'");
  return factors;
}

int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

// Multiplicative order of w modulo q; 0 when gcd(w, q) != 1.
int multiplicative_order(int w, int q) {
  if (gcd_int(w % q, q) != 1) return 0;
  int v = w % q, ord = 1;
  while (v != 1) {
    v = static_cast<int>((static_cast<long long>(v) * w) % q);
    ++ord;
  }
  return ord;
}

// Smallest multiplier of exact multiplicative order k modulo q.
int multiplier_of_order(int q, int k) {
  for (int w = 2; w < q; ++w)
    if (multiplicative_order(w, q) == k) return w;
  throw Error(Errc::OutOfRange,
              "no multiplier of order " + std::to_string(k) + " modulo " + std::to_string(q));
}

// Z_q : Z_k where the generator of Z_k multiplies by w. The action order
// d = ord_q(w) must divide k; the action is faithful iff d = k.
GroupTable make_cyclic_semidirect(int q, int k, int w) {
  if (q < 2 || k < 2) throw Error(Errc::OutOfRange, "semidirect factors must have order >= 2");
  int d = multiplicative_order(w, q);
  if (d == 0) throw Error(Errc::OutOfRange, "multiplier must be a unit modulo q");
  if (d < 2 || k % d != 0)
    throw Error(Errc::OutOfRange, "multiplier order must divide k and exceed 1");
  GroupTable zq = make_cyclic(q);
  GroupTable zk = make_cyclic(k);
  std::vector<std::vector<int>> action(k, std::vector<int>(q));
  long long mult = 1;
  for (int j = 0; j < k; ++j) {
    for (int x = 0; x < q; ++x) action[j][x] = static_cast<int>((mult * x) % q);
    mult = (mult * w) % q;
  }
  return make_semidirect_product(zq, zk, action);
}

GroupTable make_prime_semidirect(int q, int k) {
  if (!is_prime(q)) throw Error(Errc::OutOfRange, "semidirect kernel order must be prime");
  if (k < 2 || (q - 1) % k != 0)
    throw Error(Errc::OutOfRange, "semidirect acting order must divide q-1");
  return make_cyclic_semidirect(q, k, multiplier_of_order(q, k));
}

// SL(2,q) for prime q, acting on the q^2 - 1 nonzero vectors of F_q^2.
GroupTable make_special_linear_2(int q) {
  if (!is_prime(q)) throw Error(Errc::OutOfRange, "SL(2,q) needs prime q");
  auto vec_index = [q](int x, int y) { return x * q + y - 1; };  // skip (0,0)
  const int points = q * q - 1;
  auto matrix_perm = [&](int a, int b, int c, int d) {
    Permutation p(points);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        if (x == 0 && y == 0) continue;
        int nx = (a * x + b * y) % q;
        int ny = (c * x + d * y) % q;
        p[vec_index(x, y)] = vec_index(nx, ny);
      }
    return p;
  };
  return from_permutation_generators(
      points, {matrix_perm(1, 1, 0, 1), matrix_perm(0, q - 1, 1, 0)});
}

// Supplementary recipes (explicit-multiplier semidirects, direct products
// with a nonabelian factor, SL(2,q)) densify coverage at desk scale; the
// reference group counts end at order 40.
constexpr int kSupplementaryRecipeLimit = 64;

std::vector<Permutation> symmetric_generators(int n) {
  Permutation cycle(n), swap01(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  for (int i = 0; i < n; ++i) swap01[i] = i;
  std::swap(swap01[0], swap01[1]);
  return {cycle, swap01};
}

std::vector<Permutation> alternating_generators(int n) {
  // (0 1 2) and, for n > 3, the n-cycle (n odd) or (1 2 ... n-1) (n even).
  Permutation three(n);
  for (int i = 0; i < n; ++i) three[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return {three};
  Permutation big(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;
  } else {
    big[0] = 0;
    for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;
  }
  return {three, big};
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

int known_group_count(int order) {
  static const int counts[41] = {0, 1, 1, 1, 2,  1, 2, 1, 5, 2,  2, 1, 5,  1, 2,
                                 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5,  4, 1,
                                 4, 1,  51, 1, 2, 1, 14, 1, 2, 2, 14};
  if (order < 1 || order > 40) return 0;
  return counts[order];
}

std::vector<CatalogEntry> catalog(int max_order, const std::string& extra_dir) {
  if (max_order < 1 || max_order > kMaxCatalogOrder)
    throw Error(Errc::BudgetExceeded,
                "catalog order must lie in [1, " + std::to_string(kMaxCatalogOrder) + "]");
  std::vector<CatalogEntry> entries;

  for (int n = 1; n <= max_order; ++n)
    entries.push_back({"cyclic:" + std::to_string(n),
                       "cyclic group of order " + std::to_string(n), make_cyclic(n), {}});

  std::vector<std::pair<std::vector<int>, GroupTable>> abelian;  // incl. cyclics, for reuse
  for (int n = 2; n <= max_order; ++n) {
    std::vector<std::vector<int>> factorizations;
    prime_power_factorizations(n, factorizations);
    for (const auto& f : factorizations) {
      GroupTable t = abelian_from_factors(f);
      if (f.size() > 1)
        entries.push_back({"abelian:" + join_factors(f),
                           "direct product Z" + join_factors(f), t, {}});
      abelian.emplace_back(f, std::move(t));
    }
  }

  for (const auto& [factors, base] : abelian) {
    if (2 * base.order > max_order) continue;
    entries.push_back({"gendihedral:" + join_factors(factors),
                       "generalized dihedral over Z" + join_factors(factors),
                       make_generalized_dihedral(base), {}});
  }

  for (int m = 2; 4 * m <= max_order; ++m)
    entries.push_back({"dicyclic:" + std::to_string(m),
                       "dicyclic group of order " + std::to_string(4 * m), make_dicyclic(m), {}});

  for (int q = 3; q <= max_order / 2; ++q) {
    if (!is_prime(q)) continue;
    for (int k = 2; k < q && q * k <= max_order; ++k) {
      if ((q - 1) % k != 0) continue;
      entries.push_back({"semidirect:" + std::to_string(q) + "x" + std::to_string(k),
                         "semidirect product Z" + std::to_string(q) + " : Z" +
                             std::to_string(k),
                         make_prime_semidirect(q, k), {}});
    }
  }

  for (int n = 3; factorial(n) / 2 <= max_order; ++n)
    entries.push_back({"alternating:" + std::to_string(n),
                       "alternating group on " + std::to_string(n) + " points",
                       from_permutation_generators(n, alternating_generators(n)), {}});
  for (int n = 3; factorial(n) <= max_order; ++n)
    entries.push_back({"symmetric:" + std::to_string(n),
                       "symmetric group on " + std::to_string(n) + " points",
                       from_permutation_generators(n, symmetric_generators(n)), {}});

  if (max_order <= kSupplementaryRecipeLimit) {
    const std::size_t core_count = entries.size();
    for (int q = 3; 2 * q <= max_order; ++q)
      for (int k = 2; q * k <= max_order; ++k)
        for (int w = 2; w < q; ++w) {
          int d = multiplicative_order(w, q);
          if (d < 2 || k % d != 0) continue;
          entries.push_back({"semidirect:" + std::to_string(q) + "x" + std::to_string(k) +
                                 "x" + std::to_string(w),
                             "semidirect product Z" + std::to_string(q) + " : Z" +
                                 std::to_string(k) + " via multiplier " + std::to_string(w),
                             make_cyclic_semidirect(q, k, w), {}});
        }

    for (int q = 2; q * (q * q - 1) <= max_order; ++q) {
      if (!is_prime(q)) continue;
      entries.push_back({"sl2:" + std::to_string(q),
                         "special linear group SL(2," + std::to_string(q) + ")",
                         make_special_linear_2(q), {}});
    }

    // Direct products with at least one nonabelian factor, one level deep
    // over the core recipes.
    std::vector<std::size_t> nonabelian;
    for (std::size_t i = 0; i < core_count; ++i)
      if (!is_abelian(entries[i].table)) nonabelian.push_back(i);
    std::vector<CatalogEntry> products;
    for (std::size_t i : nonabelian) {
      const auto& n = entries[i];
      for (const auto& [factors, a] : abelian) {
        if (n.table.order * a.order > max_order) continue;
        std::string aid =
            (factors.size() == 1 ? "cyclic:" : "abelian:") + join_factors(factors);
        products.push_back({"product:" + n.id + "," + aid,
                            n.description + " x Z" + join_factors(factors),
                            make_direct_product(n.table, a), {}});
      }
      for (std::size_t j : nonabelian) {
        if (j < i) continue;
        const auto& m = entries[j];
        if (n.table.order * m.table.order > max_order) continue;
        products.push_back({"product:" + n.id + "," + m.id,
                            n.description + " x " + m.description,
                            make_direct_product(n.table, m.table), {}});
      }
    }
    for (auto& p : products) entries.push_back(std::move(p));
  }

  if (!extra_dir.empty()) {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(extra_dir))
      if (e.is_regular_file()) files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      GroupTable t = parse_group_file(path);
      if (t.order > max_order) continue;
      std::string name = std::filesystem::path(path).filename().string();
      entries.push_back({"file:" + name, "group file " + name, std::move(t), {}});
    }
  }

  // Drop byte-identical tables, keeping the first occurrence and recording
  // the dropped recipes as aliases of the survivor.
  std::map<std::pair<int, std::vector<int>>, std::size_t> seen;
  std::vector<CatalogEntry> out;
  for (auto& e : entries) {
    auto key = std::make_pair(e.table.order, e.table.mult_table);
    auto it = seen.find(key);
    if (it != seen.end()) {
      out[it->second].aliases.push_back(e.id);
      continue;
    }
    seen.emplace(std::move(key), out.size());
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) {
                     return a.table.order < b.table.order;
                   });
  return out;
}

bool CatalogEntry::matches_recipe(const std::string& prefix) const {
  if (id.rfind(prefix, 0) == 0) return true;
  for (const auto& a : aliases)
    if (a.rfind(prefix, 0) == 0) return true;
  return false;
}

GroupTable group_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string family = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    if (family == "cyclic") return make_cyclic(std::stoi(args));
    if (family == "abelian") return abelian_from_factors(parse_factor_list(args));
    if (family == "gendihedral" || family == "dihedral")
      return make_generalized_dihedral(abelian_from_factors(parse_factor_list(args)));
    if (family == "dicyclic") return make_dicyclic(std::stoi(args));
    if (family == "semidirect") {
      auto factors = parse_factor_list(args);
      if (factors.size() == 2) return make_prime_semidirect(factors[0], factors[1]);
      if (factors.size() == 3)
        return make_cyclic_semidirect(factors[0], factors[1], factors[2]);
      throw Error(Errc::ParseError, "semidirect spec needs the form qxk or qxkxw");
    }
    if (family == "sl2") return make_special_linear_2(std::stoi(args));
    if (family == "product") {
      auto comma = args.find(',');
      if (comma == std::string::npos)
        throw Error(Errc::ParseError, "product spec needs two comma-separated groups");
      return make_direct_product(group_from_spec(args.substr(0, comma)),
                                 group_from_spec(args.substr(comma + 1)));
    }
    if (family == "symmetric")
      return from_permutation_generators(std::stoi(args), symmetric_generators(std::stoi(args)));
    if (family == "alternating")
      return from_permutation_generators(std::stoi(args),
                                         alternating_generators(std::stoi(args)));
    if (family != "file") throw Error(Errc::ParseError, "unknown group family '" + family + "'");
    return parse_group_file(args);
  }
  return parse_group_file(spec);
}

}  // namespace regset

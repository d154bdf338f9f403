#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "regset/catalog.hpp"
#include "regset/group_io.hpp"
#include "regset/sweep.hpp"

using namespace regset;

TEST_CASE("catalog contents at small orders") {
  auto entries = catalog(6);
  std::set<std::string> ids;
  for (const auto& e : entries) ids.insert(e.id);
  for (int n = 1; n <= 6; ++n) CHECK(ids.count("cyclic:" + std::to_string(n)) == 1);
  CHECK(ids.count("abelian:2x2") == 1);
  CHECK(ids.count("gendihedral:3") == 1);  // nonabelian group of order 6

  // The generalized dihedral recipe over Z2 rebuilds the Klein table, so it
  // survives only as an alias of the direct-product entry.
  bool klein_alias = false;
  for (const auto& e : entries)
    if (e.id == "abelian:2x2") klein_alias = e.matches_recipe("gendihedral:");
  CHECK(klein_alias);

  auto entries8 = catalog(8);
  std::set<std::string> ids8;
  for (const auto& e : entries8) ids8.insert(e.id);
  CHECK(ids8.count("dicyclic:2") == 1);   // quaternion group
  CHECK(ids8.count("gendihedral:4") == 1);

  auto entries21 = catalog(21);
  bool has_f21 = false;
  for (const auto& e : entries21) has_f21 |= (e.id == "semidirect:7x3");
  CHECK(has_f21);
}

TEST_CASE("catalog orders are bounded and tables deduplicated") {
  auto entries = catalog(20);
  std::set<std::pair<int, std::vector<int>>> tables;
  for (const auto& e : entries) {
    CHECK(e.table.order <= 20);
    CHECK(tables.insert({e.table.order, e.table.mult_table}).second);
  }
}

TEST_CASE("catalog covers every group type at orders with known counts") {
  // At these orders the element-order multiset separates isomorphism types,
  // so matching counts certify full coverage.
  auto entries = catalog(12);
  std::map<int, std::set<std::vector<int>>> types;
  for (const auto& e : entries) types[e.table.order].insert(element_order_multiset(e.table));
  CHECK(types[4].size() == 2);
  CHECK(types[6].size() == 2);
  CHECK(types[8].size() == 5);
  CHECK(types[12].size() == 5);

  auto entries30 = catalog(30);
  std::map<int, std::set<std::vector<int>>> types30;
  for (const auto& e : entries30)
    types30[e.table.order].insert(element_order_multiset(e.table));
  CHECK(types30[18].size() == 5);
  CHECK(types30[30].size() == 4);
}

TEST_CASE("supplementary recipes") {
  auto sd16 = group_from_spec("semidirect:8x2x3");
  CHECK(sd16.order == 16);
  CHECK(!is_abelian(sd16));
  auto m16 = group_from_spec("semidirect:8x2x5");
  CHECK(element_order_multiset(m16) != element_order_multiset(sd16));

  // A non-faithful action: Z3 : Z8 through the inversion quotient.
  auto z3z8 = group_from_spec("semidirect:3x8x2");
  CHECK(z3z8.order == 24);
  CHECK(!is_abelian(z3z8));
  auto orders = element_order_multiset(z3z8);
  CHECK(std::count(orders.begin(), orders.end(), 8) == 12);

  auto sl23 = group_from_spec("sl2:3");
  CHECK(sl23.order == 24);
  std::vector<int> all(24);
  for (int i = 0; i < 24; ++i) all[i] = i;
  CHECK(involutions(sl23, all).size() == 1);  // unique central involution

  auto prod = group_from_spec("product:gendihedral:3,cyclic:4");
  CHECK(prod.order == 24);
  CHECK(!is_abelian(prod));
  CHECK_THROWS_AS(group_from_spec("product:onlyone"), Error);
  CHECK_THROWS_AS(group_from_spec("semidirect:8x2x2"), Error);  // 2 is not a unit mod 8
}

TEST_CASE("group_from_spec round trips with files") {
  auto g = group_from_spec("dicyclic:3");
  auto path = std::filesystem::temp_directory_path() / "regset_test_group.txt";
  {
    std::ofstream out(path);
    out << format_group_table(g);
  }
  auto parsed = group_from_spec(path.string());
  CHECK(parsed.mult_table == g.mult_table);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(group_from_spec("nosuchfamily:3"), Error);
  CHECK_THROWS_AS(group_from_spec("/nonexistent/path/group.txt"), Error);
}

TEST_CASE("catalog rejects oversized orders") {
  CHECK_THROWS_AS(catalog(100000), Error);
}

TEST_CASE("sweep of the trivial catalog is empty") {
  SweepOptions opts;
  opts.max_order = 1;
  auto report = sweep(opts);
  CHECK(report.scope.size() == 1);
  CHECK(report.pairs.empty());
  CHECK(report.counterexamples.empty());
}

TEST_CASE("sweep on a small catalog") {
  SweepOptions opts;
  opts.max_order = 8;
  auto report = sweep(opts);
  CHECK(report.counterexamples.empty());
  CHECK(!report.has_consistency_failure());
  CHECK(report.pairs.size() > 0);

  // The non-perfect-code pair (Z4, {0,2}) is reported with the grid skipped.
  bool found = false;
  for (const auto& p : report.pairs) {
    if (p.group_id == "cyclic:4" && p.subgroup == std::vector<int>{0, 2}) {
      found = true;
      CHECK(!p.perfect_code);
      CHECK(!p.grid_applicable);
    }
  }
  CHECK(found);
}

TEST_CASE("sweep treats budget exhaustion as a hard error") {
  SweepOptions opts;
  opts.max_order = 20;  // contains components that need the fallback search
  opts.budget = 2;
  bool threw = false;
  try {
    sweep(opts);
  } catch (const Error& e) {
    threw = is_budget_error(e.code());
  }
  CHECK(threw);
}

TEST_CASE("sweep reports are byte-identical across thread counts") {
  SweepOptions one;
  one.max_order = 8;
  one.threads = 1;
  SweepOptions four;
  four.max_order = 8;
  four.threads = 4;
  auto a = sweep(one).to_json().dump(2);
  auto b = sweep(four).to_json().dump(2);
  CHECK(a == b);
}

TEST_CASE("sweep with a catalog directory") {
  auto dir = std::filesystem::temp_directory_path() / "regset_test_catalog";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "klein.txt");
    out << format_group_table(group_from_spec("abelian:2x2"));
  }
  SweepOptions opts;
  opts.max_order = 4;
  opts.catalog_dir = dir.string();
  auto report = sweep(opts);
  // The file duplicates a builtin table, so it is deduplicated away.
  for (const auto& s : report.scope) CHECK(s.id.rfind("file:", 0) != 0);

  // A relabelled copy of a builtin is isomorphic but not byte-identical,
  // so it survives deduplication.
  {
    auto s3 = group_from_spec("gendihedral:3");
    GroupTable relabelled = s3;
    std::vector<int> pi{0, 1, 2, 3, 5, 4};
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        relabelled.mult_table[pi[a] * 6 + pi[b]] = pi[s3.mult(a, b)];
    for (int a = 0; a < 6; ++a) relabelled.inv_table[pi[a]] = pi[s3.inv(a)];
    std::ofstream out(dir / "s3_relabelled.txt");
    out << format_group_table(relabelled);
  }
  SweepOptions opts2;
  opts2.max_order = 6;
  opts2.catalog_dir = dir.string();
  auto report2 = sweep(opts2);
  bool has_file = false;
  for (const auto& s : report2.scope) has_file |= (s.id == "file:s3_relabelled.txt");
  CHECK(has_file);
  std::filesystem::remove_all(dir);
}

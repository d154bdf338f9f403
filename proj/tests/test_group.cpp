#include <algorithm>
#include <set>

#include "doctest.h"
#include "regset/catalog.hpp"
#include "regset/group.hpp"
#include "regset/group_io.hpp"

using namespace regset;

TEST_CASE("cyclic groups") {
  auto z1 = make_cyclic(1);
  CHECK(z1.order == 1);
  auto z4 = make_cyclic(4);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.inv(2) == 2);
  auto z6 = make_cyclic(6);
  CHECK(z6.mult(4, 5) == 3);
}

TEST_CASE("direct products") {
  auto z2 = make_cyclic(2);
  auto klein = make_direct_product(z2, z2);
  CHECK(klein.order == 4);
  for (int x = 1; x < 4; ++x) CHECK(klein.mult(x, x) == 0);

  auto z2z3 = make_direct_product(z2, make_cyclic(3));
  CHECK(element_order_multiset(z2z3) == element_order_multiset(make_cyclic(6)));

  auto relabel = make_direct_product(make_cyclic(1), z2z3);
  CHECK(relabel.mult_table == z2z3.mult_table);
}

TEST_CASE("generalized dihedral groups") {
  auto d3 = make_generalized_dihedral(make_cyclic(3));
  CHECK(d3.order == 6);
  CHECK(involutions(d3, {3, 4, 5}) == std::vector<int>{3, 4, 5});

  auto over_klein = make_generalized_dihedral(make_direct_product(make_cyclic(2), make_cyclic(2)));
  for (int x = 0; x < over_klein.order; ++x) CHECK(over_klein.mult(x, x) == 0);

  auto d4 = make_generalized_dihedral(make_cyclic(4));
  CHECK(element_order_multiset(d4) == std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4});

  // The base group sits unchanged in the upper-left corner of the table.
  auto z4 = make_cyclic(4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(d4.mult(x, y) == z4.mult(x, y));

  CHECK_THROWS_AS(make_generalized_dihedral(make_generalized_dihedral(make_cyclic(3))), Error);
}

TEST_CASE("dicyclic groups") {
  auto q8 = make_dicyclic(2);
  CHECK(q8.order == 8);
  std::vector<int> all(q8.order);
  for (int i = 0; i < q8.order; ++i) all[i] = i;
  CHECK(involutions(q8, all).size() == 1);

  auto dic3 = make_dicyclic(3);
  CHECK(dic3.order == 12);
  CHECK(involutions(dic3, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}) == std::vector<int>{3});

  for (int m = 2; m <= 5; ++m) {
    auto g = make_dicyclic(m);
    CHECK(element_order(g, 2 * m) == 4);  // b
  }
}

TEST_CASE("semidirect products") {
  auto z3 = make_cyclic(3);
  auto z2 = make_cyclic(2);

  std::vector<std::vector<int>> trivial{{0, 1, 2}, {0, 1, 2}};
  auto direct = make_semidirect_product(z3, z2, trivial);
  CHECK(is_abelian(direct));

  std::vector<std::vector<int>> inversion{{0, 1, 2}, {0, 2, 1}};
  auto s3 = make_semidirect_product(z3, z2, inversion);
  CHECK(!is_abelian(s3));
  CHECK(element_order_multiset(s3) ==
        element_order_multiset(make_generalized_dihedral(z3)));

  auto f21 = group_from_spec("semidirect:7x3");
  CHECK(f21.order == 21);
  std::vector<int> all(21);
  for (int i = 0; i < 21; ++i) all[i] = i;
  CHECK(involutions(f21, all).empty());

  std::vector<std::vector<int>> not_auto{{0, 1, 2}, {0, 1, 1}};
  CHECK_THROWS_AS(make_semidirect_product(z3, z2, not_auto), Error);
  std::vector<std::vector<int>> not_hom{{0, 2, 1}, {0, 1, 2}};
  CHECK_THROWS_AS(make_semidirect_product(z3, z2, not_hom), Error);
}

TEST_CASE("permutation closure") {
  auto a3 = from_permutation_generators(3, {{1, 2, 0}});
  CHECK(a3.order == 3);
  auto s3 = from_permutation_generators(3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(s3.order == 6);
  auto klein = from_permutation_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  CHECK(klein.order == 4);
  CHECK_THROWS_AS(from_permutation_generators(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 30), Error);
}

TEST_CASE("subgroup closure") {
  auto z6 = make_cyclic(6);
  CHECK(subgroup_closure(z6, {2}).elements() == std::vector<int>{0, 2, 4});
  CHECK(subgroup_closure(z6, {}).elements() == std::vector<int>{0});
  auto d3 = make_generalized_dihedral(make_cyclic(3));
  CHECK(subgroup_closure(d3, {3}).order() == 2);
}

TEST_CASE("subgroup enumeration") {
  auto z6 = make_cyclic(6);
  CHECK(enumerate_subgroups(z6).size() == 4);
  auto d3 = make_generalized_dihedral(make_cyclic(3));
  CHECK(enumerate_subgroups(d3).size() == 6);
  auto q8 = make_dicyclic(2);
  CHECK(enumerate_subgroups(q8).size() == 6);

  // Number of subgroups of a cyclic group = number of divisors.
  for (int n = 1; n <= 24; ++n) {
    int divisors = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) ++divisors;
    CHECK(enumerate_subgroups(make_cyclic(n)).size() == static_cast<std::size_t>(divisors));
  }

  // The list is closed under conjugation.
  auto s4 = group_from_spec("symmetric:4");
  auto subs = enumerate_subgroups(s4);
  std::set<std::vector<int>> listed;
  for (const auto& h : subs) listed.insert(h.elements());
  for (const auto& h : subs) {
    for (int x = 0; x < s4.order; ++x) {
      std::vector<int> conj;
      for (int e : h.elements()) conj.push_back(s4.conjugate(e, x));
      std::sort(conj.begin(), conj.end());
      CHECK(listed.count(conj) == 1);
    }
  }
}

TEST_CASE("involutions and normality") {
  auto z6 = make_cyclic(6);
  std::vector<int> all6{0, 1, 2, 3, 4, 5};
  CHECK(involutions(z6, all6) == std::vector<int>{3});
  auto z5 = make_cyclic(5);
  CHECK(involutions(z5, {0, 1, 2, 3, 4}).empty());

  CHECK(is_normal(z6, subgroup_closure(z6, {3})));
  auto d3 = make_generalized_dihedral(make_cyclic(3));
  CHECK(!is_normal(d3, subgroup_closure(d3, {3})));
  CHECK(is_normal(d3, subgroup_closure(d3, {1})));
}

TEST_CASE("table validation over the catalog") {
  for (const auto& entry : catalog(16)) {
    CAPTURE(entry.id);
    CHECK_NOTHROW(validate_group_table(entry.table));
  }
}

TEST_CASE("group file round trip") {
  auto dic3 = make_dicyclic(3);
  auto parsed = parse_group_text(format_group_table(dic3));
  CHECK(parsed.mult_table == dic3.mult_table);
  CHECK(parsed.inv_table == dic3.inv_table);
}

TEST_CASE("group file parsing") {
  auto g = parse_group_text("# comment\nperm 3\n(0 1 2)\n(0 1)\n");
  CHECK(g.order == 6);

  CHECK_THROWS_WITH_AS(parse_group_text("table 2\n0 1\n1 2\n"),
                       doctest::Contains("line 3"), Error);
  CHECK_THROWS_WITH_AS(parse_group_text("perm 3\n(0 5)\n"),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_AS(parse_group_text("table 2\n0 1\n"), Error);
  // Latin but non-associative: must be rejected by validation.
  CHECK_THROWS_AS(parse_group_text("table 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n"
                                   "3 2 4 0 1\n4 3 1 2 0\n"),
                  Error);
}

TEST_CASE("subgroup constructor rejects garbage") {
  auto z6 = make_cyclic(6);
  CHECK_THROWS_AS(Subgroup(z6, {0, 2}), Error);
  CHECK_THROWS_AS(Subgroup(z6, {1, 5}), Error);
  CHECK_NOTHROW(Subgroup(z6, {0, 2, 4}));
}

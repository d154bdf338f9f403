#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "regset/catalog.hpp"
#include "regset/perfect_code.hpp"

using namespace regset;

TEST_CASE("involution criterion") {
  auto z4 = make_cyclic(4);
  auto h4 = subgroup_closure(z4, {2});
  auto c4 = is_perfect_code_by_involutions(z4, h4);
  CHECK(!c4.holds);
  CHECK(c4.failing_coset == 1);

  auto z6 = make_cyclic(6);
  auto h6 = subgroup_closure(z6, {3});
  CHECK(is_perfect_code_by_involutions(z6, h6).holds);

  auto d3 = make_generalized_dihedral(make_cyclic(3));
  auto hs = subgroup_closure(d3, {3});
  CHECK(is_perfect_code_by_involutions(d3, hs).holds);

  CHECK_THROWS_AS(is_perfect_code_by_involutions(z6, subgroup_closure(z6, {})), Error);
  CHECK_THROWS_AS(is_perfect_code_by_involutions(z6, subgroup_closure(z6, {1})), Error);
}

TEST_CASE("inverse-closed transversal search") {
  auto z6 = make_cyclic(6);
  auto h = subgroup_closure(z6, {3});
  auto dec = right_cosets(z6, h);
  auto t = find_inverse_closed_transversal(z6, h, dec, {0, 1, 2});
  REQUIRE(t.has_value());
  CHECK(*t == std::vector<int>{0, 1, 5});

  auto z4 = make_cyclic(4);
  auto h4 = subgroup_closure(z4, {2});
  auto dec4 = right_cosets(z4, h4);
  CHECK(!find_inverse_closed_transversal(z4, h4, dec4, {0, 1}).has_value());

  auto only_h = find_inverse_closed_transversal(z6, h, dec, {0});
  REQUIRE(only_h.has_value());
  CHECK(*only_h == std::vector<int>{0});
}

TEST_CASE("perfect code decisions") {
  auto z6 = make_cyclic(6);
  auto h6 = subgroup_closure(z6, {3});
  auto d6 = is_perfect_code(z6, h6);
  CHECK(d6.is_perfect_code);
  CHECK(d6.is_total_perfect_code);
  CHECK(d6.method_agreement);
  REQUIRE(d6.witness_transversal.has_value());
  CHECK(*d6.witness_transversal == std::vector<int>{0, 1, 5});

  auto z9 = make_cyclic(9);
  auto h9 = subgroup_closure(z9, {3});
  auto d9 = is_perfect_code(z9, h9);
  CHECK(d9.is_perfect_code);  // no outside square lands in H
  CHECK(!d9.is_total_perfect_code);

  auto z4 = make_cyclic(4);
  auto d4 = is_perfect_code(z4, subgroup_closure(z4, {2}));
  CHECK(!d4.is_perfect_code);
  CHECK(!d4.is_total_perfect_code);
  CHECK(d4.failing_coset == 1);
}

TEST_CASE("witness transversal properties over the catalog") {
  for (const auto& entry : catalog(12)) {
    const auto& g = entry.table;
    for (const auto& h : enumerate_subgroups(g)) {
      if (h.order() <= 1 || h.order() >= g.order) continue;
      auto decision = is_perfect_code(g, h);
      if (!decision.is_perfect_code) continue;
      const auto& t = *decision.witness_transversal;
      auto dec = right_cosets(g, h);
      std::vector<int> hits(dec.cosets.size(), 0);
      for (int z : t) {
        ++hits[dec.coset_of[z]];
        CHECK(std::binary_search(t.begin(), t.end(), g.inv(z)));
      }
      CHECK(hits == std::vector<int>(dec.cosets.size(), 1));
    }
  }
}

TEST_CASE("squares condition") {
  auto z4 = make_cyclic(4);
  CHECK(!condition_square_in_H(z4, subgroup_closure(z4, {2})));
  auto z6 = make_cyclic(6);
  CHECK(condition_square_in_H(z6, subgroup_closure(z6, {3})));

  // Elementary abelian: every subgroup qualifies.
  auto e8 = group_from_spec("abelian:2x2x2");
  for (const auto& h : enumerate_subgroups(e8))
    if (h.order() > 1 && h.order() < 8) CHECK(condition_square_in_H(e8, h));
}

TEST_CASE("squares condition matches the decision for normal subgroups") {
  for (const auto& entry : catalog(16)) {
    const auto& g = entry.table;
    for (const auto& h : enumerate_subgroups(g)) {
      if (h.order() <= 1 || h.order() >= g.order) continue;
      if (!is_normal(g, h)) continue;
      CAPTURE(entry.id);
      CHECK(condition_square_in_H(g, h) == is_perfect_code(g, h).is_perfect_code);
    }
  }
}

TEST_CASE("inverse-closed subsets of H") {
  auto z5 = make_cyclic(5);
  auto h5 = subgroup_closure(z5, {1});
  // H = G is fine here; the operation only looks inside H.
  auto s2 = inverse_closed_subset_of_H(h5, 2);
  REQUIRE(s2.has_value());
  CHECK(*s2 == std::vector<int>{1, 4});
  CHECK(!inverse_closed_subset_of_H(h5, 1).has_value());

  auto z6 = make_cyclic(6);
  auto h6 = subgroup_closure(z6, {1});
  auto s1 = inverse_closed_subset_of_H(h6, 1);
  REQUIRE(s1.has_value());
  CHECK(*s1 == std::vector<int>{3});

  CHECK_THROWS_AS(inverse_closed_subset_of_H(h6, 6), Error);
  CHECK_THROWS_AS(inverse_closed_subset_of_H(h6, -1), Error);
}

TEST_CASE("inverse-closed subsets agree with brute force up to order 8") {
  for (const auto& entry : catalog(8)) {
    const auto& g = entry.table;
    auto h = subgroup_closure(g, [&] {
      std::vector<int> all;
      for (int i = 0; i < g.order; ++i) all.push_back(i);
      return all;
    }());
    for (int a = 0; a < g.order; ++a) {
      bool exists = false;
      std::vector<int> region;
      for (int i = 1; i < g.order; ++i) region.push_back(i);
      oracles::for_each_inverse_closed_subset(g, region, [&](const std::vector<int>& s) {
        if (static_cast<int>(s.size()) == a) exists = true;
      });
      auto got = inverse_closed_subset_of_H(h, a);
      CAPTURE(entry.id);
      CAPTURE(a);
      CHECK(got.has_value() == exists);
      if (got) {
        CHECK(static_cast<int>(got->size()) == a);
        for (int z : *got) {
          CHECK(z != 0);
          CHECK(std::binary_search(got->begin(), got->end(), g.inv(z)));
        }
      }
    }
  }
}

TEST_CASE("total perfect code matches brute force up to order 14") {
  for (const auto& entry : catalog(14)) {
    const auto& g = entry.table;
    for (const auto& h : enumerate_subgroups(g)) {
      if (h.order() <= 1 || h.order() >= g.order) continue;
      auto grid = oracles::brute_achievable_grid(g, h);
      auto decision = is_perfect_code(g, h);
      CAPTURE(entry.id);
      CHECK(decision.is_perfect_code == static_cast<bool>(grid[0][1]));
      CHECK(decision.is_total_perfect_code ==
            (h.order() >= 2 && static_cast<bool>(grid[1][1])));
    }
  }
}

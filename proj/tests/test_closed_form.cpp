#include "doctest.h"
#include "tga/closed_form.hpp"
#include "tga/errors.hpp"

using namespace tga;

TEST_CASE("variant names") {
  CHECK(to_string(Variant::kPublished) == "published");
  CHECK(to_string(Variant::kCorrected) == "corrected");
  CHECK(parse_variant("corrected") == Variant::kCorrected);
  CHECK_FALSE(parse_variant("other").has_value());
}

TEST_CASE("diameter_formula") {
  CHECK(diameter_formula(2, 1) == 2);
  CHECK(diameter_formula(2, 2) == 6);
  CHECK(diameter_formula(3, 2) == 9);
  CHECK(diameter_formula(2, 3) == 14);
  // Overshoots the 4-cycle's true diameter of 2.
  CHECK(diameter_formula(1, 2) == 3);
}

TEST_CASE("cycle_count_formula") {
  CHECK(cycle_count_formula(3, 5, 4) == 1);
  CHECK(cycle_count_formula(3, 5, 5) == 1);
  CHECK(cycle_count_formula(3, 2, 0) == 3);
  CHECK(cycle_count_formula(2, 7, 3) == 0);
  CHECK(cycle_count_formula(4, 2, 0) == 8);
  CHECK(cycle_count_formula(4, 2, 1) == 2);
}

TEST_CASE("pm_count_formula") {
  for (std::uint32_t n = 1; n <= 6; ++n) CHECK(pm_count_formula(path_tree(3), n).is_zero());
  CHECK(pm_count_formula(path_tree(4), 1).to_string() == "2^2");
  CHECK(pm_count_formula(path_tree(4), 1).value() == 4);
  CHECK(pm_count_formula(path_tree(4), 2).value() == 64);
  CHECK(pm_count_formula(path_tree(2), 3).value() == 2);
  CHECK(pm_count_formula(star_tree(4), 2).is_zero());
  // Stays symbolic far beyond any fixed width.
  CHECK(pm_count_formula(path_tree(4), 40).estimated_bits() > 64);
}

TEST_CASE("pm_generating_function") {
  const auto corrected = pm_generating_function(path_tree(4), 1, Variant::kCorrected);
  CHECK(corrected.count.value() == 4);
  CHECK(corrected.per_label_exponent == 1);
  CHECK(corrected.labels == std::vector<std::size_t>{0, 2});
  CHECK(pm_generating_function(path_tree(4), 1, Variant::kPublished).per_label_exponent == 2);
  const auto level2 = pm_generating_function(path_tree(4), 2, Variant::kCorrected);
  CHECK(level2.count.to_string() == "2^6");
  CHECK(level2.per_label_exponent == 4);
  CHECK(pm_generating_function(path_tree(4), 2, Variant::kPublished).per_label_exponent == 8);
  CHECK_THROWS_AS(pm_generating_function(path_tree(3), 2, Variant::kCorrected),
                  NoPerfectMatching);
}

TEST_CASE("tutte_factored") {
  CHECK(tutte_factored(3, 2, Variant::kPublished).to_string() == "y^6(y+x+x^2+x^3)^2");
  CHECK(tutte_factored(3, 2, Variant::kCorrected).to_string() == "y^6(y+x)^2(y+x+x^2+x^3)^2");
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (auto variant : {Variant::kPublished, Variant::kCorrected}) {
      const auto t = tutte_factored(2, n, variant);
      CHECK(t.loop_exponent == 0);
      REQUIRE(t.cycle_factors.size() == 1);
      CHECK(t.cycle_factors.begin()->first == (std::uint64_t{1} << n));
      CHECK(t.cycle_factors.begin()->second == 1);
    }
  }
  const auto s4 = tutte_factored(4, 2, Variant::kCorrected);
  CHECK(s4.loop_exponent == 24);
  CHECK(s4.cycle_factors == std::map<std::uint64_t, BigInt>{{2, 6}, {4, 3}});
  CHECK(tutte_factored(3, 1, Variant::kCorrected).to_string() == "y^2(y+x)^2");
}

TEST_CASE("Tutte evaluations") {
  CHECK(tutte_evaluate(tutte_factored(3, 2, Variant::kCorrected), 1, 1) == 64);
  CHECK(tutte_evaluate(tutte_factored(3, 2, Variant::kPublished), 1, 1) == 16);
  CHECK(tutte_evaluate(tutte_factored(3, 2, Variant::kCorrected), 0, 0) == 0);
}

TEST_CASE("spanning_trees_formula") {
  CHECK(spanning_trees_formula(3, 2, Variant::kPublished).value() == 16);
  CHECK(spanning_trees_formula(3, 2, Variant::kCorrected).value() == 64);
  CHECK(spanning_trees_formula(2, 5, Variant::kPublished).value() == 32);
  CHECK(spanning_trees_formula(2, 5, Variant::kCorrected).value() == 32);
  CHECK(spanning_trees_formula(3, 3, Variant::kCorrected).value() == 65536);
  // The printed exponent is 4/3 here.
  CHECK_THROWS_AS(spanning_trees_formula(3, 1, Variant::kPublished), NonIntegerResult);
}

TEST_CASE("spanning_forests_formula") {
  CHECK(spanning_forests_formula(3, 2, Variant::kPublished) == 225);
  CHECK(spanning_forests_formula(3, 2, Variant::kCorrected) == 2025);
  CHECK(spanning_forests_formula(2, 2, Variant::kCorrected) == 15);
  CHECK(spanning_forests_formula(2, 2, Variant::kPublished) == 15);
  CHECK_THROWS_AS(spanning_forests_formula(3, 30, Variant::kCorrected), ValueTooLarge);
}

TEST_CASE("chromatic_eval") {
  CHECK(chromatic_eval(3, 1, 3, ChromaticVariant::kBlock) == 12);
  CHECK(chromatic_eval(3, 1, 3, ChromaticVariant::kPublished) == 4);
  CHECK(chromatic_eval(3, 2, 3, ChromaticVariant::kBlock) == 432);
  for (std::uint32_t k = 2; k <= 5; ++k) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      CHECK(chromatic_eval(k, n, 1, ChromaticVariant::kBlock) == 0);
      CHECK(chromatic_eval(k, n, 0, ChromaticVariant::kBlock) == 0);
    }
  }
  CHECK(chromatic_eval(2, 1, 2, ChromaticVariant::kBlock) == 2);
}

TEST_CASE("edge contribution formulas") {
  CHECK(nonspecial_contribution(3, 5, 4) == 5832);
  CHECK(nonspecial_contribution(3, 2, 2) == 18);
  CHECK(nonspecial_contribution(2, 1, 1) == 1);

  CHECK(special_contribution_full(path_tree(3), 0, 2) == 18);
  CHECK(special_contribution_full(path_tree(2), 0, 1) == 1);
  CHECK(special_contribution_full(star_tree(4), 0, 1) == 3);
  CHECK_THROWS_AS(special_contribution_full(path_tree(3), 5, 2), InvalidEdge);

  const auto p3 = special_contribution_small(path_tree(3), 0, 2, 1);
  CHECK(p3.suffix_near_target.cycle_count == 1);
  CHECK(p3.suffix_near_target.contribution == 8);
  CHECK(p3.suffix_near_source.cycle_count == 0);

  const auto s4 = special_contribution_small(star_tree(4), 0, 2, 1);
  CHECK(s4.suffix_near_target.cycle_count == 0);
  CHECK(s4.suffix_near_source.cycle_count == 2);
  CHECK(s4.suffix_near_source.contribution == 15);

  CHECK_THROWS_AS(special_contribution_small(path_tree(2), 0, 1, 1), InvalidRange);
  CHECK_THROWS_AS(special_contribution_small(path_tree(3), 0, 3, 0), InvalidRange);
  CHECK_THROWS_AS(special_contribution_small(path_tree(3), 0, 3, 3), InvalidRange);
  CHECK_THROWS_AS(special_contribution_small(path_tree(3), 4, 3, 1), InvalidEdge);
}

TEST_CASE("sz_decomposition_terms") {
  const auto p3 = sz_decomposition_terms(path_tree(3), 1);
  CHECK(p3.a == 0);
  CHECK(p3.b == 8);
  CHECK(p3.c == 0);
  CHECK(p3.d == 0);
  const auto p2 = sz_decomposition_terms(path_tree(2), 2);
  CHECK(p2.a == 8);
  CHECK(p2.b == 8);
  CHECK(p2.total() == 16);
  const auto p3n2 = sz_decomposition_terms(path_tree(3), 2);
  CHECK(p3n2.total() == 176);
  const auto p3n3 = sz_decomposition_terms(path_tree(3), 3);
  CHECK(p3n3.a == 1944);
  CHECK(p3n3.b == 648);
  CHECK(p3n3.c == 288);
  CHECK(p3n3.d == 600);
}

TEST_CASE("Szeged and Wiener formulas") {
  CHECK(szeged_formula(3, 1, 4) == 8);
  CHECK(szeged_formula(2, 2, 1) == 16);
  CHECK(szeged_formula(3, 2, 4) == 2 * wiener_formula(3, 2, 4));
  CHECK(wiener_formula(3, 1, 4) == 4);
  CHECK(wiener_formula(2, 2, 1) == 8);
  CHECK(wiener_formula(3, 2, 4) == 88);
  CHECK(wiener_formula(3, 3, 4) == 1740);
  CHECK(wiener_formula(4, 2, 10) == 420);
  CHECK(wiener_formula(4, 2, 9) == 378);
  const BigInt spider = tree_wiener(spider_tree({2, 2, 1}));
  CHECK(wiener_formula(6, 2, spider) == 3100);
  CHECK(wiener_formula(6, 1, spider) == 31);
}

TEST_CASE("path and star specializations agree with the general formula") {
  CHECK(wiener_path_formula(3, 1) == 4);
  CHECK(wiener_star_formula(3, 1) == 4);
  for (std::uint32_t k = 2; k <= 30; ++k) {
    for (std::uint32_t n = 1; n <= 20; ++n) {
      CHECK(wiener_path_formula(k, n) == wiener_formula(k, n, BigInt(k) * (k * k - 1) / 6));
      CHECK(wiener_star_formula(k, n) == wiener_formula(k, n, BigInt(k - 1) * (k - 1)));
    }
  }
}

TEST_CASE("asymptotic_ratio") {
  CHECK(asymptotic_ratio(3, 4, Variant::kPublished) == Rational(88, 135));
  CHECK(asymptotic_ratio(3, 4, Variant::kCorrected) == Rational(44, 135));
  CHECK(asymptotic_ratio(2, 1, Variant::kPublished) == Rational(1, 16));
  CHECK(asymptotic_ratio(2, 1, Variant::kCorrected) == Rational(1, 8));
  // W / (diam k^(2n) / 2) at n = 10 on the closed forms.
  for (std::uint32_t k : {3U, 4U, 5U}) {
    const BigInt w_tree = BigInt(k) * (k * k - 1) / 6;
    const std::uint32_t n = 10;
    const Rational observed = Rational(wiener_formula(k, n, w_tree)) * 2 /
                              (Rational(diameter_formula(k - 1, n)) * Rational(pow_int(k, 2 * n)));
    const Rational limit = asymptotic_ratio(k, w_tree, Variant::kCorrected);
    CHECK(abs(observed - limit) <= limit / 20);
  }
}

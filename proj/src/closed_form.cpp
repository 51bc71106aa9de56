#include "tga/closed_form.hpp"

#include "tga/errors.hpp"

namespace tga {
namespace {

Rational kpow(std::uint32_t k, std::int64_t exponent) {
  return pow_rational(Rational(k), exponent);
}

void require_tree_size(std::uint32_t k) {
  if (k < 2) throw InvalidRange("k must be at least 2");
}

void require_level(std::uint32_t n) {
  if (n < 1) throw InvalidLevel("level must be at least 1");
}

// (k-1)(k-2)k^(n-i-1) for 1 <= i < n, k-1 for i = n.
BigInt cycles_all_labels(std::uint32_t k, std::uint32_t n, std::uint32_t i) {
  return BigInt(k - 1) * cycle_count_formula(k, n, i);
}

}  // namespace

std::string_view to_string(Variant variant) {
  return variant == Variant::kPublished ? "published" : "corrected";
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "published") return Variant::kPublished;
  if (text == "corrected") return Variant::kCorrected;
  return std::nullopt;
}

BigInt diameter_formula(std::uint64_t tree_diameter, std::uint32_t n) {
  require_level(n);
  if (tree_diameter < 1) throw InvalidRange("tree diameter must be at least 1");
  return pow_int(2, n + 1) + BigInt(tree_diameter) * (2 * BigInt(n) - 1) - 4 * BigInt(n);
}

BigInt cycle_count_formula(std::uint32_t k, std::uint32_t n, std::uint32_t i) {
  require_tree_size(k);
  if (i > n) throw InvalidRange("prefix length exceeds the level");
  if (i == n) return 1;
  return BigInt(k - 2) * pow_int(k, n - i - 1);
}

PowerProduct pm_count_formula(const OrientedTree& tree, std::uint32_t n) {
  require_level(n);
  if (!tree_perfect_matching(tree)) return PowerProduct::zero();
  const std::uint32_t k = tree.vertex_count();
  const Rational exponent = Rational(k) * (kpow(k, n) - 2 * kpow(k, n - 1) + 1) /
                            Rational(2 * (k - 1));
  return PowerProduct::power(2, require_integer(exponent, "perfect matching exponent"));
}

PMGeneratingMonomial pm_generating_function(const OrientedTree& tree, std::uint32_t n,
                                            Variant variant) {
  require_level(n);
  auto matching = tree_perfect_matching(tree);
  if (!matching) throw NoPerfectMatching("the tree has no perfect matching");
  const std::uint32_t k = tree.vertex_count();
  PMGeneratingMonomial monomial;
  monomial.count = pm_count_formula(tree, n);
  monomial.labels = std::move(*matching);
  if (variant == Variant::kPublished) {
    monomial.per_label_exponent =
        require_integer(kpow(k, n) / 2, "generating function exponent");
  } else {
    monomial.per_label_exponent = pow_int(k, n - 1);
  }
  return monomial;
}

FactoredTutte tutte_factored(std::uint32_t k, std::uint32_t n, Variant variant) {
  require_tree_size(k);
  require_level(n);
  if (n > 63) throw ValueTooLarge("cycle lengths 2^n beyond n = 63 are not representable");
  FactoredTutte tutte;
  tutte.loop_exponent = BigInt(k - 1) * BigInt(k - 2) * pow_int(k, n - 1);
  tutte.add_cycles(std::uint64_t{1} << n, BigInt(k - 1));
  const std::uint32_t first = variant == Variant::kPublished ? 2 : 1;
  for (std::uint32_t i = first; i + 1 <= n; ++i) {
    tutte.add_cycles(std::uint64_t{1} << i, cycles_all_labels(k, n, i));
  }
  return tutte;
}

PowerProduct spanning_trees_formula(std::uint32_t k, std::uint32_t n, Variant variant) {
  require_tree_size(k);
  require_level(n);
  if (variant == Variant::kPublished) {
    const Rational exponent =
        Rational(n) + (kpow(k, static_cast<std::int64_t>(n) - 2) * (2 * Rational(k) - 1) - 1) *
                          Rational(k - 2) / Rational(k - 1);
    return PowerProduct::power(2, require_integer(exponent, "spanning tree exponent"));
  }
  // Each cycle of length 2^i contributes a factor 2^i.
  BigInt exponent = BigInt(n) * (k - 1);
  for (std::uint32_t i = 1; i < n; ++i) {
    exponent += BigInt(i) * BigInt(k - 1) * BigInt(k - 2) * pow_int(k, n - i - 1);
  }
  return PowerProduct::power(2, exponent);
}

BigInt spanning_forests_formula(std::uint32_t k, std::uint32_t n, Variant variant,
                                std::uint64_t bit_budget) {
  return require_integer(tutte_evaluate(tutte_factored(k, n, variant), 2, 1, bit_budget),
                         "spanning forest count");
}

BigInt chromatic_eval(std::uint32_t k, std::uint32_t n, const BigInt& colors,
                      ChromaticVariant variant, std::uint64_t bit_budget) {
  require_tree_size(k);
  require_level(n);
  if (colors < 0) throw InvalidRange("number of colors must be nonnegative");
  const Rational lambda(colors);
  if (variant == ChromaticVariant::kPublished) {
    auto bracket = [&](std::uint32_t i) {
      return checked_pow(1 - lambda, pow_int(2, i), bit_budget) - lambda + 1;
    };
    Rational value = (k + 1) % 2 == 0 ? 1 : -1;
    value *= checked_pow(bracket(n), BigInt(k - 1), bit_budget);
    for (std::uint32_t i = 2; i + 1 <= n; ++i) {
      value *= checked_pow(bracket(i), cycles_all_labels(k, n, i), bit_budget);
    }
    return require_integer(value, "chromatic value");
  }
  if (colors == 0) return 0;
  // Cactus: lambda times prod over cycles of chi(C_m) / lambda.
  Rational value = lambda;
  for (std::uint32_t i = 1; i <= n; ++i) {
    const Rational cycle =
        (checked_pow(lambda - 1, pow_int(2, i), bit_budget) + (lambda - 1)) / lambda;
    value *= checked_pow(cycle, cycles_all_labels(k, n, i), bit_budget);
    if (value == 0) return 0;
  }
  return require_integer(value, "chromatic value");
}

BigInt nonspecial_contribution(std::uint32_t k, std::uint32_t n, std::uint32_t i) {
  require_tree_size(k);
  if (i < 1 || i > n) throw InvalidRange("cycle prefix length must satisfy 1 <= i <= n");
  const BigInt block = pow_int(k, i - 1);
  return block * (pow_int(k, n) - block);
}

BigInt special_contribution_full(const OrientedTree& tree, std::size_t edge, std::uint32_t n) {
  require_level(n);
  const auto split = split_counts(tree, edge);
  return BigInt(split.source_side) * split.target_side *
         pow_int(tree.vertex_count(), 2 * (std::uint64_t{n} - 1));
}

SpecialContributions special_contribution_small(const OrientedTree& tree, std::size_t edge,
                                                std::uint32_t n, std::uint32_t i) {
  if (i < 1 || i >= n) throw InvalidRange("short cycles need 1 <= i < n");
  const auto split = split_counts(tree, edge);
  const std::uint32_t k = tree.vertex_count();
  const BigInt free_positions = pow_int(k, n - 1 - i);
  const BigInt block = pow_int(k, i - 1);
  const BigInt total = pow_int(k, n);
  auto side = [&](std::uint64_t own) { return BigInt(own) * block * (total - BigInt(own) * block); };
  return {
      {BigInt(split.target_side - 1) * free_positions, side(split.source_side)},
      {BigInt(split.source_side - 1) * free_positions, side(split.target_side)},
  };
}

SzegedTerms sz_decomposition_terms(const OrientedTree& tree, std::uint32_t n) {
  require_level(n);
  const std::uint32_t k = tree.vertex_count();
  const Rational kr(k);
  const Rational sz(tree_szeged(tree));
  const std::int64_t nn = n;
  const Rational kn = kpow(k, nn);
  const Rational two_n = pow_rational(2, nn);
  const Rational scale = kpow(k, nn - 2);

  const Rational a = (kr - 1) * (kr - 1) * kpow(k, 2 * nn - 2) * (two_n - 2);
  const Rational b = 2 * kpow(k, 2 * nn - 2) * sz;
  const Rational c =
      (kr - 2) * (kr - 1) * scale *
      (kn * (two_n - 2) - 2 * (pow_rational(2 * kr, nn - 1) - 1) / (2 * kr - 1) -
       2 * Rational(nn - 1) * kn + 2 * (kpow(k, nn - 1) - 1) / (kr - 1));
  const Rational d =
      2 * scale *
      ((2 * Rational(nn - 1) * kn - (kr + 2) * (kpow(k, nn - 1) - 1) / (kr - 1)) * sz -
       Rational(nn - 1) * (kr - 1) * kpow(k, nn + 1) + kr * kr * (kpow(k, nn - 1) - 1));
  return {require_integer(a, "term A"), require_integer(b, "term B"),
          require_integer(c, "term C"), require_integer(d, "term D")};
}

BigInt szeged_formula(std::uint32_t k, std::uint32_t n, const BigInt& tree_szeged) {
  require_tree_size(k);
  require_level(n);
  const Rational kr(k);
  const std::int64_t nn = n;
  const Rational k2n = kpow(k, 2 * nn);
  const Rational kn = kpow(k, nn);
  const Rational value =
      2 * (kr - 1) * (kr - 1) * (2 * kr * kr - 2 * kr - 1) / (kr * kr * kr * (2 * kr - 1)) *
          pow_rational(2, nn) * k2n -
      4 * (kr - 1) * (kr - 1) / (kr * kr) * Rational(nn) * k2n +
      4 * (kr + 1) * (kr - 1) / (kr * kr * kr) * k2n -
      4 * (kr + 1) * (kr - 1) / (kr * (2 * kr - 1)) * kn +
      (4 / (kr * kr) * Rational(nn) * k2n - 2 * (kr * kr + 2) / (kr * kr * kr * (kr - 1)) * k2n +
       2 * (kr + 2) / (kr * kr * (kr - 1)) * kn) *
          Rational(tree_szeged);
  return require_integer(value, "Szeged index");
}

BigInt wiener_formula(std::uint32_t k, std::uint32_t n, const BigInt& tree_wiener) {
  require_tree_size(k);
  require_level(n);
  const Rational kr(k);
  const std::int64_t nn = n;
  const Rational k2n = kpow(k, 2 * nn);
  const Rational kn = kpow(k, nn);
  const Rational value =
      (kr - 1) * (kr - 1) * (2 * kr * kr - 2 * kr - 1) / (kr * kr * kr * (2 * kr - 1)) *
          pow_rational(2, nn) * k2n -
      2 * (kr - 1) * (kr - 1) / (kr * kr) * Rational(nn) * k2n +
      2 * (kr + 1) * (kr - 1) / (kr * kr * kr) * k2n -
      2 * (kr + 1) * (kr - 1) / (kr * (2 * kr - 1)) * kn +
      (2 / (kr * kr) * Rational(nn) * k2n - (kr * kr + 2) / (kr * kr * kr * (kr - 1)) * k2n +
       (kr + 2) / (kr * kr * (kr - 1)) * kn) *
          Rational(tree_wiener);
  return require_integer(value, "Wiener index");
}

BigInt wiener_path_formula(std::uint32_t k, std::uint32_t n) {
  require_tree_size(k);
  require_level(n);
  const Rational kr(k);
  const std::int64_t nn = n;
  const Rational k2n = kpow(k, 2 * nn);
  const Rational kn = kpow(k, nn);
  const Rational value =
      (kr - 1) * (kr - 1) * (2 * kr * kr - 2 * kr - 1) / (kr * kr * kr * (2 * kr - 1)) *
          pow_rational(2, nn) * k2n +
      (kr - 1) * (kr - 2) * (kr - 3) / (3 * kr * kr) * Rational(nn) * k2n -
      (kr + 1) * (kr - 2) * (kr * kr + 2 * kr - 6) / (6 * kr * kr * kr) * k2n +
      (kr + 1) * (kr - 2) * (2 * kr - 5) / (6 * kr * (2 * kr - 1)) * kn;
  return require_integer(value, "Wiener index of the path automaton");
}

BigInt wiener_star_formula(std::uint32_t k, std::uint32_t n) {
  require_tree_size(k);
  require_level(n);
  const Rational kr(k);
  const std::int64_t nn = n;
  const Rational k2n = kpow(k, 2 * nn);
  const Rational value =
      (kr - 1) * (kr - 1) * (2 * kr * kr - 2 * kr - 1) / (kr * kr * kr * (2 * kr - 1)) *
          pow_rational(2, nn) * k2n -
      (kr - 1) * (kr - 2) / (kr * kr) * k2n +
      (kr - 1) * (kr - 2) / (kr * kr * (2 * kr - 1)) * kpow(k, nn);
  return require_integer(value, "Wiener index of the star automaton");
}

Rational asymptotic_ratio(std::uint32_t k, const BigInt& tree_wiener, Variant variant) {
  require_tree_size(k);
  const Rational kr(k);
  const Rational leading =
      (kr - 1) * (kr - 1) * (2 * kr * kr - 2 * kr - 1) / (kr * kr * kr * (2 * kr - 1));
  if (variant == Variant::kPublished) return Rational(tree_wiener) / 2 * leading;
  return leading;
}

}  // namespace tga

#pragma once

// Exact closed forms for tree graph automata. All arithmetic is over exact
// rationals; every count is checked to be integral before it is returned.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tga/numeric.hpp"
#include "tga/tree.hpp"
#include "tga/tutte.hpp"

namespace tga {

// kPublished evaluates the printed formula verbatim; kCorrected is the form
// that agrees with the brute-force oracles.
enum class Variant { kPublished, kCorrected };
enum class ChromaticVariant { kPublished, kBlock };

std::string_view to_string(Variant variant);
std::optional<Variant> parse_variant(std::string_view text);

// 2^(n+1) + d_G (2n - 1) - 4n. Agrees with BFS whenever d_G >= 2; for the
// single-edge tree it overshoots from n = 2 on.
BigInt diameter_formula(std::uint64_t tree_diameter, std::uint32_t n);

// Number of e-cycles of length 2^i for one generator: 1 for i = n, otherwise
// (k - 2) k^(n - i - 1). i = 0 counts the loops.
BigInt cycle_count_formula(std::uint32_t k, std::uint32_t n, std::uint32_t i);

// 2^(k (k^n - 2 k^(n-1) + 1) / (2 (k - 1))), or zero without a perfect
// matching in the tree.
PowerProduct pm_count_formula(const OrientedTree& tree, std::uint32_t n);

struct PMGeneratingMonomial {
  PowerProduct count;
  BigInt per_label_exponent;
  std::vector<std::size_t> labels;  // edges of the tree's perfect matching
};

// Published exponent k^n / 2, corrected k^(n-1). NoPerfectMatching when the
// tree has none.
PMGeneratingMonomial pm_generating_function(const OrientedTree& tree, std::uint32_t n,
                                            Variant variant);

// Published keeps the printed product over 2 <= i <= n-1; corrected also
// includes the 2-cycles, i = 1.
FactoredTutte tutte_factored(std::uint32_t k, std::uint32_t n, Variant variant);

PowerProduct spanning_trees_formula(std::uint32_t k, std::uint32_t n, Variant variant);
BigInt spanning_forests_formula(std::uint32_t k, std::uint32_t n, Variant variant,
                                std::uint64_t bit_budget = kDefaultBitBudget);
BigInt chromatic_eval(std::uint32_t k, std::uint32_t n, const BigInt& colors,
                      ChromaticVariant variant, std::uint64_t bit_budget = kDefaultBitBudget);

// n(u, v) n(v, u) for a non-special edge on an e-cycle of length 2^i.
BigInt nonspecial_contribution(std::uint32_t k, std::uint32_t n, std::uint32_t i);
// n(u, v) n(v, u) for a special edge of the full-length e-cycle.
BigInt special_contribution_full(const OrientedTree& tree, std::size_t edge, std::uint32_t n);

struct SpecialFamily {
  BigInt cycle_count;
  BigInt contribution;  // per special edge
};

// The e-cycles of length 2^i < 2^n split by the first suffix letter: closer
// to t (first family) or closer to s (second family).
struct SpecialContributions {
  SpecialFamily suffix_near_target;
  SpecialFamily suffix_near_source;
};

SpecialContributions special_contribution_small(const OrientedTree& tree, std::size_t edge,
                                                std::uint32_t n, std::uint32_t i);

// Szeged index split by edge class: non-special (a) and special (b) edges of
// full-length cycles; non-special (c) and special (d) edges of shorter ones.
struct SzegedTerms {
  BigInt a, b, c, d;
  BigInt total() const { return a + b + c + d; }
};

SzegedTerms sz_decomposition_terms(const OrientedTree& tree, std::uint32_t n);

BigInt szeged_formula(std::uint32_t k, std::uint32_t n, const BigInt& tree_szeged);
BigInt wiener_formula(std::uint32_t k, std::uint32_t n, const BigInt& tree_wiener);
BigInt wiener_path_formula(std::uint32_t k, std::uint32_t n);
BigInt wiener_star_formula(std::uint32_t k, std::uint32_t n);

// Limit of W / (diam * k^(2n) / 2). The published constant carries an extra
// factor W(G) / 2; the corrected one is (k-1)^2 (2k^2-2k-1) / (k^3 (2k-1)).
Rational asymptotic_ratio(std::uint32_t k, const BigInt& tree_wiener, Variant variant);

}  // namespace tga

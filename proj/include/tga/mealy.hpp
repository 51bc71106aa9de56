#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tga/tree.hpp"

namespace tga {

using Letter = std::uint32_t;
using StateId = std::uint32_t;

// A finite word over the alphabet 1..k. Position 0 is the first letter read.
struct Word {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// Digits for k <= 9 ("112"), dot-separated otherwise ("1.10.2").
std::string format_word(const Word& word, std::uint32_t k);
Word parse_word(const std::string& text, std::uint32_t k);

// Invertible Mealy machine given by tables over states x letters.
class MealyAutomaton {
 public:
  // restriction[q][x-1] and output[q][x-1]; names are used for diagrams.
  MealyAutomaton(std::uint32_t alphabet_size, std::vector<std::vector<StateId>> restriction,
                 std::vector<std::vector<Letter>> output, std::vector<std::string> names,
                 std::optional<StateId> sink, std::vector<StateId> generators);

  std::uint32_t alphabet_size() const { return k_; }
  std::size_t state_count() const { return restriction_.size(); }
  std::optional<StateId> sink() const { return sink_; }
  // States used as Schreier generators, in label order.
  const std::vector<StateId>& generators() const { return generators_; }
  const std::string& name(StateId q) const;

  StateId restriction(StateId q, Letter x) const;
  Letter output(StateId q, Letter x) const;

 private:
  void check(StateId q, Letter x) const;

  std::uint32_t k_;
  std::vector<std::vector<StateId>> restriction_;
  std::vector<std::vector<Letter>> output_;
  std::vector<std::string> names_;
  std::optional<StateId> sink_;
  std::vector<StateId> generators_;
};

// States 0..k-2 are the oriented tree edges in input order, state k-1 is the
// sink. Edge (x, y) swaps x and y, restricts to itself on x and to the sink
// elsewhere.
MealyAutomaton build_automaton(const OrientedTree& tree);

Word apply_state(const MealyAutomaton& automaton, StateId q, const Word& word);
// In-place variant over raw letters, used on hot paths.
void apply_state_in_place(const MealyAutomaton& automaton, StateId q,
                          std::vector<Letter>& letters);

bool check_invertible(const MealyAutomaton& automaton);

// Moore diagram: one arrow q -> restriction(q, x) labeled "x|output(q, x)".
std::string export_moore_dot(const MealyAutomaton& automaton);

}  // namespace tga

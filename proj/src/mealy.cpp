#include "tga/mealy.hpp"

#include <sstream>

#include "tga/errors.hpp"

namespace tga {

std::string format_word(const Word& word, std::uint32_t k) {
  std::string text;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (k > 9 && i > 0) text += '.';
    text += std::to_string(word[i]);
  }
  return text;
}

Word parse_word(const std::string& text, std::uint32_t k) {
  Word word;
  auto push = [&](const std::string& token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw MalformedInput("bad letter \"" + token + "\" in word \"" + text + "\"");
    }
    const unsigned long letter = std::stoul(token);
    if (letter < 1 || letter > k) {
      throw MalformedInput("letter " + token + " outside 1.." + std::to_string(k));
    }
    word.letters.push_back(static_cast<Letter>(letter));
  };
  if (k <= 9) {
    for (char c : text) push(std::string(1, c));
  } else {
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, '.')) push(token);
  }
  if (word.size() == 0) throw MalformedInput("empty word");
  return word;
}

MealyAutomaton::MealyAutomaton(std::uint32_t alphabet_size,
                               std::vector<std::vector<StateId>> restriction,
                               std::vector<std::vector<Letter>> output,
                               std::vector<std::string> names, std::optional<StateId> sink,
                               std::vector<StateId> generators)
    : k_(alphabet_size),
      restriction_(std::move(restriction)),
      output_(std::move(output)),
      names_(std::move(names)),
      sink_(sink),
      generators_(std::move(generators)) {
  if (k_ == 0) throw MalformedInput("empty alphabet");
  if (output_.size() != restriction_.size() || names_.size() != restriction_.size()) {
    throw MalformedInput("automaton tables disagree on the number of states");
  }
  for (std::size_t q = 0; q < restriction_.size(); ++q) {
    if (restriction_[q].size() != k_ || output_[q].size() != k_) {
      throw MalformedInput("automaton table row has the wrong width");
    }
    for (std::uint32_t x = 0; x < k_; ++x) {
      if (restriction_[q][x] >= restriction_.size()) throw UnknownState("restriction target");
      if (output_[q][x] < 1 || output_[q][x] > k_) throw MalformedInput("output letter");
    }
  }
  if (sink_ && *sink_ >= restriction_.size()) throw UnknownState("sink");
  for (StateId g : generators_) {
    if (g >= restriction_.size()) throw UnknownState("generator");
  }
}

const std::string& MealyAutomaton::name(StateId q) const {
  if (q >= names_.size()) throw UnknownState("state " + std::to_string(q));
  return names_[q];
}

void MealyAutomaton::check(StateId q, Letter x) const {
  if (q >= restriction_.size()) throw UnknownState("state " + std::to_string(q));
  if (x < 1 || x > k_) throw MalformedInput("letter " + std::to_string(x) + " outside alphabet");
}

StateId MealyAutomaton::restriction(StateId q, Letter x) const {
  check(q, x);
  return restriction_[q][x - 1];
}

Letter MealyAutomaton::output(StateId q, Letter x) const {
  check(q, x);
  return output_[q][x - 1];
}

MealyAutomaton build_automaton(const OrientedTree& tree) {
  const std::uint32_t k = tree.vertex_count();
  const auto edge_states = static_cast<StateId>(tree.edge_count());
  const StateId sink = edge_states;
  std::vector<std::vector<StateId>> restriction(edge_states + 1,
                                                std::vector<StateId>(k, sink));
  std::vector<std::vector<Letter>> output(edge_states + 1, std::vector<Letter>(k));
  std::vector<std::string> names;
  std::vector<StateId> generators;
  for (StateId q = 0; q <= edge_states; ++q) {
    for (Letter x = 1; x <= k; ++x) output[q][x - 1] = x;
  }
  for (StateId q = 0; q < edge_states; ++q) {
    const auto& [s, t] = tree.edges()[q];
    restriction[q][s - 1] = q;
    output[q][s - 1] = t;
    output[q][t - 1] = s;
    names.push_back("(" + std::to_string(s) + "," + std::to_string(t) + ")");
    generators.push_back(q);
  }
  names.push_back("id");
  return MealyAutomaton(k, std::move(restriction), std::move(output), std::move(names), sink,
                        std::move(generators));
}

void apply_state_in_place(const MealyAutomaton& automaton, StateId q,
                          std::vector<Letter>& letters) {
  const auto sink = automaton.sink();
  for (Letter& x : letters) {
    if (sink && q == *sink) return;
    const StateId next = automaton.restriction(q, x);
    x = automaton.output(q, x);
    q = next;
  }
}

Word apply_state(const MealyAutomaton& automaton, StateId q, const Word& word) {
  if (q >= automaton.state_count()) throw UnknownState("state " + std::to_string(q));
  Word result = word;
  apply_state_in_place(automaton, q, result.letters);
  return result;
}

bool check_invertible(const MealyAutomaton& automaton) {
  const std::uint32_t k = automaton.alphabet_size();
  for (StateId q = 0; q < automaton.state_count(); ++q) {
    std::vector<bool> hit(k + 1, false);
    for (Letter x = 1; x <= k; ++x) {
      const Letter y = automaton.output(q, x);
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

std::string export_moore_dot(const MealyAutomaton& automaton) {
  std::ostringstream out;
  out << "digraph moore {\n";
  for (StateId q = 0; q < automaton.state_count(); ++q) {
    out << "  q" << q << " [label=\"" << automaton.name(q) << "\"];\n";
  }
  for (StateId q = 0; q < automaton.state_count(); ++q) {
    for (Letter x = 1; x <= automaton.alphabet_size(); ++x) {
      out << "  q" << q << " -> q" << automaton.restriction(q, x) << " [label=\"" << x << '|'
          << automaton.output(q, x) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace tga

#include "tga/schreier.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "tga/errors.hpp"

namespace tga {
namespace {

std::uint64_t checked_power(std::uint32_t k, std::uint32_t n, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (count > cap / k) {
      throw LevelTooLarge(std::to_string(k) + "^" + std::to_string(n) +
                          " vertices exceed the cap of " + std::to_string(cap));
    }
    count *= k;
  }
  if (count > cap) {
    throw LevelTooLarge(std::to_string(count) + " vertices exceed the cap of " +
                        std::to_string(cap));
  }
  return count;
}

TreeEdge generator_endpoints(const MealyAutomaton& automaton, StateId q) {
  for (Letter x = 1; x <= automaton.alphabet_size(); ++x) {
    const Letter y = automaton.output(q, x);
    if (automaton.restriction(q, x) == q && y != x) return {x, y};
  }
  return {0, 0};
}

}  // namespace

std::uint64_t default_vertex_cap() {
  if (const char* env = std::getenv(kVertexCapEnv)) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultVertexCap;
}

SchreierMultigraph::SchreierMultigraph(std::uint32_t k, std::uint32_t n,
                                       std::vector<TreeEdge> generators, Multigraph graph)
    : k_(k), n_(n), generators_(std::move(generators)), graph_(std::move(graph)) {
  if (n_ == 0) throw InvalidLevel("level must be at least 1");
  if (graph_.vertex_count() != checked_power(k_, n_, UINT64_MAX)) {
    throw MalformedInput("vertex count is not k^n");
  }
}

Word SchreierMultigraph::word(VertexId v) const {
  Word w;
  w.letters.resize(n_);
  for (std::uint32_t pos = n_; pos-- > 0;) {
    w.letters[pos] = v % k_ + 1;
    v /= k_;
  }
  return w;
}

VertexId SchreierMultigraph::vertex(const Word& word) const {
  if (word.size() != n_) throw MalformedInput("word length differs from the level");
  std::uint64_t index = 0;
  for (Letter x : word.letters) {
    if (x < 1 || x > k_) throw MalformedInput("letter outside the alphabet");
    index = index * k_ + (x - 1);
  }
  return static_cast<VertexId>(index);
}

bool operator==(const SchreierMultigraph& a, const SchreierMultigraph& b) {
  return a.k_ == b.k_ && a.n_ == b.n_ && a.generators_ == b.generators_ &&
         a.graph_.vertex_count() == b.graph_.vertex_count() &&
         a.graph_.edges() == b.graph_.edges();
}

SchreierMultigraph build_schreier(const MealyAutomaton& automaton, std::uint32_t n,
                                  std::uint64_t max_vertices) {
  if (n == 0) throw InvalidLevel("level must be at least 1");
  const std::uint32_t k = automaton.alphabet_size();
  const std::uint64_t count = checked_power(k, n, max_vertices);
  const auto& gens = automaton.generators();
  std::vector<TreeEdge> endpoints;
  for (StateId q : gens) endpoints.push_back(generator_endpoints(automaton, q));

  std::vector<MultiEdge> edges;
  edges.reserve(gens.size() * count);
  std::vector<Letter> letters(n);
  for (std::uint32_t label = 0; label < gens.size(); ++label) {
    std::fill(letters.begin(), letters.end(), 1);
    for (std::uint64_t u = 0; u < count; ++u) {
      std::vector<Letter> image = letters;
      apply_state_in_place(automaton, gens[label], image);
      std::uint64_t v = 0;
      for (Letter x : image) v = v * k + (x - 1);
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), label});
      // Advance the odometer: last position varies fastest.
      for (std::uint32_t pos = n; pos-- > 0;) {
        if (letters[pos] < k) {
          ++letters[pos];
          break;
        }
        letters[pos] = 1;
      }
    }
  }
  return SchreierMultigraph(k, n, std::move(endpoints),
                            Multigraph(static_cast<std::size_t>(count), std::move(edges)));
}

SchreierMultigraph build_schreier(const OrientedTree& tree, std::uint32_t n,
                                  std::uint64_t max_vertices) {
  return build_schreier(build_automaton(tree), n, max_vertices);
}

std::vector<ECycle> e_cycle_decomposition(const SchreierMultigraph& schreier) {
  const std::size_t count = schreier.vertex_count();
  const std::uint32_t n = schreier.level();
  const auto& gens = schreier.generators();
  const auto& edges = schreier.graph().edges();

  // image[label][u] and the edge realizing it.
  std::vector<std::vector<VertexId>> image(gens.size(), std::vector<VertexId>(count));
  std::vector<std::vector<EdgeId>> edge_of(gens.size(), std::vector<EdgeId>(count, SIZE_MAX));
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const auto& e = edges[id];
    if (e.label >= gens.size() || edge_of[e.label][e.u] != SIZE_MAX) {
      throw MalformedInput("not one edge per (generator, vertex) pair");
    }
    image[e.label][e.u] = e.v;
    edge_of[e.label][e.u] = id;
  }

  std::vector<ECycle> cycles;
  std::vector<bool> visited(count);
  for (std::uint32_t label = 0; label < gens.size(); ++label) {
    const auto [s, t] = gens[label];
    if (s == 0) throw MalformedInput("generator " + std::to_string(label) + " is not an edge state");
    std::fill(visited.begin(), visited.end(), false);
    for (VertexId u = 0; u < count; ++u) {
      if (visited[u]) continue;
      Word w = schreier.word(u);
      std::uint32_t i = 0;
      while (i < n && (w[i] == s || w[i] == t)) ++i;
      ECycle cycle;
      cycle.label = label;
      cycle.prefix_length = i;
      cycle.suffix.letters.assign(w.letters.begin() + i, w.letters.end());
      std::fill(w.letters.begin(), w.letters.begin() + i, s);
      const VertexId start = schreier.vertex(w);
      VertexId v = start;
      do {
        if (visited[v]) throw MalformedInput("generator orbits overlap");
        visited[v] = true;
        cycle.vertices.push_back(v);
        cycle.edges.push_back(edge_of[label][v]);
        v = image[label][v];
      } while (v != start);
      if (cycle.vertices.size() != (std::size_t{1} << i)) {
        throw MalformedInput("orbit of length " + std::to_string(cycle.vertices.size()) +
                             " where 2^" + std::to_string(i) + " was expected");
      }
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

CycleCensus cycle_census(const SchreierMultigraph& schreier, const std::vector<ECycle>& cycles) {
  CycleCensus census;
  for (std::uint32_t label = 0; label < schreier.generators().size(); ++label) {
    for (std::uint32_t i = 0; i <= schreier.level(); ++i) census[{label, i}] = 0;
  }
  for (const auto& c : cycles) ++census[{c.label, c.prefix_length}];
  return census;
}

CycleCensus cycle_census(const SchreierMultigraph& schreier) {
  return cycle_census(schreier, e_cycle_decomposition(schreier));
}

std::pair<EdgeId, EdgeId> special_edges(const ECycle& cycle) {
  if (cycle.prefix_length == 0) throw LoopHasNoSpecialEdges("a loop has no special edges");
  // vertices[0] = s^i w and vertices[1] = t^i w; the opposite edge leaves
  // s^(i-1) t w, which sits half way round the orbit.
  return {cycle.edges[0], cycle.edges[cycle.length() / 2]};
}

std::string export_dot(const SchreierMultigraph& schreier) {
  std::ostringstream out;
  out << "graph schreier {\n";
  for (VertexId v = 0; v < schreier.vertex_count(); ++v) {
    out << "  \"" << schreier.vertex_name(v) << "\";\n";
  }
  for (const auto& e : schreier.graph().edges()) {
    const auto& [s, t] = schreier.generators()[e.label];
    out << "  \"" << schreier.vertex_name(e.u) << "\" -- \"" << schreier.vertex_name(e.v)
        << "\" [label=\"(" << s << "," << t << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const SchreierMultigraph& schreier) {
  nlohmann::ordered_json doc;
  doc["k"] = schreier.alphabet_size();
  doc["n"] = schreier.level();
  auto gens = nlohmann::json::array();
  for (const auto& [s, t] : schreier.generators()) gens.push_back({s, t});
  doc["generators"] = gens;
  auto vertices = nlohmann::json::array();
  for (VertexId v = 0; v < schreier.vertex_count(); ++v) vertices.push_back(schreier.vertex_name(v));
  doc["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (const auto& e : schreier.graph().edges()) {
    edges.push_back({schreier.vertex_name(e.u), schreier.vertex_name(e.v), e.label});
  }
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

SchreierMultigraph import_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto k = doc.at("k").get<std::uint32_t>();
    const auto n = doc.at("n").get<std::uint32_t>();
    std::vector<TreeEdge> gens;
    if (doc.contains("generators")) {
      for (const auto& g : doc.at("generators")) {
        gens.push_back({g.at(0).get<Vertex>(), g.at(1).get<Vertex>()});
      }
    }
    const auto& names = doc.at("vertices");
    std::map<std::string, VertexId> index;
    for (const auto& name : names) {
      const auto key = name.get<std::string>();
      index.emplace(key, static_cast<VertexId>(index.size()));
    }
    std::vector<MultiEdge> edges;
    for (const auto& e : doc.at("edges")) {
      const auto label = e.at(2).get<std::uint32_t>();
      if (doc.contains("generators") && label >= gens.size()) {
        throw MalformedInput("edge label without generator");
      }
      edges.push_back({index.at(e.at(0).get<std::string>()), index.at(e.at(1).get<std::string>()),
                       label});
    }
    SchreierMultigraph result(k, n, std::move(gens), Multigraph(index.size(), std::move(edges)));
    for (const auto& [name, v] : index) {
      if (result.vertex_name(v) != name) throw MalformedInput("vertices not in lexicographic order");
    }
    return result;
  } catch (const nlohmann::json::exception& ex) {
    throw MalformedInput(std::string("bad Schreier JSON: ") + ex.what());
  } catch (const std::out_of_range&) {
    throw MalformedInput("bad Schreier JSON: edge names an unknown vertex");
  }
}

}  // namespace tga

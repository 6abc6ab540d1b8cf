#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/scalar.hpp"

namespace lpa {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// A letter of the double graph E_d: a vertex, a real edge e, or its ghost e*.
///
/// Letters order as vertex < real < ghost, then by id. Graph ids follow the
/// lexicographic order of names, so this is also the display order.
struct Letter {
  enum class Kind : std::uint8_t { vertex = 0, real = 1, ghost = 2 };

  Kind kind = Kind::vertex;
  std::uint32_t id = 0;

  static Letter vertex(VertexId v) { return {Kind::vertex, v}; }
  static Letter real(EdgeId e) { return {Kind::real, e}; }
  static Letter ghost(EdgeId e) { return {Kind::ghost, e}; }

  bool is_vertex() const { return kind == Kind::vertex; }
  bool is_real() const { return kind == Kind::real; }
  bool is_ghost() const { return kind == Kind::ghost; }
  bool is_edge() const { return kind != Kind::vertex; }

  /// e <-> e*. Undefined for vertex letters.
  Letter star() const { return {kind == Kind::real ? Kind::ghost : Kind::real, id}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct EdgeRecord {
  std::string name;
  VertexId source = 0;
  VertexId range = 0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Line-oriented description of a graph as read from a spec file.
struct GraphSpec {
  struct Edge {
    std::string name;
    std::string source;
    std::string range;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<std::pair<std::string, std::string>> specials;  // vertex -> edge
};

/// Parses the `vertex` / `edge` / `special` line format; `#` starts a comment.
GraphSpec parse_graph_spec(std::string_view text);

/// Finite directed graph with named vertices and edges.
///
/// Vertex and edge ids are assigned in lexicographic order of the names.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws Error on duplicate names or dangling endpoints.
  Graph(std::vector<std::string> vertex_names, std::vector<GraphSpec::Edge> edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertex_names_.empty(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const EdgeRecord& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// s^{-1}(v), sorted by edge id.
  std::span<const EdgeId> emitted(VertexId v) const { return out_.at(v); }
  /// r^{-1}(v), sorted by edge id.
  std::span<const EdgeId> received(VertexId v) const { return in_.at(v); }

  bool is_sink(VertexId v) const { return out_.at(v).empty(); }
  bool is_source(VertexId v) const { return in_.at(v).empty(); }
  /// Regular = neither a sink nor an infinite emitter; every finite graph is row-finite.
  bool is_regular(VertexId v) const { return !is_sink(v); }
  std::vector<VertexId> sinks() const;
  std::vector<VertexId> regular_vertices() const;

  // Letters of the double graph.
  VertexId source(Letter x) const;
  VertexId range(Letter x) const;
  std::string letter_name(Letter x) const;
  /// Parses "v", "e" or "e*". Throws Error for unknown names.
  Letter parse_letter(std::string_view token) const;
  /// s_d^{-1}(v) in letter order: emitted real edges, then ghosts of received edges.
  std::vector<Letter> double_emissions(VertexId v) const;
  /// All edge letters of E_d in letter order.
  std::vector<Letter> edge_letters() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_names_ == b.vertex_names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<EdgeRecord> edges_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, EdgeId, std::less<>> edge_index_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// Validated graph from a spec. On top of the Graph constructor checks, names
/// must be nonempty and free of the path-syntax characters ". * ( ) : ^ #"
/// and whitespace.
Graph build_graph(const GraphSpec& spec);

/// Writer counterpart of parse_graph_spec. Output is canonical: vertices and
/// edges in id order, followed by the special choices.
std::string write_graph_spec(const Graph& g, const std::vector<std::pair<std::string, std::string>>& specials = {});

/// E_d as a plain graph: edges named e and e*.
Graph double_graph(const Graph& g);
/// E_d with the real edges removed.
Graph inverse_graph(const Graph& g);
/// Components of the underlying undirected graph, ordered by smallest vertex id.
std::vector<Graph> connected_components(const Graph& g);

/// Choice of a special edge e^v for every regular vertex v.
class SpecialEdgeChoice {
 public:
  SpecialEdgeChoice() = default;

  bool is_special(EdgeId e) const;
  std::optional<EdgeId> at(VertexId v) const;
  /// Edge ids of all special edges, ascending.
  std::vector<EdgeId> special_edges() const;
  /// (vertex name, edge name) pairs for the spec writer.
  std::vector<std::pair<std::string, std::string>> named(const Graph& g) const;

  friend bool operator==(const SpecialEdgeChoice&, const SpecialEdgeChoice&) = default;

 private:
  friend SpecialEdgeChoice choose_special(const Graph&, const std::map<std::string, std::string>&);
  std::vector<std::optional<EdgeId>> chosen_;
  std::vector<bool> special_;
};

/// Completes a partial choice (vertex name -> edge name). Unspecified regular
/// vertices get their lexicographically smallest emitted edge.
SpecialEdgeChoice choose_special(const Graph& g, const std::map<std::string, std::string>& choice);

/// A word over the double graph: one vertex letter, or >= 1 composable edge letters.
///
/// Paths order by (length, letters), which is the enumeration order used
/// for basis paths.
struct Path {
  std::vector<Letter> letters;

  Path() = default;
  explicit Path(std::vector<Letter> ls) : letters(std::move(ls)) {}
  static Path vertex(VertexId v) { return Path({Letter::vertex(v)}); }

  bool is_vertex() const { return letters.size() == 1 && letters.front().is_vertex(); }
  /// |p|: 0 for a vertex path.
  std::size_t length() const { return is_vertex() ? 0 : letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend bool operator<(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters < b.letters;
  }
};

/// True iff p is a well-formed path of E_d (consecutive letters compose).
bool is_path(const Graph& g, const Path& p);
VertexId path_source(const Graph& g, const Path& p);
VertexId path_range(const Graph& g, const Path& p);
/// Concatenation of two paths; vertex paths act as identities. No composability check.
Path concat(const Path& a, const Path& b);

/// Dot-separated letters, ghost letters with a trailing '*': "d.e*".
std::string format_path(const Graph& g, const Path& p);
/// Inverse of format_path. Throws Error if a token is unknown or the word
/// does not compose.
Path parse_path(const Graph& g, std::string_view text);
/// Like parse_path but without the composability check (arbitrary generator words).
std::vector<Letter> parse_word(const Graph& g, std::string_view text);

}  // namespace lpa

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lpa/ambient.hpp"

namespace lpa {

using Point = std::uint32_t;

/// Index of an edge letter in per-letter tables: 2*id for e, 2*id+1 for e*.
inline std::size_t letter_slot(Letter x) { return 2 * std::size_t{x.id} + (x.is_ghost() ? 1 : 0); }
inline Letter slot_letter(std::size_t slot) {
  auto id = static_cast<EdgeId>(slot / 2);
  return slot % 2 ? Letter::ghost(id) : Letter::real(id);
}

struct Violation {
  std::string clause;
  std::string witness;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string clause, std::string witness, std::string message) {
    violations.push_back({std::move(clause), std::move(witness), std::move(message)});
  }
  std::string summary() const;
};

/// Extended algebraic branching system with a finite carrier.
///
/// Tables are dense: vertex_parts has one entry per vertex of E, letter_parts
/// and rho one entry per edge letter (see letter_slot). Empty sets and maps
/// stand for Y_i = {} and the empty bijection.
struct ExtBranchingSystem {
  AmbientPtr ambient;
  std::vector<std::string> points;
  std::vector<std::set<Point>> vertex_parts;
  std::vector<std::set<Point>> letter_parts;
  std::vector<std::map<Point, Point>> rho;

  /// All parts empty, tables sized for the ambient graph.
  static ExtBranchingSystem blank(AmbientPtr ambient, std::vector<std::string> points = {});

  std::set<Point>& Y(Letter x) { return letter_parts.at(letter_slot(x)); }
  const std::set<Point>& Y(Letter x) const { return letter_parts.at(letter_slot(x)); }
  std::map<Point, Point>& rho_of(Letter x) { return rho.at(letter_slot(x)); }
  const std::map<Point, Point>& rho_of(Letter x) const { return rho.at(letter_slot(x)); }
  /// The v with p in X_v, if any.
  std::optional<VertexId> part_of(Point p) const;

  friend bool operator==(const ExtBranchingSystem& a, const ExtBranchingSystem& b);
};

/// Usual (non-extended) branching system: only ghost parts and ghost maps.
struct UsualBranchingSystem {
  AmbientPtr ambient;
  std::vector<std::string> points;
  std::vector<std::set<Point>> vertex_parts;
  std::vector<std::set<Point>> ghost_parts;    // Y_{e*}, indexed by edge id
  std::vector<std::map<Point, Point>> rho;     // rho_{e*}, indexed by edge id

  static UsualBranchingSystem blank(AmbientPtr ambient, std::vector<std::string> points = {});
};

ValidationReport validate_eabs(const ExtBranchingSystem& s);
ValidationReport validate_usual(const UsualBranchingSystem& s);
/// Y_e = {} and rho_e = {} for every real edge. Throws if s is invalid.
ExtBranchingSystem embed_usual(const UsualBranchingSystem& s);

struct RepEdge {
  std::string name;
  std::uint32_t source = 0;
  std::uint32_t range = 0;
  Letter label;
};

/// Extended representation graph (F, phi), possibly a truncation of an
/// infinite one. Frontier vertices are where the truncation cut the graph:
/// their emissions may be incomplete and they may be missing their
/// incoming edge.
///
/// Vertices and edges keep insertion order, which is also output order.
class ExtRepGraph {
 public:
  explicit ExtRepGraph(AmbientPtr ambient) : ambient_(std::move(ambient)) {}

  const AmbientPtr& ambient() const { return ambient_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& vertex_name(std::uint32_t w) const { return names_.at(w); }
  VertexId vertex_label(std::uint32_t w) const { return labels_.at(w); }
  const RepEdge& edge(std::uint32_t f) const { return edges_.at(f); }
  const std::vector<RepEdge>& edges() const { return edges_; }
  std::optional<std::uint32_t> find_vertex(std::string_view name) const;

  std::span<const std::uint32_t> out_edges(std::uint32_t w) const { return out_.at(w); }
  std::span<const std::uint32_t> in_edges(std::uint32_t w) const { return in_.at(w); }
  /// The unique incoming edge f_w, if any (the first one if clause (i) fails).
  std::optional<std::uint32_t> incoming(std::uint32_t w) const;
  /// First emitted edge with the given label.
  std::optional<std::uint32_t> out_edge(std::uint32_t w, Letter label) const;

  bool is_frontier(std::uint32_t w) const { return frontier_.count(w) != 0; }
  const std::set<std::uint32_t>& frontier() const { return frontier_; }

 private:
  friend class ErgBuilder;
  AmbientPtr ambient_;
  std::vector<std::string> names_;
  std::vector<VertexId> labels_;
  std::vector<RepEdge> edges_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::map<std::string, std::uint32_t, std::less<>> index_;
  std::set<std::uint32_t> frontier_;
};

class ErgBuilder {
 public:
  explicit ErgBuilder(AmbientPtr ambient) : g_(std::move(ambient)) {}

  /// Throws Error on a duplicate name or an unknown label.
  std::uint32_t add_vertex(std::string name, VertexId label);
  std::uint32_t add_edge(std::string name, std::uint32_t source, std::uint32_t range, Letter label);
  void mark_frontier(std::uint32_t w);
  std::size_t vertex_count() const { return g_.vertex_count(); }

  ExtRepGraph build() && { return std::move(g_); }

 private:
  ExtRepGraph g_;
  std::set<std::string> edge_names_;
};

/// The label set a complete vertex over v must emit, given the label of its
/// incoming edge (nullopt for a source), in letter order.
std::vector<Letter> expected_emissions(const Ambient& amb, VertexId v, std::optional<Letter> incoming);

/// Checks phi is a homomorphism and the vertex conditions. Frontier vertices
/// are only checked for (i) and for emitting a subset of the allowed labels.
ValidationReport validate_erg(const ExtRepGraph& r);

ExtRepGraph eta(const ExtBranchingSystem& s);
/// Throws for truncated input (nonempty frontier) or an invalid graph.
ExtBranchingSystem theta(const ExtRepGraph& r);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<std::uint32_t>> erg_components(const ExtRepGraph& r);
/// Induced sub-ERG on the given vertices (names and order kept).
ExtRepGraph erg_restrict(const ExtRepGraph& r, const std::vector<std::uint32_t>& vertices);

/// A label-preserving isomorphism a -> b as a vertex map, if one exists.
/// Frontier sets must correspond as well. Intended for graphs satisfying
/// clause (i) with injective emission labels.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const ExtRepGraph& a, const ExtRepGraph& b);

}  // namespace lpa

#include "lpa/branching.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace lpa {

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) out << v.clause << " at " << v.witness << ": " << v.message << '\n';
  return out.str();
}

ExtBranchingSystem ExtBranchingSystem::blank(AmbientPtr ambient, std::vector<std::string> points) {
  ExtBranchingSystem s;
  s.vertex_parts.resize(ambient->graph.vertex_count());
  s.letter_parts.resize(2 * ambient->graph.edge_count());
  s.rho.resize(2 * ambient->graph.edge_count());
  s.ambient = std::move(ambient);
  s.points = std::move(points);
  return s;
}

std::optional<VertexId> ExtBranchingSystem::part_of(Point p) const {
  for (VertexId v = 0; v < vertex_parts.size(); ++v) {
    if (vertex_parts[v].count(p)) return v;
  }
  return std::nullopt;
}

bool operator==(const ExtBranchingSystem& a, const ExtBranchingSystem& b) {
  return same_ambient(a.ambient, b.ambient) && a.points == b.points && a.vertex_parts == b.vertex_parts &&
         a.letter_parts == b.letter_parts && a.rho == b.rho;
}

UsualBranchingSystem UsualBranchingSystem::blank(AmbientPtr ambient, std::vector<std::string> points) {
  UsualBranchingSystem s;
  s.vertex_parts.resize(ambient->graph.vertex_count());
  s.ghost_parts.resize(ambient->graph.edge_count());
  s.rho.resize(ambient->graph.edge_count());
  s.ambient = std::move(ambient);
  s.points = std::move(points);
  return s;
}

namespace {

std::string point_name(const std::vector<std::string>& points, Point p) {
  return p < points.size() ? points[p] : "#" + std::to_string(p);
}

// Checks that m is a bijection dom -> cod.
void check_bijection(ValidationReport& rep, const std::string& clause, const std::string& what,
                     const std::vector<std::string>& points, const std::map<Point, Point>& m,
                     const std::set<Point>& dom, const std::set<Point>& cod) {
  for (Point p : dom) {
    if (!m.count(p)) rep.add(clause, point_name(points, p), what + " is undefined on its domain");
  }
  std::set<Point> image;
  for (const auto& [p, q] : m) {
    if (!dom.count(p)) rep.add(clause, point_name(points, p), what + " is defined outside its domain");
    if (!cod.count(q)) rep.add(clause, point_name(points, q), what + " maps outside its codomain");
    if (!image.insert(q).second) rep.add(clause, point_name(points, q), what + " is not injective");
  }
  for (Point q : cod) {
    if (!image.count(q)) rep.add(clause, point_name(points, q), what + " is not surjective");
  }
}

void check_partition(ValidationReport& rep, const std::vector<std::string>& points,
                     const std::vector<std::set<Point>>& parts, const Graph& g) {
  std::map<Point, VertexId> owner;
  for (VertexId v = 0; v < parts.size(); ++v) {
    for (Point p : parts[v]) {
      if (p >= points.size()) {
        rep.add("structure", point_name(points, p), "point is not in the carrier");
        continue;
      }
      auto [it, fresh] = owner.emplace(p, v);
      if (!fresh) {
        rep.add("X_v disjoint", points[p],
                "point lies in X_" + g.vertex_name(it->second) + " and X_" + g.vertex_name(v));
      }
    }
  }
  for (Point p = 0; p < points.size(); ++p) {
    if (!owner.count(p)) rep.add("saturated", points[p], "point lies in no X_v");
  }
}

}  // namespace

ValidationReport validate_eabs(const ExtBranchingSystem& s) {
  ValidationReport rep;
  const Graph& g = s.ambient->graph;
  const auto& sp = s.ambient->special;
  if (s.vertex_parts.size() != g.vertex_count() || s.letter_parts.size() != 2 * g.edge_count() ||
      s.rho.size() != 2 * g.edge_count()) {
    rep.add("structure", "-", "tables are not sized for the ambient graph");
    return rep;
  }
  check_partition(rep, s.points, s.vertex_parts, g);

  std::map<Point, Letter> y_owner;
  for (std::size_t slot = 0; slot < s.letter_parts.size(); ++slot) {
    Letter x = slot_letter(slot);
    VertexId home = x.is_real() ? g.edge(x.id).range : g.edge(x.id).source;
    for (Point p : s.letter_parts[slot]) {
      auto [it, fresh] = y_owner.emplace(p, x);
      if (!fresh) {
        rep.add("Y disjoint", point_name(s.points, p),
                "point lies in Y_" + g.letter_name(it->second) + " and Y_" + g.letter_name(x));
      }
      if (!s.vertex_parts[home].count(p)) {
        rep.add(x.is_real() ? "Y_e in X_r(e)" : "Y_e* in X_s(e)", point_name(s.points, p),
                "Y_" + g.letter_name(x) + " is not contained in X_" + g.vertex_name(home));
      }
    }
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& rec = g.edge(e);
    std::set<Point> dom = s.vertex_parts[rec.source];
    for (EdgeId f : g.emitted(rec.source)) {
      for (Point p : s.Y(Letter::ghost(f))) dom.erase(p);
    }
    check_bijection(rep, "(i)", "rho_" + rec.name, s.points, s.rho_of(Letter::real(e)), dom, s.Y(Letter::real(e)));

    std::set<Point> gdom = s.vertex_parts[rec.range];
    if (sp.is_special(e)) {
      for (Point p : s.Y(Letter::real(e))) gdom.erase(p);
    }
    check_bijection(rep, sp.is_special(e) ? "(iii)" : "(ii)", "rho_" + rec.name + "*", s.points,
                    s.rho_of(Letter::ghost(e)), gdom, s.Y(Letter::ghost(e)));
  }
  return rep;
}

ValidationReport validate_usual(const UsualBranchingSystem& s) {
  ValidationReport rep;
  const Graph& g = s.ambient->graph;
  if (s.vertex_parts.size() != g.vertex_count() || s.ghost_parts.size() != g.edge_count() ||
      s.rho.size() != g.edge_count()) {
    rep.add("structure", "-", "tables are not sized for the ambient graph");
    return rep;
  }
  check_partition(rep, s.points, s.vertex_parts, g);
  std::map<Point, EdgeId> y_owner;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (Point p : s.ghost_parts[e]) {
      auto [it, fresh] = y_owner.emplace(p, e);
      if (!fresh) rep.add("Y disjoint", point_name(s.points, p), "point lies in two ghost parts");
    }
  }
  for (VertexId v : g.regular_vertices()) {
    std::set<Point> un;
    for (EdgeId e : g.emitted(v)) un.insert(s.ghost_parts[e].begin(), s.ghost_parts[e].end());
    if (un != s.vertex_parts[v]) {
      rep.add("X_v = union Y_e*", g.vertex_name(v), "X_v differs from the union of Y_e* over s^-1(v)");
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    check_bijection(rep, "rho_e*", "rho_" + g.edge(e).name + "*", s.points, s.rho[e],
                    s.vertex_parts[g.edge(e).range], s.ghost_parts[e]);
  }
  return rep;
}

ExtBranchingSystem embed_usual(const UsualBranchingSystem& s) {
  auto rep = validate_usual(s);
  if (!rep.ok()) throw Error("invalid usual branching system: " + rep.summary());
  auto out = ExtBranchingSystem::blank(s.ambient, s.points);
  out.vertex_parts = s.vertex_parts;
  for (EdgeId e = 0; e < s.ghost_parts.size(); ++e) {
    out.Y(Letter::ghost(e)) = s.ghost_parts[e];
    out.rho_of(Letter::ghost(e)) = s.rho[e];
  }
  return out;
}

std::optional<std::uint32_t> ExtRepGraph::find_vertex(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> ExtRepGraph::incoming(std::uint32_t w) const {
  if (in_.at(w).empty()) return std::nullopt;
  return in_[w].front();
}

std::optional<std::uint32_t> ExtRepGraph::out_edge(std::uint32_t w, Letter label) const {
  for (auto f : out_.at(w)) {
    if (edges_[f].label == label) return f;
  }
  return std::nullopt;
}

std::uint32_t ErgBuilder::add_vertex(std::string name, VertexId label) {
  if (label >= g_.ambient_->graph.vertex_count()) throw Error("vertex label out of range for '" + name + "'");
  if (g_.index_.count(name)) throw Error("duplicate vertex name '" + name + "'");
  auto id = static_cast<std::uint32_t>(g_.names_.size());
  g_.index_.emplace(name, id);
  g_.names_.push_back(std::move(name));
  g_.labels_.push_back(label);
  g_.out_.emplace_back();
  g_.in_.emplace_back();
  return id;
}

std::uint32_t ErgBuilder::add_edge(std::string name, std::uint32_t source, std::uint32_t range, Letter label) {
  if (source >= g_.names_.size() || range >= g_.names_.size()) {
    throw Error("edge '" + name + "' has a dangling endpoint");
  }
  if (!label.is_edge() || label.id >= g_.ambient_->graph.edge_count()) {
    throw Error("edge '" + name + "' must be labeled by an edge letter");
  }
  if (!edge_names_.insert(name).second) throw Error("duplicate edge name '" + name + "'");
  auto id = static_cast<std::uint32_t>(g_.edges_.size());
  g_.edges_.push_back({std::move(name), source, range, label});
  g_.out_[source].push_back(id);
  g_.in_[range].push_back(id);
  return id;
}

void ErgBuilder::mark_frontier(std::uint32_t w) {
  if (w >= g_.names_.size()) throw Error("frontier vertex out of range");
  g_.frontier_.insert(w);
}

std::vector<Letter> expected_emissions(const Ambient& amb, VertexId v, std::optional<Letter> incoming) {
  auto all = amb.graph.double_emissions(v);
  if (!incoming) return all;
  std::vector<Letter> out;
  for (Letter x : all) {
    if (incoming->is_ghost() && !x.is_ghost()) continue;
    if (incoming->is_real() && amb.special.is_special(incoming->id) && x == incoming->star()) continue;
    out.push_back(x);
  }
  return out;
}

ValidationReport validate_erg(const ExtRepGraph& r) {
  ValidationReport rep;
  const Ambient& amb = *r.ambient();
  const Graph& g = amb.graph;
  for (const auto& f : r.edges()) {
    if (g.source(f.label) != r.vertex_label(f.source) || g.range(f.label) != r.vertex_label(f.range)) {
      rep.add("hom", f.name, "label " + g.letter_name(f.label) + " does not match the endpoint labels");
    }
  }
  for (std::uint32_t w = 0; w < r.vertex_count(); ++w) {
    const auto& name = r.vertex_name(w);
    if (r.in_edges(w).size() > 1) {
      rep.add("(i)", name, "vertex receives " + std::to_string(r.in_edges(w).size()) + " edges");
    }
    std::optional<Letter> in_label;
    if (auto f = r.incoming(w)) in_label = r.edge(*f).label;
    auto expected = expected_emissions(amb, r.vertex_label(w), in_label);
    std::vector<Letter> seen;
    for (auto f : r.out_edges(w)) seen.push_back(r.edge(f).label);
    std::sort(seen.begin(), seen.end());
    std::string clause = !in_label || (in_label->is_real() && !amb.special.is_special(in_label->id)) ? "(ii)"
                         : in_label->is_real()                                                      ? "(iii)"
                                                                                                    : "(iv)";
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      rep.add(clause, name, "two emitted edges share a label");
    }
    bool unknown_parent = r.is_frontier(w) && !in_label;
    for (Letter x : seen) {
      if (!unknown_parent && !std::binary_search(expected.begin(), expected.end(), x)) {
        rep.add(r.is_frontier(w) ? "frontier" : clause, name, "emits a forbidden label " + g.letter_name(x));
      }
    }
    if (!r.is_frontier(w)) {
      for (Letter x : expected) {
        if (!std::binary_search(seen.begin(), seen.end(), x)) {
          rep.add(clause, name, "does not emit an edge labeled " + g.letter_name(x));
        }
      }
    }
  }
  return rep;
}

ExtRepGraph eta(const ExtBranchingSystem& s) {
  auto rep = validate_eabs(s);
  if (!rep.ok()) throw Error("eta needs a valid branching system: " + rep.summary());
  ErgBuilder b(s.ambient);
  for (Point p = 0; p < s.points.size(); ++p) b.add_vertex(s.points[p], *s.part_of(p));
  // Edges in point order: f_x for each x in some Y_i.
  std::map<Point, std::pair<Point, Letter>> into;
  for (std::size_t slot = 0; slot < s.rho.size(); ++slot) {
    for (const auto& [src, dst] : s.rho[slot]) into[dst] = {src, slot_letter(slot)};
  }
  for (const auto& [dst, info] : into) b.add_edge("f_" + s.points[dst], info.first, dst, info.second);
  return std::move(b).build();
}

ExtBranchingSystem theta(const ExtRepGraph& r) {
  if (!r.frontier().empty()) throw Error("theta is undefined on a truncated representation graph");
  auto rep = validate_erg(r);
  if (!rep.ok()) throw Error("theta needs a valid representation graph: " + rep.summary());
  std::vector<std::string> names;
  for (std::uint32_t w = 0; w < r.vertex_count(); ++w) names.push_back(r.vertex_name(w));
  auto s = ExtBranchingSystem::blank(r.ambient(), std::move(names));
  for (std::uint32_t w = 0; w < r.vertex_count(); ++w) s.vertex_parts[r.vertex_label(w)].insert(w);
  for (const auto& f : r.edges()) {
    s.Y(f.label).insert(f.range);
    s.rho_of(f.label)[f.source] = f.range;
  }
  return s;
}

std::vector<std::vector<std::uint32_t>> erg_components(const ExtRepGraph& r) {
  std::vector<int> comp(r.vertex_count(), -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t start = 0; start < r.vertex_count(); ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<std::uint32_t> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      auto w = queue.front();
      queue.pop_front();
      out.back().push_back(w);
      auto visit = [&](std::uint32_t u) {
        if (comp[u] < 0) {
          comp[u] = id;
          queue.push_back(u);
        }
      };
      for (auto f : r.out_edges(w)) visit(r.edge(f).range);
      for (auto f : r.in_edges(w)) visit(r.edge(f).source);
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

ExtRepGraph erg_restrict(const ExtRepGraph& r, const std::vector<std::uint32_t>& vertices) {
  ErgBuilder b(r.ambient());
  std::map<std::uint32_t, std::uint32_t> remap;
  for (auto w : vertices) remap[w] = b.add_vertex(r.vertex_name(w), r.vertex_label(w));
  for (const auto& f : r.edges()) {
    auto s = remap.find(f.source);
    auto t = remap.find(f.range);
    if (s != remap.end() && t != remap.end()) b.add_edge(f.name, s->second, t->second, f.label);
  }
  for (auto w : vertices) {
    if (r.is_frontier(w)) b.mark_frontier(remap[w]);
  }
  return std::move(b).build();
}

namespace {

// Extends seed -> target along labeled edges. Succeeds iff this produces a
// label-preserving bijection between the two components.
bool propagate(const ExtRepGraph& a, const ExtRepGraph& b, std::uint32_t seed, std::uint32_t target,
               std::vector<std::int64_t>& fwd, std::vector<std::int64_t>& back, std::vector<std::uint32_t>& touched) {
  auto bind = [&](std::uint32_t u, std::uint32_t v, std::deque<std::uint32_t>& queue) {
    if (fwd[u] >= 0) return fwd[u] == static_cast<std::int64_t>(v);
    if (back[v] >= 0) return false;
    if (a.vertex_label(u) != b.vertex_label(v) || a.is_frontier(u) != b.is_frontier(v)) return false;
    if (a.out_edges(u).size() != b.out_edges(v).size() || a.in_edges(u).size() != b.in_edges(v).size()) return false;
    fwd[u] = v;
    back[v] = u;
    touched.push_back(u);
    queue.push_back(u);
    return true;
  };
  std::deque<std::uint32_t> queue;
  if (!bind(seed, target, queue)) return false;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    auto v = static_cast<std::uint32_t>(fwd[u]);
    for (auto f : a.out_edges(u)) {
      auto g = b.out_edge(v, a.edge(f).label);
      if (!g || !bind(a.edge(f).range, b.edge(*g).range, queue)) return false;
    }
    if (auto f = a.incoming(u)) {
      auto g = b.incoming(v);
      if (!g || b.edge(*g).label != a.edge(*f).label) return false;
      if (!bind(a.edge(*f).source, b.edge(*g).source, queue)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> find_isomorphism(const ExtRepGraph& a, const ExtRepGraph& b) {
  if (!same_ambient(a.ambient(), b.ambient())) return std::nullopt;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto ca = erg_components(a);
  auto cb = erg_components(b);
  if (ca.size() != cb.size()) return std::nullopt;
  std::vector<std::int64_t> fwd(a.vertex_count(), -1);
  std::vector<std::int64_t> back(b.vertex_count(), -1);
  std::vector<bool> used(cb.size(), false);
  for (const auto& comp : ca) {
    // Seed with a source if there is one: it has the fewest candidates.
    std::uint32_t seed = comp.front();
    for (auto w : comp) {
      if (a.in_edges(w).empty()) {
        seed = w;
        break;
      }
    }
    bool matched = false;
    for (std::size_t j = 0; j < cb.size() && !matched; ++j) {
      if (used[j] || cb[j].size() != comp.size()) continue;
      for (auto t : cb[j]) {
        std::vector<std::uint32_t> touched;
        if (propagate(a, b, seed, t, fwd, back, touched) && touched.size() == comp.size()) {
          used[j] = true;
          matched = true;
          break;
        }
        for (auto u : touched) {
          back[fwd[u]] = -1;
          fwd[u] = -1;
        }
      }
    }
    if (!matched) return std::nullopt;
  }
  std::vector<std::uint32_t> out(a.vertex_count());
  for (std::size_t u = 0; u < out.size(); ++u) out[u] = static_cast<std::uint32_t>(fwd[u]);
  return out;
}

}  // namespace lpa

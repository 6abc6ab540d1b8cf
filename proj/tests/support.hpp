#pragma once
// Fixtures and independent oracles shared by the unit tests and the
// acceptance runner. Nothing here calls the code paths it is used to check:
// the basis filter, the rewriting normal form and the usual-graph action are
// written from the definitions directly.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/branching.hpp"
#include "lpa/canonical.hpp"
#include "lpa/module.hpp"

namespace fixture {

using namespace lpa;

inline Graph graph_from(const std::string& text) { return build_graph(parse_graph_spec(text)); }

inline AmbientPtr ambient_from(const std::string& text, std::map<std::string, std::string> special = {},
                               Field field = Field::rational()) {
  return make_ambient(graph_from(text), special, field);
}

// One vertex v with loops d and e.
inline AmbientPtr r2(const std::string& special = "d", Field field = Field::rational()) {
  return ambient_from("vertex v\nedge d v v\nedge e v v\n", {{"v", special}}, field);
}

// Loops d, e at u and f: u -> v.
inline AmbientPtr ex53(const std::string& special = "d") {
  return ambient_from("vertex u\nvertex v\nedge d u u\nedge e u u\nedge f u v\n", {{"u", special}});
}

inline AmbientPtr one_loop() { return ambient_from("vertex v\nedge e v v\n"); }

// Loops c at u and c2 at v, joined by g: u -> v.
inline AmbientPtr two_loops() { return ambient_from("vertex u\nvertex v\nedge c u u\nedge c2 v v\nedge g u v\n"); }

inline Path path(const AmbientPtr& a, const std::string& text) { return parse_path(a->graph, text); }

// ---------------------------------------------------------------- basis oracle

inline VertexId src(const Graph& g, Letter x) {
  const auto& e = g.edges()[x.id];
  return x.is_real() ? e.source : e.range;
}
inline VertexId rng(const Graph& g, Letter x) {
  const auto& e = g.edges()[x.id];
  return x.is_real() ? e.range : e.source;
}

// Every word of edge letters up to max_len, kept when it composes in E_d,
// never has a ghost letter right before a real one, and never has e e* with
// e the special edge at s(e).
inline std::vector<Path> brute_force_basis(const AmbientPtr& a, std::size_t max_len) {
  const Graph& g = a->graph;
  std::vector<Letter> alphabet;
  for (EdgeId e = 0; e < g.edges().size(); ++e) alphabet.push_back(Letter::real(e));
  for (EdgeId e = 0; e < g.edges().size(); ++e) alphabet.push_back(Letter::ghost(e));
  std::vector<Path> out;
  for (VertexId v = 0; v < g.vertex_names().size(); ++v) out.push_back(Path::vertex(v));
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      std::vector<Letter> w;
      for (auto i : idx) w.push_back(alphabet[i]);
      bool ok = true;
      for (std::size_t i = 0; i + 1 < len && ok; ++i) {
        Letter x = w[i], y = w[i + 1];
        if (rng(g, x) != src(g, y)) ok = false;
        if (x.is_ghost() && y.is_real()) ok = false;
        if (x.is_real() && y.is_ghost() && x.id == y.id && a->special.at(g.edges()[x.id].source) == x.id) ok = false;
      }
      if (ok) out.push_back(Path(w));
      std::size_t k = 0;
      while (k < len && ++idx[k] == alphabet.size()) idx[k++] = 0;
      if (k == len) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------- rewriting normal form

using Word = std::vector<Letter>;
using Combination = std::map<Word, Scalar>;

// Normal form of a word of generators by rewriting with the defining
// relations, leftmost redex first:
//   u w -> delta_uw u, x v -> x (or 0), e* f -> delta_ef r(e),
//   e e* -> s(e) - sum_{f != e, s(f) = s(e)} f f*   for e special.
inline Combination naive_reduce(const AmbientPtr& a, const Word& word) {
  const Graph& g = a->graph;
  auto vsrc = [&](Letter x) { return x.is_vertex() ? x.id : src(g, x); };
  auto vrng = [&](Letter x) { return x.is_vertex() ? x.id : rng(g, x); };
  Combination todo{{word, Scalar(1)}};
  Combination done;
  while (!todo.empty()) {
    auto [w, k] = *todo.begin();
    todo.erase(todo.begin());
    auto push = [&](Combination& into, const Word& x, const Scalar& c) {
      auto& slot = into[x];
      slot += c;
      if (slot.is_zero()) into.erase(x);
    };
    bool zero = false;
    bool rewritten = false;
    for (std::size_t i = 0; i + 1 < w.size() && !rewritten && !zero; ++i) {
      Letter x = w[i], y = w[i + 1];
      if (vrng(x) != vsrc(y)) {
        zero = true;
      } else if (x.is_vertex() || y.is_vertex()) {
        Word n = w;
        n.erase(n.begin() + static_cast<std::ptrdiff_t>(x.is_vertex() ? i : i + 1));
        push(todo, n, k);
        rewritten = true;
      } else if (x.is_ghost() && y.is_real()) {
        if (x.id != y.id) {
          zero = true;
        } else {
          Word n(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
          n.push_back(Letter::vertex(g.edges()[x.id].range));
          n.insert(n.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
          push(todo, n, k);
          rewritten = true;
        }
      } else if (x.is_real() && y.is_ghost() && x.id == y.id) {
        VertexId v = g.edges()[x.id].source;
        if (a->special.at(v) == x.id) {
          Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
          Word tail(w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
          Word n = head;
          n.push_back(Letter::vertex(v));
          n.insert(n.end(), tail.begin(), tail.end());
          push(todo, n, k);
          for (EdgeId f = 0; f < g.edges().size(); ++f) {
            if (f == x.id || g.edges()[f].source != v) continue;
            Word m = head;
            m.push_back(Letter::real(f));
            m.push_back(Letter::ghost(f));
            m.insert(m.end(), tail.begin(), tail.end());
            push(todo, m, -k);
          }
          rewritten = true;
        }
      }
    }
    if (!zero && !rewritten) push(done, w, k);
  }
  return done;
}

inline bool matches(const AlgebraElement& x, const Combination& c) {
  if (x.terms().size() != c.size()) return false;
  for (const auto& [w, k] : c) {
    if (!(x.coefficient(Path(w)) == k)) return false;
  }
  return true;
}

// ------------------------------------------------------- usual-graph action

// sigma maps for a representation graph with ghost edges only, straight from
// the definition of the associated module.
inline ModuleVector usual_sigma(const ExtRepGraph& r, std::uint32_t w, Letter x) {
  ModuleVector out;
  if (x.is_vertex()) {
    if (r.vertex_label(w) == x.id) out.add(w, 1);
    return out;
  }
  if (x.is_real()) {
    for (const auto& f : r.edges()) {
      if (f.range == w && f.label == x.star()) out.add(f.source, 1);
    }
    return out;
  }
  for (const auto& f : r.edges()) {
    if (f.source == w && f.label == x) out.add(f.range, 1);
  }
  return out;
}

// ---------------------------------------------------- random finite systems

struct RandomInstance {
  AmbientPtr ambient;
  ExtRepGraph erg;                                  // disjoint union, shuffled names
  std::vector<CanonicalDescriptor> components;      // one per component, by first vertex
  ExtBranchingSystem system;                        // theta(erg)
};

// Random graph: a DAG on 2-4 vertices plus 0-1 isolated one-loop vertices.
inline AmbientPtr random_ambient(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(2, 4), coin(0, 1), pct(0, 99);
  int n = nv(rng);
  int loops = coin(rng);
  std::string text;
  for (int i = 0; i < n; ++i) text += "vertex a" + std::to_string(i) + "\n";
  int edges = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int mult = pct(rng) < 45 ? 1 : (pct(rng) < 15 ? 2 : 0);
      for (int k = 0; k < mult; ++k) {
        text += "edge g" + std::to_string(edges++) + " a" + std::to_string(i) + " a" + std::to_string(j) + "\n";
      }
    }
  }
  for (int i = 0; i < loops; ++i) text += "vertex z" + std::to_string(i) + "\nedge h" + std::to_string(i) + " z" +
                                          std::to_string(i) + " z" + std::to_string(i) + "\n";
  Graph g = graph_from(text);
  std::map<std::string, std::string> special;
  for (VertexId v : g.regular_vertices()) {
    auto out = g.emitted(v);
    std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
    special[g.vertex_name(v)] = g.edge(out[pick(rng)]).name;
  }
  return make_ambient(std::move(g), special);
}

// Finite canonical graphs available over the ambient: F_v on the DAG part,
// F_{h^k} (k <= 3) and F_{h*} on the loops.
inline std::vector<CanonicalDescriptor> finite_descriptors(const Ambient& amb) {
  const Graph& g = amb.graph;
  std::vector<CanonicalDescriptor> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool on_loop = false;
    for (EdgeId e : g.emitted(v)) on_loop = on_loop || g.edge(e).range == v;
    if (!on_loop) out.push_back(CanonicalDescriptor::source(v));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).source != g.edge(e).range) continue;
    Word power;
    for (std::size_t k = 1; k <= 3; ++k) {
      power.push_back(Letter::real(e));
      out.push_back(CanonicalDescriptor::of_cycle(Path(power)));
    }
    out.push_back(CanonicalDescriptor::of_cycle(Path({Letter::ghost(e)})));
  }
  return out;
}

// Disjoint union of 1-3 finite canonical components with at most max_points
// vertices in total; vertices are renamed p0, p1, ... in a random order.
inline RandomInstance random_instance(std::mt19937& rng, std::size_t max_points = 12) {
  while (true) {
    AmbientPtr amb = random_ambient(rng);
    auto pool = finite_descriptors(*amb);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), count(1, 3);
    std::size_t want = count(rng);
    std::vector<CanonicalErg> parts;
    std::vector<CanonicalDescriptor> descs;
    std::size_t total = 0;
    for (std::size_t i = 0; i < want; ++i) {
      auto d = pool[pick(rng)];
      auto c = build_canonical(amb, d, 2 * amb->graph.vertex_count() + 4);
      if (!c.erg.frontier().empty() || total + c.erg.vertex_count() > max_points) continue;
      total += c.erg.vertex_count();
      parts.push_back(std::move(c));
      descs.push_back(d);
    }
    if (parts.empty()) continue;

    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    // order[k] = new index of the k-th vertex in concatenated order.
    std::vector<std::pair<std::size_t, std::size_t>> slots(total);  // new index -> (part, vertex)
    std::size_t k = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (std::uint32_t w = 0; w < parts[p].erg.vertex_count(); ++w) slots[order[k++]] = {p, w};
    }
    std::vector<std::vector<std::uint32_t>> id(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) id[p].resize(parts[p].erg.vertex_count());
    ErgBuilder b(amb);
    for (std::size_t n = 0; n < total; ++n) {
      auto [p, w] = slots[n];
      id[p][w] = b.add_vertex("p" + std::to_string(n), parts[p].erg.vertex_label(w));
    }
    std::size_t edge_no = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (const auto& e : parts[p].erg.edges()) {
        b.add_edge("q" + std::to_string(edge_no++), id[p][e.source], id[p][e.range], e.label);
      }
    }
    RandomInstance inst{amb, std::move(b).build(), {}, ExtBranchingSystem{}};
    for (const auto& comp : erg_components(inst.erg)) {
      for (std::size_t p = 0; p < parts.size(); ++p) {
        if (std::find(id[p].begin(), id[p].end(), comp.front()) != id[p].end()) inst.components.push_back(descs[p]);
      }
    }
    inst.system = theta(inst.erg);
    return inst;
  }
}

}  // namespace fixture

#include "lpa/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lpa {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '.' || c == '*' || c == '(' || c == ')' || c == ':' || c == '^' || c == '#' ||
           c == '+' || c == ',' || std::isspace(static_cast<unsigned char>(c));
  });
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  GraphSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_tokens(line);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw Error("line " + std::to_string(lineno) + ": " + what);
    };
    if (toks[0] == "vertex") {
      if (toks.size() != 2) fail("expected 'vertex <name>'");
      spec.vertices.push_back(toks[1]);
    } else if (toks[0] == "edge") {
      if (toks.size() != 4) fail("expected 'edge <name> <src> <dst>'");
      spec.edges.push_back({toks[1], toks[2], toks[3]});
    } else if (toks[0] == "special") {
      if (toks.size() != 3) fail("expected 'special <vertex> <edge>'");
      spec.specials.emplace_back(toks[1], toks[2]);
    } else {
      fail("unknown directive '" + toks[0] + "'");
    }
  }
  return spec;
}

Graph::Graph(std::vector<std::string> vertex_names, std::vector<GraphSpec::Edge> edges) {
  std::sort(vertex_names.begin(), vertex_names.end());
  for (std::size_t i = 0; i < vertex_names.size(); ++i) {
    if (i > 0 && vertex_names[i] == vertex_names[i - 1]) {
      throw Error("duplicate vertex name '" + vertex_names[i] + "'");
    }
    vertex_index_.emplace(vertex_names[i], static_cast<VertexId>(i));
  }
  vertex_names_ = std::move(vertex_names);

  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  out_.resize(vertex_names_.size());
  in_.resize(vertex_names_.size());
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (i > 0 && e.name == edges[i - 1].name) throw Error("duplicate edge name '" + e.name + "'");
    if (vertex_index_.count(e.name)) throw Error("name '" + e.name + "' used for both a vertex and an edge");
    auto s = find_vertex(e.source);
    auto r = find_vertex(e.range);
    if (!s) throw Error("edge '" + e.name + "' has undeclared source '" + e.source + "'");
    if (!r) throw Error("edge '" + e.name + "' has undeclared range '" + e.range + "'");
    auto id = static_cast<EdgeId>(i);
    edges_.push_back({e.name, *s, *r});
    edge_index_.emplace(e.name, id);
    out_[*s].push_back(id);
    in_[*r].push_back(id);
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Graph::sinks() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (is_sink(v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> Graph::regular_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (is_regular(v)) out.push_back(v);
  }
  return out;
}

VertexId Graph::source(Letter x) const {
  switch (x.kind) {
    case Letter::Kind::vertex: return x.id;
    case Letter::Kind::real: return edges_.at(x.id).source;
    case Letter::Kind::ghost: return edges_.at(x.id).range;
  }
  return 0;
}

VertexId Graph::range(Letter x) const {
  switch (x.kind) {
    case Letter::Kind::vertex: return x.id;
    case Letter::Kind::real: return edges_.at(x.id).range;
    case Letter::Kind::ghost: return edges_.at(x.id).source;
  }
  return 0;
}

std::string Graph::letter_name(Letter x) const {
  switch (x.kind) {
    case Letter::Kind::vertex: return vertex_names_.at(x.id);
    case Letter::Kind::real: return edges_.at(x.id).name;
    case Letter::Kind::ghost: return edges_.at(x.id).name + "*";
  }
  return {};
}

Letter Graph::parse_letter(std::string_view token) const {
  if (!token.empty() && token.back() == '*') {
    auto e = find_edge(token.substr(0, token.size() - 1));
    if (!e) throw Error("unknown edge in ghost letter '" + std::string(token) + "'");
    return Letter::ghost(*e);
  }
  if (auto e = find_edge(token)) return Letter::real(*e);
  if (auto v = find_vertex(token)) return Letter::vertex(*v);
  throw Error("unknown letter '" + std::string(token) + "'");
}

std::vector<Letter> Graph::double_emissions(VertexId v) const {
  std::vector<Letter> out;
  for (EdgeId e : out_.at(v)) out.push_back(Letter::real(e));
  for (EdgeId e : in_.at(v)) out.push_back(Letter::ghost(e));
  return out;
}

std::vector<Letter> Graph::edge_letters() const {
  std::vector<Letter> out;
  for (EdgeId e = 0; e < edge_count(); ++e) out.push_back(Letter::real(e));
  for (EdgeId e = 0; e < edge_count(); ++e) out.push_back(Letter::ghost(e));
  return out;
}

Graph build_graph(const GraphSpec& spec) {
  for (const auto& v : spec.vertices) {
    if (!valid_identifier(v)) throw Error("invalid vertex name '" + v + "'");
  }
  for (const auto& e : spec.edges) {
    if (!valid_identifier(e.name)) throw Error("invalid edge name '" + e.name + "'");
  }
  return Graph(spec.vertices, spec.edges);
}

std::string write_graph_spec(const Graph& g, const std::vector<std::pair<std::string, std::string>>& specials) {
  std::ostringstream out;
  for (const auto& v : g.vertex_names()) out << "vertex " << v << '\n';
  for (const auto& e : g.edges()) {
    out << "edge " << e.name << ' ' << g.vertex_name(e.source) << ' ' << g.vertex_name(e.range) << '\n';
  }
  for (const auto& [v, e] : specials) out << "special " << v << ' ' << e << '\n';
  return out.str();
}

namespace {

Graph mirrored(const Graph& g, bool keep_real) {
  std::vector<GraphSpec::Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep_real) edges.push_back({e.name, g.vertex_name(e.source), g.vertex_name(e.range)});
    edges.push_back({e.name + "*", g.vertex_name(e.range), g.vertex_name(e.source)});
  }
  return Graph(g.vertex_names(), std::move(edges));
}

}  // namespace

Graph double_graph(const Graph& g) { return mirrored(g, true); }

Graph inverse_graph(const Graph& g) { return mirrored(g, false); }

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    auto a = find(e.source);
    auto b = find(e.range);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<VertexId, std::pair<std::vector<std::string>, std::vector<GraphSpec::Edge>>> parts;
  for (VertexId v = 0; v < g.vertex_count(); ++v) parts[find(v)].first.push_back(g.vertex_name(v));
  for (const auto& e : g.edges()) {
    parts[find(e.source)].second.push_back({e.name, g.vertex_name(e.source), g.vertex_name(e.range)});
  }
  std::vector<Graph> out;
  for (auto& [root, part] : parts) out.emplace_back(std::move(part.first), std::move(part.second));
  return out;
}

bool SpecialEdgeChoice::is_special(EdgeId e) const { return e < special_.size() && special_[e]; }

std::optional<EdgeId> SpecialEdgeChoice::at(VertexId v) const {
  if (v >= chosen_.size()) return std::nullopt;
  return chosen_[v];
}

std::vector<EdgeId> SpecialEdgeChoice::special_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < special_.size(); ++e) {
    if (special_[e]) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> SpecialEdgeChoice::named(const Graph& g) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (VertexId v = 0; v < chosen_.size(); ++v) {
    if (chosen_[v]) out.emplace_back(g.vertex_name(v), g.edge(*chosen_[v]).name);
  }
  return out;
}

SpecialEdgeChoice choose_special(const Graph& g, const std::map<std::string, std::string>& choice) {
  SpecialEdgeChoice out;
  out.chosen_.assign(g.vertex_count(), std::nullopt);
  out.special_.assign(g.edge_count(), false);
  for (const auto& [vname, ename] : choice) {
    auto v = g.find_vertex(vname);
    if (!v) throw Error("special choice keys unknown vertex '" + vname + "'");
    if (!g.is_regular(*v)) throw Error("special choice keys sink '" + vname + "'");
    auto e = g.find_edge(ename);
    if (!e) throw Error("special choice names unknown edge '" + ename + "'");
    if (g.edge(*e).source != *v) {
      throw Error("special edge '" + ename + "' is not emitted by '" + vname + "'");
    }
    out.chosen_[*v] = *e;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    // emitted() is sorted by id, and ids follow name order.
    if (!out.chosen_[v] && g.is_regular(v)) out.chosen_[v] = g.emitted(v).front();
    if (out.chosen_[v]) out.special_[*out.chosen_[v]] = true;
  }
  return out;
}

bool is_path(const Graph& g, const Path& p) {
  if (p.letters.empty()) return false;
  if (p.letters.size() == 1) {
    const auto& x = p.letters.front();
    return x.is_vertex() ? x.id < g.vertex_count() : x.id < g.edge_count();
  }
  for (std::size_t i = 0; i < p.letters.size(); ++i) {
    const auto& x = p.letters[i];
    if (!x.is_edge() || x.id >= g.edge_count()) return false;
    if (i > 0 && g.range(p.letters[i - 1]) != g.source(x)) return false;
  }
  return true;
}

VertexId path_source(const Graph& g, const Path& p) { return g.source(p.letters.front()); }

VertexId path_range(const Graph& g, const Path& p) { return g.range(p.letters.back()); }

Path concat(const Path& a, const Path& b) {
  if (a.is_vertex() || a.empty()) return b;
  if (b.is_vertex() || b.empty()) return a;
  Path out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::string format_path(const Graph& g, const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.letters.size(); ++i) {
    if (i > 0) out += '.';
    out += g.letter_name(p.letters[i]);
  }
  return out;
}

std::vector<Letter> parse_word(const Graph& g, std::string_view text) {
  std::vector<Letter> out;
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) out.push_back(g.parse_letter(tok));
    tok.clear();
  };
  for (char c : text) {
    if (c == '.' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  if (out.empty()) throw Error("empty word");
  return out;
}

Path parse_path(const Graph& g, std::string_view text) {
  Path p(parse_word(g, text));
  if (p.letters.size() > 1 && std::any_of(p.letters.begin(), p.letters.end(), [](Letter x) { return x.is_vertex(); })) {
    throw Error("vertex letter inside a path of positive length: '" + std::string(text) + "'");
  }
  if (!is_path(g, p)) throw Error("letters do not compose into a path: '" + std::string(text) + "'");
  return p;
}

}  // namespace lpa

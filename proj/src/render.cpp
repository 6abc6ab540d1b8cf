#include "lpa/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lpa {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const ExtRepGraph& r) {
  const Graph& g = r.ambient()->graph;
  std::ostringstream out;
  out << "digraph erg {\n";
  for (std::uint32_t w = 0; w < r.vertex_count(); ++w) {
    out << "  " << quoted(r.vertex_name(w)) << " [label=" << quoted(g.vertex_name(r.vertex_label(w)));
    if (r.is_frontier(w)) out << ", peripheries=2, color=gray";
    out << "];\n";
  }
  for (const auto& e : r.edges()) {
    out << "  " << quoted(r.vertex_name(e.source)) << " -> " << quoted(r.vertex_name(e.range))
        << " [label=" << quoted(g.letter_name(e.label));
    if (e.label.is_ghost()) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json emit_json(const ExtRepGraph& r) {
  const Graph& g = r.ambient()->graph;
  auto nodes = nlohmann::json::array();
  for (std::uint32_t w = 0; w < r.vertex_count(); ++w) {
    nodes.push_back({{"name", r.vertex_name(w)},
                     {"label", g.vertex_name(r.vertex_label(w))},
                     {"frontier", r.is_frontier(w)}});
  }
  auto edges = nlohmann::json::array();
  for (const auto& e : r.edges()) {
    edges.push_back({{"name", e.name},
                     {"source", r.vertex_name(e.source)},
                     {"target", r.vertex_name(e.range)},
                     {"label", g.letter_name(e.label)}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

std::string write_erg(const ExtRepGraph& r) {
  const Graph& g = r.ambient()->graph;
  std::ostringstream out;
  for (std::uint32_t w = 0; w < r.vertex_count(); ++w) out << "vertex " << r.vertex_name(w) << "\n";
  for (const auto& e : r.edges()) {
    out << "edge " << e.name << " " << r.vertex_name(e.source) << " " << r.vertex_name(e.range) << "\n";
  }
  for (std::uint32_t w = 0; w < r.vertex_count(); ++w) {
    out << "label " << r.vertex_name(w) << " " << g.vertex_name(r.vertex_label(w)) << "\n";
  }
  for (const auto& e : r.edges()) out << "label " << e.name << " " << g.letter_name(e.label) << "\n";
  for (auto w : r.frontier()) out << "frontier " << r.vertex_name(w) << "\n";
  return out.str();
}

ExtRepGraph parse_erg(const AmbientPtr& amb, std::string_view text) {
  const Graph& g = amb->graph;
  struct PendingEdge {
    std::string name, source, target;
  };
  std::vector<std::string> vertices;
  std::vector<PendingEdge> edges;
  std::map<std::string, std::string> labels;
  std::vector<std::string> frontier;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& what) { throw Error("line " + std::to_string(lineno) + ": " + what); };
    if (toks[0] == "vertex" && toks.size() == 2) {
      vertices.push_back(toks[1]);
    } else if (toks[0] == "edge" && toks.size() == 4) {
      edges.push_back({toks[1], toks[2], toks[3]});
    } else if (toks[0] == "label" && toks.size() == 3) {
      if (!labels.emplace(toks[1], toks[2]).second) fail("second label for " + toks[1]);
    } else if (toks[0] == "frontier" && toks.size() == 2) {
      frontier.push_back(toks[1]);
    } else {
      fail("cannot parse '" + line + "'");
    }
  }

  auto label_of = [&](const std::string& item) -> const std::string& {
    auto it = labels.find(item);
    if (it == labels.end()) throw Error("no label for " + item);
    return it->second;
  };
  ErgBuilder b(amb);
  std::map<std::string, std::uint32_t> ids;
  for (const auto& v : vertices) {
    auto lv = g.find_vertex(label_of(v));
    if (!lv) throw Error("unknown vertex label '" + label_of(v) + "' for " + v);
    ids[v] = b.add_vertex(v, *lv);
  }
  auto id_of = [&](const std::string& v) {
    auto it = ids.find(v);
    if (it == ids.end()) throw Error("unknown vertex " + v);
    return it->second;
  };
  for (const auto& e : edges) {
    Letter x = g.parse_letter(label_of(e.name));
    if (!x.is_edge()) throw Error("edge " + e.name + " labeled by a vertex");
    b.add_edge(e.name, id_of(e.source), id_of(e.target), x);
  }
  for (const auto& v : frontier) b.mark_frontier(id_of(v));
  for (const auto& [item, l] : labels) {
    bool known = ids.count(item) != 0 ||
                 std::any_of(edges.begin(), edges.end(), [&](const PendingEdge& e) { return e.name == item; });
    if (!known) throw Error("label for unknown item " + item);
  }
  return std::move(b).build();
}

}  // namespace lpa

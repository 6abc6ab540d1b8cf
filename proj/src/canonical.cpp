#include "lpa/canonical.hpp"

#include <algorithm>
#include <set>

namespace lpa {

CanonicalDescriptor CanonicalDescriptor::source(VertexId v) {
  CanonicalDescriptor d;
  d.kind = Kind::source;
  d.vertex = v;
  return d;
}

CanonicalDescriptor CanonicalDescriptor::of_infinite(InfinitePath x) {
  CanonicalDescriptor d;
  d.kind = Kind::infinite;
  d.infinite = std::move(x);
  return d;
}

CanonicalDescriptor CanonicalDescriptor::of_cycle(Path x) {
  CanonicalDescriptor d;
  d.kind = Kind::cycle;
  d.cycle = std::move(x);
  return d;
}

bool CanonicalDescriptor::ghostly(const Graph& g) const {
  switch (kind) {
    case Kind::source: return g.is_sink(vertex);
    case Kind::infinite: return infinite.ghostly();
    case Kind::cycle: return !cycle.letters.empty() && cycle.letters.front().is_ghost();
  }
  return false;
}

CanonicalDescriptor parse_descriptor(const Ambient& amb, std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error("bad descriptor '" + std::string(text) + "' (expected source:v, cycle:<path> or inf:<path>)");
  }
  auto kind = text.substr(0, colon);
  auto body = text.substr(colon + 1);
  const Graph& g = amb.graph;
  if (kind == "source") {
    auto v = g.find_vertex(body);
    if (!v) throw Error("unknown vertex '" + std::string(body) + "'");
    return CanonicalDescriptor::source(*v);
  }
  if (kind == "cycle") {
    Path x = parse_path(g, body);
    if (!is_closed_basis_path(g, amb.special, x)) {
      throw Error("'" + std::string(body) + "' is not a closed all-real or all-ghost basis path");
    }
    return CanonicalDescriptor::of_cycle(std::move(x));
  }
  if (kind == "inf") return CanonicalDescriptor::of_infinite(parse_infinite(g, amb.special, body));
  throw Error("unknown descriptor kind '" + std::string(kind) + "'");
}

std::string format_descriptor(const Graph& g, const CanonicalDescriptor& d) {
  switch (d.kind) {
    case CanonicalDescriptor::Kind::source: return "source:" + g.vertex_name(d.vertex);
    case CanonicalDescriptor::Kind::infinite: return "inf:" + format_infinite(g, d.infinite);
    case CanonicalDescriptor::Kind::cycle: return "cycle:" + format_path(g, d.cycle);
  }
  return {};
}

std::optional<std::uint32_t> CanonicalErg::lookup(std::size_t spine, const std::vector<Letter>& y) const {
  auto it = index.find({spine, y});
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

Letter spine_letter(const CanonicalDescriptor& d, std::size_t i) {
  if (d.kind == CanonicalDescriptor::Kind::infinite) return d.infinite.letter(i);
  const auto& xs = d.cycle.letters;
  return xs[(i - 1) % xs.size()];
}

std::size_t spine_count(const CanonicalDescriptor& d, std::size_t depth) {
  return d.kind == CanonicalDescriptor::Kind::cycle ? d.cycle.letters.size() : depth;
}

class Growth {
 public:
  Growth(const AmbientPtr& amb, CanonicalDescriptor d, std::size_t depth) : b_(amb), amb_(*amb) {
    out_.descriptor = std::move(d);
    out_.depth = depth;
  }

  std::uint32_t add(std::string name, VertexId label, NodeInfo info) {
    auto id = b_.add_vertex(std::move(name), label);
    out_.index.emplace(std::make_pair(info.spine, info.y), id);
    out_.info.push_back(std::move(info));
    return id;
  }

  // Adds the subtree of basis paths y (already rooted at `parent`) whose
  // first letters are `firsts`, up to length depth. Names are
  // prefix + format(y).
  void grow(std::uint32_t parent, std::size_t spine, const std::vector<Letter>& firsts, std::size_t depth,
            const std::string& wprefix, const std::string& fprefix) {
    const Graph& g = amb_.graph;
    std::vector<std::pair<std::uint32_t, std::vector<Letter>>> layer;
    std::vector<std::pair<std::uint32_t, std::vector<Letter>>> next;
    for (Letter a : firsts) next.push_back({parent, {a}});
    for (std::size_t len = 1; len <= depth && !next.empty(); ++len) {
      layer.clear();
      for (auto& [par, y] : next) {
        std::string tag = format_path(g, Path(y));
        auto w = add(wprefix + tag, g.range(y.back()), {spine, y});
        b_.add_edge(fprefix + tag, par, w, y.back());
        layer.push_back({w, y});
      }
      next.clear();
      for (auto& [w, y] : layer) {
        auto succ = basis_successors(g, amb_.special, y.back());
        if (len == depth) {
          if (!succ.empty()) b_.mark_frontier(w);
          continue;
        }
        for (Letter c : succ) {
          auto z = y;
          z.push_back(c);
          next.push_back({w, std::move(z)});
        }
      }
    }
  }

  ErgBuilder& builder() { return b_; }

  CanonicalErg finish() && {
    out_.erg = std::move(b_).build();
    return std::move(out_);
  }

 private:
  ErgBuilder b_;
  const Ambient& amb_;
  CanonicalErg out_{CanonicalDescriptor{}, 0, ExtRepGraph(nullptr), {}, {}};
};

CanonicalErg build_spined(const AmbientPtr& amb, const CanonicalDescriptor& d, std::size_t depth) {
  const Graph& g = amb->graph;
  const bool cyc = d.kind == CanonicalDescriptor::Kind::cycle;
  const std::size_t n = spine_count(d, depth);
  Growth grow(amb, d, depth);
  std::vector<std::uint32_t> spine(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    spine[i] = grow.add("w_" + std::to_string(i), g.range(spine_letter(d, i)), {i, {}});
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (cyc) {
      std::size_t prev = i == 1 ? n : i - 1;
      grow.builder().add_edge("f_" + std::to_string(i), spine[prev], spine[i], spine_letter(d, i));
    } else if (i < n) {
      grow.builder().add_edge("f_" + std::to_string(i), spine[i + 1], spine[i], spine_letter(d, i));
    }
  }
  if (!cyc) grow.builder().mark_frontier(spine[n]);
  for (std::size_t i = 1; i <= n; ++i) {
    auto firsts = attachment_first_letters(*amb, d, i);
    std::string tag = std::to_string(i) + ",";
    if (depth == 0) {
      if (!firsts.empty()) grow.builder().mark_frontier(spine[i]);
      continue;
    }
    grow.grow(spine[i], i, firsts, depth, "w_" + tag, "f_" + tag);
  }
  return std::move(grow).finish();
}

}  // namespace

std::vector<Letter> attachment_first_letters(const Ambient& amb, const CanonicalDescriptor& d, std::size_t i) {
  if (d.kind == CanonicalDescriptor::Kind::source) throw Error("attachment sets exist only for path descriptors");
  if (i == 0) throw Error("attachment positions start at 1");
  std::optional<Letter> excluded;
  if (d.kind == CanonicalDescriptor::Kind::infinite) {
    if (i >= 2) excluded = d.infinite.letter(i - 1);
  } else {
    const auto m = d.cycle.letters.size();
    if (i > m) throw Error("attachment position exceeds the cycle length");
    excluded = d.cycle.letters[i % m];
  }
  std::vector<Letter> out;
  for (Letter c : basis_successors(amb.graph, amb.special, spine_letter(d, i))) {
    if (!excluded || c != *excluded) out.push_back(c);
  }
  return out;
}

bool in_attachment_set(const Ambient& amb, const CanonicalDescriptor& d, std::size_t i, const Path& y) {
  if (y.empty() || y.is_vertex() || !is_basis_path(amb.graph, amb.special, y)) return false;
  auto firsts = attachment_first_letters(amb, d, i);
  return std::find(firsts.begin(), firsts.end(), y.letters.front()) != firsts.end();
}

CanonicalErg build_F_v(const AmbientPtr& amb, VertexId v, std::size_t depth) {
  const Graph& g = amb->graph;
  if (v >= g.vertex_count()) throw Error("unknown vertex id");
  Growth grow(amb, CanonicalDescriptor::source(v), depth);
  std::string root_name = "w_" + g.vertex_name(v);
  auto root = grow.add(root_name, v, {0, {Letter::vertex(v)}});
  auto firsts = g.double_emissions(v);
  if (depth == 0) {
    if (!firsts.empty()) grow.builder().mark_frontier(root);
  } else {
    grow.grow(root, 0, firsts, depth, "w_", "f_");
  }
  return std::move(grow).finish();
}

CanonicalErg build_F_inf(const AmbientPtr& amb, const InfinitePath& x, std::size_t depth) {
  if (depth == 0) throw Error("infinite canonical graphs need depth >= 1");
  auto report = validate_infinite(amb->graph, amb->special, x.period, x.suffix);
  if (!report.valid) throw Error("invalid infinite basis path: " + report.reason);
  return build_spined(amb, CanonicalDescriptor::of_infinite(x), depth);
}

CanonicalErg build_F_cyc(const AmbientPtr& amb, const Path& x, std::size_t depth) {
  if (!is_closed_basis_path(amb->graph, amb->special, x)) {
    throw Error("'" + format_path(amb->graph, x) + "' is not a closed all-real or all-ghost basis path");
  }
  return build_spined(amb, CanonicalDescriptor::of_cycle(x), depth);
}

CanonicalErg build_canonical(const AmbientPtr& amb, const CanonicalDescriptor& d, std::size_t depth) {
  switch (d.kind) {
    case CanonicalDescriptor::Kind::source: return build_F_v(amb, d.vertex, depth);
    case CanonicalDescriptor::Kind::infinite: return build_F_inf(amb, d.infinite, depth);
    case CanonicalDescriptor::Kind::cycle: return build_F_cyc(amb, d.cycle, depth);
  }
  throw Error("unknown descriptor kind");
}

bool is_isomorphic(const CanonicalDescriptor& a, const CanonicalDescriptor& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case CanonicalDescriptor::Kind::source: return a.vertex == b.vertex;
    case CanonicalDescriptor::Kind::infinite: return tail_equivalent(a.infinite, b.infinite);
    case CanonicalDescriptor::Kind::cycle: return cyclic_equivalent(a.cycle, b.cycle);
  }
  return false;
}

CanonicalDescriptor classify_finite(const ExtRepGraph& r) {
  if (!r.frontier().empty()) throw Error("classify_finite needs an exact graph, not a truncation");
  if (r.empty()) throw Error("classify_finite needs a nonempty graph");
  auto rep = validate_erg(r);
  if (!rep.ok()) throw Error("not a representation graph: " + rep.summary());
  if (erg_components(r).size() != 1) throw Error("classify_finite needs a connected graph");
  for (std::uint32_t w = 0; w < r.vertex_count(); ++w) {
    if (!r.incoming(w)) return CanonicalDescriptor::source(r.vertex_label(w));
  }
  // No source: walking incoming edges backwards must revisit a vertex.
  std::vector<bool> seen(r.vertex_count(), false);
  std::uint32_t w = 0;
  while (!seen[w]) {
    seen[w] = true;
    w = r.edge(*r.incoming(w)).source;
  }
  std::vector<Letter> labels;
  std::uint32_t u = w;
  do {
    auto f = *r.incoming(u);
    labels.push_back(r.edge(f).label);
    u = r.edge(f).source;
  } while (u != w);
  std::reverse(labels.begin(), labels.end());
  return CanonicalDescriptor::of_cycle(canonical_rotation(Path(std::move(labels))));
}

std::vector<Representative> representatives(const Ambient& amb, std::size_t max_cycle_len,
                                            std::size_t max_period_len) {
  const Graph& g = amb.graph;
  std::vector<Representative> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto d = CanonicalDescriptor::source(v);
    out.push_back({d, d.ghostly(g)});
  }
  const std::size_t len = std::max(max_cycle_len, max_period_len);
  std::set<Path> cycles;
  std::set<Path> periods;
  for (const auto& p : enumerate_basis_paths(g, amb.special, len)) {
    if (!is_closed_basis_path(g, amb.special, p)) continue;
    Path c = canonical_rotation(p);
    if (p.length() <= max_cycle_len) cycles.insert(c);
    if (p.length() <= max_period_len && primitive_root(p.letters).size() == p.letters.size()) periods.insert(c);
  }
  for (const auto& c : cycles) {
    auto d = CanonicalDescriptor::of_cycle(c);
    out.push_back({d, d.ghostly(g)});
  }
  for (const auto& c : periods) {
    auto d = CanonicalDescriptor::of_infinite(make_infinite(g, amb.special, c.letters));
    out.push_back({d, d.ghostly(g)});
  }
  return out;
}

}  // namespace lpa

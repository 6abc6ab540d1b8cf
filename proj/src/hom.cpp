#include "lpa/hom.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lpa {

namespace {

// theta(b) with unknown coefficients: N-vertex -> linear form in the columns.
using Image = std::map<std::uint32_t, SparseRow>;

Image act_image(const ExtRepGraph& n, const Image& img, Letter g) {
  Image out;
  for (const auto& [u, form] : img) {
    for (const auto& [t, k] : act_W_generator(n, u, g).vector.terms) axpy(out[t], k, form);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

Scalar dot(const SparseRow& form, const SparseRow& v) {
  Scalar s(0);
  for (const auto& [c, k] : form) {
    auto it = v.find(c);
    if (it != v.end()) s += k * it->second;
  }
  return s;
}

}  // namespace

HomSolution hom_space(const ExtRepGraph& m, const ExtRepGraph& n) {
  require_same_ambient(m.ambient(), n.ambient());
  HomSolution sol;
  const auto gens = generators(m.ambient()->graph);
  const auto B = interior(m);
  const auto C = interior(n);
  sol.source_interior = B.size();
  sol.target_interior = C.size();
  std::vector<bool> in_b(m.vertex_count(), false), in_c(n.vertex_count(), false);
  for (auto b : B) in_b[b] = true;
  for (auto c : C) in_c[c] = true;

  SparseEchelon ech(m.ambient()->field);
  auto add_row = [&](SparseRow row) {
    ++sol.constraints;
    if (!row.empty()) ech.insert(std::move(row));
  };

  std::vector<std::optional<Image>> theta(m.vertex_count());
  std::uint32_t cols = 0;
  for (auto root : B) {
    if (theta[root]) continue;
    Image img;
    for (auto c : C) {
      if (n.vertex_label(c) == m.vertex_label(root)) img[c][cols++] = Scalar(1);
    }
    theta[root] = std::move(img);
    std::deque<std::uint32_t> queue{root};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (Letter g : gens) {
        auto res = act_W_generator(m, x, g);
        if (res.vector.terms.size() != 1) continue;
        auto [b, k] = *res.vector.terms.begin();
        if (!k.is_one() || !in_b[b] || theta[b]) continue;
        Image next = act_image(n, *theta[x], g);
        for (auto it = next.begin(); it != next.end();) {
          if (in_c[it->first]) {
            ++it;
          } else {
            add_row(std::move(it->second));
            it = next.erase(it);
          }
        }
        theta[b] = std::move(next);
        queue.push_back(b);
      }
    }
  }
  sol.unknowns = cols;

  for (auto b : B) {
    for (Letter g : gens) {
      auto res = act_W_generator(m, b, g);
      bool inside = std::all_of(res.vector.terms.begin(), res.vector.terms.end(),
                                [&](const auto& kv) { return in_b[kv.first]; });
      if (!inside) continue;
      Image diff = act_image(n, *theta[b], g);
      for (auto& [u, form] : diff) {
        for (auto& [c, x] : form) x = -x;
      }
      for (const auto& [b2, k] : res.vector.terms) {
        for (const auto& [u, form] : *theta[b2]) axpy(diff[u], k, form);
      }
      for (auto& [u, form] : diff) add_row(std::move(form));
    }
  }

  for (const auto& v : ech.kernel(cols)) {
    std::vector<HomEntry> map;
    for (auto b : B) {
      for (const auto& [u, form] : *theta[b]) {
        Scalar val = dot(form, v);
        if (!val.is_zero()) map.push_back({b, u, val});
      }
    }
    if (!map.empty()) {
      Scalar inv = Scalar(1) / map.front().value;
      for (auto& e : map) e.value *= inv;
    }
    sol.basis.push_back(std::move(map));
  }
  sol.dimension = sol.basis.size();
  return sol;
}

bool is_scalar_identity(const ExtRepGraph& m, const ExtRepGraph& n, const std::vector<HomEntry>& map) {
  const auto B = interior(m);
  if (map.size() != B.size() || map.empty()) return false;
  std::set<std::uint32_t> seen;
  for (const auto& e : map) {
    if (m.vertex_name(e.source) != n.vertex_name(e.target)) return false;
    if (!(e.value == map.front().value)) return false;
    seen.insert(e.source);
  }
  return seen.size() == B.size();
}

std::vector<std::string> SchurReport::failed_preconditions() const {
  std::vector<std::string> out;
  if (!all_special) out.push_back("not all edges of the cycle are special");
  if (!has_exit) out.push_back("no exit");
  if (!distinct_sources) out.push_back("cycle repeats a vertex");
  return out;
}

bool SchurReport::passed() const {
  if (!preconditions_hold() || depths.empty()) return false;
  return std::all_of(depths.begin(), depths.end(), [](const SchurDepth& d) {
    return d.proper == Tri::yes && d.end_dimension == 1 && d.identity && d.spine_mismatches == 0;
  });
}

SchurReport check_schur(const AmbientPtr& amb, const Path& x, const std::vector<std::size_t>& depths) {
  const Graph& g = amb->graph;
  const auto& ls = x.letters;
  bool real = !ls.empty() && std::all_of(ls.begin(), ls.end(), [](Letter l) { return l.is_real(); });
  if (!real || !is_path(g, x) || path_source(g, x) != path_range(g, x)) {
    throw Error("not a cycle of real edges: " + format_path(g, x));
  }
  SchurReport rep;
  rep.cycle = format_path(g, x);
  rep.all_special = std::all_of(ls.begin(), ls.end(), [&](Letter l) { return amb->special.is_special(l.id); });
  std::set<VertexId> sources;
  for (Letter l : ls) sources.insert(g.source(l));
  rep.distinct_sources = sources.size() == ls.size();
  const std::size_t m = ls.size();
  EdgeId exit = 0;
  for (std::size_t i = 1; i <= m && !rep.has_exit; ++i) {
    for (EdgeId e : g.emitted(g.source(ls[i - 1]))) {
      if (e != ls[i - 1].id) {
        rep.has_exit = true;
        rep.exit_position = i;
        rep.exit_edge = g.edge(e).name;
        exit = e;
        break;
      }
    }
  }

  for (std::size_t depth : depths) {
    SchurDepth row;
    row.depth = depth;
    auto c = build_F_cyc(amb, x, depth);
    const auto inner = interior(c.erg);
    row.vertices = c.erg.vertex_count();
    row.interior = inner.size();
    if (rep.has_exit) {
      std::size_t spine = rep.exit_position == 1 ? m : rep.exit_position - 1;
      if (auto w = c.lookup(spine, {Letter::real(exit)})) {
        row.generator = c.erg.vertex_name(*w);
        auto cl = submodule_closure(c.erg, {*w});
        row.proper = cl.proper;
        row.certificate = cl.certificate;
      } else {
        row.certificate = "exit vertex not in the truncation";
      }
    } else {
      bool all = true;
      for (auto w : inner) all = all && submodule_closure(c.erg, {w}).proper == Tri::no;
      row.every_single_closure_improper = all && !inner.empty();
    }
    auto hom = hom_space(c.erg, c.erg);
    row.end_dimension = hom.dimension;
    row.identity = hom.dimension == 1 && is_scalar_identity(c.erg, c.erg, hom.basis.front());
    for (const auto& s : spine_action_table(c)) {
      ++row.spine_rows;
      if (!s.agrees) ++row.spine_mismatches;
    }
    rep.depths.push_back(std::move(row));
  }
  return rep;
}

}  // namespace lpa

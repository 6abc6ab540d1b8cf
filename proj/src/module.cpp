#include "lpa/module.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lpa {

Scalar ModuleVector::coefficient(std::uint32_t w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Scalar(0) : it->second;
}

void ModuleVector::add(std::uint32_t w, const Scalar& k) {
  if (k.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(w, k);
  if (!fresh) {
    it->second += k;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void ModuleVector::add(const ModuleVector& other, const Scalar& k) {
  for (const auto& [w, c] : other.terms) add(w, k * c);
}

std::vector<Letter> generators(const Graph& g) {
  std::vector<Letter> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(Letter::vertex(v));
  auto edges = g.edge_letters();
  out.insert(out.end(), edges.begin(), edges.end());
  return out;
}

namespace {

std::optional<Point> preimage(const std::map<Point, Point>& m, Point y) {
  for (const auto& [a, b] : m) {
    if (b == y) return a;
  }
  return std::nullopt;
}

std::optional<Point> image(const std::map<Point, Point>& m, Point x) {
  auto it = m.find(x);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

}  // namespace

ModuleVector act_V_generator(const ExtBranchingSystem& s, Point x, Letter gen) {
  const Graph& g = s.ambient->graph;
  ModuleVector out;
  if (gen.is_vertex()) {
    if (s.vertex_parts.at(gen.id).count(x)) out.add(x, 1);
    return out;
  }
  const EdgeId e = gen.id;
  if (gen.is_real()) {
    // rho_e is defined exactly on X_{s(e)} minus the ghost parts at s(e).
    if (auto y = image(s.rho_of(Letter::real(e)), x)) {
      out.add(*y, 1);
    } else if (s.Y(Letter::ghost(e)).count(x)) {
      out.add(*preimage(s.rho_of(Letter::ghost(e)), x), 1);
    }
    return out;
  }
  if (auto y = image(s.rho_of(Letter::ghost(e)), x)) {
    out.add(*y, 1);
    return out;
  }
  if (s.ambient->special.is_special(e) && s.Y(Letter::real(e)).count(x)) {
    Point base = *preimage(s.rho_of(Letter::real(e)), x);
    out.add(base, 1);
    for (EdgeId d : g.emitted(g.edge(e).source)) {
      if (d == e) continue;
      auto y = image(s.rho_of(Letter::real(d)), base);
      if (!y) continue;
      if (auto z = image(s.rho_of(Letter::ghost(d)), *y)) out.add(*z, -1);
    }
  }
  return out;
}

ModuleVector act_V(const ExtBranchingSystem& s, const ModuleVector& w, const AlgebraElement& a) {
  require_same_ambient(s.ambient, a.ambient());
  ModuleVector out;
  for (const auto& [x, k] : a.terms()) {
    ModuleVector cur = w;
    for (Letter gen : x.letters) {
      ModuleVector next;
      for (const auto& [p, c] : cur.terms) next.add(act_V_generator(s, p, gen), c);
      cur = std::move(next);
      if (cur.is_zero()) break;
    }
    out.add(cur, k);
  }
  return out;
}

ActionResult act_W_generator(const ExtRepGraph& r, std::uint32_t w, Letter gen) {
  const Ambient& amb = *r.ambient();
  const Graph& g = amb.graph;
  ActionResult res;
  if (gen.is_vertex()) {
    if (r.vertex_label(w) == gen.id) res.vector.add(w, 1);
    return res;
  }
  auto in = r.incoming(w);
  std::optional<Letter> in_label;
  if (in) in_label = r.edge(*in).label;
  // A frontier vertex may be missing emitted edges, and its incoming edge
  // if the truncation cut it off.
  auto missing = [&](Letter x) {
    if (!r.is_frontier(w)) return false;
    if (!in) return true;
    auto exp = expected_emissions(amb, r.vertex_label(w), in_label);
    return std::find(exp.begin(), exp.end(), x) != exp.end();
  };

  if (auto f = r.out_edge(w, gen)) {
    res.vector.add(r.edge(*f).range, 1);
    return res;
  }
  if (gen.is_real()) {
    if (in_label && *in_label == gen.star()) {
      res.vector.add(r.edge(*in).source, 1);
    } else if (missing(gen)) {
      res.defined = false;
    }
    return res;
  }
  const EdgeId e = gen.id;
  if (amb.special.is_special(e) && in_label && *in_label == Letter::real(e)) {
    std::uint32_t top = r.edge(*in).source;
    res.vector.add(top, 1);
    for (EdgeId d : g.emitted(g.edge(e).source)) {
      if (d == e) continue;
      auto f1 = r.out_edge(top, Letter::real(d));
      if (!f1) {
        if (r.is_frontier(top)) res.defined = false;
        continue;
      }
      std::uint32_t mid = r.edge(*f1).range;
      auto f2 = r.out_edge(mid, Letter::ghost(d));
      if (!f2) {
        if (r.is_frontier(mid)) res.defined = false;
        continue;
      }
      res.vector.add(r.edge(*f2).range, -1);
    }
    return res;
  }
  if (missing(gen)) res.defined = false;
  return res;
}

ActionResult act_W_word(const ExtRepGraph& r, const ModuleVector& w, const std::vector<Letter>& word) {
  ActionResult res{w, true};
  for (Letter gen : word) {
    ModuleVector next;
    for (const auto& [u, c] : res.vector.terms) {
      auto step = act_W_generator(r, u, gen);
      if (!step.defined) res.defined = false;
      next.add(step.vector, c);
    }
    res.vector = std::move(next);
  }
  return res;
}

ActionResult act_W(const ExtRepGraph& r, const ModuleVector& w, const AlgebraElement& a) {
  require_same_ambient(r.ambient(), a.ambient());
  ActionResult out;
  for (const auto& [x, k] : a.terms()) {
    auto part = act_W_word(r, w, x.letters);
    if (!part.defined) out.defined = false;
    out.vector.add(part.vector, k);
  }
  return out;
}

std::vector<std::uint32_t> interior(const ExtRepGraph& r) {
  auto gens = generators(r.ambient()->graph);
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < r.vertex_count(); ++w) {
    bool ok = std::all_of(gens.begin(), gens.end(), [&](Letter x) { return act_W_generator(r, w, x).defined; });
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<std::uint32_t> interior2(const ExtRepGraph& r) {
  auto gens = generators(r.ambient()->graph);
  auto one = interior(r);
  std::vector<bool> in1(r.vertex_count(), false);
  for (auto w : one) in1[w] = true;
  std::vector<std::uint32_t> out;
  for (auto w : one) {
    bool ok = true;
    for (Letter x : gens) {
      for (const auto& [u, c] : act_W_generator(r, w, x).vector.terms) ok = ok && in1[u];
    }
    if (ok) out.push_back(w);
  }
  return out;
}

namespace {

ModuleVector act1(const ExtRepGraph& r, const ModuleVector& v, Letter x) { return act_W_word(r, v, {x}).vector; }

}  // namespace

FamilyReport verify_e_family(const ExtRepGraph& r) {
  FamilyReport rep;
  const Graph& g = r.ambient()->graph;
  auto inner = interior2(r);
  rep.checked = inner.size();
  rep.skipped = r.vertex_count() - inner.size();
  auto fail = [&](const std::string& clause, std::uint32_t w, const std::string& what) {
    rep.violations.push_back({clause, r.vertex_name(w), what});
  };
  for (auto w : inner) {
    const ModuleVector b = ModuleVector::basis(w);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      auto wu = act1(r, b, Letter::vertex(u));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto lhs = act1(r, wu, Letter::vertex(v));
        if (lhs != (u == v ? wu : ModuleVector{})) {
          fail("(i)", w, "uv != delta_uv u for u=" + g.vertex_name(u) + ", v=" + g.vertex_name(v));
        }
      }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& rec = g.edge(e);
      Letter re = Letter::real(e);
      Letter ge = Letter::ghost(e);
      auto we = act1(r, b, re);
      auto wg = act1(r, b, ge);
      if (act1(r, act1(r, b, Letter::vertex(rec.source)), re) != we) fail("(ii)", w, "s(e)e != e for e=" + rec.name);
      if (act1(r, we, Letter::vertex(rec.range)) != we) fail("(ii)", w, "e r(e) != e for e=" + rec.name);
      if (act1(r, act1(r, b, Letter::vertex(rec.range)), ge) != wg) {
        fail("(ii)", w, "r(e)e* != e* for e=" + rec.name);
      }
      if (act1(r, wg, Letter::vertex(rec.source)) != wg) fail("(ii)", w, "e*s(e) != e* for e=" + rec.name);
      auto wr = act1(r, b, Letter::vertex(rec.range));
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        auto lhs = act1(r, wg, Letter::real(f));
        if (lhs != (e == f ? wr : ModuleVector{})) {
          fail("(iii)", w, "e*f != delta_ef r(e) for e=" + rec.name + ", f=" + g.edge(f).name);
        }
      }
    }
    for (VertexId v : g.regular_vertices()) {
      ModuleVector sum;
      for (EdgeId e : g.emitted(v)) sum.add(act1(r, act1(r, b, Letter::real(e)), Letter::ghost(e)));
      if (sum != act1(r, b, Letter::vertex(v))) fail("(iv)", w, "sum ee* != v at v=" + g.vertex_name(v));
    }
  }
  return rep;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

SparseRow as_row(const ModuleVector& v) { return SparseRow(v.terms.begin(), v.terms.end()); }

}  // namespace

ClosureReport submodule_closure(const ExtRepGraph& r, const std::vector<std::uint32_t>& gens) {
  ClosureReport rep;
  const auto all_gens = generators(r.ambient()->graph);
  SparseEchelon ech(r.ambient()->field);
  std::deque<ModuleVector> queue;
  for (auto w : gens) {
    auto v = ModuleVector::basis(w);
    if (ech.insert(as_row(v))) {
      rep.basis.push_back(v);
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (Letter x : all_gens) {
      auto res = act_W_word(r, v, {x});
      if (!res.defined) {
        ++rep.unresolved;
        continue;
      }
      if (!res.vector.is_zero() && ech.insert(as_row(res.vector))) {
        rep.basis.push_back(res.vector);
        queue.push_back(std::move(res.vector));
      }
    }
  }

  const auto inner = interior(r);
  if (gens.empty()) {
    rep.proper = inner.empty() ? Tri::unknown : Tri::yes;
    rep.certificate = "zero submodule";
    return rep;
  }
  // Descendant cone of the generators.
  std::vector<bool> cone(r.vertex_count(), false);
  std::deque<std::uint32_t> walk(gens.begin(), gens.end());
  for (auto w : gens) cone[w] = true;
  while (!walk.empty()) {
    auto w = walk.front();
    walk.pop_front();
    for (auto f : r.out_edges(w)) {
      auto u = r.edge(f).range;
      if (!cone[u]) {
        cone[u] = true;
        walk.push_back(u);
      }
    }
  }
  bool closed = true;
  for (std::uint32_t w = 0; w < r.vertex_count() && closed; ++w) {
    if (!cone[w]) continue;
    for (Letter x : all_gens) {
      auto res = act_W_generator(r, w, x);
      for (const auto& [u, c] : res.vector.terms) closed = closed && cone[u];
    }
  }
  auto outside = std::find_if(inner.begin(), inner.end(), [&](std::uint32_t w) { return !cone[w]; });
  if (closed && outside != inner.end()) {
    rep.proper = Tri::yes;
    rep.certificate = "cone of the generators is closed under all actions and misses " + r.vertex_name(*outside);
    return rep;
  }
  bool everything = std::all_of(inner.begin(), inner.end(),
                                [&](std::uint32_t w) { return ech.contains(as_row(ModuleVector::basis(w))); });
  if (everything) {
    rep.proper = Tri::no;
    rep.certificate = "closure contains all " + std::to_string(inner.size()) + " interior vertices";
  } else {
    rep.proper = Tri::unknown;
    rep.certificate = "closure grew into the frontier";
  }
  return rep;
}

std::vector<SpineRow> spine_action_table(const CanonicalErg& c) {
  if (c.descriptor.kind != CanonicalDescriptor::Kind::cycle) {
    throw Error("spine_action_table needs a cycle truncation");
  }
  const auto& x = c.descriptor.cycle.letters;
  if (std::any_of(x.begin(), x.end(), [](Letter l) { return !l.is_real(); })) {
    throw Error("spine_action_table needs a real cycle");
  }
  const ExtRepGraph& r = c.erg;
  const Graph& g = r.ambient()->graph;
  const std::size_t m = x.size();
  std::vector<Letter> xstar;
  for (std::size_t k = m; k >= 1; --k) xstar.push_back(x[k - 1].star());

  std::vector<SpineRow> rows;
  for (auto w : interior(r)) {
    const auto& info = c.info.at(w);
    auto actual = act_W_word(r, ModuleVector::basis(w), x);
    if (!actual.defined) continue;
    SpineRow row;
    row.vertex = w;
    row.actual = actual.vector;
    auto expect_at = [&](const std::vector<Letter>& y) {
      if (auto u = c.lookup(info.spine, y)) row.expected.add(*u, 1);
    };
    if (info.y.empty()) {
      row.rule = "spine";
      if (info.spine == m) row.expected.add(w, 1);
    } else {
      std::vector<Letter> p;
      std::vector<Letter> q;
      for (Letter l : info.y) (l.is_real() ? p : q).push_back(l);
      bool ends_with_xstar = q.size() >= m && std::equal(xstar.begin(), xstar.end(), q.end() - static_cast<std::ptrdiff_t>(m));
      if (q.empty()) {
        if (g.range(p.back()) == g.source(x.front())) {
          row.rule = "p";
          auto y = p;
          y.insert(y.end(), x.begin(), x.end());
          expect_at(y);
        } else {
          row.rule = "zero";
        }
      } else if (ends_with_xstar && q.size() > m) {
        row.rule = p.empty() ? "q*x*" : "pq*x*";
        auto y = p;
        y.insert(y.end(), q.begin(), q.end() - static_cast<std::ptrdiff_t>(m));
        expect_at(y);
      } else if (!p.empty() && q.size() <= m &&
                 std::equal(q.begin(), q.end(), xstar.end() - static_cast<std::ptrdiff_t>(q.size()))) {
        // q = x_k* ... x_1* with k = |q|.
        row.rule = "px_k*..x_1*";
        auto y = p;
        y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(q.size()), x.end());
        expect_at(y);
      } else {
        row.rule = "zero";
      }
    }
    row.agrees = row.expected == row.actual;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_vector(const ExtRepGraph& r, const ModuleVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, k] : v.terms) {
    bool negative = sgn(k.value()) < 0;
    Scalar mag = negative ? -k : k;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += r.vertex_name(w);
    first = false;
  }
  return out;
}

}  // namespace lpa

#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace lpa;

namespace {

std::set<std::string> edge_labels(const ExtRepGraph& r) {
  std::set<std::string> out;
  for (const auto& e : r.edges()) out.insert(r.ambient()->graph.letter_name(e.label));
  return out;
}

}  // namespace

TEST_CASE("F_v has one vertex per basis path from v") {
  auto a = fixture::r2("d");
  for (std::size_t depth = 0; depth <= 3; ++depth) {
    auto c = build_F_v(a, 0, depth);
    CHECK(c.erg.vertex_count() == enumerate_basis_paths(a->graph, a->special, depth).size());
    CHECK(validate_erg(c.erg).ok());
  }
  auto c = build_F_v(a, 0, 2);
  // every length-2 path extends, so the whole last layer is frontier
  CHECK(c.erg.frontier().size() == 11);
  auto w = c.lookup(0, fixture::path(a, "e.d*").letters);
  REQUIRE(w);
  CHECK(c.erg.vertex_name(*w) == "w_e.d*");
}

TEST_CASE("F_v over a sink is a ghost tree") {
  auto a = fixture::ex53();
  auto c = build_F_v(a, *a->graph.find_vertex("v"), 2);
  CHECK(c.erg.vertex_count() == 4);  // v, f*, f*.d*, f*.e*
  CHECK(edge_labels(c.erg) == std::set<std::string>{"f*", "d*", "e*"});
  CHECK(validate_erg(c.erg).ok());
  CHECK(CanonicalDescriptor::source(1).ghostly(a->graph));
  CHECK(!CanonicalDescriptor::source(0).ghostly(a->graph));
}

TEST_CASE("F_x for a real cycle with an exit") {
  auto a = fixture::r2("e");
  auto c = build_F_cyc(a, fixture::path(a, "e"), 2);
  CHECK(c.erg.vertex_count() == 9);
  CHECK(validate_erg(c.erg).ok());
  auto w1 = *c.lookup(1, {});
  CHECK(c.erg.out_edge(w1, Letter::real(1)));      // the cycle itself
  CHECK(!c.erg.out_edge(w1, Letter::ghost(1)));    // e e* is excluded
  CHECK(c.erg.out_edges(w1).size() == 3);
}

TEST_CASE("F_x for an infinite path: spine and side trees") {
  auto a = fixture::r2("e");
  auto x = parse_infinite(a->graph, a->special, "(d)^inf");
  auto c = build_F_inf(a, x, 3);
  CHECK(validate_erg(c.erg).ok());
  // spine w_1..w_3, w_3 has no incoming edge and sits on the frontier
  for (std::size_t i = 1; i <= 3; ++i) REQUIRE(c.lookup(i, {}));
  CHECK(c.erg.is_frontier(*c.lookup(3, {})));
  CHECK(!c.erg.incoming(*c.lookup(3, {})));
  auto first = attachment_first_letters(*a, c.descriptor, 2);
  // successors of d other than x_1 = d
  CHECK(first == std::vector<Letter>{Letter::real(1), Letter::ghost(0), Letter::ghost(1)});
  CHECK(in_attachment_set(*a, c.descriptor, 2, fixture::path(a, "e.d")));
  CHECK(!in_attachment_set(*a, c.descriptor, 2, fixture::path(a, "d.e")));
  CHECK_THROWS_AS(build_F_inf(a, x, 0), Error);
}

TEST_CASE("ghostly infinite path gives a usual graph") {
  auto a = fixture::r2("d");
  auto c = build_F_inf(a, parse_infinite(a->graph, a->special, "(d*)^inf"), 4);
  CHECK(validate_erg(c.erg).ok());
  for (const auto& e : c.erg.edges()) CHECK(e.label.is_ghost());
}

TEST_CASE("descriptor syntax") {
  auto a = fixture::r2("d");
  const Graph& g = a->graph;
  for (std::string s : {"source:v", "cycle:d.e", "inf:(d*)^inf", "inf:(d)^inf.e.e*"}) {
    CHECK(format_descriptor(g, parse_descriptor(*a, s)) == s);
  }
  CHECK_THROWS_AS(parse_descriptor(*a, "cycle:d.d*"), Error);
  CHECK_THROWS_AS(parse_descriptor(*a, "source:w"), Error);
  CHECK_THROWS_AS(parse_descriptor(*a, "loop:d"), Error);
}

TEST_CASE("isomorphism classes of descriptors") {
  auto a = fixture::r2("d");
  auto P = [&](const std::string& s) { return parse_descriptor(*a, s); };
  CHECK(is_isomorphic(P("cycle:d.e"), P("cycle:e.d")));
  CHECK(!is_isomorphic(P("cycle:d.e"), P("cycle:d.d")));
  CHECK(!is_isomorphic(P("cycle:d"), P("cycle:d.d")));
  CHECK(is_isomorphic(P("inf:(d.e)^inf"), P("inf:(e.d)^inf.e")));
  CHECK(is_isomorphic(P("inf:(d)^inf.e"), P("inf:(d)^inf")));
  CHECK(!is_isomorphic(P("inf:(d)^inf"), P("inf:(e)^inf")));
  CHECK(!is_isomorphic(P("inf:(d)^inf"), P("cycle:d")));
}

TEST_CASE("classify_finite inverts construction") {
  auto a = fixture::ambient_from("vertex a\nvertex b\nvertex z\nedge x a b\nedge y a b\nedge h z z\n");
  const Graph& g = a->graph;
  for (const auto& d : fixture::finite_descriptors(*a)) {
    auto c = build_canonical(a, d, 8);
    REQUIRE(c.erg.frontier().empty());
    CHECK(classify_finite(c.erg) == d);
  }
  auto hh = CanonicalDescriptor::of_cycle(Path({Letter::real(*g.find_edge("h")), Letter::real(*g.find_edge("h"))}));
  CHECK(build_canonical(a, hh, 3).erg.vertex_count() == 2);
  CHECK(format_descriptor(g, hh) == "cycle:h.h");
  CHECK_THROWS_AS(classify_finite(build_F_v(a, *g.find_vertex("z"), 2).erg), Error);
}

TEST_CASE("classification of random finite unions") {
  std::mt19937 rng(99);
  for (int t = 0; t < 30; ++t) {
    auto inst = fixture::random_instance(rng);
    auto comps = erg_components(inst.erg);
    REQUIRE(comps.size() == inst.components.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      CHECK(is_isomorphic(classify_finite(erg_restrict(inst.erg, comps[i])), inst.components[i]));
    }
  }
}

TEST_CASE("representatives of R2") {
  auto a = fixture::r2("d");
  auto reps = representatives(*a, 2, 2);
  // v; d e d* e* dd de ee d*d* d*e* e*e*; periods d e d* e* de d*e*
  CHECK(reps.size() == 17);
  std::size_t ghostly = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK(!is_isomorphic(reps[i].descriptor, reps[j].descriptor));
    if (reps[i].ghostly) ++ghostly;
  }
  CHECK(ghostly == 8);
}

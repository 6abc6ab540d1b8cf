#include <doctest.h>

#include "support.hpp"

using namespace lpa;

TEST_CASE("scalar arithmetic is exact") {
  Scalar a = Scalar::parse("1/3", Field::rational());
  Scalar b = Scalar::parse("-2/6", Field::rational());
  CHECK((a + b).is_zero());
  CHECK((a * Scalar(3)).is_one());
  CHECK((a / a).is_one());
  CHECK((Scalar(1) / Scalar(7)).to_string() == "1/7");
}

TEST_CASE("prime field residues") {
  Field f = Field::parse("gf:7");
  Scalar x = Scalar::parse("3", f);
  CHECK((x * Scalar(5)).to_string() == "1");
  CHECK((Scalar(1) / x).to_string() == "5");
  CHECK(Scalar::parse("1/2", f).to_string() == "4");
  CHECK_THROWS_AS(Field::parse("gf:8"), Error);
  CHECK_THROWS_AS(Field::parse("reals"), Error);
  CHECK(Field::parse("rational").is_rational());
}

TEST_CASE("graph spec parsing and ids in name order") {
  auto g = fixture::graph_from("vertex v\nvertex u\nedge f u v\nedge d u u # loop\nedge e u u\n");
  CHECK(g.vertex_name(0) == "u");
  CHECK(g.edge(0).name == "d");
  CHECK(g.is_sink(*g.find_vertex("v")));
  CHECK(g.regular_vertices() == std::vector<VertexId>{0});
  CHECK(g.emitted(0).size() == 3);
  CHECK(g.received(1).size() == 1);
  auto em = g.double_emissions(0);
  CHECK(em.size() == 5);  // d e f d* e*
  CHECK(em.front() == Letter::real(0));
  CHECK(em.back() == Letter::ghost(1));
}

TEST_CASE("graph spec errors") {
  CHECK_THROWS_AS(fixture::graph_from("vertex v\nvertex v\n"), Error);
  CHECK_THROWS_AS(fixture::graph_from("vertex v\nedge e v w\n"), Error);
  CHECK_THROWS_AS(fixture::graph_from("vertex v.w\n"), Error);
  CHECK_THROWS_AS(fixture::graph_from("node v\n"), Error);
  CHECK_THROWS_AS(fixture::graph_from("vertex v\nedge v v v\n"), Error);
}

TEST_CASE("special edge choice") {
  auto g = fixture::graph_from("vertex u\nvertex v\nedge d u u\nedge e u u\nedge f u v\n");
  auto sp = choose_special(g, {});
  CHECK(sp.at(0) == EdgeId{0});
  CHECK(!sp.at(1));
  auto sp2 = choose_special(g, {{"u", "f"}});
  CHECK(sp2.is_special(2));
  CHECK(!sp2.is_special(0));
  CHECK_THROWS_AS(choose_special(g, {{"v", "f"}}), Error);
  CHECK_THROWS_AS(choose_special(g, {{"w", "f"}}), Error);
  CHECK_THROWS_AS(choose_special(g, {{"u", "z"}}), Error);
}

TEST_CASE("double and inverse graphs") {
  auto g = fixture::graph_from("vertex u\nvertex v\nedge f u v\n");
  auto d = double_graph(g);
  CHECK(d.edge_count() == 2);
  auto fs = d.find_edge("f*");
  REQUIRE(fs);
  CHECK(d.vertex_name(d.edge(*fs).source) == "v");
  auto inv = inverse_graph(g);
  CHECK(inv.edge_count() == 1);
  CHECK(inv.vertex_name(inv.edge(0).source) == "v");
}

TEST_CASE("connected components") {
  auto g = fixture::graph_from("vertex a\nvertex b\nvertex c\nedge x a b\n");
  auto cs = connected_components(g);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].vertex_count() == 2);
  CHECK(cs[1].vertex_count() == 1);
}

TEST_CASE("path syntax") {
  auto a = fixture::ex53();
  const Graph& g = a->graph;
  auto p = parse_path(g, "d.e.f");
  CHECK(p.length() == 3);
  CHECK(format_path(g, p) == "d.e.f");
  CHECK(path_range(g, p) == *g.find_vertex("v"));
  CHECK(parse_path(g, "f* d*").length() == 2);
  CHECK(parse_path(g, "v").is_vertex());
  CHECK_THROWS_AS(parse_path(g, "f.d"), Error);
  CHECK_THROWS_AS(parse_path(g, "u.d"), Error);
  CHECK_THROWS_AS(parse_path(g, "q"), Error);
}

TEST_CASE("spec writer round trip") {
  auto a = fixture::ex53("e");
  auto text = write_graph_spec(a->graph, a->special.named(a->graph));
  auto spec = parse_graph_spec(text);
  CHECK(build_graph(spec) == a->graph);
  REQUIRE(spec.specials.size() == 1);
  CHECK(spec.specials[0].second == "e");
}

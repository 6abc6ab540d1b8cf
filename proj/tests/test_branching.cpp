#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace lpa;

namespace {

// One point p with X_v = Y_e = {p} and rho_e(p) = p: the module of the loop.
ExtBranchingSystem loop_system() {
  auto s = ExtBranchingSystem::blank(fixture::one_loop(), {"p"});
  s.vertex_parts[0] = {0};
  s.Y(Letter::real(0)) = {0};
  s.rho_of(Letter::real(0)) = {{0, 0}};
  return s;
}

bool has_clause(const ValidationReport& r, const std::string& clause) {
  for (const auto& v : r.violations) {
    if (v.clause == clause) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("a hand-made system validates") {
  auto s = loop_system();
  CHECK(validate_eabs(s).ok());
  CHECK(s.part_of(0) == VertexId{0});
}

TEST_CASE("fault injection is reported by clause") {
  auto s = loop_system();
  SUBCASE("Y parts overlap") {
    s.Y(Letter::ghost(0)) = {0};
    CHECK(has_clause(validate_eabs(s), "Y disjoint"));
  }
  SUBCASE("rho not defined on its domain") {
    s.rho_of(Letter::real(0)).clear();
    CHECK(has_clause(validate_eabs(s), "(i)"));
  }
  SUBCASE("point outside every X_v") {
    s.points.push_back("q");
    CHECK(has_clause(validate_eabs(s), "saturated"));
  }
  SUBCASE("special ghost map on the excluded part") {
    s.Y(Letter::real(0)).clear();
    s.rho_of(Letter::real(0)).clear();
    // Y_e empty: rho_e must be a bijection from {p} onto {}, and rho_e* from {p}.
    auto r = validate_eabs(s);
    CHECK(has_clause(r, "(i)"));
    CHECK(has_clause(r, "(iii)"));
  }
}

TEST_CASE("usual systems embed with empty real parts") {
  auto u = UsualBranchingSystem::blank(fixture::one_loop(), {"p"});
  u.vertex_parts[0] = {0};
  u.ghost_parts[0] = {0};
  u.rho[0] = {{0, 0}};
  REQUIRE(validate_usual(u).ok());
  auto s = embed_usual(u);
  CHECK(validate_eabs(s).ok());
  CHECK(s.Y(Letter::real(0)).empty());
  CHECK(s.Y(Letter::ghost(0)) == std::set<Point>{0});
  u.ghost_parts[0].clear();
  CHECK(!validate_usual(u).ok());
  CHECK_THROWS_AS(embed_usual(u), Error);
}

TEST_CASE("eta and theta on the loop") {
  auto s = loop_system();
  auto r = eta(s);
  REQUIRE(r.vertex_count() == 1);
  REQUIRE(r.edge_count() == 1);
  CHECK(r.edge(0).label == Letter::real(0));
  CHECK(validate_erg(r).ok());
  CHECK(theta(r) == s);
}

TEST_CASE("representation graph faults") {
  auto a = fixture::one_loop();
  SUBCASE("two incoming edges") {
    ErgBuilder b(a);
    auto w = b.add_vertex("w", 0);
    b.add_edge("x", w, w, Letter::real(0));
    b.add_edge("y", w, w, Letter::ghost(0));
    auto r = std::move(b).build();
    CHECK(has_clause(validate_erg(r), "(i)"));
  }
  SUBCASE("missing emission") {
    ErgBuilder b(a);
    b.add_vertex("w", 0);
    auto r = std::move(b).build();
    CHECK(!validate_erg(r).ok());
    CHECK_THROWS_AS(theta(r), Error);
  }
  SUBCASE("frontier vertices may be incomplete") {
    ErgBuilder b(a);
    auto w = b.add_vertex("w", 0);
    b.mark_frontier(w);
    auto r = std::move(b).build();
    CHECK(validate_erg(r).ok());
    CHECK_THROWS_AS(theta(r), Error);
  }
  SUBCASE("label mismatch") {
    auto c = fixture::ex53();
    ErgBuilder b(c);
    auto u = b.add_vertex("u", 0);
    auto v = b.add_vertex("v", 1);
    b.add_edge("x", u, v, Letter::real(0));  // d is a loop at u
    CHECK(has_clause(validate_erg(std::move(b).build()), "hom"));
  }
}

TEST_CASE("random systems: theta after eta is the identity") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 40; ++t) {
    auto inst = fixture::random_instance(rng);
    const auto& s = inst.system;
    REQUIRE(validate_eabs(s).ok());
    auto r = eta(s);
    CHECK(validate_erg(r).ok());
    CHECK(theta(r) == s);
    CHECK(find_isomorphism(r, inst.erg));
  }
}

TEST_CASE("isomorphism search") {
  auto a = fixture::r2("d");
  auto x = build_F_v(a, 0, 2).erg;
  auto y = build_F_v(a, 0, 2).erg;
  auto iso = find_isomorphism(x, y);
  REQUIRE(iso);
  for (std::uint32_t w = 0; w < x.vertex_count(); ++w) CHECK(x.vertex_name(w) == y.vertex_name((*iso)[w]));
  auto z = build_F_v(a, 0, 3).erg;
  CHECK(!find_isomorphism(x, z));
  auto c1 = build_F_cyc(a, fixture::path(a, "d.e"), 2).erg;
  auto c2 = build_F_cyc(a, fixture::path(a, "e.d"), 2).erg;
  CHECK(find_isomorphism(c1, c2));
  auto c3 = build_F_cyc(a, fixture::path(a, "d.d"), 2).erg;
  CHECK(!find_isomorphism(c1, c3));
}

TEST_CASE("components and restriction") {
  std::mt19937 rng(5);
  auto inst = fixture::random_instance(rng);
  auto comps = erg_components(inst.erg);
  CHECK(comps.size() == inst.components.size());
  std::size_t total = 0;
  for (const auto& c : comps) {
    auto sub = erg_restrict(inst.erg, c);
    CHECK(sub.vertex_count() == c.size());
    CHECK(validate_erg(sub).ok());
    total += c.size();
  }
  CHECK(total == inst.erg.vertex_count());
}

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/branching.hpp"
#include "lpa/canonical.hpp"
#include "lpa/linalg.hpp"

namespace lpa {

/// Finite linear combination of carrier points or representation-graph
/// vertices. Zero coefficients are never stored.
struct ModuleVector {
  std::map<std::uint32_t, Scalar> terms;

  static ModuleVector basis(std::uint32_t w) {
    ModuleVector v;
    v.terms.emplace(w, Scalar(1));
    return v;
  }
  bool is_zero() const { return terms.empty(); }
  Scalar coefficient(std::uint32_t w) const;
  void add(std::uint32_t w, const Scalar& k);
  void add(const ModuleVector& other, const Scalar& k = Scalar(1));

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

/// Action result on a (possibly truncated) representation graph. When
/// `defined` is false some branch of the action needed a vertex cut off by
/// the truncation; `vector` then only holds the resolvable part.
struct ActionResult {
  ModuleVector vector;
  bool defined = true;
};

/// w.x for a single generator x (vertex, e or e*) on V(S).
ModuleVector act_V_generator(const ExtBranchingSystem& s, Point x, Letter gen);
/// w.a on V(S), generator words applied left to right.
ModuleVector act_V(const ExtBranchingSystem& s, const ModuleVector& w, const AlgebraElement& a);

ActionResult act_W_generator(const ExtRepGraph& r, std::uint32_t w, Letter gen);
ActionResult act_W(const ExtRepGraph& r, const ModuleVector& w, const AlgebraElement& a);
/// w.(x_1 ... x_n) letter by letter, without reducing the word first.
ActionResult act_W_word(const ExtRepGraph& r, const ModuleVector& w, const std::vector<Letter>& word);

/// All generators of L(E): vertices, then real edges, then ghost edges.
std::vector<Letter> generators(const Graph& g);

/// Vertices on which every generator acts without touching the truncation.
std::vector<std::uint32_t> interior(const ExtRepGraph& r);
/// Vertices where every generator word of length <= 2 is defined.
std::vector<std::uint32_t> interior2(const ExtRepGraph& r);

struct FamilyReport {
  std::size_t checked = 0;   // vertices in the 2-interior
  std::size_t skipped = 0;   // vertices outside it
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the Leavitt relations pointwise on the 2-interior.
FamilyReport verify_e_family(const ExtRepGraph& r);

enum class Tri { no, yes, unknown };
std::string to_string(Tri t);

struct ClosureReport {
  std::vector<ModuleVector> basis;  // echelon basis of the computed closure
  std::size_t unresolved = 0;       // actions skipped because they touched the frontier
  Tri proper = Tri::unknown;
  std::string certificate;
};

/// Span of the generators closed under all generator actions that are
/// defined. `proper` is yes when the span of the descendant cone of the
/// generators is closed under every defined action and misses an interior
/// vertex; no when the closure contains the whole interior.
ClosureReport submodule_closure(const ExtRepGraph& r, const std::vector<std::uint32_t>& generators);

struct SpineRow {
  std::uint32_t vertex = 0;
  std::string rule;         // which case of the table applied
  ModuleVector expected;
  ModuleVector actual;
  bool agrees = false;
};

/// For each interior vertex of a cycle truncation where acting by the whole
/// word x is defined: the image predicted by the case table for real cycles
/// next to the image computed by act_W.
std::vector<SpineRow> spine_action_table(const CanonicalErg& c);

std::string format_vector(const ExtRepGraph& r, const ModuleVector& v);

}  // namespace lpa

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/module.hpp"

namespace lpa {

struct HomEntry {
  std::uint32_t source = 0;  // vertex of M
  std::uint32_t target = 0;  // vertex of N
  Scalar value;
};

/// Solution space of module maps W(M) -> W(N), restricted to the interiors.
///
/// Each basis map sends an interior vertex b of M to a combination of
/// interior vertices of N; entries are listed by (source, target).
struct HomSolution {
  std::size_t dimension = 0;
  std::vector<std::vector<HomEntry>> basis;
  std::size_t source_interior = 0;
  std::size_t target_interior = 0;
  std::size_t unknowns = 0;
  std::size_t constraints = 0;
};

/// Imposes theta(b.g) = theta(b).g for every generator g and every interior
/// b of M whose image b.g is supported on the interior. Unknowns are
/// eliminated along edges b.g = b' first, so only one vector of unknowns per
/// component of the interior remains.
HomSolution hom_space(const ExtRepGraph& m, const ExtRepGraph& n);

/// Whether a basis map is c * (identity on names) for some scalar c.
bool is_scalar_identity(const ExtRepGraph& m, const ExtRepGraph& n, const std::vector<HomEntry>& map);

struct SchurDepth {
  std::size_t depth = 0;
  std::size_t vertices = 0;
  std::size_t interior = 0;
  std::string generator;
  Tri proper = Tri::unknown;
  std::string certificate;
  std::size_t end_dimension = 0;
  bool identity = false;
  std::size_t spine_rows = 0;
  std::size_t spine_mismatches = 0;
  /// Only filled when x has no exit: whether the closure of every single
  /// interior vertex is the whole interior.
  std::optional<bool> every_single_closure_improper;
};

struct SchurReport {
  std::string cycle;
  bool all_special = false;
  bool has_exit = false;
  bool distinct_sources = false;
  std::string exit_edge;
  std::size_t exit_position = 0;  // 1-based i with s(exit) = s(x_i)
  std::vector<SchurDepth> depths;

  bool preconditions_hold() const { return all_special && has_exit && distinct_sources; }
  std::vector<std::string> failed_preconditions() const;
  /// Preconditions hold and every depth shows a proper submodule and a
  /// one-dimensional endomorphism space spanned by the identity.
  bool passed() const;
};

/// Throws Error if x is not a closed path of real edges.
SchurReport check_schur(const AmbientPtr& amb, const Path& x, const std::vector<std::size_t>& depths);

}  // namespace lpa

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// True iff the two-letter word `a b` may occur inside a basis path: no ghost
/// letter before a real one, and no `e e*` with e special.
bool basis_pair_allowed(const SpecialEdgeChoice& special, Letter a, Letter b);

/// Membership in the Zelmanov basis X.
bool is_basis_path(const Graph& g, const SpecialEdgeChoice& special, const Path& p);

/// Letters that may follow a basis path ending in `last` (or starting at the
/// vertex `last`), in letter order.
std::vector<Letter> basis_successors(const Graph& g, const SpecialEdgeChoice& special, Letter last);

/// All basis paths of length <= max_len, optionally only those with s_d = at.
/// Order: length, then letter sequence (real letters before ghost letters).
std::vector<Path> enumerate_basis_paths(const Graph& g, const SpecialEdgeChoice& special, std::size_t max_len,
                                        std::optional<VertexId> at = std::nullopt);

/// (tau_{<=n}(x), tau_{>n}(x)) for a finite basis path. The empty sides are
/// the vertex paths s_d(x) and r_d(x). Throws if n > |x|.
std::pair<Path, Path> split_at(const Graph& g, const Path& x, std::size_t n);

/// An eventually periodic infinite basis path ...ccc s, letters indexed
/// x_1, x_2, ... from the right.
///
/// Kept normalized: the period is primitive, and the suffix does not start
/// with the last letter of the period (that letter is absorbed by rotating
/// the period). Two values are equal iff they denote the same infinite word.
struct InfinitePath {
  std::vector<Letter> period;
  std::vector<Letter> suffix;

  /// x_i for i >= 1.
  Letter letter(std::size_t i) const;
  bool ghostly() const { return !period.empty() && period.front().is_ghost(); }
  bool real() const;

  friend bool operator==(const InfinitePath&, const InfinitePath&) = default;
};

struct InfiniteReport {
  bool valid = false;
  bool real = false;
  bool ghostly = false;
  std::string reason;
};

/// Checks that ...ccc s is an infinite basis path: c is a nonempty closed
/// path, all-real or all-ghost, and every finite suffix lies in X.
InfiniteReport validate_infinite(const Graph& g, const SpecialEdgeChoice& special, const std::vector<Letter>& period,
                                 const std::vector<Letter>& suffix);

/// Validates and normalizes. Throws Error with the report reason if invalid.
InfinitePath make_infinite(const Graph& g, const SpecialEdgeChoice& special, std::vector<Letter> period,
                           std::vector<Letter> suffix = {});

/// (tau_{<=n}(x) = x_n ... x_1 as a finite path, tau_{>n}(x)).
std::pair<Path, InfinitePath> split_at(const Graph& g, const InfinitePath& x, std::size_t n);

bool tail_equivalent(const InfinitePath& x, const InfinitePath& y);

/// Closed basis path whose square is again a basis path: closed, and all-real
/// or all-ghost.
bool is_closed_basis_path(const Graph& g, const SpecialEdgeChoice& special, const Path& p);
/// Lexicographically least rotation.
Path canonical_rotation(const Path& p);
bool cyclic_equivalent(const Path& x, const Path& y);
/// Shortest q with p = q^k.
std::vector<Letter> primitive_root(const std::vector<Letter>& word);

/// "(c)^inf" or "(c)^inf.s".
std::string format_infinite(const Graph& g, const InfinitePath& x);
InfinitePath parse_infinite(const Graph& g, const SpecialEdgeChoice& special, std::string_view text);

}  // namespace lpa

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/basis.hpp"
#include "lpa/branching.hpp"

namespace lpa {

/// Names one of the canonical connected representation graphs: F_v for a
/// vertex, F_x for an eventually periodic infinite basis path, or F_x for a
/// closed basis path.
struct CanonicalDescriptor {
  enum class Kind { source, infinite, cycle };

  Kind kind = Kind::source;
  VertexId vertex = 0;
  InfinitePath infinite;
  Path cycle;

  static CanonicalDescriptor source(VertexId v);
  static CanonicalDescriptor of_infinite(InfinitePath x);
  static CanonicalDescriptor of_cycle(Path x);

  /// Whether the canonical graph is a usual (all-ghost) representation graph.
  bool ghostly(const Graph& g) const;

  friend bool operator==(const CanonicalDescriptor&, const CanonicalDescriptor&) = default;
};

/// "source:v", "cycle:d.e", "inf:(d*)^inf" or "inf:(d)^inf.e*".
CanonicalDescriptor parse_descriptor(const Ambient& amb, std::string_view text);
std::string format_descriptor(const Graph& g, const CanonicalDescriptor& d);

/// Construction coordinates of a vertex. For F_v, spine is 0 and y is the
/// basis path x of w_x. Otherwise spine is i >= 1 and y is empty for w_i.
struct NodeInfo {
  std::size_t spine = 0;
  std::vector<Letter> y;
};

/// A truncation of a canonical graph together with the construction names.
struct CanonicalErg {
  CanonicalDescriptor descriptor;
  std::size_t depth = 0;
  ExtRepGraph erg;
  std::vector<NodeInfo> info;

  std::optional<std::uint32_t> lookup(std::size_t spine, const std::vector<Letter>& y) const;

  std::map<std::pair<std::size_t, std::vector<Letter>>, std::uint32_t> index;
};

/// Allowed first letters y_1 of the attachment set X_i (i is 1-based).
/// Infinite case: x_i y_1 in X and y_1 != x_{i-1} for i >= 2. Closed case:
/// x_i y_1 in X and y_1 != x_{i+1}, indices mod m.
std::vector<Letter> attachment_first_letters(const Ambient& amb, const CanonicalDescriptor& d, std::size_t i);
/// Membership of y in X_i.
bool in_attachment_set(const Ambient& amb, const CanonicalDescriptor& d, std::size_t i, const Path& y);

/// Vertices w_x for x in X_v with |x| <= depth.
CanonicalErg build_F_v(const AmbientPtr& amb, VertexId v, std::size_t depth);
/// Spine w_1..w_depth and side trees w_{i,y} with |y| <= depth. depth >= 1.
CanonicalErg build_F_inf(const AmbientPtr& amb, const InfinitePath& x, std::size_t depth);
/// Cycle w_1..w_m and side trees w_{i,y} with |y| <= depth.
CanonicalErg build_F_cyc(const AmbientPtr& amb, const Path& x, std::size_t depth);
CanonicalErg build_canonical(const AmbientPtr& amb, const CanonicalDescriptor& d, std::size_t depth);

/// Decides F_a ~= F_b through the descriptors.
bool is_isomorphic(const CanonicalDescriptor& a, const CanonicalDescriptor& b);

/// Descriptor of a finite, exact, connected representation graph. Cycles
/// come back in canonical rotation.
CanonicalDescriptor classify_finite(const ExtRepGraph& r);

struct Representative {
  CanonicalDescriptor descriptor;
  bool ghostly = false;
};

/// Every vertex, one closed basis path per rotation class up to
/// max_cycle_len, and one purely periodic path per tail class with primitive
/// period up to max_period_len.
std::vector<Representative> representatives(const Ambient& amb, std::size_t max_cycle_len,
                                            std::size_t max_period_len);

}  // namespace lpa

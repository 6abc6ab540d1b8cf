#pragma once

#include <memory>

#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// Everything an algebra element or module depends on: the graph E, the
/// special-edge choice and the coefficient field.
struct Ambient {
  Graph graph;
  SpecialEdgeChoice special;
  Field field;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(Graph g, SpecialEdgeChoice special, Field field = Field::rational());

/// Convenience: default special edges except where `choice` says otherwise.
AmbientPtr make_ambient(Graph g, const std::map<std::string, std::string>& choice = {},
                        Field field = Field::rational());

/// Structural equality: same graph, same special edges, same field.
bool same_ambient(const AmbientPtr& a, const AmbientPtr& b);

/// Throws Error("ambient mismatch") unless same_ambient(a, b).
void require_same_ambient(const AmbientPtr& a, const AmbientPtr& b);

}  // namespace lpa

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lpa/branching.hpp"

namespace lpa {

/// DOT digraph: node label is the phi-image, edge label the phi-letter.
/// Ghost edges are dashed, frontier vertices drawn as gray double circles.
std::string emit_dot(const ExtRepGraph& r);

/// {"nodes": [{name, label, frontier}], "edges": [{name, source, target, label}]}
nlohmann::json emit_json(const ExtRepGraph& r);

/// Line format:
///   vertex <name>            edge <name> <source> <target>
///   label <vertex> <v>       label <edge> <letter>
///   frontier <vertex>
/// `#` starts a comment.
std::string write_erg(const ExtRepGraph& r);
ExtRepGraph parse_erg(const AmbientPtr& amb, std::string_view text);

}  // namespace lpa

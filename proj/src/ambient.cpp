#include "lpa/ambient.hpp"

namespace lpa {

AmbientPtr make_ambient(Graph g, SpecialEdgeChoice special, Field field) {
  return std::make_shared<const Ambient>(Ambient{std::move(g), std::move(special), field});
}

AmbientPtr make_ambient(Graph g, const std::map<std::string, std::string>& choice, Field field) {
  auto special = choose_special(g, choice);
  return make_ambient(std::move(g), std::move(special), field);
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->special == b->special && a->graph == b->graph;
}

void require_same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
  if (!same_ambient(a, b)) throw Error("ambient mismatch: operands live over different algebras");
}

}  // namespace lpa

#include "recgame/mediator.hpp"

namespace recgame {

std::optional<MediatorKind> mediator_from_name(const std::string& name) {
  if (name == "top") return MediatorKind::Top;
  if (name == "btl") return MediatorKind::Btl;
  if (name == "none") return MediatorKind::None;
  if (name == "rand") return MediatorKind::Rand;
  if (name == "shapley") return MediatorKind::Shapley;
  return std::nullopt;
}

}  // namespace recgame

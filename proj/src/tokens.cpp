#include "docforge/tokens.hpp"

namespace docforge {

const char* recovery_kind_name(RecoveryEvent::Kind kind) noexcept {
  switch (kind) {
    case RecoveryEvent::Kind::LostField: return "lost_field";
    case RecoveryEvent::Kind::StrayEnd: return "stray_end";
    case RecoveryEvent::Kind::OrphanText: return "orphan_text";
    case RecoveryEvent::Kind::PromptSkipped: return "prompt_skipped";
  }
  return "unknown";
}

}  // namespace docforge

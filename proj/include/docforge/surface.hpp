#pragma once

#include <string>

#include "docforge/tokens.hpp"
#include "docforge/vocab.hpp"

namespace docforge {

/// One-line textual form. Special tokens render as [START_name], [END_name]
/// or [label]; a text span renders surrounded by exactly one space on each
/// side, with `[`, `]` and `\` escaped as `\[`, `\]`, `\\`.
std::string render_surface(const TokenSeq& seq);

/// Inverse of render_surface. Bracketed runs must be lexically valid token
/// names: START_*/END_* map to field delimiters, registered class/prompt
/// names to their kinds, and any other valid name to a ClassToken (models
/// may emit specials the vocab does not know). Each raw span between tokens
/// is unescaped and trimmed by exactly one leading and one trailing space;
/// spans that end up empty are separators. Throws Error(SurfaceSyntax) on
/// unterminated tokens, illegal token names or dangling escapes.
TokenSeq parse_surface(const std::string& line, const Vocab& vocab);

}  // namespace docforge

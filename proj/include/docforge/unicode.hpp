#pragma once

#include <optional>
#include <string>

namespace docforge {

/// Decodes UTF-8 into Unicode scalar values; nullopt on malformed input
/// (overlong forms, surrogates, truncation, out-of-range).
std::optional<std::u32string> utf8_decode(const std::string& bytes);

bool is_valid_utf8(const std::string& bytes);

/// Unicode whitespace as used for corpus tokenization.
bool is_unicode_space(char32_t c);

/// C0/C1 control characters and DEL, excluding the whitespace controls.
bool is_stripped_control(char32_t c);

std::string to_lower_ascii(std::string s);
std::string trim_ascii_space(const std::string& s);

}  // namespace docforge

#include "docforge/surface.hpp"

#include "docforge/doctree.hpp"
#include "docforge/errors.hpp"

namespace docforge {

namespace {

void append_escaped(std::string& out, const std::string& text) {
  for (char c : text) {
    if (c == '[' || c == ']' || c == '\\') out += '\\';
    out += c;
  }
}

// Exactly one leading and one trailing space, if present, belong to the
// rendering, not the payload.
std::string trim_one(std::string span) {
  if (!span.empty() && span.front() == ' ') span.erase(span.begin());
  if (!span.empty() && span.back() == ' ') span.pop_back();
  return span;
}

}  // namespace

std::string render_surface(const TokenSeq& seq) {
  std::string out;
  for (const TokenItem& item : seq) {
    switch (item.kind) {
      case TokenItem::Kind::FieldStart:
        out += "[START_" + item.payload + "]";
        break;
      case TokenItem::Kind::FieldEnd:
        out += "[END_" + item.payload + "]";
        break;
      case TokenItem::Kind::ClassToken:
      case TokenItem::Kind::PromptToken:
        out += "[" + item.payload + "]";
        break;
      case TokenItem::Kind::Text:
        out += ' ';
        append_escaped(out, item.payload);
        out += ' ';
        break;
    }
  }
  return out;
}

TokenSeq parse_surface(const std::string& line, const Vocab& vocab) {
  TokenSeq seq;
  std::string span;

  auto flush_span = [&] {
    std::string payload = trim_one(std::move(span));
    span.clear();
    if (!payload.empty()) seq.push_back(TokenItem::text(std::move(payload)));
  };

  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    char c = line[i];
    if (c == '\\') {
      if (i + 1 >= n) {
        throw Error(ErrorCode::SurfaceSyntax, "dangling escape at end of input");
      }
      char next = line[i + 1];
      if (next != '[' && next != ']' && next != '\\') {
        throw Error(ErrorCode::SurfaceSyntax,
                    std::string("invalid escape: \\") + next);
      }
      span += next;
      i += 2;
      continue;
    }
    if (c == ']') {
      throw Error(ErrorCode::SurfaceSyntax,
                  "unescaped ']' outside a token at offset " + std::to_string(i));
    }
    if (c != '[') {
      span += c;
      ++i;
      continue;
    }
    // token: [name]
    flush_span();
    std::size_t close = line.find(']', i + 1);
    if (close == std::string::npos) {
      throw Error(ErrorCode::SurfaceSyntax,
                  "unterminated token at offset " + std::to_string(i));
    }
    std::string name = line.substr(i + 1, close - i - 1);
    i = close + 1;
    if (name.rfind("START_", 0) == 0) {
      std::string field = name.substr(6);
      if (!valid_field_name(field)) {
        throw Error(ErrorCode::SurfaceSyntax, "invalid token name: [" + name + "]");
      }
      seq.push_back(TokenItem::field_start(std::move(field)));
    } else if (name.rfind("END_", 0) == 0) {
      std::string field = name.substr(4);
      if (!valid_field_name(field)) {
        throw Error(ErrorCode::SurfaceSyntax, "invalid token name: [" + name + "]");
      }
      seq.push_back(TokenItem::field_end(std::move(field)));
    } else if (vocab.has_prompt(name)) {
      seq.push_back(TokenItem::prompt_token(std::move(name)));
    } else if (valid_field_name(name)) {
      // registered classes and unknown model-emitted specials alike
      seq.push_back(TokenItem::class_token(std::move(name)));
    } else {
      throw Error(ErrorCode::SurfaceSyntax, "invalid token name: [" + name + "]");
    }
  }
  flush_span();
  return seq;
}

}  // namespace docforge

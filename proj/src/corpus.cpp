#include "docforge/corpus.hpp"

#include <algorithm>

#include "docforge/errors.hpp"
#include "docforge/json_io.hpp"
#include "docforge/unicode.hpp"

namespace docforge {
namespace {

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

// A compact, plain-English pool so generation works out of the box when no
// corpus is configured.
const char* const kBuiltinText =
    "the quick brown fox jumps over a lazy dog while morning light settles "
    "across quiet rooftops and narrow streets where people carry fresh bread "
    "home from small corner shops that open early and close late every day "
    "invoices arrive by post with totals dates and signatures printed in neat "
    "rows beside addresses and order numbers that clerks copy into ledgers "
    "by hand or machine depending on the size of the office and its budget "
    "meanwhile trains depart on schedule moving freight between harbours and "
    "inland depots under skies that shift from clear blue to heavy grey rain "
    "records of each shipment list weight volume origin destination and the "
    "name of the carrier along with fees taxes and the agreed delivery date "
    "readers skim such documents quickly picking out figures and headings "
    "while ignoring boilerplate that repeats from page to page season after "
    "season the same forms return with new numbers stamped in fresh ink";

}  // namespace

std::size_t CorpusSource::word_count() const {
  std::size_t n = 0;
  for (const auto& doc : documents) {
    n += doc.size();
  }
  return n;
}

std::vector<std::string> tokenize_words(const std::string& text) {
  auto decoded = utf8_decode(text);
  if (!decoded) {
    throw Error(ErrorCode::NotUtf8, "text is not valid UTF-8");
  }
  std::vector<std::string> words;
  std::string current;
  for (char32_t c : *decoded) {
    if (is_unicode_space(c)) {
      if (!current.empty()) {
        words.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    if (is_stripped_control(c)) {
      continue;
    }
    append_utf8(current, c);
  }
  if (!current.empty()) {
    words.push_back(std::move(current));
  }
  return words;
}

CorpusSource load_corpus(const std::vector<std::filesystem::path>& files) {
  CorpusSource source;
  for (const auto& file : files) {
    std::string text = read_file(file);
    std::vector<std::string> words;
    try {
      words = tokenize_words(text);
    } catch (const Error& e) {
      throw Error(e.code(), file.string() + ": " + e.what());
    }
    if (!words.empty()) {
      source.documents.push_back(std::move(words));
    }
  }
  if (source.documents.empty()) {
    return builtin_corpus();
  }
  return source;
}

CorpusSource load_corpus_dir(const std::filesystem::path& dir) {
  if (dir.empty()) {
    return builtin_corpus();
  }
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::IoError, "corpus directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    return builtin_corpus();
  }
  return load_corpus(files);
}

CorpusSource builtin_corpus() {
  CorpusSource source;
  source.builtin = true;
  source.documents.push_back(tokenize_words(kBuiltinText));
  return source;
}

}  // namespace docforge

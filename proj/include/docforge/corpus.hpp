#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace docforge {

/// Tokenized text documents used to fill synthetic pages. Each document is a
/// flat word list; sampling picks contiguous runs out of one document so that
/// local word order carries over into the rendered page.
struct CorpusSource {
  std::vector<std::vector<std::string>> documents;
  bool builtin = false;  ///< true when the packaged word list is in use

  std::size_t word_count() const;
  bool empty() const { return documents.empty(); }
};

/// Loads UTF-8 text files, one document per file. Control characters are
/// stripped, words are split on Unicode whitespace. Files that tokenize to
/// nothing are dropped. Throws Error(IoError) on unreadable files and
/// Error(NotUtf8) on malformed encodings.
CorpusSource load_corpus(const std::vector<std::filesystem::path>& files);

/// All *.txt files under `dir` (sorted by name) fed to load_corpus; an empty
/// path or a directory with no matches yields the builtin word list.
CorpusSource load_corpus_dir(const std::filesystem::path& dir);

/// The packaged fallback word list as a single document.
CorpusSource builtin_corpus();

/// Tokenizes one UTF-8 string: strips control characters, splits on Unicode
/// whitespace. Throws Error(NotUtf8) on malformed input.
std::vector<std::string> tokenize_words(const std::string& text);

}  // namespace docforge

#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "docforge/manifest.hpp"
#include "docforge/synthdog/config.hpp"

namespace docforge::synthdog {

struct GenerateSummary {
  std::size_t images = 0;
  std::size_t words = 0;
  double seconds = 0.0;
};

/// Receives finished pages. Implementations must tolerate concurrent calls
/// with distinct indices.
class DatasetSink {
 public:
  virtual ~DatasetSink() = default;
  virtual void write(std::size_t index, const std::vector<unsigned char>& png,
                     const ManifestRecord& record) = 0;
};

/// Writes images/<8-digit index>.png plus metadata.jsonl under `dir`.
class DatasetWriter : public DatasetSink {
 public:
  explicit DatasetWriter(std::filesystem::path dir);

  void write(std::size_t index, const std::vector<unsigned char>& png,
             const ManifestRecord& record) override;

  /// Flushes metadata.jsonl; call once after generation.
  void close();

 private:
  std::filesystem::path dir_;
  ManifestWriter manifest_;
};

/// images/<index>.png name shared by the writer and the CLI.
std::string image_file_name(std::size_t index);

/// Effective worker count: `requested` > 0 wins, else the DOCFORGE_THREADS
/// environment variable, else the hardware concurrency. Always >= 1.
int resolve_threads(int requested);

/// Renders `count` pages into `sink` using `threads` workers (see
/// resolve_threads). The image at a given index does not depend on the
/// worker count or on which other indices are generated.
GenerateSummary generate(const GenConfig& config, std::size_t count,
                         DatasetSink& sink, int threads = 0);

}  // namespace docforge::synthdog

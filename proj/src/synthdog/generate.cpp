#include "docforge/synthdog/generate.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <opencv2/core.hpp>

#include "docforge/errors.hpp"
#include "docforge/json_io.hpp"
#include "docforge/synthdog/plan.hpp"
#include "docforge/synthdog/render.hpp"

namespace docforge::synthdog {

DatasetWriter::DatasetWriter(std::filesystem::path dir)
    : dir_(std::move(dir)), manifest_(dir_) {
  std::filesystem::create_directories(dir_ / "images");
}

void DatasetWriter::write(std::size_t index,
                          const std::vector<unsigned char>& png,
                          const ManifestRecord& record) {
  const std::filesystem::path path = dir_ / record.file_name;
  write_file(path, std::string(png.begin(), png.end()));
  manifest_.add(index, record);
}

void DatasetWriter::close() { manifest_.close(); }

std::string image_file_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "images/%08zu.png", index);
  return buf;
}

int resolve_threads(int requested) {
  if (requested > 0) {
    return requested;
  }
  long env_value = 0;
  if (const char* env = std::getenv("DOCFORGE_THREADS")) {
    char* end = nullptr;
    env_value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || env_value < 0) {
      throw Error(ErrorCode::ConfigError,
                  std::string("DOCFORGE_THREADS must be a non-negative "
                              "integer (0 = all cores), got \"") +
                      env + "\"");
    }
    if (env_value > 0) {
      return int(env_value);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

GenerateSummary generate(const GenConfig& config, std::size_t count,
                         DatasetSink& sink, int threads) {
  const auto start = std::chrono::steady_clock::now();
  config.validate();
  Assets assets = load_assets(config);

  const int workers = std::max(
      1, int(std::min<std::size_t>(std::size_t(resolve_threads(threads)),
                                   std::max<std::size_t>(count, 1))));
  // OpenCV's own pool would fight with ours and adds nondeterministic
  // scheduling inside some filters; keep every primitive single threaded.
  cv::setNumThreads(0);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> words{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::size_t first_error_index = 0;

  auto worker = [&]() {
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= count) {
        return;
      }
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error) {
          return;
        }
      }
      try {
        RenderPlan plan = make_plan(config, assets, index);
        RenderResult result = render(plan, assets);
        ManifestRecord record;
        record.file_name = image_file_name(index);
        record.gt_parse = result.annotation.gt_parse;
        record.words = result.annotation.words;
        sink.write(index, encode_png(result.image), record);
        words.fetch_add(result.annotation.words.size());
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
          first_error_index = index;
        }
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int i = 0; i < workers; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  if (first_error) {
    try {
      std::rethrow_exception(first_error);
    } catch (const Error& e) {
      throw Error(e.code(), "image " + std::to_string(first_error_index) +
                                ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::IoError,
                  "image " + std::to_string(first_error_index) + ": " +
                      e.what());
    }
  }

  GenerateSummary summary;
  summary.images = count;
  summary.words = words.load();
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return summary;
}

}  // namespace docforge::synthdog

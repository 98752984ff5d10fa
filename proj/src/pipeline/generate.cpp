#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "chartgen/errors.hpp"
#include "chartgen/pipeline.hpp"

namespace chartgen::pipeline {
namespace {

namespace fs = std::filesystem;

constexpr std::size_t kChunkSize = 32;
constexpr int kFeistelRounds = 4;

// Keyed bijection of [0, 2^bits) for even bits.
std::uint64_t feistel(std::uint64_t x, int bits, std::uint64_t key) {
  const int half = bits / 2;
  const std::uint64_t mask = (std::uint64_t{1} << half) - 1;
  std::uint64_t l = x >> half;
  std::uint64_t r = x & mask;
  for (int round = 0; round < kFeistelRounds; ++round) {
    const std::uint64_t f = splitmix64(r ^ mix_seed(key, static_cast<std::uint64_t>(round))) & mask;
    const std::uint64_t next = l ^ f;
    l = r;
    r = next;
  }
  return (l << half) | r;
}

// Cycle-walking restriction of the Feistel network to [0, n).
std::uint64_t permute(std::uint64_t index, std::uint64_t n, std::uint64_t key) {
  int bits = 2;
  while ((std::uint64_t{1} << bits) < n) bits += 2;
  std::uint64_t x = index;
  do {
    x = feistel(x, bits, key);
  } while (x >= n);
  return x;
}

std::string make_id(std::size_t index, std::size_t total) {
  int width = 6;
  for (std::size_t t = total; t >= 1'000'000; t /= 10) ++width;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, index);
  return buf;
}

std::string shard_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "shard_%05zu", index / kShardSize);
  return buf;
}

void write_file(const fs::path& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

void write_file(const fs::path& path, const std::string& text) { write_file(path, text.data(), text.size()); }

bool is_generated_entry(const fs::path& p) {
  const std::string name = p.filename().string();
  return name == kManifestName || name == std::string(kManifestName) + ".partial" ||
         name == "failures.jsonl" || name.rfind("shard_", 0) == 0;
}

void prepare_output(const GenConfig& config) {
  const fs::path& out = config.output_dir;
  if (fs::exists(out)) {
    if (!fs::is_directory(out)) throw IoError(out.string() + " is not a directory");
    if (!fs::is_empty(out)) {
      if (!config.overwrite) {
        throw IoError(out.string() + " is not empty; pass --overwrite to replace its contents");
      }
      std::vector<fs::path> doomed;
      for (const auto& e : fs::directory_iterator(out)) {
        if (is_generated_entry(e.path())) doomed.push_back(e.path());
      }
      for (const auto& p : doomed) fs::remove_all(p);
    }
  }
  fs::create_directories(out);
  const std::size_t shards = (config.total + kShardSize - 1) / kShardSize;
  for (std::size_t s = 0; s < shards; ++s) fs::create_directories(out / shard_name(s * kShardSize));
}

struct ChunkOutput {
  std::vector<std::string> lines;
  std::vector<FailedIndex> failures;
  std::array<std::size_t, 5> per_type{};
};

ChunkOutput run_chunk(std::size_t begin, std::size_t end, const GenConfig& config, const Resources& res) {
  ChunkOutput out;
  for (std::size_t i = begin; i < end; ++i) {
    std::optional<ChartResult> made;
    try {
      made = generate_one(config.root_seed, i, config, res);
    } catch (const GenerationFailed& e) {
      out.failures.push_back({i, e.what()});
      continue;
    }
    const ChartResult& r = *made;
    const std::string id = make_id(i, config.total);
    const std::string shard = shard_name(i);
    ManifestRecord rec;
    rec.id = id;
    rec.plot_type = r.spec.plot_type;
    rec.svg_path = shard + "/" + id + ".svg";
    rec.txt_path = shard + "/" + id + ".txt";
    rec.metadata = metadata::serialize(r.ground_truth);
    rec.seed = r.seed;
    rec.chart_seed = r.chart_seed;
    rec.attempt = r.attempt;
    rec.style_digest = layout::style_digest(r.spec.style);
    write_file(config.output_dir / rec.svg_path, r.svg.to_string());
    write_file(config.output_dir / rec.txt_path, rec.metadata);
    if (config.emit_png) {
      rec.png_path = shard + "/" + id + ".png";
      const auto png = render::rasterize(r.svg);
      write_file(config.output_dir / *rec.png_path, png.data(), png.size());
    }
    ++out.per_type[static_cast<std::size_t>(rec.plot_type)];
    out.lines.push_back(to_json_line(rec));
  }
  return out;
}

}  // namespace

std::uint64_t chart_seed(std::uint64_t root_seed, std::uint64_t index) { return mix_seed(root_seed, index); }

std::uint64_t attempt_seed(std::uint64_t chart_seed, int attempt) {
  return attempt == 0 ? chart_seed : mix_seed(chart_seed, static_cast<std::uint64_t>(attempt));
}

std::array<std::size_t, 5> type_counts(std::size_t total, const std::array<double, 5>& weights) {
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(sum > 0)) throw ConfigError("type weights must not all be zero");
  std::array<std::size_t, 5> counts{};
  std::array<double, 5> remainder{};
  std::size_t assigned = 0;
  for (std::size_t t = 0; t < 5; ++t) {
    const double quota = static_cast<double>(total) * weights[t] / sum;
    counts[t] = static_cast<std::size_t>(std::floor(quota));
    remainder[t] = quota - std::floor(quota);
    assigned += counts[t];
  }
  std::array<std::size_t, 5> order{0, 1, 2, 3, 4};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < total; k = (k + 1) % 5) {
    if (weights[order[k]] <= 0) continue;
    ++counts[order[k]];
    ++assigned;
  }
  return counts;
}

PlotType assign_type(std::size_t index, std::size_t total, const std::array<double, 5>& weights,
                     std::uint64_t root_seed) {
  if (index >= total) throw SpecError("index outside [0, total)");
  const auto counts = type_counts(total, weights);
  const std::uint64_t slot = permute(index, total, splitmix64(root_seed ^ 0x7479706573ull));
  std::uint64_t edge = 0;
  for (std::size_t t = 0; t < 5; ++t) {
    edge += counts[t];
    if (slot < edge) return kAllPlotTypes[t];
  }
  return kAllPlotTypes[4];
}

ChartResult generate_one(std::uint64_t root_seed, std::size_t index, const GenConfig& config,
                         const Resources& resources) {
  if (index >= config.total) throw SpecError("index outside [0, total)");
  const PlotType type = assign_type(index, config.total, config.type_weights, root_seed);
  const std::uint64_t cs = chart_seed(root_seed, index);
  std::string last;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t seed = attempt_seed(cs, attempt);
    try {
      BuiltChart built = build_chart(type, seed, resources, config.probs);
      render::SvgDocument doc = render::render_chart(built.spec, built.geometry);
      metadata::GroundTruth gt = ground_truth(built.spec);
      return ChartResult{std::move(built.spec), std::move(doc), std::move(gt), cs, seed, attempt};
    } catch (const LayoutError& e) {
      last = e.what();
    } catch (const IoError&) {
      throw;
    } catch (const Error& e) {
      throw GenerationFailed(index, e.what());
    }
  }
  throw GenerationFailed(index, "all " + std::to_string(kMaxAttempts) + " attempts failed: " + last);
}

std::string to_json_line(const ManifestRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["plot_type"] = std::string(to_string(r.plot_type));
  j["svg_path"] = r.svg_path;
  j["txt_path"] = r.txt_path;
  j["png_path"] = r.png_path ? nlohmann::ordered_json(*r.png_path) : nlohmann::ordered_json(nullptr);
  j["metadata"] = r.metadata;
  j["seed"] = r.seed;
  j["chart_seed"] = r.chart_seed;
  j["attempt"] = r.attempt;
  j["style_digest"] = r.style_digest;
  return j.dump();
}

ManifestRecord parse_manifest_line(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    ManifestRecord r;
    r.id = j.at("id").get<std::string>();
    const auto type = parse_plot_type(j.at("plot_type").get<std::string>());
    if (!type) throw ConfigError("unknown plot_type in manifest");
    r.plot_type = *type;
    r.svg_path = j.at("svg_path").get<std::string>();
    r.txt_path = j.at("txt_path").get<std::string>();
    if (j.contains("png_path") && !j.at("png_path").is_null()) r.png_path = j.at("png_path").get<std::string>();
    r.metadata = j.at("metadata").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.chart_seed = j.at("chart_seed").get<std::uint64_t>();
    r.attempt = j.at("attempt").get<int>();
    r.style_digest = j.at("style_digest").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed manifest row: ") + e.what());
  }
}

GenerationSummary generate_dataset(const GenConfig& config) {
  config.validate();
  return generate_dataset(config, Resources::from_config(config));
}

GenerationSummary generate_dataset(const GenConfig& config, const Resources& resources) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  prepare_output(config);

  GenerationSummary summary;
  summary.manifest_path = config.output_dir / kManifestName;
  const fs::path partial = config.output_dir / (std::string(kManifestName) + ".partial");
  std::ofstream manifest(partial, std::ios::binary | std::ios::trunc);
  if (!manifest) throw IoError("cannot write " + partial.string());

  const std::size_t chunks = (config.total + kChunkSize - 1) / kChunkSize;
  std::vector<std::optional<ChunkOutput>> done(chunks);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr error;

  auto worker = [&] {
    while (!abort) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        ChunkOutput out = run_chunk(c * kChunkSize, std::min(config.total, (c + 1) * kChunkSize), config,
                                    resources);
        std::lock_guard lock(mu);
        done[c] = std::move(out);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        abort = true;
      }
      cv.notify_all();
    }
  };

  const std::size_t n_workers = std::max<std::size_t>(1, std::min(config.workers, std::max<std::size_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);

  // Flush chunks in index order as they complete.
  for (std::size_t c = 0; c < chunks; ++c) {
    ChunkOutput out;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[c].has_value() || abort.load(); });
      if (!done[c]) break;
      out = std::move(*done[c]);
      done[c].reset();
    }
    for (const auto& l : out.lines) manifest << l << '\n';
    if (!manifest) {
      abort = true;
      std::lock_guard lock(mu);
      if (!error) error = std::make_exception_ptr(IoError("cannot write " + partial.string()));
      break;
    }
    summary.written += out.lines.size();
    for (std::size_t t = 0; t < 5; ++t) summary.per_type[t] += out.per_type[t];
    summary.failures.insert(summary.failures.end(), out.failures.begin(), out.failures.end());
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  manifest.close();
  if (!manifest) throw IoError("cannot write " + partial.string());

  std::string failures;
  for (const auto& f : summary.failures) {
    nlohmann::ordered_json j;
    j["index"] = f.index;
    j["reason"] = f.reason;
    failures += j.dump() + "\n";
  }
  write_file(config.output_dir / "failures.jsonl", failures);
  fs::rename(partial, summary.manifest_path);
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace chartgen::pipeline

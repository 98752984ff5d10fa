#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chartgen/errors.hpp"
#include "chartgen/pipeline.hpp"
#include "chartgen/vocab.hpp"

namespace {

using namespace chartgen;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct GenerateArgs {
  std::string config;
  std::uint64_t seed = 0;
  std::size_t total = 0;
  std::string out;
  std::string types;
  std::size_t workers = 1;
  bool png = false;
  bool overwrite = false;
};

int run_generate(const GenerateArgs& a, const CLI::App& cmd) {
  pipeline::GenConfig config;
  if (!a.config.empty()) config = pipeline::load_config(a.config);
  if (cmd.count("--seed")) config.root_seed = a.seed;
  if (cmd.count("--total")) config.total = a.total;
  if (cmd.count("--out")) config.output_dir = a.out;
  if (cmd.count("--types")) config.type_weights = pipeline::parse_type_weights(a.types);
  if (cmd.count("--workers")) config.workers = a.workers;
  if (a.png) config.emit_png = true;
  if (a.overwrite) config.overwrite = true;
  config.validate();

  const auto summary = pipeline::generate_dataset(config);
  std::printf("wrote %zu charts to %s\n", summary.written, summary.manifest_path.string().c_str());
  for (std::size_t t = 0; t < kAllPlotTypes.size(); ++t) {
    std::printf("  %-8s %zu\n", std::string(to_string(kAllPlotTypes[t])).c_str(), summary.per_type[t]);
  }
  const double rate = summary.seconds > 0 ? static_cast<double>(summary.written) / summary.seconds : 0;
  std::printf("elapsed %.2f s, %.1f charts/s with %zu workers\n", summary.seconds, rate, config.workers);
  for (const auto& f : summary.failures) std::fprintf(stderr, "failed: %s\n", f.reason.c_str());
  if (!summary.failures.empty()) {
    std::printf("%zu charts failed; see failures.jsonl\n", summary.failures.size());
    return kExitFailures;
  }
  return kExitOk;
}

int run_verify(const std::string& manifest) {
  const auto report = pipeline::verify_dataset(manifest);
  for (const auto& v : report.violations) {
    std::printf("%s\t%s\t%s\n", v.id.c_str(), v.invariant.c_str(), v.detail.c_str());
  }
  std::printf("checked %zu records, %zu violations\n", report.records, report.violations.size());
  for (const auto& [name, n] : report.counts) std::printf("  %-20s %zu\n", name.c_str(), n);
  return report.ok() ? kExitOk : kExitFailures;
}

int run_vocab_build(const std::string& embeddings, const std::string& seeds_path, const std::string& out_path,
                    std::size_t k, int hops) {
  std::vector<vocab::Rejection> rejected;
  const auto table = vocab::load_embeddings(embeddings, true, &rejected);
  const auto seeds = vocab::read_lines(std::filesystem::path(seeds_path));
  const auto result = vocab::build_word_groups(table, seeds, k, hops);
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write " + out_path);
  vocab::write_word_groups(out, result.groups);
  out.close();
  if (!out) throw IoError("cannot write " + out_path);
  for (const auto& r : rejected) {
    std::fprintf(stderr, "skipped line %zu (%s): %s\n", r.line, r.word.c_str(), r.reason.c_str());
  }
  if (!result.skipped.empty()) {
    std::fprintf(stderr, "seeds not in the embedding table:");
    for (const auto& s : result.skipped) std::fprintf(stderr, " %s", s.c_str());
    std::fprintf(stderr, "\n");
  }
  std::printf("%zu words loaded, %zu groups written to %s\n", table.size(), result.groups.size(),
              out_path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic chart corpus generator"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a chart corpus");
  generate->add_option("--config", gen.config, "key = value config file")->check(CLI::ExistingFile);
  generate->add_option("--total", gen.total, "Number of charts");
  generate->add_option("--seed", gen.seed, "Root seed");
  generate->add_option("--out", gen.out, "Output directory");
  generate->add_option("--types", gen.types, "Type weights, e.g. vbar=1,hbar=1,scatter=1,line=1,dot=1");
  generate->add_option("--workers", gen.workers, "Worker threads")->check(CLI::PositiveNumber);
  generate->add_flag("--png", gen.png, "Also write PNG rasters");
  generate->add_flag("--overwrite", gen.overwrite, "Replace a previous corpus in --out");

  std::string manifest;
  auto* verify = app.add_subcommand("verify", "Re-check a generated corpus");
  verify->add_option("--manifest", manifest, "Path to manifest.jsonl")->required();

  std::string embeddings, seeds, out;
  std::size_t k = 25;
  int hops = 2;
  auto* vocab_cmd = app.add_subcommand("vocab", "Vocabulary tools");
  vocab_cmd->require_subcommand(1);
  auto* build = vocab_cmd->add_subcommand("build", "Build word groups from embeddings");
  build->add_option("--embeddings", embeddings, "GloVe-format text file")->required()->check(CLI::ExistingFile);
  build->add_option("--seeds", seeds, "Seed words, one per line")->required()->check(CLI::ExistingFile);
  build->add_option("--out", out, "Output word-group file")->required();
  build->add_option("--k", k, "Neighbors per group")->check(CLI::PositiveNumber);
  build->add_option("--hops", hops, "Expansion hops (1 or 2)")->check(CLI::Range(1, 2));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen, *generate);
    if (verify->parsed()) return run_verify(manifest);
    if (build->parsed()) return run_vocab_build(embeddings, seeds, out, k, hops);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "chartgen: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "chartgen: %s\n", e.what());
    return kExitFailures;
  }
  return kExitUsage;
}

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "chartgen/errors.hpp"
#include "chartgen/pipeline.hpp"
#include "test_util.hpp"

using namespace chartgen;
using namespace chartgen::pipeline;
namespace fs = std::filesystem;

namespace {

const std::array<double, 5> kEqual{1, 1, 1, 1, 1};

const Resources& resources() {
  static const Resources r = Resources::bundled();
  return r;
}

GenConfig small_config(const fs::path& out, std::size_t total, std::uint64_t seed = 3) {
  GenConfig c;
  c.output_dir = out;
  c.total = total;
  c.root_seed = seed;
  return c;
}

std::vector<ManifestRecord> read_manifest(const fs::path& p) {
  std::ifstream in(p);
  std::vector<ManifestRecord> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(parse_manifest_line(line));
  return out;
}

std::set<std::string> ids_for(const VerifyReport& r, const std::string& invariant) {
  std::set<std::string> ids;
  for (const auto& v : r.violations) {
    if (v.invariant == invariant) ids.insert(v.id);
  }
  return ids;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("config parsing") {
  const auto c = parse_config(
      "# corpus\nseed = 42\ntotal = 500\ntypes = vbar=2,dot=1\nout = /tmp/x\npng = true\n"
      "workers = 4\nprob.grid = 0.25\nprob.outlier = 0\n");
  CHECK(c.root_seed == 42);
  CHECK(c.total == 500);
  CHECK(c.type_weights == std::array<double, 5>{2, 0, 0, 0, 1});
  CHECK(c.output_dir == "/tmp/x");
  CHECK(c.emit_png);
  CHECK(c.workers == 4);
  CHECK(c.probs.style.show_grid == 0.25);
  CHECK(c.probs.outlier == 0);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("nonsense = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("total = many\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("total\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("prob.grid = 1.5\n").validate(), ConfigError);
  CHECK_THROWS_AS(parse_config("types = pie=1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("types = vbar=0\n").validate(), ConfigError);
  CHECK_THROWS_AS(parse_config("workers = 0\n").validate(), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/chartgen.conf"), Error);
}

TEST_CASE("type counts are exact for divisible totals") {
  CHECK(type_counts(500, kEqual) == std::array<std::size_t, 5>{100, 100, 100, 100, 100});
  CHECK(type_counts(10, {1, 1, 2, 0, 1}) == std::array<std::size_t, 5>{2, 2, 4, 0, 2});
  CHECK(type_counts(0, kEqual) == std::array<std::size_t, 5>{});
}

TEST_CASE("type counts stay within one of the quota otherwise") {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    std::array<double, 5> w{};
    for (double& x : w) x = rng.bernoulli(0.2) ? 0 : rng.uniform(0.1, 5);
    if (w[0] + w[1] + w[2] + w[3] + w[4] == 0) w[0] = 1;
    const std::size_t total = rng.index(2000);
    const auto c = type_counts(total, w);
    const double sum = w[0] + w[1] + w[2] + w[3] + w[4];
    std::size_t got = 0;
    for (std::size_t t = 0; t < 5; ++t) {
      const double quota = static_cast<double>(total) * w[t] / sum;
      REQUIRE(std::fabs(static_cast<double>(c[t]) - quota) < 1.0);
      got += c[t];
    }
    REQUIRE(got == total);
  }
}

TEST_CASE("stratified assignment realizes the counts") {
  for (std::size_t total : {1, 7, 100, 500, 1013}) {
    for (std::uint64_t seed : {0ull, 42ull, 9999ull}) {
      std::array<std::size_t, 5> seen{};
      for (std::size_t i = 0; i < total; ++i) {
        const auto t = assign_type(i, total, kEqual, seed);
        ++seen[static_cast<std::size_t>(t)];
        REQUIRE(assign_type(i, total, kEqual, seed) == t);
      }
      CHECK(seen == type_counts(total, kEqual));
    }
  }
  std::size_t differ = 0;
  for (std::size_t i = 0; i < 500; ++i) differ += assign_type(i, 500, kEqual, 1) != assign_type(i, 500, kEqual, 2);
  CHECK(differ > 100);
}

TEST_CASE("seed derivation") {
  CHECK(chart_seed(42, 7) == mix_seed(42, 7));
  CHECK(attempt_seed(99, 0) == 99);
  CHECK(attempt_seed(99, 3) == mix_seed(99, 3));
}

TEST_CASE("generate_one is a pure function of its inputs") {
  GenConfig c;
  c.total = 50;
  c.root_seed = 8;
  for (std::size_t i = 0; i < 50; ++i) {
    const auto a = generate_one(8, i, c, resources());
    const auto b = generate_one(8, i, c, resources());
    REQUIRE(a.svg.to_string() == b.svg.to_string());
    REQUIRE(a.ground_truth == b.ground_truth);
    REQUIRE(a.ground_truth.size() == a.spec.size());
    REQUIRE(a.chart_seed == chart_seed(8, i));
    REQUIRE(a.seed == attempt_seed(a.chart_seed, a.attempt));
    REQUIRE(a.spec.plot_type == assign_type(i, 50, c.type_weights, 8));
  }
}

TEST_CASE("manifest rows round-trip") {
  ManifestRecord r;
  r.id = "000042";
  r.plot_type = PlotType::hbar;
  r.svg_path = "shard_00000/000042.svg";
  r.txt_path = "shard_00000/000042.txt";
  r.png_path = "shard_00000/000042.png";
  r.metadata = "3 | \"q\" <0x0A> 5 | b";
  r.seed = 0xFFFFFFFFFFFFFFFFull;
  r.chart_seed = 12;
  r.attempt = 2;
  r.style_digest = "deadbeef";
  const auto back = parse_manifest_line(to_json_line(r));
  CHECK(back.id == r.id);
  CHECK(back.plot_type == r.plot_type);
  CHECK(back.png_path == r.png_path);
  CHECK(back.metadata == r.metadata);
  CHECK(back.seed == r.seed);
  CHECK(back.attempt == 2);
  CHECK(to_json_line(back) == to_json_line(r));
  CHECK_THROWS_AS(parse_manifest_line("{\"id\": 3}"), ConfigError);
  CHECK_THROWS_AS(parse_manifest_line("not json"), ConfigError);
}

TEST_CASE("dataset layout, refusal and overwrite") {
  testutil::TempDir dir("ds");
  auto c = small_config(dir.path(), 12);
  const auto s = generate_dataset(c, resources());
  CHECK(s.written == 12);
  CHECK(s.failures.empty());
  CHECK(fs::exists(dir / "manifest.jsonl"));
  CHECK(fs::exists(dir / "failures.jsonl"));
  CHECK_FALSE(fs::exists(dir / "manifest.jsonl.partial"));
  const auto rows = read_manifest(dir / "manifest.jsonl");
  REQUIRE(rows.size() == 12);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].svg_path == "shard_00000/" + rows[i].id + ".svg");
    CHECK(testutil::read_text(dir / rows[i].txt_path) == rows[i].metadata);
  }
  CHECK(rows.front().id == "000000");
  CHECK_THROWS_AS(generate_dataset(c, resources()), Error);
  c.overwrite = true;
  c.total = 5;
  CHECK(generate_dataset(c, resources()).written == 5);
  CHECK(read_manifest(dir / "manifest.jsonl").size() == 5);
  CHECK_FALSE(fs::exists(dir / "shard_00000/000011.svg"));
}

TEST_CASE("an empty run writes an empty manifest") {
  testutil::TempDir dir("empty");
  const auto s = generate_dataset(small_config(dir.path(), 0), resources());
  CHECK(s.written == 0);
  CHECK(testutil::read_text(dir / "manifest.jsonl").empty());
}

TEST_CASE("output bytes do not depend on the worker count") {
  testutil::TempDir a("w1"), b("w3");
  auto c = small_config(a.path(), 70, 17);
  generate_dataset(c, resources());
  c.output_dir = b.path();
  c.workers = 3;
  generate_dataset(c, resources());
  CHECK(testutil::read_text(a / "manifest.jsonl") == testutil::read_text(b / "manifest.jsonl"));
  for (const auto& r : read_manifest(a / "manifest.jsonl")) {
    REQUIRE(testutil::read_text(a / r.svg_path) == testutil::read_text(b / r.svg_path));
  }
}

TEST_CASE("PNG output is listed and written") {
  testutil::TempDir dir("png");
  auto c = small_config(dir.path(), 5);
  c.emit_png = true;
  generate_dataset(c, resources());
  for (const auto& r : read_manifest(dir / "manifest.jsonl")) {
    REQUIRE(r.png_path);
    CHECK(fs::file_size(dir / *r.png_path) > 100);
  }
  CHECK(verify_dataset(dir / "manifest.jsonl").ok());
}

TEST_CASE("verifier: clean corpus, then injected faults") {
  testutil::TempDir dir("verify");
  generate_dataset(small_config(dir.path(), 40, 5), resources());
  const auto manifest = dir / "manifest.jsonl";
  const auto clean = verify_dataset(manifest);
  CHECK(clean.records == 40);
  CHECK(clean.ok());

  auto rows = read_manifest(manifest);
  fs::remove(dir / rows[3].svg_path);

  rows[10].metadata = "broken metadata without separator";

  const auto svg_path = dir / rows[20].svg_path;
  std::string svg = testutil::read_text(svg_path);
  const std::string marker = rows[20].plot_type == PlotType::line ? "class=\"mark-line\"" : "class=\"mark-";
  const auto pos = svg.find(marker);
  REQUIRE(pos != std::string::npos);
  const auto start = svg.rfind('<', pos);
  const auto end = svg.find("/>", pos) + 2;
  svg.erase(start, end - start);
  testutil::write_text(svg_path, svg);

  std::ofstream out(manifest, std::ios::trunc);
  for (const auto& r : rows) out << to_json_line(r) << '\n';
  out.close();

  const auto report = verify_dataset(manifest);
  CHECK(report.violations.size() == 3);
  CHECK(ids_for(report, "missing-file") == std::set<std::string>{rows[3].id});
  CHECK(ids_for(report, "metadata-parse") == std::set<std::string>{rows[10].id});
  CHECK(ids_for(report, "mark-count") == std::set<std::string>{rows[20].id});
}

TEST_CASE("verifier flags out-of-range data from the metadata alone") {
  VerifyReport r;
  const std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"10\" height=\"10\"></svg>";
  verify_chart("a", PlotType::dot, svg, metadata::parse("x | 11 <0x0A> y | 2"), r);
  verify_chart("b", PlotType::vbar, svg, metadata::parse("x | 1 <0x0A> y | 500"), r);
  CHECK(ids_for(r, "dot-range") == std::set<std::string>{"a"});
  CHECK(ids_for(r, "bar-ratio") == std::set<std::string>{"b"});
  CHECK(ids_for(r, "svg-malformed") == std::set<std::string>{"a", "b"});
}

TEST_CASE("verifier reports an unreadable manifest") {
  CHECK_THROWS_AS(verify_dataset("/nonexistent/manifest.jsonl"), IoError);
}

}

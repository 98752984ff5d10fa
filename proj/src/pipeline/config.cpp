#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "chartgen/errors.hpp"
#include "chartgen/pipeline.hpp"

namespace chartgen::pipeline {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

ConfigError bad(std::size_t line, const std::string& what) {
  return ConfigError("config line " + std::to_string(line) + ": " + what);
}

std::uint64_t to_u64(std::string_view v, std::size_t line) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw bad(line, "expected an integer, got '" + std::string(v) + "'");
  return out;
}

double to_double(std::string_view v, std::size_t line) {
  double out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw bad(line, "expected a number, got '" + std::string(v) + "'");
  return out;
}

bool to_bool(std::string_view v, std::size_t line) {
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw bad(line, "expected true/false, got '" + std::string(v) + "'");
}

bool is_probability(double p) { return p >= 0 && p <= 1; }

}  // namespace

void GenConfig::validate() const {
  double sum = 0;
  for (double w : type_weights) {
    if (!(w >= 0) || !std::isfinite(w)) throw ConfigError("type weights must be finite and non-negative");
    sum += w;
  }
  if (!(sum > 0)) throw ConfigError("type weights must not all be zero");
  if (workers == 0) throw ConfigError("workers must be positive");
  for (double p : {probs.style.show_ticks, probs.style.show_grid, probs.style.show_spines, probs.outlier,
                   probs.line_markers, probs.line_smoothing, probs.dot_label_omission,
                   probs.dot_ytick_removal}) {
    if (!is_probability(p)) throw ConfigError("probabilities must lie in [0, 1]");
  }
}

std::array<double, 5> parse_type_weights(std::string_view text) {
  std::array<double, 5> w{};
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = trim(text.substr(start, comma - start));
    start = comma + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ConfigError("type weight '" + std::string(item) + "' needs name=weight");
    const auto type = parse_plot_type(trim(item.substr(0, eq)));
    if (!type) throw ConfigError("unknown plot type '" + std::string(item.substr(0, eq)) + "'");
    w[static_cast<std::size_t>(*type)] = to_double(trim(item.substr(eq + 1)), 0);
  }
  return w;
}

GenConfig parse_config(std::string_view text, GenConfig c) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view l = trim(raw);
    if (l.empty() || l.front() == '#') continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) throw bad(line, "expected key = value");
    const std::string key(trim(l.substr(0, eq)));
    const std::string_view v = trim(l.substr(eq + 1));
    if (key == "seed") c.root_seed = to_u64(v, line);
    else if (key == "total") c.total = to_u64(v, line);
    else if (key == "types") c.type_weights = parse_type_weights(v);
    else if (key == "out") c.output_dir = std::string(v);
    else if (key == "png") c.emit_png = to_bool(v, line);
    else if (key == "overwrite") c.overwrite = to_bool(v, line);
    else if (key == "workers") c.workers = to_u64(v, line);
    else if (key == "places") c.places_path = std::string(v);
    else if (key == "months") c.months_path = std::string(v);
    else if (key == "days") c.days_path = std::string(v);
    else if (key == "word_groups") c.word_groups_path = std::string(v);
    else if (key == "prob.ticks") c.probs.style.show_ticks = to_double(v, line);
    else if (key == "prob.grid") c.probs.style.show_grid = to_double(v, line);
    else if (key == "prob.spines") c.probs.style.show_spines = to_double(v, line);
    else if (key == "prob.outlier") c.probs.outlier = to_double(v, line);
    else if (key == "prob.line_markers") c.probs.line_markers = to_double(v, line);
    else if (key == "prob.line_smoothing") c.probs.line_smoothing = to_double(v, line);
    else if (key == "prob.dot_label_omission") c.probs.dot_label_omission = to_double(v, line);
    else if (key == "prob.dot_ytick_removal") c.probs.dot_ytick_removal = to_double(v, line);
    else throw bad(line, "unknown key '" + key + "'");
  }
  return c;
}

GenConfig load_config(const std::filesystem::path& path, GenConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

}  // namespace chartgen::pipeline

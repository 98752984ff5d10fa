#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "chartgen/errors.hpp"
#include "chartgen/resources.hpp"
#include "chartgen/style.hpp"

namespace chartgen::layout {
namespace {

std::vector<Theme> load_themes() {
  auto text = bundled_resource("themes.json");
  if (!text) throw Error("missing bundled themes.json");
  const auto doc = nlohmann::json::parse(*text);
  std::vector<Theme> out;
  for (const auto& t : doc.at("themes")) {
    Theme th;
    th.name = t.at("name").get<std::string>();
    th.background = t.at("background").get<std::string>();
    th.axes_face = t.at("axes_face").get<std::string>();
    th.text = t.at("text").get<std::string>();
    th.grid = t.at("grid").get<std::string>();
    th.grid_width = t.at("grid_width").get<double>();
    th.grid_dash = t.at("grid_dash").get<std::string>();
    th.spine = t.at("spine").get<std::string>();
    th.spine_width = t.at("spine_width").get<double>();
    th.all_spines = t.at("spines").get<std::string>() == "all";
    th.marker_scale = t.at("marker_scale").get<double>();
    th.line_width = t.at("line_width").get<double>();
    out.push_back(std::move(th));
  }
  if (out.size() != static_cast<std::size_t>(kStyleCount)) {
    throw Error("themes.json must define exactly 8 themes");
  }
  return out;
}

std::vector<FontMetrics> load_fonts() {
  std::vector<FontMetrics> out;
  for (int i = 0; i < kFontCount; ++i) {
    const std::string name = "fonts/font" + std::to_string(i) + ".metrics";
    auto text = bundled_resource(name);
    if (!text) throw Error("missing bundled " + name);
    out.push_back(parse_font_metrics(*text));
  }
  return out;
}

void append_number(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
  out.push_back(';');
}

}  // namespace

bool StyleParams::in_range() const {
  auto within = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
  if (style_id < 0 || style_id >= kStyleCount || font_id < 0 || font_id >= kFontCount) return false;
  for (int c : {color.r, color.g, color.b}) {
    if (c < kColorMin || c > kColorMax) return false;
  }
  for (double m : margin_fracs) {
    if (!within(m, kMarginMin, kMarginMax)) return false;
  }
  return within(bar_gap_frac, kBarGapMin, kBarGapMax) && within(width_px, kFigureMin, kFigureMax) &&
         within(height_px, kFigureMin, kFigureMax) &&
         within(font_size_pt, kFontSizeMin, kFontSizeMax);
}

std::string style_digest(const StyleParams& s) {
  std::string canon;
  for (double v : {double(s.style_id), double(s.font_id), double(s.color.r), double(s.color.g),
                   double(s.color.b), double(s.show_ticks_x), double(s.show_ticks_y),
                   double(s.show_grid), double(s.show_spines), s.margin_fracs[0], s.margin_fracs[1],
                   s.margin_fracs[2], s.margin_fracs[3], s.bar_gap_frac, double(s.width_px),
                   double(s.height_px), s.font_size_pt}) {
    append_number(canon, v);
  }
  // FNV-1a, folded to 32 bits.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>((h >> 32) ^ (h & 0xffffffffu)));
  return buf;
}

StyleParams sample_style(Rng& rng, const StyleProbabilities& probs) {
  StyleParams s;
  s.style_id = static_cast<int>(rng.uniform_int(0, kStyleCount - 1));
  s.font_id = static_cast<int>(rng.uniform_int(0, kFontCount - 1));
  s.color.r = static_cast<int>(rng.uniform_int(kColorMin, kColorMax));
  s.color.g = static_cast<int>(rng.uniform_int(kColorMin, kColorMax));
  s.color.b = static_cast<int>(rng.uniform_int(kColorMin, kColorMax));
  s.show_ticks_x = rng.bernoulli(probs.show_ticks);
  s.show_ticks_y = rng.bernoulli(probs.show_ticks);
  s.show_grid = rng.bernoulli(probs.show_grid);
  s.show_spines = rng.bernoulli(probs.show_spines);
  for (double& m : s.margin_fracs) m = rng.uniform(kMarginMin, kMarginMax);
  s.bar_gap_frac = rng.uniform(kBarGapMin, kBarGapMax);
  s.width_px = static_cast<int>(rng.uniform_int(kFigureMin, kFigureMax));
  s.height_px = static_cast<int>(rng.uniform_int(kFigureMin, kFigureMax));
  s.font_size_pt = rng.uniform(kFontSizeMin, kFontSizeMax);
  return s;
}

const std::vector<Theme>& themes() {
  static const std::vector<Theme> all = load_themes();
  return all;
}

const Theme& theme(int style_id) { return themes().at(static_cast<std::size_t>(style_id)); }

FontMetrics parse_font_metrics(std::string_view text) {
  FontMetrics m;
  m.advances.fill(-1);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  int seen = 0;
  long total = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "family") {
      std::getline(ls >> std::ws, m.family);
    } else if (key == "weight") {
      ls >> m.weight;
    } else if (key == "ascent") {
      ls >> m.ascent;
    } else if (key == "descent") {
      ls >> m.descent;
    } else if (key == "advance") {
      int cp = 0;
      int w = 0;
      if (!(ls >> cp >> w) || cp < 32 || cp > 126) throw FormatError("bad advance row", line_no);
      m.advances[static_cast<std::size_t>(cp - 32)] = w;
      ++seen;
      total += w;
    } else {
      throw FormatError("unknown key '" + key + "'", line_no);
    }
  }
  if (m.family.empty() || m.ascent <= 0 || seen == 0) throw Error("incomplete font metrics table");
  m.average_advance = static_cast<int>(total / seen);
  return m;
}

const FontMetrics& font(int font_id) {
  static const std::vector<FontMetrics> all = load_fonts();
  return all.at(static_cast<std::size_t>(font_id));
}

}  // namespace chartgen::layout

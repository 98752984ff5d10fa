#pragma once

// Reference implementations used only by the tests. Each one is written from
// the definition, without calling the library routine it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chartgen/geometry.hpp"

namespace oracle {

inline std::string data_path(const std::string& name) { return std::string(CHARTGEN_DATA_DIR) + "/" + name; }

// ---- embeddings ------------------------------------------------------------

struct RawTable {
  std::vector<std::string> words;
  std::vector<std::vector<float>> vectors;
};

inline bool ascii_only(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

inline RawTable read_raw(const std::string& path, bool filter_ascii) {
  RawTable t;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string w;
    if (!(ls >> w)) continue;
    if (filter_ascii && !ascii_only(w)) continue;
    std::vector<float> v;
    float f;
    while (ls >> f) v.push_back(f);
    t.words.push_back(w);
    t.vectors.push_back(v);
  }
  return t;
}

inline double cosine(const std::vector<float>& a, const std::vector<float>& b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// Full ranking of every other word: similarity descending, then word ascending.
inline std::vector<std::string> ranking(const RawTable& t, const std::string& query) {
  const auto q = std::find(t.words.begin(), t.words.end(), query) - t.words.begin();
  std::vector<std::pair<double, std::string>> all;
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    if (static_cast<long>(i) == q) continue;
    all.emplace_back(cosine(t.vectors[q], t.vectors[i]), t.words[i]);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::string> out;
  for (auto& [s, w] : all) out.push_back(w);
  return out;
}

inline std::vector<std::string> top_k(const RawTable& t, const std::string& query, std::size_t k) {
  auto r = ranking(t, query);
  if (r.size() > k) r.resize(k);
  return r;
}

// Exhaustive expansion: every seed in the table, then (for two hops) every
// word reached in hop one, each mapped to its own top-k list.
inline std::map<std::string, std::vector<std::string>> expand_groups(const RawTable& t,
                                                                   const std::vector<std::string>& seeds,
                                                                   std::size_t k, int hops) {
  std::map<std::string, std::vector<std::string>> groups;
  std::set<std::string> known(t.words.begin(), t.words.end());
  std::vector<std::string> frontier;
  for (const auto& s : seeds) {
    if (!known.count(s) || groups.count(s)) continue;
    groups[s] = top_k(t, s, k);
    frontier.push_back(s);
  }
  if (hops == 2) {
    std::vector<std::string> reached;
    for (const auto& s : frontier) {
      for (const auto& m : groups[s]) reached.push_back(m);
    }
    for (const auto& m : reached) {
      if (!groups.count(m)) groups[m] = top_k(t, m, k);
    }
  }
  return groups;
}

// ---- numbers ---------------------------------------------------------------

// Round to `digits` significant digits via the C library's correctly rounded
// decimal conversion (ties to even on the exact binary value).
inline double round_sig(double x, int digits = 4) {
  if (x == 0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

// Plain decimal text of a value rounded to `digits` significant digits,
// built from the %e digit string by moving the decimal point.
inline std::string plain_decimal(double x, int digits = 4) {
  if (x == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  std::string s = buf;
  const bool neg = s[0] == '-';
  if (neg) s.erase(0, 1);
  const auto epos = s.find('e');
  const int exp10 = std::atoi(s.c_str() + epos + 1);
  std::string mant;
  for (char c : s.substr(0, epos)) {
    if (c != '.') mant += c;
  }
  std::string out;
  const int point = exp10 + 1;  // digits before the decimal point
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mant;
  } else if (point >= static_cast<int>(mant.size())) {
    out = mant + std::string(static_cast<std::size_t>(point) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(point)) + "." + mant.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

inline double eval_poly(const std::vector<double>& coeffs, double x) {
  double y = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) y += coeffs[i] * std::pow(x, static_cast<double>(i));
  return y;
}

// ---- ticks -----------------------------------------------------------------

struct TickChoice {
  double step;
  long long first;
  long long last;
};

// Scans every 1/2/2.5/5 x 10^k step for k in [-12, 12]; keeps the one whose
// interval count is closest to `target`, preferring the smaller step.
inline TickChoice best_ticks(double vmin, double vmax, int target) {
  TickChoice best{0, 0, 0};
  long long best_diff = -1;
  for (int k = -12; k <= 12; ++k) {
    for (double m : {1.0, 2.0, 2.5, 5.0}) {
      const double step = m * std::pow(10.0, k);
      const auto first = static_cast<long long>(std::floor(vmin / step + 1e-9));
      const auto last = static_cast<long long>(std::ceil(vmax / step - 1e-9));
      const long long diff = std::llabs(last - first - target);
      if (best_diff < 0 || diff < best_diff || (diff == best_diff && step < best.step)) {
        best = {step, first, last};
        best_diff = diff;
      }
    }
  }
  return best;
}

// ---- geometry --------------------------------------------------------------

inline bool boxes_intersect(const chartgen::Rect& a, const chartgen::Rect& b) {
  const double w = std::min(a.x + a.width, b.x + b.width) - std::max(a.x, b.x);
  const double h = std::min(a.y + a.height, b.y + b.height) - std::max(a.y, b.y);
  return w > 0 && h > 0;
}

inline bool any_overlap(const std::vector<chartgen::Rect>& boxes) {
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (boxes_intersect(boxes[i], boxes[j])) return true;
    }
  }
  return false;
}

inline double min_pairwise_distance(const std::vector<chartgen::Point>& pts) {
  double best = INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y));
    }
  }
  return best;
}

// ---- font tables -----------------------------------------------------------

struct RawFont {
  int ascent = 0;
  int descent = 0;
  std::map<int, int> advances;
};

inline RawFont read_font(int font_id) {
  RawFont f;
  std::ifstream in(data_path("fonts/font" + std::to_string(font_id) + ".metrics"));
  std::string key;
  while (in >> key) {
    if (key == "ascent") {
      in >> f.ascent;
    } else if (key == "descent") {
      in >> f.descent;
    } else if (key == "advance") {
      int cp, w;
      in >> cp >> w;
      f.advances[cp] = w;
    } else {
      std::string rest;
      std::getline(in, rest);
    }
  }
  return f;
}

// ---- labels ----------------------------------------------------------------

inline const std::array<std::string, 12> kShortMonths{"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                      "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

// True when `labels` is a contiguous run of `table`.
inline bool contiguous_run(const std::vector<std::string>& labels, const std::vector<std::string>& table) {
  for (std::size_t start = 0; start + labels.size() <= table.size(); ++start) {
    if (std::equal(labels.begin(), labels.end(), table.begin() + static_cast<long>(start))) return true;
  }
  return false;
}

}  // namespace oracle

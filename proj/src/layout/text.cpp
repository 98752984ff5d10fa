#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <numbers>
#include <numeric>

#include "chartgen/layout.hpp"

namespace chartgen::layout {
namespace {

std::atomic<std::size_t> g_missing{0};

void note_missing() {
  if (g_missing.fetch_add(1) == 0) {
    std::cerr << "chartgen: glyph missing from metrics table, using average advance\n";
  }
}

}  // namespace

std::size_t missing_glyph_count() { return g_missing.load(); }

Extent estimate_text_extent(std::string_view text, int font_id, double size_pt) {
  const FontMetrics& m = font(font_id);
  const double px = pt_to_px(size_pt) / 1000.0;
  long units = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) == 0x80) continue;  // UTF-8 continuation byte
    int adv = -1;
    if (c >= 32 && c <= 126) adv = m.advances[c - 32];
    if (adv < 0) {
      note_missing();
      adv = m.average_advance;
    }
    units += adv;
  }
  return {static_cast<double>(units) * px, static_cast<double>(m.ascent + m.descent) * px};
}

bool detect_label_overlap(std::span<const Rect> boxes) {
  std::vector<std::size_t> order(boxes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return boxes[a].x < boxes[b].x || (boxes[a].x == boxes[b].x && a < b);
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Rect& a = boxes[order[i]];
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Rect& b = boxes[order[j]];
      if (b.x >= a.right()) break;
      if (a.intersects(b)) return true;
    }
  }
  return false;
}

const char* css_class(TextRole role) {
  switch (role) {
    case TextRole::tick_x: return "tick-label-x";
    case TextRole::tick_y: return "tick-label-y";
    case TextRole::title_main: return "title-main";
    case TextRole::title_x: return "title-x";
    case TextRole::title_y: return "title-y";
  }
  return "text";
}

Rect text_box(const TextItem& item) {
  const FontMetrics& m = font(item.font_id);
  const Extent ext = estimate_text_extent(item.text, item.font_id, item.size_pt);
  const double px = pt_to_px(item.size_pt) / 1000.0;
  const double ascent = m.ascent * px;
  const double descent = m.descent * px;
  double x0 = 0;
  if (item.align == Anchor::middle) x0 = -ext.width / 2;
  if (item.align == Anchor::end) x0 = -ext.width;

  const double th = item.rotation_deg * std::numbers::pi / 180.0;
  const double c = std::cos(th);
  const double s = std::sin(th);
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (double x : {x0, x0 + ext.width}) {
    for (double y : {-ascent, descent}) {
      const double rx = x * c - y * s;
      const double ry = x * s + y * c;
      minx = std::min(minx, rx);
      maxx = std::max(maxx, rx);
      miny = std::min(miny, ry);
      maxy = std::max(maxy, ry);
    }
  }
  return {item.anchor.x + minx, item.anchor.y + miny, maxx - minx, maxy - miny};
}

}  // namespace chartgen::layout

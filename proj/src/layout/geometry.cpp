#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <tuple>

#include "chartgen/errors.hpp"
#include "chartgen/layout.hpp"

namespace chartgen::layout {
namespace {

constexpr double kPad = 3.0;
constexpr double kMinAxesPx = 60.0;
constexpr double kTitleScale = 1.3;
constexpr double kAxisTitleScale = 1.1;
constexpr double kMinTitlePt = 6.0;

std::string tick_text(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

double span_or_one(double lo, double hi) { return hi > lo ? hi - lo : 1.0; }

std::pair<double, double> padded_range(double lo, double hi) {
  if (lo == hi) {
    const double d = std::max(1.0, std::fabs(lo) * 0.1);
    return {lo - d, hi + d};
  }
  const double d = (hi - lo) * 0.05;
  return {lo - d, hi + d};
}

std::vector<Tick> numeric_ticks(double lo, double hi, int target, bool integer_only,
                                const std::vector<double>& fallback) {
  const double tol = 1e-9 * span_or_one(lo, hi);
  std::vector<Tick> out;
  for (double v : nice_ticks(lo, hi, target)) {
    if (v < lo - tol || v > hi + tol) continue;
    if (integer_only && v != std::round(v)) continue;
    out.push_back({v, tick_text(v), true});
  }
  if (out.size() < 2 && !fallback.empty()) {
    out.clear();
    for (double v : fallback) out.push_back({v, tick_text(v), true});
  }
  return out;
}

std::vector<Tick> category_ticks(const std::vector<std::string>& labels, bool reversed) {
  std::vector<Tick> out;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double pos = reversed ? static_cast<double>(n - 1 - i) : static_cast<double>(i);
    out.push_back({pos, labels[i], true});
  }
  return out;
}

struct Attempt {
  double rotation;
  double tick_scale;
  int target;
};

struct Outcome {
  std::optional<Geometry> geometry;
  bool geometry_failure = false;
  std::string why;
};

// Box of `item` placed at the origin.
Rect local_box(TextItem item) {
  item.anchor = {0, 0};
  return text_box(item);
}

double line_height(int font_id, double pt) {
  const FontMetrics& m = font(font_id);
  return (m.ascent + m.descent) / 1000.0 * pt_to_px(pt);
}

double ascent_px(int font_id, double pt) { return font(font_id).ascent / 1000.0 * pt_to_px(pt); }
double descent_px(int font_id, double pt) { return font(font_id).descent / 1000.0 * pt_to_px(pt); }

double fit_title(const std::string& text, int font_id, double pt, double limit) {
  if (text.empty()) return pt;
  while (estimate_text_extent(text, font_id, pt).width > limit) {
    pt *= 0.9;
    if (pt < kMinTitlePt) throw OverlapError("title does not fit: " + text);
  }
  return pt;
}

struct Plan {
  const ChartSpec& spec;
  const StyleParams& style;
  DataWindow window;
  double main_pt = 0;
  double xtitle_pt = 0;
  double ytitle_pt = 0;
};

bool x_numeric(const ChartSpec& spec) {
  switch (spec.plot_type) {
    case PlotType::hbar:
    case PlotType::scatter: return true;
    case PlotType::line: return spec.x_kind == XAxisKind::numeric;
    default: return false;
  }
}

bool y_numeric(const ChartSpec& spec) { return spec.plot_type != PlotType::hbar; }

std::vector<Tick> x_ticks(const Plan& p, int target) {
  const ChartSpec& s = p.spec;
  const DataWindow& w = p.window;
  if (x_numeric(s)) {
    const bool integer_only = s.plot_type == PlotType::line && s.x_value_kind == ValueKind::integer;
    return numeric_ticks(w.xmin, w.xmax, target, integer_only,
                         s.plot_type == PlotType::line ? s.x_values : std::vector<double>{});
  }
  auto ticks = category_ticks(s.x_labels, false);
  if (s.plot_type == PlotType::dot && s.flags.dot_omit_x_labels) {
    for (std::size_t i = 1; i < ticks.size(); i += 2) ticks[i].labeled = false;
  }
  return ticks;
}

std::vector<Tick> y_ticks(const Plan& p, int target) {
  const ChartSpec& s = p.spec;
  if (!y_numeric(s)) return category_ticks(s.x_labels, true);
  if (s.plot_type == PlotType::dot) {
    if (s.flags.dot_hide_y_ticks) return {};
    return numeric_ticks(0, series::kDotMax, std::min(target, 5), true, {});
  }
  return numeric_ticks(p.window.ymin, p.window.ymax, target, false, {});
}

Outcome try_layout(const Plan& p, const Attempt& a) {
  const ChartSpec& spec = p.spec;
  const StyleParams& st = p.style;
  const int fid = st.font_id;
  const double W = st.width_px;
  const double H = st.height_px;
  const double tick_pt = st.font_size_pt * a.tick_scale;

  Geometry g;
  g.figure = {0, 0, W, H};
  g.data_window = p.window;
  g.x_axis.ticks = x_ticks(p, a.target);
  g.x_axis.show_marks = st.show_ticks_x;
  g.x_axis.label_rotation = a.rotation;
  g.y_axis.ticks = y_ticks(p, a.target);
  g.y_axis.show_marks = st.show_ticks_y && !(spec.plot_type == PlotType::dot && spec.flags.dot_hide_y_ticks);

  // Tick-label items relative to their anchors.
  const Anchor x_align = a.rotation == 0 ? Anchor::middle : Anchor::end;
  std::vector<TextItem> xs;
  std::vector<Rect> xs_local;
  double x_top = 0, x_bottom = 0;
  for (const Tick& t : g.x_axis.ticks) {
    if (!t.labeled) continue;
    TextItem it{t.label, TextRole::tick_x, {}, x_align, tick_pt, fid, -a.rotation};
    const Rect r = local_box(it);
    if (xs.empty()) {
      x_top = r.y;
      x_bottom = r.bottom();
    }
    x_top = std::min(x_top, r.y);
    x_bottom = std::max(x_bottom, r.bottom());
    xs.push_back(std::move(it));
    xs_local.push_back(r);
  }
  const double x_band = xs.empty() ? 0 : x_bottom - x_top;

  const double y_mid_shift = (ascent_px(fid, tick_pt) - descent_px(fid, tick_pt)) / 2;
  std::vector<TextItem> ys;
  double y_band = 0;
  for (const Tick& t : g.y_axis.ticks) {
    if (!t.labeled) continue;
    TextItem it{t.label, TextRole::tick_y, {}, Anchor::end, tick_pt, fid, 0};
    y_band = std::max(y_band, local_box(it).width);
    ys.push_back(std::move(it));
  }

  const double tick_x = g.x_axis.show_marks ? kTickLength : 0;
  const double tick_y = g.y_axis.show_marks ? kTickLength : 0;
  const double label_h = line_height(fid, tick_pt);
  const double x_pad = std::max(kPad, 0.55 * label_h);
  const double main_h = spec.titles.main.empty() ? 0 : line_height(fid, p.main_pt) + kPad;
  const double xt_h = spec.titles.x.empty() ? 0 : line_height(fid, p.xtitle_pt) + kPad;
  const double yt_h = spec.titles.y.empty() ? 0 : line_height(fid, p.ytitle_pt) + kPad;

  const double m_left = W * st.margin(Side::left);
  const double m_right = W * st.margin(Side::right);
  const double m_top = H * st.margin(Side::top);
  const double m_bottom = H * st.margin(Side::bottom);

  const double left = m_left + yt_h + (ys.empty() ? 0 : y_band + kPad) + tick_y;
  const double right = W - m_right;
  const double top = m_top + main_h;
  const double bottom = H - m_bottom - xt_h - (xs.empty() ? 0 : x_band + x_pad) - tick_x;
  if (right - left < kMinAxesPx || bottom - top < kMinAxesPx) {
    return {std::nullopt, true, "margins leave no usable axes area"};
  }
  g.axes_rect = {left, top, right - left, bottom - top};
  g.transform = Transform(p.window, g.axes_rect);

  if (!x_numeric(spec)) {
    g.slot_px = g.transform.scale_x();
  } else if (spec.plot_type == PlotType::hbar) {
    g.slot_px = g.transform.scale_y();
  }

  // Place tick labels.
  const double x_base = bottom + tick_x + x_pad - x_top;
  std::size_t k = 0;
  for (const Tick& t : g.x_axis.ticks) {
    if (!t.labeled) continue;
    TextItem& it = xs[k];
    double ax = g.transform.to_px_x(t.value);
    if (a.rotation == 90) ax -= xs_local[k].x + xs_local[k].width / 2;
    it.anchor = snap_px(Point{ax, x_base});
    ++k;
  }
  k = 0;
  for (const Tick& t : g.y_axis.ticks) {
    if (!t.labeled) continue;
    ys[k].anchor = snap_px(Point{left - tick_y - kPad, g.transform.to_px_y(t.value) + y_mid_shift});
    ++k;
  }

  g.texts = std::move(xs);
  g.texts.insert(g.texts.end(), std::make_move_iterator(ys.begin()),
                 std::make_move_iterator(ys.end()));
  const double cx = (left + right) / 2;
  if (!spec.titles.main.empty()) {
    g.texts.push_back({spec.titles.main, TextRole::title_main,
                       snap_px(Point{cx, m_top + ascent_px(fid, p.main_pt)}), Anchor::middle,
                       p.main_pt, fid, 0});
  }
  if (!spec.titles.x.empty()) {
    g.texts.push_back({spec.titles.x, TextRole::title_x,
                       snap_px(Point{cx, H - m_bottom - descent_px(fid, p.xtitle_pt)}),
                       Anchor::middle, p.xtitle_pt, fid, 0});
  }
  if (!spec.titles.y.empty()) {
    g.texts.push_back({spec.titles.y, TextRole::title_y,
                       snap_px(Point{m_left + ascent_px(fid, p.ytitle_pt), (top + bottom) / 2}),
                       Anchor::middle, p.ytitle_pt, fid, -90});
  }

  std::vector<Rect> boxes;
  boxes.reserve(g.texts.size());
  for (const TextItem& it : g.texts) {
    const Rect r = text_box(it);
    if (!g.figure.contains(r)) return {std::nullopt, false, "text leaves the figure: " + it.text};
    boxes.push_back(r);
  }
  if (detect_label_overlap(boxes)) return {std::nullopt, false, "text labels overlap"};
  return {std::move(g), false, {}};
}

}  // namespace

DataWindow data_window_for(const ChartSpec& spec) {
  if (spec.window) return *spec.window;
  const auto& v = spec.y_values.values;
  const double n = static_cast<double>(spec.size());
  const double vmax = v.empty() ? 1.0 : *std::max_element(v.begin(), v.end());
  switch (spec.plot_type) {
    case PlotType::vbar: return {-0.5, n - 0.5, 0.0, vmax * 1.05};
    case PlotType::hbar: return {0.0, vmax * 1.05, -0.5, n - 0.5};
    case PlotType::dot: return {-0.5, n - 0.5, 0.0, kDotWindowTop};
    case PlotType::scatter:
    case PlotType::line: {
      const auto [ymin_it, ymax_it] = std::minmax_element(v.begin(), v.end());
      const auto [y0, y1] = padded_range(*ymin_it, *ymax_it);
      double x0 = -0.5, x1 = n - 0.5;
      if (spec.plot_type == PlotType::scatter || spec.x_kind == XAxisKind::numeric) {
        const auto [xmin_it, xmax_it] = std::minmax_element(spec.x_values.begin(), spec.x_values.end());
        std::tie(x0, x1) = padded_range(*xmin_it, *xmax_it);
      }
      return {x0, x1, y0, y1};
    }
  }
  return {};
}

Geometry compute_geometry(const ChartSpec& spec, const StyleParams& style) {
  if (spec.size() == 0 && !(spec.plot_type == PlotType::scatter && spec.window)) {
    throw SpecError("compute_geometry needs data");
  }
  const double W = style.width_px;
  const double H = style.height_px;
  Plan plan{spec, style, data_window_for(spec)};
  const double inner_w = W * (1 - style.margin(Side::left) - style.margin(Side::right));
  const double inner_h = H * (1 - style.margin(Side::top) - style.margin(Side::bottom));
  plan.main_pt = fit_title(spec.titles.main, style.font_id, style.font_size_pt * kTitleScale, inner_w);
  plan.xtitle_pt =
      fit_title(spec.titles.x, style.font_id, style.font_size_pt * kAxisTitleScale, inner_w * 0.8);
  plan.ytitle_pt =
      fit_title(spec.titles.y, style.font_id, style.font_size_pt * kAxisTitleScale, inner_h * 0.6);

  bool any_numeric = x_numeric(spec) || y_numeric(spec);
  std::string last_overlap;
  bool only_geometry = true;
  for (double scale : {1.0, 0.85, 0.7}) {
    for (double rotation : {0.0, 45.0, 90.0}) {
      for (int target : {6, 4, 3}) {
        if (!any_numeric && target != 6) continue;
        Outcome out = try_layout(plan, {rotation, scale, target});
        if (out.geometry) return std::move(*out.geometry);
        if (!out.geometry_failure) {
          only_geometry = false;
          last_overlap = out.why;
        } else if (only_geometry) {
          last_overlap = out.why;
        }
      }
    }
  }
  if (only_geometry) throw GeometryError(last_overlap);
  throw OverlapError(last_overlap);
}

}  // namespace chartgen::layout

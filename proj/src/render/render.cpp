#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <json.hpp>

#include "chartgen/errors.hpp"
#include "chartgen/render.hpp"

namespace chartgen::render {
namespace {

using svg::Element;

std::string hex(const layout::Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

Element line(double x1, double y1, double x2, double y2, const std::string& cls,
             const std::string& stroke, double width) {
  Element e("line");
  e.attr("class", cls).attr("x1", x1).attr("y1", y1).attr("x2", x2).attr("y2", y2);
  e.attr("stroke", stroke).attr("stroke-width", num(width));
  return e;
}

Element circle(Point c, double r, const std::string& cls, const std::string& fill) {
  Element e("circle");
  e.attr("class", cls).attr("cx", c.x).attr("cy", c.y).attr("r", r).attr("fill", fill);
  return e;
}

std::string point_list(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s.push_back(' ');
    s += svg::format_coord(pts[i].x);
    s.push_back(',');
    s += svg::format_coord(pts[i].y);
  }
  return s;
}

// Fritsch-Carlson monotone cubic through pts (x strictly increasing), as an
// SVG path whose segment endpoints are exactly the input points.
std::string monotone_path(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> d(n - 1), m(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    d[k] = (pts[k + 1].y - pts[k].y) / (pts[k + 1].x - pts[k].x);
  }
  m[0] = d[0];
  m[n - 1] = d[n - 2];
  for (std::size_t k = 1; k + 1 < n; ++k) {
    m[k] = d[k - 1] * d[k] <= 0 ? 0.0 : (d[k - 1] + d[k]) / 2;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (d[k] == 0) {
      m[k] = m[k + 1] = 0;
      continue;
    }
    const double a = m[k] / d[k];
    const double b = m[k + 1] / d[k];
    const double s = a * a + b * b;
    if (s > 9) {
      const double t = 3 / std::sqrt(s);
      m[k] = t * a * d[k];
      m[k + 1] = t * b * d[k];
    }
  }
  auto xy = [](double x, double y) { return svg::format_coord(x) + "," + svg::format_coord(y); };
  std::string s = "M " + xy(pts[0].x, pts[0].y);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double h = (pts[k + 1].x - pts[k].x) / 3;
    s += " C " + xy(pts[k].x + h, pts[k].y + m[k] * h) + " " +
         xy(pts[k + 1].x - h, pts[k + 1].y - m[k + 1] * h) + " " + xy(pts[k + 1].x, pts[k + 1].y);
  }
  return s;
}

std::string x_kind_name(XAxisKind k) {
  switch (k) {
    case XAxisKind::categorical: return "categorical";
    case XAxisKind::numeric: return "numeric";
    case XAxisKind::date: return "date";
  }
  return "categorical";
}

double bar_width_frac(const ChartSpec& spec) { return 1.0 - spec.style.bar_gap_frac; }

double dot_radius(const layout::Geometry& g) {
  return 0.45 * std::min(g.transform.scale_x(), g.transform.scale_y());
}

std::string geometry_json(const ChartSpec& spec, const layout::Geometry& g) {
  const auto& r = g.axes_rect;
  const auto& w = g.data_window;
  nlohmann::ordered_json j;
  j["plot_type"] = std::string(to_string(spec.plot_type));
  j["figure"] = {spec.style.width_px, spec.style.height_px};
  j["axes"] = {r.x, r.y, r.width, r.height};
  j["window"] = {w.xmin, w.xmax, w.ymin, w.ymax};
  j["n"] = spec.size();
  j["x_kind"] = x_kind_name(spec.x_kind);
  j["bar_width"] = bar_width_frac(spec);
  j["marker_radius"] = spec.plot_type == PlotType::dot ? dot_radius(g) : spec.marker_radius_px;
  j["min_sep"] = spec.min_sep_px;
  j["smoothing"] = spec.flags.line_smoothing;
  j["markers"] = spec.flags.line_markers;
  return j.dump();
}

Element text_element(const layout::TextItem& t, const std::string& fill) {
  const auto& f = layout::font(t.font_id);
  Element e("text");
  e.attr("class", layout::css_class(t.role));
  e.attr("x", t.anchor.x).attr("y", t.anchor.y);
  e.attr("font-family", f.family);
  if (f.weight == "bold") e.attr("font-weight", "bold");
  e.attr("font-size", num(layout::pt_to_px(t.size_pt)));
  e.attr("data-font", std::to_string(t.font_id));
  char pt[32];
  std::snprintf(pt, sizeof pt, "%.17g", t.size_pt);
  e.attr("data-pt", pt);
  const char* anchor = t.align == layout::Anchor::start ? "start"
                       : t.align == layout::Anchor::middle ? "middle"
                                                           : "end";
  e.attr("text-anchor", anchor);
  if (t.rotation_deg != 0) {
    e.attr("transform", "rotate(" + num(t.rotation_deg) + " " + svg::format_coord(t.anchor.x) + " " +
                            svg::format_coord(t.anchor.y) + ")");
  }
  e.attr("fill", fill);
  e.text = t.text;
  return e;
}

Element marks(const ChartSpec& spec, const layout::Geometry& g, const layout::Theme& th) {
  const auto& tf = g.transform;
  const auto& v = spec.y_values.values;
  const std::size_t n = v.size();
  const std::string color = hex(spec.style.color);
  Element group("g");
  group.attr("class", "marks");
  switch (spec.plot_type) {
    case PlotType::vbar: {
      const double half = bar_width_frac(spec) / 2;
      const double base = snap_px(tf.to_px_y(0));
      for (std::size_t i = 0; i < n; ++i) {
        const double x0 = snap_px(tf.to_px_x(i - half));
        const double x1 = snap_px(tf.to_px_x(i + half));
        const double top = snap_px(tf.to_px_y(v[i]));
        Element r("rect");
        r.attr("class", kBarClass).attr("x", x0).attr("y", top).attr("width", x1 - x0);
        r.attr("height", base - top).attr("fill", color);
        group.add(std::move(r));
      }
      break;
    }
    case PlotType::hbar: {
      const double half = bar_width_frac(spec) / 2;
      const double base = snap_px(tf.to_px_x(0));
      for (std::size_t i = 0; i < n; ++i) {
        const double pos = static_cast<double>(n - 1 - i);
        const double y0 = snap_px(tf.to_px_y(pos + half));
        const double y1 = snap_px(tf.to_px_y(pos - half));
        const double end = snap_px(tf.to_px_x(v[i]));
        Element r("rect");
        r.attr("class", kBarClass).attr("x", base).attr("y", y0).attr("width", end - base);
        r.attr("height", y1 - y0).attr("fill", color);
        group.add(std::move(r));
      }
      break;
    }
    case PlotType::scatter: {
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return spec.x_values[a] < spec.x_values[b]; });
      for (std::size_t i : order) {
        group.add(circle(snap_px(tf.to_px({spec.x_values[i], v[i]})), spec.marker_radius_px, kPointClass,
                         color));
      }
      break;
    }
    case PlotType::line: {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back(snap_px(tf.to_px({spec.x_values[i], v[i]})));
      Element path(spec.flags.line_smoothing ? "path" : "polyline");
      path.attr("class", kLineClass);
      if (spec.flags.line_smoothing) {
        path.attr("d", monotone_path(pts));
      } else {
        path.attr("points", point_list(pts));
      }
      path.attr("fill", "none").attr("stroke", color).attr("stroke-width", num(th.line_width));
      group.add(std::move(path));
      if (spec.flags.line_markers) {
        for (const Point& p : pts) group.add(circle(p, spec.marker_radius_px, "line-marker", color));
      }
      break;
    }
    case PlotType::dot: {
      const double r = dot_radius(g);
      for (std::size_t i = 0; i < n; ++i) {
        const auto count = static_cast<int>(v[i]);
        for (int k = 1; k <= count; ++k) {
          group.add(circle(snap_px(tf.to_px({static_cast<double>(i), k - 0.5})), r, kDotClass, color));
        }
      }
      break;
    }
  }
  return group;
}

}  // namespace

std::string SvgDocument::to_string() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  root.write(out);
  return out;
}

SvgDocument render_chart(const ChartSpec& spec, const layout::Geometry& g) {
  spec.validate();
  std::vector<Rect> boxes;
  for (const auto& t : g.texts) boxes.push_back(layout::text_box(t));
  if (layout::detect_label_overlap(boxes)) throw OverlapError("text labels overlap");

  const auto& th = layout::theme(spec.style.style_id);
  const auto& st = spec.style;
  const auto& ax = g.axes_rect;
  const auto& tf = g.transform;

  SvgDocument doc;
  doc.width = st.width_px;
  doc.height = st.height_px;
  Element& root = doc.root;
  root.tag = "svg";
  root.attr("xmlns", "http://www.w3.org/2000/svg").attr("version", "1.1");
  root.attr("width", std::to_string(doc.width)).attr("height", std::to_string(doc.height));
  root.attr("viewBox", "0 0 " + std::to_string(doc.width) + " " + std::to_string(doc.height));

  Element meta("metadata");
  meta.attr("id", kGeometryId);
  meta.text = geometry_json(spec, g);
  root.add(std::move(meta));

  Element bg("rect");
  bg.attr("class", "background").attr("x", "0").attr("y", "0");
  bg.attr("width", std::to_string(doc.width)).attr("height", std::to_string(doc.height));
  bg.attr("fill", th.background);
  root.add(std::move(bg));

  Element face("rect");
  face.attr("class", "axes-face").attr("x", ax.x).attr("y", ax.y).attr("width", ax.width);
  face.attr("height", ax.height).attr("fill", th.axes_face);
  root.add(std::move(face));

  if (st.show_grid) {
    Element grid("g");
    grid.attr("class", "grid");
    auto add_grid = [&](Element e) {
      if (!th.grid_dash.empty()) e.attr("stroke-dasharray", th.grid_dash);
      grid.add(std::move(e));
    };
    for (const auto& t : g.x_axis.ticks) {
      const double x = snap_px(tf.to_px_x(t.value));
      add_grid(line(x, ax.y, x, ax.bottom(), "grid-line", th.grid, th.grid_width));
    }
    for (const auto& t : g.y_axis.ticks) {
      const double y = snap_px(tf.to_px_y(t.value));
      add_grid(line(ax.x, y, ax.right(), y, "grid-line", th.grid, th.grid_width));
    }
    root.add(std::move(grid));
  }

  root.add(marks(spec, g, th));

  if (st.show_spines) {
    Element spines("g");
    spines.attr("class", "spines");
    const auto w = th.spine_width;
    spines.add(line(ax.x, ax.bottom(), ax.right(), ax.bottom(), "spine", th.spine, w));
    spines.add(line(ax.x, ax.y, ax.x, ax.bottom(), "spine", th.spine, w));
    if (th.all_spines) {
      spines.add(line(ax.x, ax.y, ax.right(), ax.y, "spine", th.spine, w));
      spines.add(line(ax.right(), ax.y, ax.right(), ax.bottom(), "spine", th.spine, w));
    }
    root.add(std::move(spines));
  }

  Element ticks("g");
  ticks.attr("class", "ticks");
  if (g.x_axis.show_marks) {
    for (const auto& t : g.x_axis.ticks) {
      const double x = snap_px(tf.to_px_x(t.value));
      ticks.add(line(x, ax.bottom(), x, ax.bottom() + layout::kTickLength, "tick", th.spine, 1));
    }
  }
  if (g.y_axis.show_marks) {
    for (const auto& t : g.y_axis.ticks) {
      const double y = snap_px(tf.to_px_y(t.value));
      ticks.add(line(ax.x - layout::kTickLength, y, ax.x, y, "tick", th.spine, 1));
    }
  }
  if (!ticks.children.empty()) root.add(std::move(ticks));

  Element labels("g");
  labels.attr("class", "labels");
  for (const auto& t : g.texts) labels.add(text_element(t, th.text));
  root.add(std::move(labels));
  return doc;
}

}  // namespace chartgen::render

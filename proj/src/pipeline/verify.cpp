#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "chartgen/errors.hpp"
#include "chartgen/pipeline.hpp"
#include "chartgen/svg_reader.hpp"

namespace chartgen::pipeline {
namespace {

namespace fs = std::filesystem;
using svg::ParsedElement;

constexpr double kFidelityPx = 0.5;

metadata::Orientation orientation_for(PlotType t) {
  return t == PlotType::hbar ? metadata::Orientation::top_down : metadata::Orientation::left_to_right;
}

// Per-record sink: each invariant is reported at most once per chart.
struct Sink {
  std::string id;
  VerifyReport& report;
  std::set<std::string> seen;

  void operator()(const std::string& invariant, const std::string& detail) {
    if (seen.insert(invariant).second) report.add(id, invariant, detail);
  }
};

struct ChartGeometry {
  PlotType type;
  Transform transform;
  double width = 0, height = 0;
  double bar_width = 0;
  double min_sep = 0;
  std::string x_kind;
  bool smoothing = false;
};

ChartGeometry read_geometry(const svg::ParsedSvg& doc) {
  const ParsedElement* meta = doc.by_id(render::kGeometryId);
  if (!meta) throw svg::MalformedSvg("missing geometry metadata");
  try {
    const auto j = nlohmann::json::parse(meta->text);
    ChartGeometry g;
    const auto type = parse_plot_type(j.at("plot_type").get<std::string>());
    if (!type) throw svg::MalformedSvg("unknown plot type in geometry");
    g.type = *type;
    const auto& a = j.at("axes");
    const auto& w = j.at("window");
    g.transform = Transform({w.at(0).get<double>(), w.at(1).get<double>(), w.at(2).get<double>(),
                             w.at(3).get<double>()},
                            {a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>(),
                             a.at(3).get<double>()});
    g.width = j.at("figure").at(0).get<double>();
    g.height = j.at("figure").at(1).get<double>();
    g.bar_width = j.at("bar_width").get<double>();
    g.min_sep = j.at("min_sep").get<double>();
    g.x_kind = j.at("x_kind").get<std::string>();
    g.smoothing = j.at("smoothing").get<bool>();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw svg::MalformedSvg(std::string("bad geometry metadata: ") + e.what());
  }
}

std::vector<Point> parse_pairs(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<Point> pts;
  double x, y;
  while (in >> x >> y) pts.push_back({x, y});
  return pts;
}

// Segment endpoints of an M/C path: the curve's control points.
std::vector<Point> path_anchors(const std::string& d) {
  std::string s = d;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<Point> pts;
  std::string cmd;
  while (in >> cmd) {
    Point p;
    if (cmd == "M" || cmd == "L") {
      if (!(in >> p.x >> p.y)) break;
      pts.push_back(p);
    } else if (cmd == "C") {
      Point c1, c2;
      if (!(in >> c1.x >> c1.y >> c2.x >> c2.y >> p.x >> p.y)) break;
      pts.push_back(p);
    } else {
      throw svg::MalformedSvg("unexpected path command " + cmd);
    }
  }
  return pts;
}

std::vector<Point> line_vertices(const ParsedElement& e) {
  if (e.tag == "polyline") {
    const std::string* p = e.find("points");
    return p ? parse_pairs(*p) : std::vector<Point>{};
  }
  const std::string* d = e.find("d");
  return d ? path_anchors(*d) : std::vector<Point>{};
}

bool value_of(const std::string& text, double& out) { return metadata::parse_number(text, out); }

bool channel_ok(const std::string* paint) {
  if (!paint || paint->size() != 7 || (*paint)[0] != '#') return false;
  const long rgb = std::strtol(paint->c_str() + 1, nullptr, 16);
  for (long c : {(rgb >> 16) & 0xff, (rgb >> 8) & 0xff, rgb & 0xff}) {
    if (c < layout::kColorMin || c > layout::kColorMax) return false;
  }
  return true;
}

int word_count(const std::string& s) {
  std::istringstream in(s);
  std::string w;
  int n = 0;
  while (in >> w) ++n;
  return n;
}

layout::TextItem text_item(const ParsedElement& e) {
  layout::TextItem t;
  t.text = e.text;
  t.anchor = {e.number("x"), e.number("y")};
  t.font_id = static_cast<int>(e.number("data-font"));
  t.size_pt = e.number("data-pt");
  const std::string* a = e.find("text-anchor");
  t.align = !a || *a == "start" ? layout::Anchor::start : *a == "middle" ? layout::Anchor::middle : layout::Anchor::end;
  if (const std::string* tr = e.find("transform")) {
    if (tr->rfind("rotate(", 0) != 0) throw svg::MalformedSvg("unsupported text transform");
    t.rotation_deg = std::strtod(tr->c_str() + 7, nullptr);
  }
  if (t.font_id < 0 || t.font_id >= layout::kFontCount) throw svg::MalformedSvg("bad data-font");
  return t;
}

bool near(double a, double b) { return std::fabs(a - b) <= kFidelityPx; }

std::string fmt_px(double a, double b) {
  std::ostringstream s;
  s << a << " px vs expected " << b << " px";
  return s.str();
}

// Checks every mark against its metadata pair; returns a description of the
// first disagreement, empty if none.
std::string check_fidelity(const ChartGeometry& g, const svg::ParsedSvg& doc,
                           const std::vector<metadata::LabelPair>& pairs) {
  const auto& tf = g.transform;
  const std::size_t n = pairs.size();
  std::vector<double> ys(n), xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& value = g.type == PlotType::hbar ? pairs[i].x : pairs[i].y;
    if (!value_of(value, ys[i])) return "pair " + std::to_string(i) + " value is not numeric";
    if (g.type == PlotType::scatter || (g.type == PlotType::line && g.x_kind == "numeric")) {
      if (!value_of(pairs[i].x, xs[i])) return "pair " + std::to_string(i) + " x is not numeric";
    } else {
      xs[i] = static_cast<double>(i);
    }
  }
  switch (g.type) {
    case PlotType::vbar: {
      const auto bars = doc.by_class(render::kBarClass);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& b = *bars[i];
        const double cx = b.number("x") + b.number("width") / 2;
        if (!near(cx, tf.to_px_x(xs[i]))) return "bar " + std::to_string(i) + " center " + fmt_px(cx, tf.to_px_x(xs[i]));
        if (!near(b.number("y"), tf.to_px_y(ys[i]))) return "bar " + std::to_string(i) + " top " + fmt_px(b.number("y"), tf.to_px_y(ys[i]));
        const double base = b.number("y") + b.number("height");
        if (!near(base, tf.to_px_y(0))) return "bar " + std::to_string(i) + " baseline " + fmt_px(base, tf.to_px_y(0));
      }
      break;
    }
    case PlotType::hbar: {
      const auto bars = doc.by_class(render::kBarClass);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& b = *bars[i];
        const double pos = static_cast<double>(n - 1 - i);
        const double cy = b.number("y") + b.number("height") / 2;
        const double end = b.number("x") + b.number("width");
        if (!near(cy, tf.to_px_y(pos))) return "bar " + std::to_string(i) + " center " + fmt_px(cy, tf.to_px_y(pos));
        if (!near(end, tf.to_px_x(ys[i]))) return "bar " + std::to_string(i) + " end " + fmt_px(end, tf.to_px_x(ys[i]));
        if (!near(b.number("x"), tf.to_px_x(0))) return "bar " + std::to_string(i) + " baseline off";
      }
      break;
    }
    case PlotType::scatter: {
      const auto pts = doc.by_class(render::kPointClass);
      for (std::size_t i = 0; i < n; ++i) {
        const Point want = tf.to_px({xs[i], ys[i]});
        const Point got{pts[i]->number("cx"), pts[i]->number("cy")};
        if (!near(got.x, want.x) || !near(got.y, want.y)) return "point " + std::to_string(i) + " misplaced";
      }
      break;
    }
    case PlotType::line: {
      const auto lines = doc.by_class(render::kLineClass);
      const auto v = line_vertices(*lines.front());
      for (std::size_t i = 0; i < n; ++i) {
        const Point want = tf.to_px({xs[i], ys[i]});
        if (!near(v[i].x, want.x) || !near(v[i].y, want.y)) return "vertex " + std::to_string(i) + " misplaced";
      }
      break;
    }
    case PlotType::dot: {
      std::map<long, std::vector<double>> columns;
      for (const auto* d : doc.by_class(render::kDotClass)) {
        const double col = tf.to_data_x(d->number("cx"));
        if (std::fabs(col - std::round(col)) * tf.scale_x() > kFidelityPx) return "dot between columns";
        columns[std::lround(col)].push_back(d->number("cy"));
      }
      for (std::size_t i = 0; i < n; ++i) {
        auto& c = columns[static_cast<long>(i)];
        if (c.size() != static_cast<std::size_t>(ys[i])) {
          return "column " + std::to_string(i) + " holds " + std::to_string(c.size()) + " dots";
        }
        std::sort(c.begin(), c.end(), std::greater<>());
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (!near(c[k], tf.to_px_y(k + 0.5))) return "column " + std::to_string(i) + " stack misplaced";
        }
      }
      if (columns.size() != n) return "dots outside the category columns";
      break;
    }
  }
  return {};
}

std::size_t mark_count(PlotType type, const svg::ParsedSvg& doc) {
  switch (type) {
    case PlotType::vbar:
    case PlotType::hbar: return doc.by_class(render::kBarClass).size();
    case PlotType::scatter: return doc.by_class(render::kPointClass).size();
    case PlotType::dot: return doc.by_class(render::kDotClass).size();
    case PlotType::line: {
      const auto lines = doc.by_class(render::kLineClass);
      return lines.size() == 1 ? line_vertices(*lines.front()).size() : 0;
    }
  }
  return 0;
}

std::size_t expected_marks(PlotType type, const std::vector<metadata::LabelPair>& pairs) {
  if (type != PlotType::dot) return pairs.size();
  std::size_t total = 0;
  for (const auto& p : pairs) {
    double v = 0;
    if (value_of(p.y, v) && v >= 0 && v == std::round(v)) total += static_cast<std::size_t>(v);
  }
  return total;
}

}  // namespace

void VerifyReport::add(std::string id, std::string invariant, std::string detail) {
  ++counts[invariant];
  violations.push_back({std::move(id), std::move(invariant), std::move(detail)});
}

void verify_chart(std::string_view id, PlotType type, std::string_view svg_text,
                  const metadata::GroundTruth& gt, VerifyReport& report) {
  Sink sink{std::string(id), report, {}};
  const auto& pairs = gt.pairs();

  const auto range = series::point_count_range(type);
  if (pairs.size() < range.lo || pairs.size() > range.hi) {
    sink("point-count", std::to_string(pairs.size()) + " pairs");
  }
  if (is_bar(type)) {
    double mn = INFINITY, mx = -INFINITY;
    bool numeric = true;
    for (const auto& p : pairs) {
      double v;
      if (!value_of(type == PlotType::hbar ? p.x : p.y, v)) {
        numeric = false;
        break;
      }
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    if (!numeric || !(mn > 0) || mx > mn * series::kBarMaxRatio) sink("bar-ratio", "min " + std::to_string(mn) + ", max " + std::to_string(mx));
  }
  if (type == PlotType::dot) {
    for (const auto& p : pairs) {
      double v;
      if (!value_of(p.y, v) || v != std::round(v) || v < series::kDotMin || v > series::kDotMax) {
        sink("dot-range", "value '" + p.y + "'");
        break;
      }
    }
  }

  svg::ParsedSvg doc;
  ChartGeometry g;
  try {
    doc = svg::parse_svg(svg_text);
    g = read_geometry(doc);
    if (g.type != type) throw svg::MalformedSvg("geometry plot type disagrees with manifest");
    if (doc.width != g.width || doc.height != g.height) throw svg::MalformedSvg("declared size disagrees with geometry");
  } catch (const svg::MalformedSvg& e) {
    sink("svg-malformed", e.what());
    return;
  }

  try {
    const std::size_t marks = mark_count(type, doc);
    const std::size_t want = expected_marks(type, pairs);
    if (marks != want) {
      sink("mark-count", std::to_string(marks) + " marks for " + std::to_string(want) + " expected");
    } else {
      const std::string bad = check_fidelity(g, doc, pairs);
      if (!bad.empty()) sink("mark-fidelity", bad);
    }

    if (type == PlotType::scatter) {
      const auto pts = doc.by_class(render::kPointClass);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          const double d = std::hypot(pts[i]->number("cx") - pts[j]->number("cx"),
                                      pts[i]->number("cy") - pts[j]->number("cy"));
          if (d < g.min_sep) {
            sink("scatter-separation", "points " + std::to_string(i) + " and " + std::to_string(j));
          }
        }
      }
    }
    if (type == PlotType::line) {
      const auto lines = doc.by_class(render::kLineClass);
      if (lines.size() == 1) {
        const auto v = line_vertices(*lines.front());
        for (std::size_t i = 1; i < v.size(); ++i) {
          if (!(v[i].x > v[i - 1].x)) sink("line-order", "vertex " + std::to_string(i));
        }
      }
    }

    for (const char* cls : {render::kBarClass, render::kPointClass, render::kDotClass, render::kLineClass}) {
      for (const auto* e : doc.by_class(cls)) {
        const std::string* paint = e->tag == "polyline" || e->tag == "path" ? e->find("stroke") : e->find("fill");
        if (!channel_ok(paint)) sink("color-range", std::string(cls) + " paint " + (paint ? *paint : "missing"));
      }
    }

    const std::pair<const char*, vocab::TitleRole> titles[] = {{"title-main", vocab::TitleRole::main},
                                                              {"title-x", vocab::TitleRole::x_axis},
                                                              {"title-y", vocab::TitleRole::y_axis}};
    for (const auto& [cls, role] : titles) {
      const auto found = doc.by_class(cls);
      const auto r = vocab::title_word_range(role);
      if (found.size() != 1) {
        sink("title-words", std::string(cls) + " missing");
        continue;
      }
      const int n = word_count(found.front()->text);
      if (n < r.lo || n > r.hi) sink("title-words", std::string(cls) + " has " + std::to_string(n) + " words");
    }

    std::vector<Rect> boxes;
    for (const auto& e : doc.elements) {
      if (e.tag == "text") boxes.push_back(layout::text_box(text_item(e)));
    }
    if (layout::detect_label_overlap(boxes)) sink("label-overlap", "text boxes intersect");
  } catch (const svg::MalformedSvg& e) {
    sink("svg-malformed", e.what());
  }
}

VerifyReport verify_dataset(const fs::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw IoError("cannot read manifest " + manifest_path.string());
  const fs::path base = manifest_path.parent_path();
  VerifyReport report;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ++report.records;
    ManifestRecord rec;
    try {
      rec = parse_manifest_line(line);
    } catch (const ConfigError& e) {
      report.add("line " + std::to_string(line_no), "manifest-row", e.what());
      continue;
    }
    Sink sink{rec.id, report, {}};
    if (!ids.insert(rec.id).second) sink("duplicate-id", "id repeated");

    auto read_file = [&](const std::string& rel, std::string& out) {
      const fs::path p = base / rel;
      std::error_code ec;
      if (!fs::is_regular_file(p, ec) || fs::file_size(p, ec) == 0) return false;
      std::ifstream f(p, std::ios::binary);
      std::stringstream ss;
      ss << f.rdbuf();
      out = ss.str();
      return static_cast<bool>(f);
    };
    std::string svg_text, txt, png;
    if (!read_file(rec.svg_path, svg_text)) {
      sink("missing-file", rec.svg_path);
      continue;
    }
    if (!read_file(rec.txt_path, txt)) {
      sink("missing-file", rec.txt_path);
      continue;
    }
    if (rec.png_path && !read_file(*rec.png_path, png)) {
      sink("missing-file", *rec.png_path);
      continue;
    }

    std::optional<metadata::GroundTruth> gt;
    try {
      gt = metadata::parse(rec.metadata, orientation_for(rec.plot_type));
    } catch (const Error& e) {
      sink("metadata-parse", e.what());
      continue;
    }
    if (txt != rec.metadata) sink("metadata-mismatch", rec.txt_path + " differs from the manifest");
    verify_chart(rec.id, rec.plot_type, svg_text, *gt, report);
  }
  return report;
}

}  // namespace chartgen::pipeline

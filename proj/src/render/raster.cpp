#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "chartgen/errors.hpp"
#include "chartgen/render.hpp"

namespace chartgen::render {
namespace {

constexpr int kShift = 4;  // fixed-point bits for sub-pixel drawing
constexpr double kFixed = 1 << kShift;
constexpr int kCurveSteps = 16;
constexpr int kFont = cv::FONT_HERSHEY_SIMPLEX;

struct Canvas {
  cv::Mat img;
  double scale;
};

double attr_num(const svg::Element& e, const char* name, double fallback = 0) {
  const std::string* v = e.find(name);
  if (!v) return fallback;
  char* end = nullptr;
  const double d = std::strtod(v->c_str(), &end);
  if (end == v->c_str()) throw RasterError("<" + e.tag + "> has non-numeric " + name);
  return d;
}

// "#rrggbb" -> BGR; nullopt for "none" or a missing attribute.
std::optional<cv::Scalar> paint(const svg::Element& e, const char* name) {
  const std::string* v = e.find(name);
  if (!v || *v == "none") return std::nullopt;
  if (v->size() != 7 || (*v)[0] != '#') {
    throw RasterError("<" + e.tag + "> uses unsupported paint '" + *v + "'");
  }
  const long rgb = std::strtol(v->c_str() + 1, nullptr, 16);
  return cv::Scalar((rgb & 0xff), (rgb >> 8) & 0xff, (rgb >> 16) & 0xff);
}

cv::Point fixed(const Canvas& c, double x, double y) {
  return {static_cast<int>(std::lround(x * c.scale * kFixed)),
          static_cast<int>(std::lround(y * c.scale * kFixed))};
}

int stroke_px(const Canvas& c, double w) { return std::max(1, static_cast<int>(std::lround(w * c.scale))); }

std::vector<double> dashes(const svg::Element& e) {
  std::vector<double> out;
  const std::string* v = e.find("stroke-dasharray");
  if (!v) return out;
  std::stringstream ss(*v);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::strtod(tok.c_str(), nullptr));
  return out;
}

void draw_segment(Canvas& c, Point a, Point b, const cv::Scalar& color, int width,
                  const std::vector<double>& dash) {
  if (dash.empty()) {
    cv::line(c.img, fixed(c, a.x, a.y), fixed(c, b.x, b.y), color, width, cv::LINE_AA, kShift);
    return;
  }
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  double pos = 0;
  std::size_t k = 0;
  while (pos < len) {
    const double step = std::max(dash[k % dash.size()], 0.5);
    const double end = std::min(len, pos + step);
    if (k % 2 == 0) {
      const Point p{a.x + (b.x - a.x) * pos / len, a.y + (b.y - a.y) * pos / len};
      const Point q{a.x + (b.x - a.x) * end / len, a.y + (b.y - a.y) * end / len};
      cv::line(c.img, fixed(c, p.x, p.y), fixed(c, q.x, q.y), color, width, cv::LINE_AA, kShift);
    }
    pos = end;
    ++k;
  }
}

void draw_polyline(Canvas& c, const std::vector<Point>& pts, const cv::Scalar& color, double w) {
  std::vector<cv::Point> fp;
  for (const Point& p : pts) fp.push_back(fixed(c, p.x, p.y));
  cv::polylines(c.img, fp, false, color, stroke_px(c, w), cv::LINE_AA, kShift);
}

std::vector<Point> parse_points(const std::string& text) {
  std::vector<Point> pts;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  double x, y;
  while (in >> x >> y) pts.push_back({x, y});
  return pts;
}

// M, L and C commands with absolute coordinates, flattened.
std::vector<Point> parse_path(const svg::Element& e) {
  const std::string* d = e.find("d");
  if (!d) throw RasterError("<path> without d");
  std::string s = *d;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<Point> pts;
  std::string cmd;
  while (in >> cmd) {
    if (cmd == "M" || cmd == "L") {
      Point p;
      in >> p.x >> p.y;
      pts.push_back(p);
    } else if (cmd == "C") {
      if (pts.empty()) throw RasterError("<path> curve without start point");
      Point p1, p2, p3;
      in >> p1.x >> p1.y >> p2.x >> p2.y >> p3.x >> p3.y;
      const Point p0 = pts.back();
      for (int i = 1; i <= kCurveSteps; ++i) {
        const double t = static_cast<double>(i) / kCurveSteps;
        const double u = 1 - t;
        pts.push_back({u * u * u * p0.x + 3 * u * u * t * p1.x + 3 * u * t * t * p2.x + t * t * t * p3.x,
                       u * u * u * p0.y + 3 * u * u * t * p1.y + 3 * u * t * t * p2.y + t * t * t * p3.y});
      }
    } else {
      throw RasterError("<path> command '" + cmd + "' is not supported");
    }
  }
  return pts;
}

double rotation_of(const svg::Element& e) {
  const std::string* t = e.find("transform");
  if (!t) return 0;
  if (t->rfind("rotate(", 0) != 0) throw RasterError("<text> transform '" + *t + "' is not supported");
  return std::strtod(t->c_str() + 7, nullptr);
}

void draw_text(Canvas& c, const svg::Element& e) {
  const auto color = paint(e, "fill");
  if (!color || e.text.empty()) return;
  const double size_px = attr_num(e, "font-size", 12) * c.scale;
  const double font_scale = size_px / 30.0;
  const int thick = std::max(1, static_cast<int>(std::lround(size_px / 14)));
  int baseline = 0;
  const cv::Size ts = cv::getTextSize(e.text, kFont, font_scale, thick, &baseline);
  const int pad = thick + 2;
  cv::Mat patch = cv::Mat::zeros(ts.height + baseline + 2 * pad, ts.width + 2 * pad, CV_8U);
  const cv::Point origin(pad, pad + ts.height);
  cv::putText(patch, e.text, origin, kFont, font_scale, 255, thick, cv::LINE_AA);

  double ax = origin.x;
  const std::string* anchor = e.find("text-anchor");
  if (anchor && *anchor == "middle") ax += ts.width / 2.0;
  if (anchor && *anchor == "end") ax += ts.width;

  // Patch -> canvas: move the anchor to the origin, rotate clockwise, place.
  const double th = rotation_of(e) * CV_PI / 180.0;
  const double cs = std::cos(th), sn = std::sin(th);
  const double X = attr_num(e, "x") * c.scale;
  const double Y = attr_num(e, "y") * c.scale;
  cv::Matx23d m(cs, -sn, X - (cs * ax - sn * origin.y), sn, cs, Y - (sn * ax + cs * origin.y));

  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (double px : {0.0, double(patch.cols)}) {
    for (double py : {0.0, double(patch.rows)}) {
      const double qx = m(0, 0) * px + m(0, 1) * py + m(0, 2);
      const double qy = m(1, 0) * px + m(1, 1) * py + m(1, 2);
      minx = std::min(minx, qx);
      maxx = std::max(maxx, qx);
      miny = std::min(miny, qy);
      maxy = std::max(maxy, qy);
    }
  }
  const cv::Rect bounds(0, 0, c.img.cols, c.img.rows);
  const cv::Rect roi = cv::Rect(cv::Point(static_cast<int>(std::floor(minx)), static_cast<int>(std::floor(miny))),
                                cv::Point(static_cast<int>(std::ceil(maxx)) + 1,
                                          static_cast<int>(std::ceil(maxy)) + 1)) &
                       bounds;
  if (roi.empty()) return;
  m(0, 2) -= roi.x;
  m(1, 2) -= roi.y;
  cv::Mat alpha;
  cv::warpAffine(patch, alpha, cv::Mat(m), roi.size(), cv::INTER_LINEAR, cv::BORDER_CONSTANT, 0);
  cv::Mat dst = c.img(roi);
  for (int y = 0; y < dst.rows; ++y) {
    auto* row = dst.ptr<cv::Vec3b>(y);
    const auto* a = alpha.ptr<std::uint8_t>(y);
    for (int x = 0; x < dst.cols; ++x) {
      if (!a[x]) continue;
      const int w = a[x];
      for (int ch = 0; ch < 3; ++ch) {
        row[x][ch] = static_cast<std::uint8_t>((row[x][ch] * (255 - w) + (*color)[ch] * w + 127) / 255);
      }
    }
  }
}

void draw(Canvas& c, const svg::Element& e) {
  const std::string& t = e.tag;
  if (t == "svg" || t == "g") {
    for (const auto& child : e.children) draw(c, child);
  } else if (t == "metadata") {
    return;
  } else if (t == "rect") {
    const auto fill = paint(e, "fill");
    if (!fill) return;
    const double x = attr_num(e, "x"), y = attr_num(e, "y");
    cv::rectangle(c.img, fixed(c, x, y),
                  fixed(c, x + attr_num(e, "width"), y + attr_num(e, "height")), *fill, cv::FILLED,
                  cv::LINE_AA, kShift);
  } else if (t == "circle") {
    const auto fill = paint(e, "fill");
    if (!fill) return;
    cv::circle(c.img, fixed(c, attr_num(e, "cx"), attr_num(e, "cy")),
               static_cast<int>(std::lround(attr_num(e, "r") * c.scale * kFixed)), *fill, cv::FILLED,
               cv::LINE_AA, kShift);
  } else if (t == "line") {
    const auto stroke = paint(e, "stroke");
    const double w = attr_num(e, "stroke-width", 1);
    if (!stroke || w <= 0) return;
    draw_segment(c, {attr_num(e, "x1"), attr_num(e, "y1")}, {attr_num(e, "x2"), attr_num(e, "y2")},
                 *stroke, stroke_px(c, w), dashes(e));
  } else if (t == "polyline" || t == "path") {
    const auto stroke = paint(e, "stroke");
    if (!stroke) return;
    const auto pts = t == "path" ? parse_path(e) : parse_points(e.find("points") ? *e.find("points") : "");
    draw_polyline(c, pts, *stroke, attr_num(e, "stroke-width", 1));
  } else if (t == "text") {
    draw_text(c, e);
  } else {
    throw RasterError("unsupported SVG element <" + t + ">");
  }
}

}  // namespace

std::vector<std::uint8_t> rasterize(const SvgDocument& doc, double dpi_scale) {
  if (!(dpi_scale >= 0.5 && dpi_scale <= 4)) throw RasterError("dpi_scale outside [0.5, 4]");
  const int w = static_cast<int>(std::lround(doc.width * dpi_scale));
  const int h = static_cast<int>(std::lround(doc.height * dpi_scale));
  Canvas c{cv::Mat(h, w, CV_8UC3, cv::Scalar(255, 255, 255)), dpi_scale};
  draw(c, doc.root);
  std::vector<std::uint8_t> png;
  if (!cv::imencode(".png", c.img, png)) throw RasterError("PNG encoding failed");
  return png;
}

}  // namespace chartgen::render

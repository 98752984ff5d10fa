#pragma once

#include <cmath>

namespace chartgen {

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Axis-aligned rectangle in pixel space, y pointing down.
struct Rect {
  double x = 0;
  double y = 0;
  double width = 0;
  double height = 0;

  double right() const { return x + width; }
  double bottom() const { return y + height; }
  double area() const { return width * height; }
  bool intersects(const Rect& o) const {
    double w = std::fmin(right(), o.right()) - std::fmax(x, o.x);
    double h = std::fmin(bottom(), o.bottom()) - std::fmax(y, o.y);
    return w > 0 && h > 0;
  }
  bool contains(const Rect& o) const {
    return o.x >= x && o.y >= y && o.right() <= right() && o.bottom() <= bottom();
  }
  Rect inflated(double d) const { return {x - d, y - d, width + 2 * d, height + 2 * d}; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Data-space window (xmin, xmax, ymin, ymax).
struct DataWindow {
  double xmin = 0;
  double xmax = 1;
  double ymin = 0;
  double ymax = 1;

  // Expand each side by `frac` of the span.
  DataWindow padded(double frac) const {
    double dx = (xmax - xmin) * frac;
    double dy = (ymax - ymin) * frac;
    return {xmin - dx, xmax + dx, ymin - dy, ymax + dy};
  }
  friend bool operator==(const DataWindow&, const DataWindow&) = default;
};

// Affine data -> pixel map sending the window corners onto the rectangle
// corners. (xmin, ymin) lands on the bottom-left pixel corner.
class Transform {
 public:
  Transform() = default;
  Transform(const DataWindow& window, const Rect& rect) : window_(window), rect_(rect) {}

  double to_px_x(double x) const {
    return rect_.x + (x - window_.xmin) / (window_.xmax - window_.xmin) * rect_.width;
  }
  double to_px_y(double y) const {
    return rect_.bottom() - (y - window_.ymin) / (window_.ymax - window_.ymin) * rect_.height;
  }
  Point to_px(Point p) const { return {to_px_x(p.x), to_px_y(p.y)}; }

  double to_data_x(double px) const {
    return window_.xmin + (px - rect_.x) / rect_.width * (window_.xmax - window_.xmin);
  }
  double to_data_y(double py) const {
    return window_.ymin + (rect_.bottom() - py) / rect_.height * (window_.ymax - window_.ymin);
  }
  Point to_data(Point p) const { return {to_data_x(p.x), to_data_y(p.y)}; }

  // Pixels per data unit along each axis.
  double scale_x() const { return rect_.width / (window_.xmax - window_.xmin); }
  double scale_y() const { return rect_.height / (window_.ymax - window_.ymin); }

  const DataWindow& window() const { return window_; }
  const Rect& rect() const { return rect_; }

 private:
  DataWindow window_;
  Rect rect_;
};

// Emitted SVG coordinates are rounded to 1/100 px; anything that must agree
// with re-parsed output goes through this.
inline double snap_px(double v) { return std::round(v * 100.0) / 100.0; }
inline Point snap_px(Point p) { return {snap_px(p.x), snap_px(p.y)}; }

}  // namespace chartgen

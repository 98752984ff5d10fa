#include <cmath>
#include <cstdio>

#include "chartgen/geometry.hpp"
#include "chartgen/svg.hpp"

namespace chartgen::svg {

std::string format_coord(double v) {
  v = snap_px(v);
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

Element& Element::attr(std::string name, std::string value) {
  attributes.emplace_back(std::move(name), std::move(value));
  return *this;
}

Element& Element::attr(std::string name, double px) { return attr(std::move(name), format_coord(px)); }

Element& Element::add(Element child) {
  children.push_back(std::move(child));
  return *this;
}

const std::string* Element::find(std::string_view name) const {
  for (const auto& [k, v] : attributes) {
    if (k == name) return &v;
  }
  return nullptr;
}

namespace {

std::string escape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

void Element::write(std::string& out, int depth) const {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out.push_back('<');
  out += tag;
  for (const auto& [k, v] : attributes) {
    out.push_back(' ');
    out += k;
    out += "=\"";
    out += escape_xml(v);
    out.push_back('"');
  }
  if (text.empty() && children.empty()) {
    out += "/>\n";
    return;
  }
  out.push_back('>');
  out += escape_text(text);
  if (!children.empty()) {
    out.push_back('\n');
    for (const auto& c : children) c.write(out, depth + 1);
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
  }
  out += "</";
  out += tag;
  out += ">\n";
}

}  // namespace chartgen::svg

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chartgen::svg {

// Pixel coordinate text: at most two decimals, no trailing zeros.
std::string format_coord(double v);
std::string escape_xml(std::string_view text);

struct Element {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;
  std::vector<Element> children;

  Element() = default;
  explicit Element(std::string tag) : tag(std::move(tag)) {}

  Element& attr(std::string name, std::string value);
  Element& attr(std::string name, double px);
  Element& add(Element child);
  const std::string* find(std::string_view name) const;

  void write(std::string& out, int depth = 0) const;
};

}  // namespace chartgen::svg

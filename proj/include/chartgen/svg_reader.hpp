#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chartgen/errors.hpp"

namespace chartgen::svg {

struct MalformedSvg : Error {
  using Error::Error;
};

struct ParsedElement {
  std::string tag;
  std::map<std::string, std::string> attributes;
  std::string text;

  const std::string* find(const std::string& name) const;
  bool has_class(std::string_view cls) const;
  // Throws MalformedSvg when the attribute is missing or not a number.
  double number(const std::string& name) const;
};

struct ParsedSvg {
  double width = 0;
  double height = 0;
  std::vector<ParsedElement> elements;  // document order, root first

  std::vector<const ParsedElement*> by_class(std::string_view cls) const;
  const ParsedElement* by_id(std::string_view id) const;
};

// Throws MalformedSvg when the text is not well-formed XML or the root is not
// an <svg> element with numeric width/height.
ParsedSvg parse_svg(std::string_view text);

}  // namespace chartgen::svg

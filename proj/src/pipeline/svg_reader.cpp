#include <charconv>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "chartgen/svg_reader.hpp"

namespace chartgen::svg {
namespace {

namespace pt = boost::property_tree;

bool parse_double(const std::string& s, double& out) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && p == e;
}

void collect(const std::string& tag, const pt::ptree& node, std::vector<ParsedElement>& out) {
  ParsedElement el;
  el.tag = tag;
  el.text = node.data();
  if (auto attrs = node.get_child_optional("<xmlattr>")) {
    for (const auto& [k, v] : *attrs) el.attributes[k] = v.data();
  }
  out.push_back(std::move(el));
  for (const auto& [k, child] : node) {
    if (k == "<xmlattr>" || k == "<xmlcomment>" || k == "<xmltext>") continue;
    collect(k, child, out);
  }
}

}  // namespace

const std::string* ParsedElement::find(const std::string& name) const {
  auto it = attributes.find(name);
  return it == attributes.end() ? nullptr : &it->second;
}

bool ParsedElement::has_class(std::string_view cls) const {
  const std::string* c = find("class");
  if (!c) return false;
  std::string_view rest(*c);
  while (!rest.empty()) {
    const auto sp = rest.find(' ');
    if (rest.substr(0, sp) == cls) return true;
    if (sp == std::string_view::npos) break;
    rest.remove_prefix(sp + 1);
  }
  return false;
}

double ParsedElement::number(const std::string& name) const {
  const std::string* v = find(name);
  double out = 0;
  if (!v || !parse_double(*v, out)) throw MalformedSvg("<" + tag + "> lacks numeric attribute " + name);
  return out;
}

std::vector<const ParsedElement*> ParsedSvg::by_class(std::string_view cls) const {
  std::vector<const ParsedElement*> out;
  for (const auto& e : elements) {
    if (e.has_class(cls)) out.push_back(&e);
  }
  return out;
}

const ParsedElement* ParsedSvg::by_id(std::string_view id) const {
  for (const auto& e : elements) {
    const std::string* v = e.find("id");
    if (v && *v == id) return &e;
  }
  return nullptr;
}

ParsedSvg parse_svg(std::string_view text) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw MalformedSvg(std::string("not well-formed XML: ") + e.what());
  }
  auto root = tree.get_child_optional("svg");
  if (!root || tree.size() != 1) throw MalformedSvg("root element is not <svg>");
  ParsedSvg doc;
  collect("svg", *root, doc.elements);
  doc.width = doc.elements.front().number("width");
  doc.height = doc.elements.front().number("height");
  return doc;
}

}  // namespace chartgen::svg

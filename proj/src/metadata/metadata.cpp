#include "chartgen/metadata.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "chartgen/errors.hpp"

namespace chartgen::metadata {
namespace {

constexpr std::string_view kRowToken = "<0x0A>";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Scientific digits of x rounded to `digits` significant digits: the
// mantissa digits (no point) and the decimal exponent of the first digit.
struct Decimal {
  bool negative = false;
  std::string digits;
  int exponent = 0;
};

Decimal to_decimal(double x, int digits) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, digits - 1);
  std::string_view s(buf, static_cast<std::size_t>(res.ptr - buf));
  Decimal d;
  if (!s.empty() && s.front() == '-') {
    d.negative = true;
    s.remove_prefix(1);
  }
  const auto e = s.find('e');
  for (char c : s.substr(0, e)) {
    if (c != '.') d.digits.push_back(c);
  }
  std::string_view exp = s.substr(e + 1);
  if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
  std::from_chars(exp.data(), exp.data() + exp.size(), d.exponent);
  return d;
}

std::string plain_decimal(Decimal d) {
  while (d.digits.size() > 1 && d.digits.back() == '0') d.digits.pop_back();
  const int point = d.exponent + 1;  // digits before the decimal point
  const int len = static_cast<int>(d.digits.size());
  std::string out;
  if (d.negative) out.push_back('-');
  if (point <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += d.digits;
  } else if (point >= len) {
    out += d.digits;
    out.append(static_cast<std::size_t>(point - len), '0');
  } else {
    out.append(d.digits, 0, static_cast<std::size_t>(point));
    out.push_back('.');
    out.append(d.digits, static_cast<std::size_t>(point));
  }
  return out;
}

}  // namespace

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  if (is_space(label.front()) || is_space(label.back())) return false;
  if (label.find('|') != std::string_view::npos) return false;
  if (label.find(kRowToken) != std::string_view::npos) return false;
  if (label.find_first_of("\r\n") != std::string_view::npos) return false;
  return true;
}

GroundTruth::GroundTruth(std::vector<LabelPair> pairs, Orientation orientation)
    : pairs_(std::move(pairs)), orientation_(orientation) {
  if (pairs_.empty()) throw SpecError("ground truth needs at least one pair");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!is_valid_label(pairs_[i].x) || !is_valid_label(pairs_[i].y)) {
      throw SpecError("invalid label in pair " + std::to_string(i) + ": '" + pairs_[i].x +
                      "' / '" + pairs_[i].y + "'");
    }
  }
}

std::string serialize(const GroundTruth& gt) {
  std::string out;
  for (std::size_t i = 0; i < gt.pairs().size(); ++i) {
    if (i > 0) out += kRowSeparator;
    out += gt.pairs()[i].x;
    out += kFieldSeparator;
    out += gt.pairs()[i].y;
  }
  return out;
}

GroundTruth parse(std::string_view text, Orientation orientation) {
  if (trim(text).empty()) throw ParseError("empty metadata", 0);
  std::vector<LabelPair> pairs;
  std::size_t index = 0;
  while (true) {
    const auto cut = text.find(kRowToken);
    std::string_view row = trim(text.substr(0, cut));
    const auto bar = row.find('|');
    if (bar == std::string_view::npos) throw ParseError("missing '|' separator", index);
    std::string_view x = trim(row.substr(0, bar));
    std::string_view y = trim(row.substr(bar + 1));
    if (x.empty()) throw ParseError("empty x field", index);
    if (y.empty()) throw ParseError("empty y field", index);
    if (y.find('|') != std::string_view::npos) throw ParseError("extra '|' in row", index);
    pairs.push_back({std::string(x), std::string(y)});
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + kRowToken.size());
    ++index;
  }
  return GroundTruth(std::move(pairs), orientation);
}

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, digits - 1);
  double out = 0;
  std::from_chars(buf, res.ptr, out);
  return out;
}

std::string format_number(double x, ValueKind kind) {
  if (!std::isfinite(x)) throw NumberFormatError("cannot format non-finite value");
  if (kind == ValueKind::integer) {
    double r = std::nearbyint(x);
    if (r == 0.0) r = 0.0;  // drop the sign of -0
    char buf[400];
    auto res = std::to_chars(buf, buf + sizeof buf, r, std::chars_format::fixed, 0);
    return std::string(buf, res.ptr);
  }
  if (x == 0.0) return "0";
  return plain_decimal(to_decimal(x, kSignificantDigits));
}

bool parse_number(std::string_view text, double& out) {
  if (text.empty()) return false;
  const char first = text.front();
  if (!(first == '-' || (first >= '0' && first <= '9'))) return false;
  for (char c : text) {
    if (!((c >= '0' && c <= '9') || c == '.' || c == '-')) return false;
  }
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

}  // namespace chartgen::metadata

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chartgen/types.hpp"

namespace chartgen::metadata {

inline constexpr std::string_view kRowSeparator = " <0x0A> ";
inline constexpr std::string_view kFieldSeparator = " | ";
inline constexpr int kSignificantDigits = 4;

enum class Orientation { left_to_right, top_down };

struct LabelPair {
  std::string x;
  std::string y;
  friend bool operator==(const LabelPair&, const LabelPair&) = default;
};

// True when `label` can be stored without an escaping scheme: non-empty, no
// "|", no "<0x0A>", no line breaks, no surrounding whitespace.
bool is_valid_label(std::string_view label);

// Ordered (x, y) label table for one chart. Horizontal bar charts store
// their rows top-down; everything else left-to-right.
class GroundTruth {
 public:
  // Throws SpecError on an empty table or an invalid label.
  GroundTruth(std::vector<LabelPair> pairs, Orientation orientation = Orientation::left_to_right);

  const std::vector<LabelPair>& pairs() const { return pairs_; }
  Orientation orientation() const { return orientation_; }
  std::size_t size() const { return pairs_.size(); }

  friend bool operator==(const GroundTruth&, const GroundTruth&) = default;

 private:
  std::vector<LabelPair> pairs_;
  Orientation orientation_;
};

// "x | y <0x0A> x | y ..." in stored order.
std::string serialize(const GroundTruth& gt);

// Splits on " <0x0A> ", then each row on its first " | ", trimming fields.
// Throws ParseError carrying the offending pair index.
GroundTruth parse(std::string_view text, Orientation orientation = Orientation::left_to_right);

// Round to `digits` significant decimal digits, ties to even on the exact
// binary value. Zero and non-finite values pass through.
double round_significant(double x, int digits = kSignificantDigits);

// Canonical text for a value: integers without a decimal point, reals with up
// to four significant digits and no trailing zeros. Never uses an exponent.
// Throws NumberFormatError for NaN/inf.
std::string format_number(double x, ValueKind kind);

// Strict numeric parse of a label as written by format_number.
bool parse_number(std::string_view text, double& out);

}  // namespace chartgen::metadata

#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "chartgen/errors.hpp"
#include "chartgen/metadata.hpp"
#include "chartgen/resources.hpp"
#include "chartgen/vocab.hpp"

namespace chartgen::vocab {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::vector<std::string> usable_places(std::vector<std::string> lines) {
  std::vector<std::string> out;
  for (auto& l : lines) {
    if (is_ascii(l) && metadata::is_valid_label(l)) out.push_back(std::move(l));
  }
  return out;
}

std::vector<MonthName> parse_months(const std::vector<std::string>& lines) {
  std::vector<MonthName> months;
  for (const auto& l : lines) {
    auto f = split_tabs(l);
    if (f.size() < 2) throw FormatError("month row needs long<TAB>short", months.size() + 1);
    months.push_back({f[0], f[1]});
  }
  if (months.size() != 12) throw Error("month table must have 12 rows");
  return months;
}

std::vector<DayName> parse_days(const std::vector<std::string>& lines) {
  std::vector<DayName> days;
  for (const auto& l : lines) {
    auto f = split_tabs(l);
    if (f.size() < 3) throw FormatError("day row needs long<TAB>short<TAB>informal", days.size() + 1);
    days.push_back({f[0], f[1], f[2]});
  }
  if (days.size() != 7) throw Error("day table must have 7 rows");
  return days;
}

std::vector<std::string> bundled_lines(std::string_view name) {
  auto text = bundled_resource(name);
  if (!text) throw Error("missing bundled resource " + std::string(name));
  std::istringstream in{std::string(*text)};
  return read_lines(in);
}

// Draw n distinct indices from [0, size) in random order.
std::vector<std::size_t> sample_indices(std::size_t size, std::size_t n, Rng& rng) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = i + rng.index(size - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(n);
  return idx;
}

std::vector<std::string> month_labels(const LabelCatalog& c, MonthFormat format, std::size_t n,
                                      Rng& rng) {
  const std::size_t cap = month_capacity(c, format);
  const auto start = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(cap - n)));
  const auto& m = c.months();
  std::vector<std::string> out;
  const int day = format == MonthFormat::month_day ? static_cast<int>(rng.uniform_int(1, 28)) : 0;
  for (std::size_t i = start; i < start + n; ++i) {
    switch (format) {
      case MonthFormat::short_name: out.push_back(m[i].short_name); break;
      case MonthFormat::long_name: out.push_back(m[i].long_name); break;
      case MonthFormat::range2: out.push_back(m[2 * i].short_name + "-" + m[2 * i + 1].short_name); break;
      case MonthFormat::range3: out.push_back(m[3 * i].short_name + "-" + m[3 * i + 2].short_name); break;
      case MonthFormat::month_day: out.push_back(m[i].short_name + "-" + std::to_string(day)); break;
    }
  }
  return out;
}

std::vector<std::string> day_labels(const LabelCatalog& c, DayFormat format, std::size_t n,
                                    Rng& rng) {
  const std::size_t cap = day_capacity(c, format);
  const auto start = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(cap - n)));
  std::vector<std::string> out;
  for (std::size_t i = start; i < start + n; ++i) {
    const auto& d = c.days()[i];
    switch (format) {
      case DayFormat::short_name: out.push_back(d.short_name); break;
      case DayFormat::long_name: out.push_back(d.long_name); break;
      case DayFormat::informal: out.push_back(d.informal); break;
    }
  }
  return out;
}

template <class Format, std::size_t N, class CapFn>
Format choose_format(const std::array<Format, N>& formats, std::size_t n, CapFn capacity,
                     Rng& rng) {
  std::vector<Format> ok;
  for (Format f : formats) {
    if (capacity(f) >= n) ok.push_back(f);
  }
  if (ok.empty()) throw CapacityError("no label format holds " + std::to_string(n) + " labels");
  return rng.pick(ok);
}

}  // namespace

LabelCatalog::LabelCatalog(std::vector<std::string> places, std::vector<MonthName> months,
                           std::vector<DayName> days)
    : places_(std::move(places)), months_(std::move(months)), days_(std::move(days)) {}

LabelCatalog LabelCatalog::bundled() {
  return LabelCatalog(usable_places(bundled_lines("places.txt")),
                      parse_months(bundled_lines("months.txt")),
                      parse_days(bundled_lines("days.txt")));
}

LabelCatalog LabelCatalog::from_files(const std::filesystem::path& places,
                                      const std::filesystem::path& months,
                                      const std::filesystem::path& days) {
  return LabelCatalog(
      usable_places(places.empty() ? bundled_lines("places.txt") : read_lines(places)),
      parse_months(months.empty() ? bundled_lines("months.txt") : read_lines(months)),
      parse_days(days.empty() ? bundled_lines("days.txt") : read_lines(days)));
}

std::size_t month_capacity(const LabelCatalog& catalog, MonthFormat format) {
  const std::size_t n = catalog.months().size();
  switch (format) {
    case MonthFormat::range2: return n / 2;
    case MonthFormat::range3: return n / 3;
    default: return n;
  }
}

std::size_t day_capacity(const LabelCatalog& catalog, DayFormat) { return catalog.days().size(); }

std::size_t domain_capacity(const LabelCatalog& catalog, const LabelDomain& domain) {
  using K = LabelDomain::Kind;
  switch (domain.kind) {
    case K::places: return catalog.places().size();
    case K::months: {
      if (domain.month_format) return month_capacity(catalog, *domain.month_format);
      std::size_t best = 0;
      for (auto f : kMonthFormats) best = std::max(best, month_capacity(catalog, f));
      return best;
    }
    case K::days: return catalog.days().size();
    case K::part_numerical: return std::numeric_limits<std::size_t>::max();
    case K::word_group: return domain.group ? domain.group->members.size() : 0;
  }
  return 0;
}

std::vector<std::string> part_numerical_labels(long long origin, long long step, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long lo = origin + step * static_cast<long long>(i);
    out.push_back(std::to_string(lo) + "-" + std::to_string(lo + step));
  }
  return out;
}

std::vector<std::string> sample_categorical_labels(const LabelCatalog& catalog,
                                                   const LabelDomain& domain, std::size_t n,
                                                   Rng& rng) {
  using K = LabelDomain::Kind;
  if (n == 0) return {};
  if (n > domain_capacity(catalog, domain)) {
    throw CapacityError("domain cannot supply " + std::to_string(n) + " distinct labels");
  }
  switch (domain.kind) {
    case K::places: {
      std::vector<std::string> out;
      for (auto i : sample_indices(catalog.places().size(), n, rng)) out.push_back(catalog.places()[i]);
      return out;
    }
    case K::months: {
      const MonthFormat f = domain.month_format
                                ? *domain.month_format
                                : choose_format(kMonthFormats, n,
                                                [&](MonthFormat m) { return month_capacity(catalog, m); },
                                                rng);
      return month_labels(catalog, f, n, rng);
    }
    case K::days: {
      const DayFormat f = domain.day_format
                              ? *domain.day_format
                              : choose_format(kDayFormats, n,
                                              [&](DayFormat d) { return day_capacity(catalog, d); }, rng);
      return day_labels(catalog, f, n, rng);
    }
    case K::part_numerical: {
      const long long step = rng.pick(std::span<const long long>(kPartNumericalSteps));
      const long long origin = step * rng.uniform_int(0, 20);
      return part_numerical_labels(origin, step, n);
    }
    case K::word_group: {
      std::vector<std::string> out;
      const auto& members = domain.group->members;
      for (auto i : sample_indices(members.size(), n, rng)) out.push_back(members[i]);
      return out;
    }
  }
  return {};
}

}  // namespace chartgen::vocab

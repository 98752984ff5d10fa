#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chartgen/rng.hpp"

namespace chartgen::vocab {

bool is_ascii(std::string_view text);

// A line of the embedding file that was skipped without aborting the load.
struct Rejection {
  std::size_t line = 0;
  std::string word;
  std::string reason;
};

// Word -> vector table. Vectors share one dimension, are never all-zero, and
// keep their load order.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dimension) : dimension_(dimension) {}

  // Throws Error on a dimension mismatch, duplicate word or zero vector.
  void add(std::string word, std::span<const float> vector);

  std::size_t size() const { return words_.size(); }
  std::size_t dimension() const { return dimension_; }
  bool contains(std::string_view word) const { return index_of(word).has_value(); }
  std::optional<std::size_t> index_of(std::string_view word) const;

  const std::string& word(std::size_t i) const { return words_[i]; }
  std::span<const float> vector(std::size_t i) const {
    return {data_.data() + i * dimension_, dimension_};
  }
  const std::vector<std::string>& words() const { return words_; }

  double cosine(std::size_t a, std::size_t b) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::string> words_;
  std::vector<float> data_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
};

// GloVe text layout: `word v1 ... vd` per line. Lines whose word is not pure
// ASCII are dropped when `filter_ascii` is set. Zero vectors and duplicate
// words are skipped and appended to `rejected`. Inconsistent dimension or a
// non-numeric component throws FormatError naming the line.
EmbeddingTable load_embeddings(const std::filesystem::path& path, bool filter_ascii,
                               std::vector<Rejection>* rejected = nullptr);
EmbeddingTable read_embeddings(std::istream& in, bool filter_ascii,
                               std::vector<Rejection>* rejected = nullptr);

struct Neighbor {
  std::string word;
  double similarity = 0;
};

// The k most cosine-similar words to `word` (query excluded), descending;
// exact ties ordered by ascending word. Throws UnknownWordError.
std::vector<Neighbor> nearest_neighbors(const EmbeddingTable& table, std::string_view word,
                                        std::size_t k);

struct WordGroup {
  std::string seed;
  std::vector<std::string> members;
  friend bool operator==(const WordGroup&, const WordGroup&) = default;
};

struct GroupBuildResult {
  std::vector<WordGroup> groups;
  std::vector<std::string> skipped;  // seeds absent from the table
};

// hops=1: one group per distinct in-table seed. hops=2: every distinct hop-1
// member that is not already a group seed gets its own group as well.
GroupBuildResult build_word_groups(const EmbeddingTable& table,
                                   std::span<const std::string> seeds, std::size_t k = 25,
                                   int hops = 2);

// Word-group file: `seed<TAB>member member ...`, one group per line.
void write_word_groups(std::ostream& out, std::span<const WordGroup> groups);
std::vector<WordGroup> read_word_groups(std::istream& in);

// One entry per line; blank lines and lines starting with '#' are skipped.
std::vector<std::string> read_lines(std::istream& in);
std::vector<std::string> read_lines(const std::filesystem::path& path);

enum class TitleRole { main, x_axis, y_axis };

struct WordCountRange {
  int lo;
  int hi;
};
WordCountRange title_word_range(TitleRole role);

// Space-joined words drawn from the group's members; without replacement
// unless the group is smaller than the draw. Throws EmptyGroupError.
std::string sample_title(const WordGroup& group, TitleRole role, Rng& rng);

enum class MonthFormat { short_name, long_name, range2, range3, month_day };
enum class DayFormat { short_name, long_name, informal };

inline constexpr std::array<MonthFormat, 5> kMonthFormats{
    MonthFormat::short_name, MonthFormat::long_name, MonthFormat::range2, MonthFormat::range3,
    MonthFormat::month_day};
inline constexpr std::array<DayFormat, 3> kDayFormats{DayFormat::short_name, DayFormat::long_name,
                                                      DayFormat::informal};
inline constexpr std::array<long long, 7> kPartNumericalSteps{1, 5, 10, 20, 25, 50, 100};

struct LabelDomain {
  enum class Kind { places, months, days, part_numerical, word_group };
  Kind kind = Kind::places;
  // Fixed rendering for months/days; drawn per call when empty.
  std::optional<MonthFormat> month_format;
  std::optional<DayFormat> day_format;
  const WordGroup* group = nullptr;  // required for word_group
};

struct MonthName {
  std::string long_name;
  std::string short_name;
};
struct DayName {
  std::string long_name;
  std::string short_name;
  std::string informal;
};

// Immutable label tables shared by all workers.
class LabelCatalog {
 public:
  LabelCatalog(std::vector<std::string> places, std::vector<MonthName> months,
               std::vector<DayName> days);

  // Tables compiled into the library.
  static LabelCatalog bundled();
  // Any empty path falls back to the bundled table.
  static LabelCatalog from_files(const std::filesystem::path& places,
                                 const std::filesystem::path& months,
                                 const std::filesystem::path& days);

  const std::vector<std::string>& places() const { return places_; }
  const std::vector<MonthName>& months() const { return months_; }
  const std::vector<DayName>& days() const { return days_; }

 private:
  std::vector<std::string> places_;
  std::vector<MonthName> months_;
  std::vector<DayName> days_;
};

std::size_t month_capacity(const LabelCatalog& catalog, MonthFormat format);
std::size_t day_capacity(const LabelCatalog& catalog, DayFormat format);
// Largest n accepted by sample_categorical_labels for this domain (over all
// formats when the format is not fixed).
std::size_t domain_capacity(const LabelCatalog& catalog, const LabelDomain& domain);

// "o-(o+s)", "(o+s)-(o+2s)", ...
std::vector<std::string> part_numerical_labels(long long origin, long long step, std::size_t n);

// n distinct labels. Months/days use one format for the whole call and come
// out as a contiguous calendar run. Throws CapacityError.
std::vector<std::string> sample_categorical_labels(const LabelCatalog& catalog,
                                                   const LabelDomain& domain, std::size_t n,
                                                   Rng& rng);

}  // namespace chartgen::vocab

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "chartgen/errors.hpp"
#include "chartgen/vocab.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace chartgen;
using namespace chartgen::vocab;

namespace {

EmbeddingTable from_text(const std::string& text, bool filter = true, std::vector<Rejection>* rejected = nullptr) {
  std::istringstream in(text);
  return read_embeddings(in, filter, rejected);
}

std::vector<std::string> words_of(const std::vector<Neighbor>& ns) {
  std::vector<std::string> out;
  for (const auto& n : ns) out.push_back(n.word);
  return out;
}

// n random words with d-dimensional vectors, in GloVe text layout.
std::string random_table_text(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::ostringstream out;
  for (std::size_t i = 0; i < n; ++i) {
    out << "w" << i;
    for (std::size_t j = 0; j < d; ++j) out << ' ' << rng.uniform(-1, 1);
    out << '\n';
  }
  return out.str();
}

std::map<std::string, std::vector<std::string>> as_map(const std::vector<WordGroup>& groups) {
  std::map<std::string, std::vector<std::string>> m;
  for (const auto& g : groups) m[g.seed] = g.members;
  return m;
}

LabelDomain domain(LabelDomain::Kind kind) {
  LabelDomain d;
  d.kind = kind;
  return d;
}

int count_words(const std::string& s) {
  std::istringstream in(s);
  std::string w;
  int n = 0;
  while (in >> w) ++n;
  return n;
}

}  // namespace

TEST_SUITE("vocab") {

TEST_CASE("load_embeddings reads every line of a small file") {
  const auto t = from_text("a 1 0 0\nb 0 1 0\nc 0 0 1\n", false);
  CHECK(t.size() == 3);
  CHECK(t.dimension() == 3);
  CHECK(t.word(0) == "a");
  CHECK(t.word(2) == "c");
}

TEST_CASE("ASCII filter drops non-ASCII words") {
  const auto on = from_text("cafe 1 0\ncaf\xc3\xa9 0 1\n", true);
  CHECK(on.size() == 1);
  CHECK_FALSE(on.contains("caf\xc3\xa9"));
  const auto off = from_text("cafe 1 0\ncaf\xc3\xa9 0 1\n", false);
  CHECK(off.size() == 2);
}

TEST_CASE("short vector line is a format error naming the line") {
  try {
    from_text("a 1 2 3\nb 1 2\n");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("zero vectors are skipped and reported") {
  std::vector<Rejection> rejected;
  const auto t = from_text("a 1 2\nz 0 0\nb 2 1\n", true, &rejected);
  CHECK(t.size() == 2);
  REQUIRE(rejected.size() == 1);
  CHECK(rejected[0].word == "z");
  CHECK(rejected[0].line == 2);
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(load_embeddings("/nonexistent/embeddings.txt", true), IoError);
}

TEST_CASE("identical vector ranks first with similarity 1") {
  const auto t = from_text("q 1 2 3\nx 3 2 1\nb 1 2 3\ny -1 0 2\n");
  const auto ns = nearest_neighbors(t, "q", 3);
  REQUIRE(ns.size() == 3);
  CHECK(ns[0].word == "b");
  CHECK(ns[0].similarity == doctest::Approx(1.0));
}

TEST_CASE("hand-set 4-word table matches exhaustive cosine order") {
  const std::string text = "north 0 1\neast 1 0\nnortheast 1 1\nsouthwest -1 -1\n";
  testutil::TempDir dir("nn4");
  testutil::write_text(dir / "t.txt", text);
  const auto raw = oracle::read_raw((dir / "t.txt").string(), true);
  const auto t = load_embeddings(dir / "t.txt", true);
  for (const auto& w : raw.words) {
    CHECK(words_of(nearest_neighbors(t, w, 3)) == oracle::top_k(raw, w, 3));
  }
  CHECK(words_of(nearest_neighbors(t, "north", 3)) == std::vector<std::string>{"northeast", "east", "southwest"});
}

TEST_CASE("exact ties are ordered lexicographically") {
  const auto t = from_text("q 1 0\nzeta 0 1\nalpha 0 -1\nmid 0 2\n");
  CHECK(words_of(nearest_neighbors(t, "q", 3)) == std::vector<std::string>{"alpha", "mid", "zeta"});
}

TEST_CASE("k at least the table size returns every other word") {
  const auto t = from_text("a 1 0\nb 0 1\nc 1 1\n");
  CHECK(nearest_neighbors(t, "a", 2).size() == 2);
  CHECK(nearest_neighbors(t, "a", 50).size() == 2);
}

TEST_CASE("unknown word is an error") {
  const auto t = from_text("a 1 0\nb 0 1\n");
  CHECK_THROWS_AS(nearest_neighbors(t, "c", 1), UnknownWordError);
}

TEST_CASE("two in-table seeds with one hop give two groups of two") {
  const auto t = from_text(random_table_text(10, 4, 1));
  const std::vector<std::string> seeds{"w0", "w5"};
  const auto r = build_word_groups(t, seeds, 2, 1);
  REQUIRE(r.groups.size() == 2);
  for (const auto& g : r.groups) CHECK(g.members.size() == 2);
}

TEST_CASE("two-hop groups on a 10-word table equal the exhaustive expansion") {
  testutil::TempDir dir("hop10");
  testutil::write_text(dir / "t.txt", random_table_text(10, 5, 2));
  const auto raw = oracle::read_raw((dir / "t.txt").string(), true);
  const auto t = load_embeddings(dir / "t.txt", true);
  const std::vector<std::string> seeds{"w1", "w7"};
  const auto r = build_word_groups(t, seeds, 3, 2);
  CHECK(as_map(r.groups) == oracle::expand_groups(raw, seeds, 3, 2));
  CHECK(r.groups.size() >= seeds.size());
  CHECK(r.groups.size() <= seeds.size() * 4);
}

TEST_CASE("absent seed is skipped without changing the groups") {
  const auto t = from_text(random_table_text(12, 4, 3));
  const std::vector<std::string> with{"w2", "nosuchword", "w9"};
  const std::vector<std::string> without{"w2", "w9"};
  const auto a = build_word_groups(t, with, 3, 2);
  const auto b = build_word_groups(t, without, 3, 2);
  CHECK(a.groups == b.groups);
  CHECK(a.skipped == std::vector<std::string>{"nosuchword"});
  CHECK(b.skipped.empty());
}

TEST_CASE("groups have unique members and never repeat their seed") {
  const auto t = from_text(random_table_text(40, 6, 4));
  const std::vector<std::string> seeds{"w0", "w1", "w2"};
  const auto r = build_word_groups(t, seeds, 5, 2);
  std::set<std::string> seeds_seen;
  for (const auto& g : r.groups) {
    CHECK(seeds_seen.insert(g.seed).second);
    std::set<std::string> m(g.members.begin(), g.members.end());
    CHECK(m.size() == g.members.size());
    CHECK_FALSE(m.count(g.seed));
  }
}

TEST_CASE("word-group file round-trips") {
  const std::vector<WordGroup> groups{{"cup", {"mug", "glass"}}, {"pen", {"pencil"}}};
  std::ostringstream out;
  write_word_groups(out, groups);
  std::istringstream in(out.str());
  CHECK(read_word_groups(in) == groups);
}

TEST_CASE("bundled word groups are ASCII and well formed") {
  const auto text = testutil::read_text(oracle::data_path("word_groups.txt"));
  std::istringstream in(text);
  const auto groups = read_word_groups(in);
  REQUIRE(groups.size() > 100);
  for (const auto& g : groups) {
    REQUIRE_FALSE(g.members.empty());
    REQUIRE(is_ascii(g.seed));
    std::set<std::string> m;
    for (const auto& w : g.members) {
      REQUIRE(is_ascii(w));
      REQUIRE(w != g.seed);
      REQUIRE(m.insert(w).second);
    }
  }
}

TEST_CASE("y-axis titles have 1 to 4 group words") {
  const WordGroup g{"cup", {"mug", "glass", "bowl", "jar", "pot", "tin"}};
  const std::set<std::string> members(g.members.begin(), g.members.end());
  Rng rng(9);
  for (int i = 0; i < 2000; ++i) {
    const auto title = sample_title(g, TitleRole::y_axis, rng);
    const int n = count_words(title);
    REQUIRE(n >= 1);
    REQUIRE(n <= 4);
    std::istringstream in(title);
    std::string w;
    while (in >> w) REQUIRE(members.count(w));
  }
}

TEST_CASE("title sampling is deterministic for a fixed seed") {
  const WordGroup g{"cup", {"mug", "glass", "bowl", "jar", "pot", "tin", "vase", "urn"}};
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(sample_title(g, TitleRole::main, a) == sample_title(g, TitleRole::main, b));
}

TEST_CASE("10,000 main titles use exactly the counts 3 to 7") {
  const WordGroup g{"cup", {"mug", "glass", "bowl", "jar", "pot", "tin", "vase", "urn", "pan", "lid"}};
  Rng rng(77);
  std::map<int, int> census;
  for (int i = 0; i < 10'000; ++i) ++census[count_words(sample_title(g, TitleRole::main, rng))];
  CHECK(census.size() == 5);
  CHECK(census.begin()->first == 3);
  CHECK(census.rbegin()->first == 7);
}

TEST_CASE("titles fall back to replacement for tiny groups and reject empty ones") {
  const WordGroup tiny{"cup", {"mug"}};
  Rng rng(1);
  CHECK(count_words(sample_title(tiny, TitleRole::main, rng)) >= 3);
  const WordGroup empty{"cup", {}};
  CHECK_THROWS_AS(sample_title(empty, TitleRole::main, rng), EmptyGroupError);
}

TEST_CASE("part-numerical labels form consecutive ranges") {
  CHECK(part_numerical_labels(0, 10, 3) == std::vector<std::string>{"0-10", "10-20", "20-30"});
  Rng rng(4);
  const auto d = domain(LabelDomain::Kind::part_numerical);
  const auto cat = LabelCatalog::bundled();
  for (int i = 0; i < 200; ++i) {
    const auto labels = sample_categorical_labels(cat, d, 6, rng);
    long long lo0, hi0;
    REQUIRE(std::sscanf(labels[0].c_str(), "%lld-%lld", &lo0, &hi0) == 2);
    const long long step = hi0 - lo0;
    REQUIRE(lo0 % step == 0);
    CHECK(labels == part_numerical_labels(lo0, step, 6));
  }
}

TEST_CASE("places are distinct members of the place file") {
  const auto file = vocab::read_lines(std::filesystem::path(oracle::data_path("places.txt")));
  CHECK(file.size() == 2123);
  const std::set<std::string> all(file.begin(), file.end());
  const auto cat = LabelCatalog::bundled();
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto labels = sample_categorical_labels(cat, domain(LabelDomain::Kind::places), 5, rng);
    REQUIRE(labels.size() == 5);
    REQUIRE(std::set<std::string>(labels.begin(), labels.end()).size() == 5);
    for (const auto& l : labels) REQUIRE(all.count(l));
  }
}

TEST_CASE("short month labels are a run of the short-name table") {
  const std::vector<std::string> table(oracle::kShortMonths.begin(), oracle::kShortMonths.end());
  const auto cat = LabelCatalog::bundled();
  auto d = domain(LabelDomain::Kind::months);
  d.month_format = MonthFormat::short_name;
  Rng rng(6);
  CHECK(sample_categorical_labels(cat, d, 12, rng) == table);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(oracle::contiguous_run(sample_categorical_labels(cat, d, n, rng), table));
}

TEST_CASE("one month format per call") {
  const std::vector<std::string> shorts(oracle::kShortMonths.begin(), oracle::kShortMonths.end());
  const auto cat = LabelCatalog::bundled();
  std::set<std::string> longs;
  for (const auto& m : cat.months()) longs.insert(m.long_name);
  auto month_index = [&](const std::string& s) { return std::find(shorts.begin(), shorts.end(), s) - shorts.begin(); };
  // Formats a label could be written in: 0 short, 1 long, 2 two-month range,
  // 3 three-month range, 4 month-day. "May" is both short and long.
  auto formats_of = [&](const std::string& l) {
    std::set<int> out;
    const auto dash = l.find('-');
    if (dash == std::string::npos) {
      if (month_index(l) < 12) out.insert(0);
      if (longs.count(l)) out.insert(1);
      return out;
    }
    const std::string a = l.substr(0, dash), b = l.substr(dash + 1);
    if (month_index(a) == 12) return out;
    if (std::isdigit(static_cast<unsigned char>(b[0]))) {
      out.insert(4);
    } else if (month_index(b) - month_index(a) == 1) {
      out.insert(2);
    } else if (month_index(b) - month_index(a) == 2) {
      out.insert(3);
    }
    return out;
  };
  Rng rng(10);
  std::set<int> formats_seen;
  for (int i = 0; i < 300; ++i) {
    const auto labels = sample_categorical_labels(cat, domain(LabelDomain::Kind::months), 4, rng);
    std::set<int> common{0, 1, 2, 3, 4};
    for (const auto& l : labels) {
      const auto f = formats_of(l);
      std::set<int> both;
      std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::inserter(both, both.begin()));
      common = both;
    }
    REQUIRE_FALSE(common.empty());
    formats_seen.insert(common.begin(), common.end());
  }
  CHECK(formats_seen.size() == 5);
}

TEST_CASE("capacity overflow is an error") {
  const auto cat = LabelCatalog::bundled();
  Rng rng(2);
  CHECK_THROWS_AS(sample_categorical_labels(cat, domain(LabelDomain::Kind::days), 8, rng), CapacityError);
  auto d = domain(LabelDomain::Kind::months);
  d.month_format = MonthFormat::range3;
  CHECK_THROWS_AS(sample_categorical_labels(cat, d, 5, rng), CapacityError);
}

TEST_CASE("1,000-word toy table: rankings equal the brute-force oracle") {
  const auto path = oracle::data_path("toy_embeddings.txt");
  const auto raw = oracle::read_raw(path, true);
  const auto t = load_embeddings(path, true);
  REQUIRE(t.size() == raw.words.size());
  for (std::size_t i = 0; i < raw.words.size(); i += 7) {
    REQUIRE(words_of(nearest_neighbors(t, raw.words[i], 25)) == oracle::top_k(raw, raw.words[i], 25));
  }
}

}

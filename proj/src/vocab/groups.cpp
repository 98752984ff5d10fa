#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "chartgen/errors.hpp"
#include "chartgen/vocab.hpp"

namespace chartgen::vocab {
namespace {

WordGroup group_for(const EmbeddingTable& table, const std::string& seed, std::size_t k) {
  WordGroup group{seed, {}};
  for (auto& n : nearest_neighbors(table, seed, k)) group.members.push_back(std::move(n.word));
  return group;
}

}  // namespace

GroupBuildResult build_word_groups(const EmbeddingTable& table,
                                   std::span<const std::string> seeds, std::size_t k, int hops) {
  if (hops != 1 && hops != 2) throw Error("hops must be 1 or 2");
  if (k == 0) throw Error("k must be positive");

  GroupBuildResult result;
  std::unordered_set<std::string> emitted;
  std::unordered_set<std::string> skipped;
  for (const auto& seed : seeds) {
    if (emitted.count(seed) || skipped.count(seed)) continue;
    if (!table.contains(seed)) {
      skipped.insert(seed);
      result.skipped.push_back(seed);
      continue;
    }
    emitted.insert(seed);
    result.groups.push_back(group_for(table, seed, k));
  }
  if (hops == 2) {
    const std::size_t hop1 = result.groups.size();
    for (std::size_t g = 0; g < hop1; ++g) {
      // Copy: push_back below may reallocate.
      const std::vector<std::string> members = result.groups[g].members;
      for (const auto& m : members) {
        if (!emitted.insert(m).second) continue;
        result.groups.push_back(group_for(table, m, k));
      }
    }
  }
  return result;
}

void write_word_groups(std::ostream& out, std::span<const WordGroup> groups) {
  for (const auto& g : groups) {
    out << g.seed << '\t';
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      if (i) out << ' ';
      out << g.members[i];
    }
    out << '\n';
  }
}

std::vector<WordGroup> read_word_groups(std::istream& in) {
  std::vector<WordGroup> groups;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw FormatError("word group line lacks a tab", line_no);
    WordGroup g{line.substr(0, tab), {}};
    std::string_view rest(line);
    rest.remove_prefix(tab + 1);
    while (!rest.empty()) {
      const auto sp = rest.find(' ');
      std::string_view w = rest.substr(0, sp);
      if (!w.empty()) g.members.emplace_back(w);
      if (sp == std::string_view::npos) break;
      rest.remove_prefix(sp + 1);
    }
    if (g.members.empty()) throw FormatError("word group '" + g.seed + "' is empty", line_no);
    groups.push_back(std::move(g));
  }
  return groups;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return read_lines(in);
}

WordCountRange title_word_range(TitleRole role) {
  return role == TitleRole::y_axis ? WordCountRange{1, 4} : WordCountRange{3, 7};
}

std::string sample_title(const WordGroup& group, TitleRole role, Rng& rng) {
  if (group.members.empty()) throw EmptyGroupError("group '" + group.seed + "' has no members");
  const auto range = title_word_range(role);
  const auto n = static_cast<std::size_t>(rng.uniform_int(range.lo, range.hi));
  const auto& members = group.members;

  std::vector<std::size_t> picks;
  if (members.size() >= n) {
    std::vector<std::size_t> idx(members.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = i + rng.index(idx.size() - i);
      std::swap(idx[i], idx[j]);
      picks.push_back(idx[i]);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) picks.push_back(rng.index(members.size()));
  }
  std::string title;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    if (i) title.push_back(' ');
    title += members[picks[i]];
  }
  return title;
}

}  // namespace chartgen::vocab

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>

#include "chartgen/errors.hpp"
#include "chartgen/vocab.hpp"

namespace chartgen::vocab {

bool is_ascii(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

void EmbeddingTable::add(std::string word, std::span<const float> vector) {
  if (vector.size() != dimension_) {
    throw Error("vector for '" + word + "' has dimension " + std::to_string(vector.size()) +
                ", expected " + std::to_string(dimension_));
  }
  if (index_.count(word)) throw Error("duplicate word '" + word + "'");
  double sq = 0;
  for (float v : vector) sq += static_cast<double>(v) * v;
  if (sq == 0.0) throw Error("zero vector for '" + word + "'");
  index_.emplace(word, words_.size());
  words_.push_back(std::move(word));
  data_.insert(data_.end(), vector.begin(), vector.end());
  norms_.push_back(std::sqrt(sq));
}

std::optional<std::size_t> EmbeddingTable::index_of(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double EmbeddingTable::cosine(std::size_t a, std::size_t b) const {
  const float* va = data_.data() + a * dimension_;
  const float* vb = data_.data() + b * dimension_;
  double dot = 0;
  for (std::size_t i = 0; i < dimension_; ++i) dot += static_cast<double>(va[i]) * vb[i];
  return dot / (norms_[a] * norms_[b]);
}

EmbeddingTable read_embeddings(std::istream& in, bool filter_ascii,
                               std::vector<Rejection>* rejected) {
  EmbeddingTable table;
  bool have_dimension = false;
  std::vector<float> vec;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view rest(line);
    auto skip_space = [&] {
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
    };
    skip_space();
    if (rest.empty()) continue;
    const auto word_end = rest.find_first_of(" \t");
    std::string word(rest.substr(0, word_end));
    if (filter_ascii && !is_ascii(word)) continue;
    rest = word_end == std::string_view::npos ? std::string_view{} : rest.substr(word_end);

    vec.clear();
    skip_space();
    while (!rest.empty()) {
      const auto tok_end = std::min(rest.find_first_of(" \t"), rest.size());
      std::string_view tok = rest.substr(0, tok_end);
      float v = 0;
      auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
        throw FormatError("non-numeric component '" + std::string(tok) + "'", line_no);
      }
      vec.push_back(v);
      rest.remove_prefix(tok_end);
      skip_space();
    }

    if (!have_dimension) {
      if (vec.empty()) throw FormatError("entry '" + word + "' has no vector", line_no);
      table = EmbeddingTable(vec.size());
      have_dimension = true;
    }
    if (vec.size() != table.dimension()) {
      throw FormatError("expected " + std::to_string(table.dimension()) + " components, got " +
                            std::to_string(vec.size()),
                        line_no);
    }
    if (std::all_of(vec.begin(), vec.end(), [](float v) { return v == 0.0f; })) {
      if (rejected) rejected->push_back({line_no, word, "zero vector"});
      continue;
    }
    if (table.contains(word)) {
      if (rejected) rejected->push_back({line_no, word, "duplicate word"});
      continue;
    }
    table.add(std::move(word), vec);
  }
  return table;
}

EmbeddingTable load_embeddings(const std::filesystem::path& path, bool filter_ascii,
                               std::vector<Rejection>* rejected) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read embeddings file " + path.string());
  return read_embeddings(in, filter_ascii, rejected);
}

std::vector<Neighbor> nearest_neighbors(const EmbeddingTable& table, std::string_view word,
                                        std::size_t k) {
  const auto query = table.index_of(word);
  if (!query) throw UnknownWordError(std::string(word));

  std::vector<std::size_t> order;
  std::vector<double> sims(table.size());
  order.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i == *query) continue;
    sims[i] = table.cosine(*query, i);
    order.push_back(i);
  }
  const std::size_t take = std::min(k, order.size());
  auto better = [&](std::size_t a, std::size_t b) {
    if (sims[a] != sims[b]) return sims[a] > sims[b];
    return table.word(a) < table.word(b);
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                    better);

  std::vector<Neighbor> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back({table.word(order[i]), sims[order[i]]});
  return out;
}

}  // namespace chartgen::vocab

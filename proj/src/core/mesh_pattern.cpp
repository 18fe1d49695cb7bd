#include "mesh_pattern.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "errors.hpp"

namespace meshperm {

MeshPattern::MeshPattern(Permutation underlying, std::vector<Cell> shading)
    : underlying_(std::move(underlying)), shading_(std::move(shading)) {
  const int m = underlying_.size();
  for (const Cell& c : shading_) {
    if (c.col < 0 || c.col > m || c.row < 0 || c.row > m) {
      throw InvalidInput("shaded cell (" + std::to_string(c.col) + "," + std::to_string(c.row) +
                         ") outside [0," + std::to_string(m) + "]^2");
    }
  }
  std::sort(shading_.begin(), shading_.end());
  shading_.erase(std::unique(shading_.begin(), shading_.end()), shading_.end());
}

bool MeshPattern::is_shaded(Cell cell) const {
  return std::binary_search(shading_.begin(), shading_.end(), cell);
}

namespace {

// Shadings of P1..P14 as drawn: odd indices sit on 123, even on 132, and
// each consecutive pair shares one shading.
const std::array<std::vector<Cell>, 7> kPairShadings = {{
    {{0, 0}, {0, 1}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 3}},
    {{0, 0}, {0, 1}, {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}, {3, 3}},
    {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 3}},
    {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}, {3, 3}},
    {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}},
    {{1, 0}, {0, 2}, {1, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}},
    {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Permutation increasing(int k) { return Permutation::identity(k); }

Permutation decreasing(int k) {
  std::vector<int> values(k);
  for (int i = 0; i < k; ++i) values[i] = k - i;
  return Permutation(std::move(values));
}

}  // namespace

MeshPattern catalog(std::string_view name, std::optional<int> k) {
  const std::string key = lower(name);
  std::size_t letters = 0;
  while (letters < key.size() && std::isalpha(static_cast<unsigned char>(key[letters]))) ++letters;
  const std::string family = key.substr(0, letters);
  const std::string digits = key.substr(letters);

  std::optional<int> suffix;
  if (!digits.empty()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw DomainError("unknown catalog pattern '" + std::string(name) + "'");
    }
    suffix = value;
  }
  if (suffix && k && *suffix != *k) {
    throw DomainError("conflicting family sizes for '" + std::string(name) + "'");
  }

  if (family == "p") {
    if (!suffix || *suffix < 1 || *suffix > 14 || k) {
      throw DomainError("unknown catalog pattern '" + std::string(name) + "'");
    }
    const int i = *suffix;
    const Permutation underlying = (i % 2 == 1) ? Permutation{1, 2, 3} : Permutation{1, 3, 2};
    return MeshPattern(underlying, kPairShadings[(i - 1) / 2]);
  }

  const int size = suffix ? *suffix : k.value_or(2);
  if (family == "a" || family == "at" || family == "d" || family == "dt") {
    if (size < 2) throw DomainError("pattern family size must be at least 2");
  }
  if (family == "a") return MeshPattern(increasing(size), {{0, size}, {size, 0}});
  if (family == "d") return MeshPattern(decreasing(size), {{0, 0}, {size, size}});
  if (family == "at" || family == "dt") {
    const Permutation underlying = family == "at" ? increasing(size) : decreasing(size);
    return MeshPattern(underlying, {{0, 0}, {0, size}, {size, 0}, {size, size}});
  }
  throw DomainError("unknown catalog pattern '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= 14; ++i) names.push_back("P" + std::to_string(i));
  names.push_back("A");
  names.push_back("D");
  return names;
}

namespace {

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) : text_(text) {}

  MeshPattern parse() {
    skip_space();
    if (at_end()) throw ParseError("empty pattern", pos_);
    MeshPattern result;
    if (starts_with_keyword("mesh")) {
      result = parse_mesh();
    } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
      result = parse_name();
    } else {
      const std::size_t start = pos_;
      const std::string_view word = take_until(std::string_view{});
      result = MeshPattern(parse_word(word, start), {});
    }
    skip_space();
    if (!at_end()) throw ParseError("trailing characters in pattern", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_with_keyword(std::string_view keyword) const {
    if (text_.size() - pos_ < keyword.size()) return false;
    for (std::size_t i = 0; i < keyword.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) != keyword[i]) return false;
    }
    std::size_t after = pos_ + keyword.size();
    while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
    return after < text_.size() && text_[after] == '(';
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  // Consumes up to (not including) the first character in `stops`.
  std::string_view take_until(std::string_view stops) {
    const std::size_t start = pos_;
    while (!at_end() && stops.find(text_[pos_]) == std::string_view::npos) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  static Permutation parse_word(std::string_view word, std::size_t offset) {
    bool any = false;
    for (char c : word) any |= !std::isspace(static_cast<unsigned char>(c));
    if (!any) throw ParseError("expected a permutation word", offset);
    try {
      return Permutation::parse(word);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), offset + e.position());
    } catch (const InvalidInput& e) {
      throw ParseError(std::string("not a permutation: ") + e.what(), offset);
    }
  }

  MeshPattern parse_name() {
    const std::size_t start = pos_;
    std::string name;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name.push_back(text_[pos_++]);
    try {
      return catalog(name);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), start);
    }
  }

  int parse_int() {
    skip_space();
    const std::size_t start = pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) throw ParseError("expected an integer", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  MeshPattern parse_mesh() {
    pos_ += 4;  // "mesh"
    expect('(');
    skip_space();
    const std::size_t word_start = pos_;
    const Permutation underlying = parse_word(take_until(";"), word_start);
    expect(';');
    expect('{');
    std::vector<std::pair<Cell, std::size_t>> cells;
    skip_space();
    if (peek() != '}') {
      while (true) {
        skip_space();
        const std::size_t cell_start = pos_;
        expect('(');
        const int col = parse_int();
        expect(',');
        const int row = parse_int();
        expect(')');
        cells.push_back({{col, row}, cell_start});
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('}');
    expect(')');
    const int m = underlying.size();
    std::vector<Cell> shading;
    for (const auto& [cell, offset] : cells) {
      if (cell.col < 0 || cell.col > m || cell.row < 0 || cell.row > m) {
        throw ParseError("cell out of range [0," + std::to_string(m) + "]", offset);
      }
      shading.push_back(cell);
    }
    return MeshPattern(underlying, std::move(shading));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MeshPattern parse_pattern(std::string_view spec) { return PatternParser(spec).parse(); }

std::vector<MeshPattern> parse_pattern_list(std::string_view specs) {
  std::vector<MeshPattern> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= specs.size(); ++i) {
    const char c = i < specs.size() ? specs[i] : ',';
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      const std::string_view piece = specs.substr(start, i - start);
      try {
        out.push_back(parse_pattern(piece));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), start + e.position());
      }
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> split_pattern_list(std::string_view specs) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= specs.size(); ++i) {
    const char c = i < specs.size() ? specs[i] : ',';
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      std::string_view piece = specs.substr(start, i - start);
      while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
      while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
      out.emplace_back(piece);
      start = i + 1;
    }
  }
  return out;
}

std::string render_pattern(const MeshPattern& p) {
  std::string out = "mesh(" + p.underlying().to_string() + ";{";
  bool first = true;
  for (const Cell& c : p.shading()) {
    if (!first) out.push_back(',');
    first = false;
    out += "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
  }
  out += "})";
  return out;
}

MeshPattern flip_diagonal(const MeshPattern& p) {
  std::vector<Cell> shading;
  shading.reserve(p.shading().size());
  for (const Cell& c : p.shading()) shading.push_back({c.row, c.col});
  return MeshPattern(inverse(p.underlying()), std::move(shading));
}

}  // namespace meshperm

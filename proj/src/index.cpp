#include "mzv/index.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace mzv {

Index::Index(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) throw IndexError("entry must be positive");
    weight_ += e;
  }
}

Index::Index(std::initializer_list<int> entries) : Index(std::vector<int>(entries)) {}

std::size_t Index::trailing_ones() const noexcept {
  std::size_t n = 0;
  for (auto it = entries_.rbegin(); it != entries_.rend() && *it == 1; ++it) ++n;
  return n;
}

Index Index::slice(std::size_t first, std::size_t last) const {
  return Index(std::vector<int>(entries_.begin() + static_cast<std::ptrdiff_t>(first),
                                entries_.begin() + static_cast<std::ptrdiff_t>(last)));
}

Index Index::reversed() const {
  Index out = *this;
  std::reverse(out.entries_.begin(), out.entries_.end());
  return out;
}

Index Index::appended(int entry) const {
  if (entry < 1) throw IndexError("entry must be positive");
  Index out = *this;
  out.entries_.push_back(entry);
  out.weight_ += entry;
  return out;
}

Index Index::without_last() const {
  Index out = *this;
  out.weight_ -= out.entries_.back();
  out.entries_.pop_back();
  return out;
}

Index Index::concat(const Index& other) const {
  Index out = *this;
  out.entries_.insert(out.entries_.end(), other.entries_.begin(), other.entries_.end());
  out.weight_ += other.weight_;
  return out;
}

std::strong_ordering operator<=>(const Index& a, const Index& b) noexcept {
  if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

std::string Index::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

std::size_t IndexHash::operator()(const Index& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ k.depth();
  for (int e : k) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL + (h >> 29);
  return h;
}

Index make_index(const std::vector<int>& entries) { return Index(entries); }

Index repeat_pattern(int a, int b, int n, const Index& suffix) {
  if (n < 0) throw IndexError("repetition count must be nonnegative");
  std::vector<int> out;
  out.reserve(2 * static_cast<std::size_t>(n) + suffix.depth());
  for (int i = 0; i < n; ++i) {
    out.push_back(a);
    out.push_back(b);
  }
  out.insert(out.end(), suffix.begin(), suffix.end());
  return Index(std::move(out));
}

Index repeat(int a, int n) {
  if (n < 0) throw IndexError("repetition count must be nonnegative");
  return Index(std::vector<int>(static_cast<std::size_t>(n), a));
}

namespace {

class IndexParser {
 public:
  explicit IndexParser(std::string_view text) : text_(text) {}

  Index parse() {
    skip_ws();
    bool parens = false;
    if (peek() == '(') {
      parens = true;
      ++pos_;
    }
    std::vector<int> out;
    skip_ws();
    if (!at_end() && !(parens && peek() == ')')) {
      while (true) {
        skip_ws();
        if (peek() == '{') {
          auto group = parse_group();
          out.insert(out.end(), group.begin(), group.end());
        } else {
          out.push_back(parse_int());
        }
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip_ws();
    if (parens) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      skip_ws();
    }
    if (!at_end()) fail("unexpected trailing characters");
    return Index(std::move(out));
  }

 private:
  std::vector<int> parse_group() {
    ++pos_;  // '{'
    std::vector<int> unit;
    while (true) {
      skip_ws();
      unit.push_back(parse_int());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == '}') {
        ++pos_;
        break;
      }
      fail("expected ',' or '}'");
    }
    skip_ws();
    if (peek() != '^') fail("expected '^' after '}'");
    ++pos_;
    skip_ws();
    int n = parse_int(/*allow_zero=*/true);
    std::vector<int> out;
    for (int i = 0; i < n; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  int parse_int(bool allow_zero = false) {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("integer out of range");
    if (value < 1 && !(allow_zero && value == 0)) throw IndexError("entry must be positive");
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw IndexError("malformed index '" + std::string(text_) + "': " + what + " at position " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Index parse_index(std::string_view text) { return IndexParser(text).parse(); }

}  // namespace mzv

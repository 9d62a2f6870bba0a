#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

/// Raised for malformed indices (non-positive entries, unparsable strings).
class IndexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite, possibly empty, sequence of positive integers (k_1, ..., k_r).
///
/// Entries are stored in written order, k_1 first. The associated nested sum
/// runs over 0 < n_1 < ... < n_r, so admissibility is a condition on the
/// last entry.
class Index {
 public:
  Index() = default;
  explicit Index(std::vector<int> entries);
  Index(std::initializer_list<int> entries);

  [[nodiscard]] const std::vector<int>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::size_t depth() const noexcept { return entries_.size(); }
  [[nodiscard]] int weight() const noexcept { return weight_; }
  [[nodiscard]] int operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] int front() const { return entries_.front(); }
  [[nodiscard]] int back() const { return entries_.back(); }

  /// Empty, or last entry > 1.
  [[nodiscard]] bool admissible() const noexcept { return entries_.empty() || entries_.back() > 1; }
  /// Number of trailing entries equal to 1.
  [[nodiscard]] std::size_t trailing_ones() const noexcept;

  /// Entries [first, last).
  [[nodiscard]] Index slice(std::size_t first, std::size_t last) const;
  [[nodiscard]] Index reversed() const;
  [[nodiscard]] Index appended(int entry) const;
  [[nodiscard]] Index without_last() const;
  [[nodiscard]] Index concat(const Index& other) const;

  [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
  [[nodiscard]] auto end() const noexcept { return entries_.end(); }

  /// Canonical order: shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const Index& a, const Index& b) noexcept;
  friend bool operator==(const Index& a, const Index& b) noexcept { return a.entries_ == b.entries_; }

  /// "(1,3)" style; the empty index prints as "()".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<int> entries_;
  int weight_ = 0;
};

struct IndexHash {
  std::size_t operator()(const Index& k) const noexcept;
};

Index make_index(const std::vector<int>& entries);

/// ({a,b}^n, suffix): a,b repeated alternately n times, then suffix.
Index repeat_pattern(int a, int b, int n, const Index& suffix = {});

/// {a}^n.
Index repeat(int a, int n);

inline Index reverse(const Index& k) { return k.reversed(); }
inline int weight(const Index& k) { return k.weight(); }
inline std::size_t depth(const Index& k) { return k.depth(); }

/// Parses "1,3,1,3", "(1,3)", "{1,3}^2", "{1,3}^2,1", "{4}^3", "" or "()".
/// Comma-separated items may mix plain integers and {..}^n groups.
Index parse_index(std::string_view text);

}  // namespace mzv

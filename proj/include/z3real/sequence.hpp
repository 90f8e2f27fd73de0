#pragma once

// Degree sequences: parsing, graphicality, residual sequences and the
// classification into exception families and construction routes.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace z3real {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Nonincreasing list of positive integers.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (int d : degrees_) {
      if (d < 1) throw std::invalid_argument("degree sequence entries must be positive");
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  }

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int size() const noexcept { return static_cast<int>(degrees_.size()); }
  bool empty() const noexcept { return degrees_.empty(); }
  int operator[](int i) const { return degrees_.at(static_cast<std::size_t>(i)); }
  /// 1-based access matching the d_1 >= ... >= d_n convention.
  int d(int i) const { return degrees_.at(static_cast<std::size_t>(i - 1)); }
  int max() const { return degrees_.front(); }
  int min() const { return degrees_.back(); }
  long long sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0LL); }
  int count(int value) const {
    return static_cast<int>(std::count(degrees_.begin(), degrees_.end(), value));
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

/// Canonical text form, e.g. "(6,5,4^4,3)".
inline std::string to_string(const DegreeSequence& seq) {
  std::ostringstream out;
  out << '(';
  const auto& d = seq.degrees();
  for (std::size_t i = 0; i < d.size();) {
    std::size_t j = i;
    while (j < d.size() && d[j] == d[i]) ++j;
    if (i != 0) out << ',';
    out << d[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  out << ')';
  return out.str();
}

namespace detail {

class SequenceParser {
 public:
  explicit SequenceParser(std::string_view text) : text_(text) {}

  DegreeSequence parse() {
    std::vector<int> out;
    skip_ws();
    if (at_end()) throw ParseError("empty sequence", pos_);
    const bool paren = peek() == '(';
    if (paren) {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == ')') throw ParseError("empty sequence", pos_);
    }
    term(out);
    skip_ws();
    while (!at_end() && peek() == ',') {
      ++pos_;
      term(out);
      skip_ws();
    }
    if (paren) {
      if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      skip_ws();
    }
    if (!at_end()) throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    return DegreeSequence(std::move(out));
  }

 private:
  static constexpr long long kMaxValue = 1'000'000;
  static constexpr std::size_t kMaxLength = 1'000'000;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  long long integer(const char* what) {
    skip_ws();
    if (at_end()) throw ParseError(std::string("expected ") + what, pos_);
    if (peek() == '-') throw ParseError(std::string("negative ") + what, pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, pos_);
    const std::size_t start = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxValue) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    return value;
  }

  void term(std::vector<int>& out) {
    skip_ws();
    const std::size_t start = pos_;
    const long long degree = integer("degree");
    if (degree == 0) throw ParseError("zero degree", start);
    skip_ws();
    long long times = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t exp_pos = pos_;
      times = integer("exponent");
      if (times == 0) throw ParseError("zero exponent", exp_pos);
    }
    if (out.size() + static_cast<std::size_t>(times) > kMaxLength)
      throw ParseError("sequence too long", start);
    out.insert(out.end(), static_cast<std::size_t>(times), static_cast<int>(degree));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Residual recursion on a raw nonincreasing vector; zero entries are isolated
// vertices and are dropped.
inline bool graphic_by_residual(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  while (true) {
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) return true;
    if (d.front() < 0) return false;
    const long long total = std::accumulate(d.begin(), d.end(), 0LL);
    if (total % 2 != 0) return false;
    const int n = static_cast<int>(d.size());
    if (d.front() >= n) return false;
    const int last = d.back();
    d.pop_back();
    if (last > static_cast<int>(d.size())) return false;
    for (int i = 0; i < last; ++i) --d[static_cast<std::size_t>(i)];
    std::stable_sort(d.begin(), d.end(), std::greater<>());
    if (!d.empty() && d.back() < 0) return false;
  }
}

}  // namespace detail

/// Accepts "(6, 5, 4^4, 3)", "3^4" or unsorted input; output is sorted.
inline DegreeSequence parse_sequence(std::string_view text) {
  return detail::SequenceParser(text).parse();
}

/// Erdos-Gallai test on an arbitrary list of nonnegative integers.
inline bool erdos_gallai(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  if (!d.empty() && d.back() < 0) return false;
  const long long total = std::accumulate(d.begin(), d.end(), 0LL);
  if (total % 2 != 0) return false;
  const long long n = static_cast<long long>(d.size());
  long long lhs = 0;
  for (long long k = 1; k <= n; ++k) {
    lhs += d[static_cast<std::size_t>(k - 1)];
    long long rhs = k * (k - 1);
    for (long long i = k; i < n; ++i) rhs += std::min<long long>(d[static_cast<std::size_t>(i)], k);
    if (lhs > rhs) return false;
  }
  return true;
}

/// Graphicality through repeated residual sequences.
inline bool is_graphic(const DegreeSequence& seq) {
  if (seq.sum() % 2 != 0) return false;
  if (!seq.empty() && seq.max() >= seq.size()) return false;
  return detail::graphic_by_residual(seq.degrees());
}

/// Result of deleting d_n and decrementing the d_n largest entries.
/// `source[j]` is the position in the original sequence of residual entry j.
struct Residual {
  std::vector<int> degrees;
  std::vector<int> source;
  int removed_degree = 0;

  bool has_zero() const { return !degrees.empty() && degrees.back() == 0; }
  DegreeSequence sequence() const { return DegreeSequence(degrees); }
  /// Positions of the original sequence whose entries were decremented.
  std::vector<int> decremented_positions() const {
    std::vector<int> out(static_cast<std::size_t>(removed_degree));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
};

inline Residual residual(const DegreeSequence& seq) {
  const int n = seq.size();
  if (n < 2) throw std::invalid_argument("residual needs at least two entries");
  const int last = seq.d(n);
  if (last > n - 1) throw std::invalid_argument("last entry exceeds n-1; cannot delete");
  struct Entry {
    int degree;
    int position;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) entries.push_back({seq[i] - (i < last ? 1 : 0), i});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.degree > b.degree; });
  Residual out;
  out.removed_degree = last;
  for (const auto& e : entries) {
    out.degrees.push_back(e.degree);
    out.source.push_back(e.position);
  }
  return out;
}

enum class Route { T12, L41, T14, T15 };

enum class ClassTag {
  NotGraphic,
  ExceptionN3,
  ExceptionOddK,
  ExceptionOddKSquare,
  Covered,
  OutOfCoverage,
};

struct Classification {
  ClassTag tag = ClassTag::OutOfCoverage;
  std::optional<Route> route;
  /// n for ExceptionN3, k for the odd-k families.
  int parameter = 0;

  bool is_exception() const {
    return tag == ClassTag::ExceptionN3 || tag == ClassTag::ExceptionOddK ||
           tag == ClassTag::ExceptionOddKSquare;
  }
  friend bool operator==(const Classification&, const Classification&) = default;
};

inline const char* to_string(Route r) {
  switch (r) {
    case Route::T12: return "T12";
    case Route::L41: return "L41";
    case Route::T14: return "T14";
    case Route::T15: return "T15";
  }
  return "?";
}

inline const char* to_string(ClassTag t) {
  switch (t) {
    case ClassTag::NotGraphic: return "NotGraphic";
    case ClassTag::ExceptionN3: return "ExceptionN3";
    case ClassTag::ExceptionOddK: return "ExceptionOddK";
    case ClassTag::ExceptionOddKSquare: return "ExceptionOddKSquare";
    case ClassTag::Covered: return "Covered";
    case ClassTag::OutOfCoverage: return "OutOfCoverage";
  }
  return "?";
}

/// True when seq is (head..., 3^tail_threes) with exactly the given heads.
inline bool matches_pattern(const DegreeSequence& seq, const std::vector<int>& heads, int threes) {
  if (seq.size() != static_cast<int>(heads.size()) + threes) return false;
  for (std::size_t i = 0; i < heads.size(); ++i)
    if (seq[static_cast<int>(i)] != heads[i]) return false;
  for (int i = static_cast<int>(heads.size()); i < seq.size(); ++i)
    if (seq[i] != 3) return false;
  return true;
}

inline Classification classify(const DegreeSequence& seq) {
  Classification c;
  if (seq.empty() || !is_graphic(seq)) {
    c.tag = ClassTag::NotGraphic;
    return c;
  }
  const int n = seq.size();
  // (k, 3^k) with k odd; n = k + 1.
  {
    const int k = n - 1;
    if (k >= 3 && k % 2 == 1 && matches_pattern(seq, {k}, k)) {
      c.tag = ClassTag::ExceptionOddK;
      c.parameter = k;
      return c;
    }
    if (k >= 3 && k % 2 == 1 && matches_pattern(seq, {k, k}, k - 1)) {
      c.tag = ClassTag::ExceptionOddKSquare;
      c.parameter = k;
      return c;
    }
  }
  if (n >= 6 && matches_pattern(seq, {n - 3}, n - 1)) {
    c.tag = ClassTag::ExceptionN3;
    c.parameter = n;
    return c;
  }
  if (seq.min() < 3) return c;
  const int d1 = seq.max();
  c.tag = ClassTag::Covered;
  if (d1 == n - 1) {
    c.route = Route::T12;
  } else if (d1 == n - 2) {
    c.route = Route::L41;
  } else if (d1 == n - 3) {
    c.route = Route::T14;
  } else if (n >= 6 && seq.d(n - 5) >= 4) {
    c.route = Route::T15;
  } else {
    c.tag = ClassTag::OutOfCoverage;
  }
  return c;
}

}  // namespace z3real

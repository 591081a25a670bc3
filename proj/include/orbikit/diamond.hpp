#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbikit/error.hpp"
#include "orbikit/grade.hpp"

namespace orbikit {

/// Sparse, rationally bigraded Hodge diamond of a space of complex
/// dimension `dim()`. Only nonzero dimensions are stored.
///
/// Invariants (checked on construction):
///   - every key (p, q) satisfies 0 <= p, q <= dim and p - q is an integer;
///   - every grade denominator divides `level()`;
///   - every stored dimension is >= 1 (zeros are dropped, negatives rejected).
class HodgeDiamond {
 public:
  using Entries = std::map<Bidegree, std::int64_t>;

  HodgeDiamond() = default;

  /// When `level` is omitted it is the lcm of all grade denominators.
  HodgeDiamond(int dim, Entries entries, std::optional<std::int64_t> level = std::nullopt)
      : dim_(dim) {
    if (dim < 0) fail(ErrorKind::InvalidDiamond, "negative dimension");
    std::int64_t computed = 1;
    for (const auto& [key, h] : entries) {
      const auto& [p, q] = key;
      if (h < 0)
        fail(ErrorKind::InvalidDiamond,
             "negative dimension at (" + format_grade(p) + "," + format_grade(q) + ")");
      if (h == 0) continue;
      if (p < 0 || q < 0 || p > dim || q > dim)
        fail(ErrorKind::InvalidDiamond,
             "grade (" + format_grade(p) + "," + format_grade(q) + ") outside [0," +
                 std::to_string(dim) + "]");
      if (!is_integral(p - q))
        fail(ErrorKind::InvalidDiamond,
             "p - q is not an integer at (" + format_grade(p) + "," + format_grade(q) + ")");
      computed = lcm_of(computed, p.denominator());
      entries_.emplace(key, h);
    }
    if (level) {
      if (*level < 1) fail(ErrorKind::InvalidDiamond, "level must be positive");
      if (*level % computed != 0)
        fail(ErrorKind::InvalidDiamond, "grade denominators do not divide level " +
                                            std::to_string(*level));
      level_ = *level;
    } else {
      level_ = computed;
    }
  }

  int dim() const noexcept { return dim_; }
  std::int64_t level() const noexcept { return level_; }
  const Entries& entries() const noexcept { return entries_; }

  std::int64_t at(const Grade& p, const Grade& q) const {
    auto it = entries_.find({p, q});
    return it == entries_.end() ? 0 : it->second;
  }

  std::int64_t total() const {
    std::int64_t sum = 0;
    for (const auto& [key, h] : entries_) sum += h;
    return sum;
  }

  bool integer_graded() const {
    for (const auto& [key, h] : entries_)
      if (!is_integral(key)) return false;
    return true;
  }

  /// Equality of normalized maps; the level is bookkeeping and is ignored.
  friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  int dim_ = 0;
  std::int64_t level_ = 1;
  Entries entries_;
};

/// Dimensions of the diagonal sums  sum_{p - q = i} h^{p,q}  for i in [-n, n].
class ColumnVector {
 public:
  ColumnVector() : values_(1, 0) {}
  explicit ColumnVector(int dim) : dim_(dim), values_(2 * static_cast<std::size_t>(dim) + 1, 0) {
    if (dim < 0) fail(ErrorKind::InvalidArgument, "negative dimension");
  }

  int dim() const noexcept { return dim_; }

  /// Zero outside [-n, n].
  std::int64_t at(int i) const {
    if (i < -dim_ || i > dim_) return 0;
    return values_[static_cast<std::size_t>(i + dim_)];
  }

  void set(int i, std::int64_t value) {
    if (i < -dim_ || i > dim_)
      fail(ErrorKind::InvalidArgument,
           "column index " + std::to_string(i) + " outside [-" + std::to_string(dim_) + "," +
               std::to_string(dim_) + "]");
    values_[static_cast<std::size_t>(i + dim_)] = value;
  }

  void add(int i, std::int64_t value) { set(i, at(i) + value); }

  std::int64_t total() const {
    std::int64_t sum = 0;
    for (auto v : values_) sum += v;
    return sum;
  }

  friend bool operator==(const ColumnVector&, const ColumnVector&) = default;

 private:
  int dim_ = 0;
  std::vector<std::int64_t> values_;
};

struct SymmetryReport {
  bool serre = false;
  bool hodge = false;
};

/// Entry at (p, q) becomes the input entry at (n - p, n - q).
inline HodgeDiamond serre_dual(const HodgeDiamond& d) {
  HodgeDiamond::Entries out;
  const Grade n(d.dim());
  for (const auto& [key, h] : d.entries()) out.emplace(Bidegree{n - key.first, n - key.second}, h);
  return HodgeDiamond(d.dim(), std::move(out), d.level());
}

inline HodgeDiamond conjugate(const HodgeDiamond& d) {
  HodgeDiamond::Entries out;
  for (const auto& [key, h] : d.entries()) out.emplace(Bidegree{key.second, key.first}, h);
  return HodgeDiamond(d.dim(), std::move(out), d.level());
}

inline SymmetryReport check_symmetries(const HodgeDiamond& d) {
  return {d == serre_dual(d), d == conjugate(d)};
}

inline ColumnVector columns(const HodgeDiamond& d) {
  ColumnVector out(d.dim());
  for (const auto& [key, h] : d.entries()) {
    // p - q is integral by the diamond invariant.
    out.add(static_cast<int>((key.first - key.second).numerator()), h);
  }
  return out;
}

/// Signed generating polynomial with rational exponents; zero terms unstored.
class StringyPolynomial {
 public:
  using Terms = std::map<Bidegree, std::int64_t>;

  StringyPolynomial() = default;
  explicit StringyPolynomial(Terms terms) {
    for (const auto& [key, c] : terms)
      if (c != 0) terms_.emplace(key, c);
  }

  const Terms& terms() const noexcept { return terms_; }

  std::int64_t coefficient(const Grade& p, const Grade& q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Bidegree& key, std::int64_t c) {
    auto& slot = terms_[key];
    slot += c;
    if (slot == 0) terms_.erase(key);
  }

  friend bool operator==(const StringyPolynomial&, const StringyPolynomial&) = default;

 private:
  Terms terms_;
};

}  // namespace orbikit

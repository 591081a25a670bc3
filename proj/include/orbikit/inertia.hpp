#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbikit/diamond.hpp"
#include "orbikit/error.hpp"
#include "orbikit/grade.hpp"

namespace orbikit {

/// One sector of the inertia decomposition.
///
/// `exponents` are the eigenvalue exponents a_i of the sector automorphism on
/// the ambient tangent space, reduced to 0 <= a_i <= order - 1; an eigenvalue
/// is exp(2 pi i a_i / order). Zero exponents are the directions tangent to
/// the fixed locus Z, so the coarse diamond has dimension equal to their count.
class InertiaComponent {
 public:
  InertiaComponent(std::int64_t order, std::vector<std::int64_t> exponents,
                   HodgeDiamond coarse, std::string label = {})
      : order_(order), exponents_(std::move(exponents)), coarse_(std::move(coarse)),
        label_(std::move(label)) {
    validate();
  }

  std::int64_t order() const noexcept { return order_; }
  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
  const HodgeDiamond& coarse_diamond() const noexcept { return coarse_; }
  const std::string& label() const noexcept { return label_; }
  int ambient_dim() const noexcept { return static_cast<int>(exponents_.size()); }
  bool untwisted() const noexcept { return order_ == 1; }

  int codimension() const {
    return static_cast<int>(std::count_if(exponents_.begin(), exponents_.end(),
                                          [](auto a) { return a != 0; }));
  }

  /// Canonical ordering key: (order, exponents, label).
  auto key() const { return std::tie(order_, exponents_, label_); }

  friend bool operator==(const InertiaComponent& a, const InertiaComponent& b) {
    return a.key() == b.key() && a.coarse_ == b.coarse_;
  }

 private:
  std::string where() const {
    std::string out = "sector";
    if (!label_.empty()) out += " '" + label_ + "'";
    out += " (order " + std::to_string(order_) + ", exponents [";
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      out += (i ? "," : "") + std::to_string(exponents_[i]);
    return out + "])";
  }

  void validate() const {
    if (order_ < 1) fail(ErrorKind::InvalidComponent, where() + ": order must be positive");
    int zeros = 0;
    std::int64_t exponent_order = 1;
    for (auto a : exponents_) {
      if (a < 0 || a >= order_)
        fail(ErrorKind::InvalidComponent,
             where() + ": exponent " + std::to_string(a) + " outside [0," +
                 std::to_string(order_ - 1) + "]");
      if (a == 0) {
        ++zeros;
      } else {
        exponent_order = std::lcm(exponent_order, order_ / std::gcd(a, order_));
      }
    }
    const int nonzero = ambient_dim() - zeros;
    if (nonzero == 1)
      fail(ErrorKind::PseudoReflection,
           where() + ": exactly one nontrivial eigenvalue (codimension-one fixed locus)");
    if (exponent_order != order_)
      fail(ErrorKind::InvalidComponent,
           where() + ": exponents generate a cyclic group of order " +
               std::to_string(exponent_order) + ", not the declared order " +
               std::to_string(order_));
    if (coarse_.dim() != zeros)
      fail(ErrorKind::InvalidComponent,
           where() + ": coarse diamond has dimension " + std::to_string(coarse_.dim()) +
               " but the fixed locus has " + std::to_string(zeros) + " tangent directions");
    if (!coarse_.integer_graded())
      fail(ErrorKind::InvalidComponent, where() + ": coarse diamond must be integer graded");
    if (coarse_.at(0, 0) < 1)
      fail(ErrorKind::InvalidComponent, where() + ": coarse diamond has h^{0,0} = 0 (empty locus)");
  }

  std::int64_t order_;
  std::vector<std::int64_t> exponents_;
  HodgeDiamond coarse_;
  std::string label_;
};

/// Full inertia data of one orbifold: the untwisted sector plus twisted ones.
class OrbifoldPresentation {
 public:
  OrbifoldPresentation(int dim, std::vector<InertiaComponent> components, std::string name = {})
      : dim_(dim), components_(std::move(components)), name_(std::move(name)) {
    if (dim_ < 1) fail(ErrorKind::InvalidPresentation, "dimension must be positive");
    if (components_.empty()) fail(ErrorKind::InvalidPresentation, "no sectors");
    int untwisted = 0;
    for (const auto& c : components_) {
      if (c.ambient_dim() != dim_)
        fail(ErrorKind::InvalidPresentation,
             "sector with " + std::to_string(c.ambient_dim()) +
                 " exponents in a presentation of dimension " + std::to_string(dim_));
      if (c.untwisted()) ++untwisted;
    }
    if (untwisted != 1)
      fail(ErrorKind::InvalidPresentation,
           "expected exactly one untwisted sector (order 1), found " + std::to_string(untwisted));
  }

  int dim() const noexcept { return dim_; }
  const std::vector<InertiaComponent>& components() const noexcept { return components_; }
  const std::string& name() const noexcept { return name_; }

  const InertiaComponent& untwisted_sector() const {
    return *std::find_if(components_.begin(), components_.end(),
                         [](const auto& c) { return c.untwisted(); });
  }

  /// lcm of sector orders.
  std::int64_t level() const {
    std::int64_t level = 1;
    for (const auto& c : components_) level = std::lcm(level, c.order());
    return level;
  }

  /// Components in canonical order (order, exponents, label, then coarse entries).
  std::vector<InertiaComponent> sorted_components() const {
    auto out = components_;
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.key() != b.key()) return a.key() < b.key();
      return a.coarse_diamond().entries() < b.coarse_diamond().entries();
    });
    return out;
  }

  /// Sector lists are compared as multisets.
  friend bool operator==(const OrbifoldPresentation& a, const OrbifoldPresentation& b) {
    return a.dim_ == b.dim_ && a.name_ == b.name_ && a.sorted_components() == b.sorted_components();
  }

 private:
  int dim_;
  std::vector<InertiaComponent> components_;
  std::string name_;
};

/// Shift number  a(c) = (1/l) * sum_i a_i  with 0 <= a_i <= l - 1.
inline Grade age(const InertiaComponent& c) {
  std::int64_t sum = 0;
  for (auto a : c.exponents()) sum += a;
  return Grade(sum, c.order());
}

inline bool is_gorenstein(const OrbifoldPresentation& p) {
  return std::all_of(p.components().begin(), p.components().end(),
                     [](const auto& c) { return is_integral(age(c)); });
}

/// h^{p,q}_orb = sum over sectors Z of h^{p - a(Z), q - a(Z)}(Z).
inline HodgeDiamond assemble_diamond(const OrbifoldPresentation& p) {
  HodgeDiamond::Entries out;
  const Grade n(p.dim());
  for (const auto& c : p.components()) {
    const Grade shift = age(c);
    for (const auto& [key, h] : c.coarse_diamond().entries()) {
      Bidegree target{key.first + shift, key.second + shift};
      if (target.first < 0 || target.second < 0 || target.first > n || target.second > n)
        fail(ErrorKind::OutOfRange,
             "sector '" + c.label() + "' shifts (" + format_grade(key.first) + "," +
                 format_grade(key.second) + ") by " + format_grade(shift) + " outside [0," +
                 std::to_string(p.dim()) + "]");
      out[target] += h;
    }
  }
  return HodgeDiamond(p.dim(), std::move(out), p.level());
}

/// h^{0,q}_orb only receives contributions from the untwisted sector.
inline std::int64_t extract_h0q(const OrbifoldPresentation& p, int q) {
  if (q < 0 || q > p.dim())
    fail(ErrorKind::InvalidArgument, "q = " + std::to_string(q) + " outside [0, dim]");
  return p.untwisted_sector().coarse_diamond().at(0, q);
}

/// Sum over sectors of (uv)^{a(Z)} * sum (-1)^{p'+q'} h^{p',q'}(Z) u^{p'} v^{q'}.
/// Signs come from the integral bidegrees of each sector before shifting.
inline StringyPolynomial stringy_e(const OrbifoldPresentation& p) {
  StringyPolynomial e;
  for (const auto& c : p.components()) {
    const Grade shift = age(c);
    for (const auto& [key, h] : c.coarse_diamond().entries()) {
      const auto degree = (key.first + key.second).numerator();
      e.add({key.first + shift, key.second + shift}, degree % 2 == 0 ? h : -h);
    }
  }
  return e;
}

}  // namespace orbikit

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "orbikit/diamond.hpp"
#include "orbikit/error.hpp"
#include "orbikit/inertia.hpp"

namespace orbikit {

/// Diagonal action of G = Z/m_1 x ... x Z/m_k on P^n: generator j multiplies
/// homogeneous coordinate i by exp(2 pi i weights[j][i] / m_j).
struct ProjectiveQuotientSpec {
  int proj_dim = 0;
  std::vector<std::int64_t> cyclic_orders;
  std::vector<std::vector<std::int64_t>> weights;
  std::int64_t max_group_order = 10'000;
  std::string name{};
};

/// Quotient of an abelian variety of dimension `torus_dim` by x -> -x.
struct KummerSpec {
  int torus_dim = 0;
  std::string name{};
  int max_torus_dim = 10;  // 2^{2n} point sectors
};

inline HodgeDiamond projective_space_diamond(int n) {
  HodgeDiamond::Entries e;
  for (int p = 0; p <= n; ++p) e.emplace(Bidegree{p, p}, 1);
  return HodgeDiamond(n, std::move(e));
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Fixed component P(V_chi) of one group element.
struct FixedComponent {
  std::vector<std::int64_t> element;  // (t_1, ..., t_k), t_j in [0, m_j)
  std::size_t element_index = 0;      // mixed-radix index of `element`
  std::int64_t element_order = 1;
  std::int64_t eigenvalue = 0;        // chi in Z/element_order
  int eigenspace_dim = 0;             // dim V_chi
  InertiaComponent component;
};

namespace detail {

inline std::string element_string(const std::vector<std::int64_t>& t) {
  std::string s = "(";
  for (std::size_t j = 0; j < t.size(); ++j) s += (j ? "," : "") + std::to_string(t[j]);
  return s + ")";
}

inline std::string element_label(const std::vector<std::int64_t>& t, std::int64_t chi) {
  return "g=" + element_string(t) + " chi=" + std::to_string(chi);
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace detail

/// Enumerates every group element and every eigenspace of its action on
/// C^{n+1}, sorted by (element index, eigenvalue). The identity contributes
/// the untwisted sector with the full P^n diamond.
inline std::vector<FixedComponent> enumerate_fixed_components(const ProjectiveQuotientSpec& s) {
  const int n = s.proj_dim;
  if (n < 1) fail(ErrorKind::InvalidArgument, "projective dimension must be positive");
  if (s.weights.size() != s.cyclic_orders.size())
    fail(ErrorKind::InvalidArgument, "need one weight row per cyclic factor");
  std::int64_t group_order = 1;
  std::int64_t exponent_modulus = 1;  // lcm of the m_j
  for (std::size_t j = 0; j < s.cyclic_orders.size(); ++j) {
    const auto m = s.cyclic_orders[j];
    if (m < 1) fail(ErrorKind::InvalidArgument, "cyclic orders must be positive");
    if (s.weights[j].size() != static_cast<std::size_t>(n + 1))
      fail(ErrorKind::InvalidArgument, "weight row " + std::to_string(j) + " must have " +
                                           std::to_string(n + 1) + " entries");
    group_order *= m;
    if (group_order > s.max_group_order)
      fail(ErrorKind::GroupTooLarge, "group order exceeds limit " + std::to_string(s.max_group_order));
    exponent_modulus = std::lcm(exponent_modulus, m);
  }

  std::vector<FixedComponent> out;
  std::vector<std::int64_t> t(s.cyclic_orders.size(), 0);
  for (std::int64_t index = 0; index < group_order; ++index) {
    // Decode mixed-radix index, first factor fastest.
    std::int64_t rest = index;
    std::int64_t order = 1;
    for (std::size_t j = 0; j < t.size(); ++j) {
      t[j] = rest % s.cyclic_orders[j];
      rest /= s.cyclic_orders[j];
      order = std::lcm(order, s.cyclic_orders[j] / std::gcd(t[j], s.cyclic_orders[j]));
    }
    if (index == 0) {
      out.push_back({t, 0, 1, 0, n + 1,
                     InertiaComponent(1, std::vector<std::int64_t>(n, 0),
                                      projective_space_diamond(n), "untwisted")});
      continue;
    }
    // Character of coordinate i in Z/order: g^order is the identity tuple,
    // so every exponent mod exponent_modulus is a multiple of modulus/order.
    std::vector<std::int64_t> chi(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
      std::int64_t e = 0;
      for (std::size_t j = 0; j < t.size(); ++j)
        e += t[j] * detail::mod(s.weights[j][i], s.cyclic_orders[j]) *
             (exponent_modulus / s.cyclic_orders[j]);
      chi[i] = detail::mod(e, exponent_modulus) / (exponent_modulus / order);
    }
    std::map<std::int64_t, int> eigenspaces;
    for (auto c : chi) ++eigenspaces[c];
    if (eigenspaces.size() == 1)
      fail(ErrorKind::ScalarAction, "element " + detail::element_string(t) +
                                        " acts as a scalar on P^" + std::to_string(n));
    for (const auto& [value, multiplicity] : eigenspaces) {
      if (multiplicity == n)
        fail(ErrorKind::PseudoReflection,
             "element " + detail::element_string(t) + " fixes a hyperplane of P^" +
                 std::to_string(n) + " (codimension-one fixed locus)");
    }
    for (const auto& [value, multiplicity] : eigenspaces) {
      std::vector<std::int64_t> exponents;
      exponents.reserve(n);
      for (auto c : chi)
        if (c != value) exponents.push_back(detail::mod(c - value, order));
      exponents.insert(exponents.end(), multiplicity - 1, 0);
      out.push_back({t, static_cast<std::size_t>(index), order, value, multiplicity,
                     InertiaComponent(order, std::move(exponents),
                                      projective_space_diamond(multiplicity - 1),
                                      detail::element_label(t, value))});
    }
  }
  return out;
}

inline OrbifoldPresentation build_projective_quotient(const ProjectiveQuotientSpec& s) {
  std::vector<InertiaComponent> sectors;
  for (auto& f : enumerate_fixed_components(s)) sectors.push_back(std::move(f.component));
  return OrbifoldPresentation(s.proj_dim, std::move(sectors), s.name);
}

/// Untwisted sector: (-1)-invariant torus classes, h^{p,q} = C(n,p) C(n,q)
/// for p + q even. Twisted sectors: the 2^{2n} two-torsion points, each with
/// both eigenvalues -1, i.e. order 2 and exponents (1, ..., 1).
inline OrbifoldPresentation build_kummer(const KummerSpec& s) {
  const int n = s.torus_dim;
  if (n < 2)
    fail(ErrorKind::DimensionTooSmall,
         "Kummer quotients need torus dimension >= 2 (n = 1 gives pseudo-reflections)");
  if (n > s.max_torus_dim)
    fail(ErrorKind::GroupTooLarge,
         "torus dimension " + std::to_string(n) + " exceeds limit " + std::to_string(s.max_torus_dim));
  HodgeDiamond::Entries even;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      if ((p + q) % 2 == 0) even.emplace(Bidegree{p, q}, binomial(n, p) * binomial(n, q));
  std::vector<InertiaComponent> sectors;
  sectors.emplace_back(1, std::vector<std::int64_t>(n, 0), HodgeDiamond(n, std::move(even)),
                       "untwisted");
  const HodgeDiamond point(0, {{Bidegree{0, 0}, 1}});
  const std::int64_t points = std::int64_t{1} << (2 * n);
  for (std::int64_t i = 0; i < points; ++i)
    sectors.emplace_back(2, std::vector<std::int64_t>(n, 1), point, "2-torsion point");
  return OrbifoldPresentation(n, std::move(sectors), s.name);
}

}  // namespace orbikit

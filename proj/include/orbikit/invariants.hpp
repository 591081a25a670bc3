#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbikit/diamond.hpp"
#include "orbikit/error.hpp"
#include "orbikit/inertia.hpp"

namespace orbikit {

enum class Verdict { CompatibleSoFar, Incompatible };

constexpr std::string_view to_string(Verdict v) {
  return v == Verdict::CompatibleSoFar ? "CompatibleSoFar" : "Incompatible";
}

/// One failed constraint. `index` is the Hochschild column p - q the
/// constraint lives in; `at` is set for single-entry comparisons.
struct Mismatch {
  std::string constraint;
  int index = 0;
  std::int64_t left = 0;
  std::int64_t right = 0;
  std::optional<Bidegree> at;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// h^{0,q} comparison for 2 <= q <= n - 1; never affects the verdict.
struct InformationalH0q {
  int q = 0;
  std::int64_t left = 0;
  std::int64_t right = 0;
};

struct PartnerOptions {
  /// For n <= 3 and integer-graded inputs, also require equality of every entry.
  bool strict_dim3 = false;
};

struct PartnerReport {
  int dim = 0;
  bool columns_equal = true;
  bool h01_equal = true;
  bool hn0_equal = true;
  bool hn10_equal = true;
  std::optional<bool> strict_equal;  // set only when strict mode applied
  Verdict verdict = Verdict::CompatibleSoFar;
  std::vector<Mismatch> failures;
  std::vector<InformationalH0q> informational;
};

/// Necessary numerical conditions for two orbifolds of equal dimension to
/// have equivalent derived categories: equal Hochschild columns, equal
/// h^{0,1}, equal h^{n,0} and h^{n-1,0}. CompatibleSoFar never certifies
/// an equivalence.
inline PartnerReport check_partners(const HodgeDiamond& a, const HodgeDiamond& b,
                                    PartnerOptions options = {}) {
  if (a.dim() != b.dim())
    fail(ErrorKind::DimensionMismatch, "dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                           std::to_string(b.dim()));
  const int n = a.dim();
  PartnerReport r;
  r.dim = n;

  const auto ca = columns(a);
  const auto cb = columns(b);
  for (int i = -n; i <= n; ++i) {
    if (ca.at(i) != cb.at(i)) {
      r.columns_equal = false;
      r.failures.push_back({"columns", i, ca.at(i), cb.at(i), std::nullopt});
    }
  }

  auto compare_entry = [&](const char* name, int p, int q, bool& flag) {
    if (p < 0 || q < 0 || p > n || q > n) return;
    const auto left = a.at(p, q);
    const auto right = b.at(p, q);
    if (left != right) {
      flag = false;
      r.failures.push_back({name, p - q, left, right, Bidegree{p, q}});
    }
  };
  compare_entry("h01", 0, 1, r.h01_equal);
  compare_entry("hn0", n, 0, r.hn0_equal);
  compare_entry("hn10", n - 1, 0, r.hn10_equal);

  for (int q = 2; q <= n - 1; ++q) r.informational.push_back({q, a.at(0, q), b.at(0, q)});

  if (options.strict_dim3 && n <= 3 && a.integer_graded() && b.integer_graded()) {
    r.strict_equal = true;
    std::set<Bidegree> keys;
    for (const auto& [key, h] : a.entries()) keys.insert(key);
    for (const auto& [key, h] : b.entries()) keys.insert(key);
    for (const auto& key : keys) {
      const auto left = a.at(key.first, key.second);
      const auto right = b.at(key.first, key.second);
      if (left != right) {
        r.strict_equal = false;
        r.failures.push_back({"entry", static_cast<int>((key.first - key.second).numerator()), left,
                              right, key});
      }
    }
  }

  const bool ok = r.columns_equal && r.h01_equal && r.hn0_equal && r.hn10_equal &&
                  r.strict_equal.value_or(true);
  r.verdict = ok ? Verdict::CompatibleSoFar : Verdict::Incompatible;
  return r;
}

/// h^{n,0}_orb is the whole of column n: twisted sectors have dim Z <= n - 2.
inline std::int64_t extract_hn0(const ColumnVector& c) {
  if (c.dim() < 1) fail(ErrorKind::InvalidArgument, "needs dimension >= 1");
  return c.at(c.dim());
}

/// Column n - 1 is h^{n-1,0} + h^{n,1} = 2 h^{n-1,0}.
inline std::int64_t extract_hn10(const ColumnVector& c) {
  if (c.dim() < 1) fail(ErrorKind::InvalidArgument, "needs dimension >= 1");
  const auto v = c.at(c.dim() - 1);
  if (v % 2 != 0)
    fail(ErrorKind::ParityError,
         "column " + std::to_string(c.dim() - 1) + " = " + std::to_string(v) + " is odd");
  return v / 2;
}

namespace detail {

inline std::int64_t half(std::int64_t v, const char* what) {
  if (v < 0 || v % 2 != 0)
    fail(ErrorKind::Inconsistent, std::string(what) + " = " + std::to_string(v) +
                                      " must be a nonnegative even number");
  return v / 2;
}

inline std::int64_t nonnegative(std::int64_t v, const char* what) {
  if (v < 0) fail(ErrorKind::Inconsistent, std::string(what) + " would be " + std::to_string(v));
  return v;
}

/// Adds `value` at (p, q) and at every image under conjugation and Serre duality.
inline void put_orbit(HodgeDiamond::Entries& e, int n, int p, int q, std::int64_t value) {
  for (auto [x, y] : {std::pair{p, q}, {q, p}, {n - p, n - q}, {n - q, n - p}})
    e[Bidegree{x, y}] = value;
}

}  // namespace detail

/// The unique integer-graded diamond with h^{0,0} = 1, conjugation symmetry,
/// Serre duality, the given columns and h^{0,1}. Dimension is `c.dim()` and
/// must be at most 3; h01 is required for n = 3 and cross-checked otherwise.
inline HodgeDiamond reconstruct_gorenstein(const ColumnVector& c,
                                           std::optional<std::int64_t> h01) {
  const int n = c.dim();
  if (n > 3)
    fail(ErrorKind::UnsupportedRange,
         "reconstruction is only determined for dimension <= 3, got " + std::to_string(n));
  for (int i = 1; i <= n; ++i)
    if (c.at(i) != c.at(-i))
      fail(ErrorKind::Inconsistent, "column " + std::to_string(i) + " = " +
                                        std::to_string(c.at(i)) + " but column " +
                                        std::to_string(-i) + " = " + std::to_string(c.at(-i)));
  for (int i = -n; i <= n; ++i)
    if (c.at(i) < 0) fail(ErrorKind::Inconsistent, "negative column " + std::to_string(i));
  if (h01 && *h01 < 0) fail(ErrorKind::Inconsistent, "negative h01");

  HodgeDiamond::Entries e;
  detail::put_orbit(e, n, 0, 0, 1);
  std::int64_t h10 = 0;
  switch (n) {
    case 0:
      if (c.at(0) != 1) fail(ErrorKind::Inconsistent, "a point has column 0 equal to 1");
      break;
    case 1:
      if (c.at(0) != 2) fail(ErrorKind::Inconsistent, "a curve has column 0 equal to 2");
      h10 = c.at(1);
      break;
    case 2:
      detail::put_orbit(e, n, 2, 0, c.at(2));
      h10 = detail::half(c.at(1), "column 1");
      detail::put_orbit(e, n, 1, 1, detail::nonnegative(c.at(0) - 2, "h11"));
      break;
    case 3:
      if (!h01) fail(ErrorKind::InvalidArgument, "h01 is required in dimension 3");
      detail::put_orbit(e, n, 3, 0, c.at(3));
      detail::put_orbit(e, n, 2, 0, detail::half(c.at(2), "column 2"));
      h10 = *h01;
      detail::put_orbit(e, n, 2, 1, detail::nonnegative(c.at(1) - 2 * h10, "h21"));
      detail::put_orbit(e, n, 1, 1, detail::half(c.at(0) - 2, "column 0 - 2"));
      break;
    default:
      fail(ErrorKind::UnsupportedRange, "negative dimension");
  }
  if (n >= 1) detail::put_orbit(e, n, 1, 0, h10);
  if (h01 && *h01 != (n >= 1 ? h10 : 0))
    fail(ErrorKind::Inconsistent, "h01 = " + std::to_string(*h01) +
                                      " disagrees with the columns (h10 = " + std::to_string(h10) + ")");

  HodgeDiamond out(n, std::move(e));
  const auto sym = check_symmetries(out);
  if (!sym.serre || !sym.hodge || columns(out) != c)
    fail(ErrorKind::Inconsistent, "solved diamond does not reproduce the input columns");
  return out;
}

/// Sum over sectors of the column vectors of their coarse diamonds; the
/// (a, a) shift of each sector preserves p - q.
inline ColumnVector hochschild_via_sectors(const OrbifoldPresentation& p) {
  ColumnVector out(p.dim());
  for (const auto& c : p.components()) {
    const auto sector = columns(c.coarse_diamond());
    for (int i = -sector.dim(); i <= sector.dim(); ++i)
      if (sector.at(i) != 0) out.add(i, sector.at(i));
  }
  return out;
}

struct EntryDifference {
  Bidegree at;
  std::int64_t orbifold = 0;
  std::int64_t resolution = 0;
};

struct McKayReport {
  bool equal = true;
  std::vector<EntryDifference> differences;
};

/// Compares an orbifold diamond with the diamond of a claimed crepant resolution.
inline McKayReport mckay_compare(const HodgeDiamond& orb, const HodgeDiamond& resolution) {
  if (orb.dim() != resolution.dim())
    fail(ErrorKind::DimensionMismatch, "dimensions differ: " + std::to_string(orb.dim()) +
                                           " vs " + std::to_string(resolution.dim()));
  if (!orb.integer_graded())
    fail(ErrorKind::NonGorensteinOrbifold,
         "orbifold diamond has fractional grades; no crepant resolution comparison applies");
  if (!resolution.integer_graded())
    fail(ErrorKind::InvalidDiamond, "resolution diamond must be integer graded");
  McKayReport r;
  std::set<Bidegree> keys;
  for (const auto& [key, h] : orb.entries()) keys.insert(key);
  for (const auto& [key, h] : resolution.entries()) keys.insert(key);
  for (const auto& key : keys) {
    const auto left = orb.at(key.first, key.second);
    const auto right = resolution.at(key.first, key.second);
    if (left != right) r.differences.push_back({key, left, right});
  }
  r.equal = r.differences.empty();
  return r;
}

}  // namespace orbikit

#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbikit/diamond.hpp"
#include "orbikit/grade.hpp"

namespace orbikit::render {

namespace detail {

/// Integers 0..n plus every grade that occurs, ascending.
inline std::vector<Grade> grade_axis(const HodgeDiamond& d) {
  std::set<Grade> axis;
  for (int i = 0; i <= d.dim(); ++i) axis.insert(Grade(i));
  for (const auto& [key, h] : d.entries()) {
    axis.insert(key.first);
    axis.insert(key.second);
  }
  return {axis.begin(), axis.end()};
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace detail

/// Aligned table, rows q descending and columns p ascending. Fractional
/// grades sit between their integer neighbours; cells at positions that no
/// variety grade can reach are printed as ".".
inline std::string table(const HodgeDiamond& d, const std::string& name) {
  const auto axis = detail::grade_axis(d);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"q\\p"};
  for (const auto& p : axis) header.push_back(format_grade(p));
  rows.push_back(header);
  for (auto q = axis.rbegin(); q != axis.rend(); ++q) {
    std::vector<std::string> row{format_grade(*q)};
    for (const auto& p : axis) {
      const auto h = d.at(p, *q);
      const bool lattice = is_integral(p) && is_integral(*q);
      row.push_back(h != 0 || lattice ? std::to_string(h) : ".");
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  out << name << "  (dim " << d.dim() << ", level " << d.level() << ")\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += detail::pad_left(row[c], width[c]);
    }
    out << line << "\n";
  }
  return out.str();
}

inline std::string csv(const HodgeDiamond& d) {
  std::ostringstream out;
  out << "p,q,h\n";
  for (const auto& [key, h] : d.entries())
    out << format_grade(key.first) << "," << format_grade(key.second) << "," << h << "\n";
  return out.str();
}

/// Classical diamond layout: one row per total degree p + q (descending,
/// fractional degrees in rational order), one column per p - q from n
/// down to -n.
inline std::string tex(const HodgeDiamond& d, const std::string& name) {
  const int n = d.dim();
  std::set<Grade, std::greater<>> degrees;
  for (int s = 0; s <= 2 * n; ++s) degrees.insert(Grade(s));
  for (const auto& [key, h] : d.entries()) degrees.insert(key.first + key.second);

  std::ostringstream out;
  out << "% " << name << ": orbifold Hodge diamond (dim " << n << ")\n";
  out << "\\begin{tabular}{" << std::string(2 * static_cast<std::size_t>(n) + 1, 'c') << "}\n";
  for (const auto& s : degrees) {
    std::string line;
    for (int i = n; i >= -n; --i) {
      const Grade p = (s + i) / 2;
      const Grade q = (s - i) / 2;
      std::string cell;
      const bool inside = p >= 0 && q >= 0 && p <= n && q <= n;
      const auto h = inside ? d.at(p, q) : 0;
      if (h != 0 || (inside && is_integral(p) && is_integral(q))) cell = std::to_string(h);
      if (i != n) line += " & ";
      line += cell;
    }
    out << line << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace orbikit::render

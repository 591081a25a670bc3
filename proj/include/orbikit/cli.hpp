#pragma once

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "orbikit/catalog.hpp"
#include "orbikit/diamond.hpp"
#include "orbikit/error.hpp"
#include "orbikit/inertia.hpp"
#include "orbikit/invariants.hpp"
#include "orbikit/io.hpp"
#include "orbikit/render.hpp"

// Command-line surface. Exit codes:
//   0 success / compatible, 1 check failed or inconsistent data,
//   2 parse or usage error, 3 validation error, 4 dimension mismatch,
//   5 unsupported range.

namespace orbikit::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParse = 2,
  kValidation = 3,
  kDimensionMismatch = 4,
  kUnsupported = 5,
};

constexpr int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownCatalogEntry:
    case ErrorKind::InvalidArgument:
      return kParse;
    case ErrorKind::DimensionMismatch:
      return kDimensionMismatch;
    case ErrorKind::UnsupportedRange:
      return kUnsupported;
    case ErrorKind::ParityError:
    case ErrorKind::Inconsistent:
      return kCheckFailed;
    default:
      return kValidation;
  }
}

namespace detail {

inline const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

inline std::string render_diamond(const HodgeDiamond& d, const std::string& name,
                                  const std::string& format) {
  if (format == "json") return io::dump(io::diamond_json(d, name));
  if (format == "csv") return render::csv(d);
  if (format == "tex") return render::tex(d, name);
  return render::table(d, name);
}

inline io::OrderedJson mismatch_json(const Mismatch& m) {
  io::OrderedJson j;
  j["constraint"] = m.constraint;
  j["index"] = m.index;
  j["left"] = m.left;
  j["right"] = m.right;
  if (m.at) {
    j["p"] = io::grade_json(m.at->first);
    j["q"] = io::grade_json(m.at->second);
  }
  return j;
}

constexpr const char* kNecessaryOnly =
    "these are necessary conditions only; passing them does not establish a derived equivalence";

inline std::string render_partners(const PartnerReport& r, const std::string& a,
                                   const std::string& b, const std::string& format) {
  if (format == "json") {
    io::OrderedJson j;
    j["left"] = a;
    j["right"] = b;
    j["dim"] = r.dim;
    j["columns_equal"] = r.columns_equal;
    j["h01_equal"] = r.h01_equal;
    j["hn0_equal"] = r.hn0_equal;
    j["hn10_equal"] = r.hn10_equal;
    if (r.strict_equal) j["strict_equal"] = *r.strict_equal;
    j["verdict"] = std::string(to_string(r.verdict));
    auto failures = io::OrderedJson::array();
    for (const auto& m : r.failures) failures.push_back(mismatch_json(m));
    j["failures"] = std::move(failures);
    auto info = io::OrderedJson::array();
    for (const auto& h : r.informational) {
      io::OrderedJson e;
      e["q"] = h.q;
      e["left"] = h.left;
      e["right"] = h.right;
      info.push_back(std::move(e));
    }
    j["informational_h0q"] = std::move(info);
    j["note"] = kNecessaryOnly;
    return io::dump(j);
  }
  std::ostringstream out;
  out << a << " vs " << b << "  (dim " << r.dim << ")\n";
  out << "columns  " << pass_fail(r.columns_equal) << "\n";
  out << "h01      " << pass_fail(r.h01_equal) << "\n";
  out << "hn0      " << pass_fail(r.hn0_equal) << "\n";
  out << "hn10     " << pass_fail(r.hn10_equal) << "\n";
  if (r.strict_equal) out << "strict   " << pass_fail(*r.strict_equal) << "\n";
  for (const auto& m : r.failures) {
    out << "  mismatch " << m.constraint << " i=" << m.index;
    if (m.at) out << " at (" << format_grade(m.at->first) << "," << format_grade(m.at->second) << ")";
    out << ": " << m.left << " vs " << m.right << "\n";
  }
  for (const auto& h : r.informational)
    out << "  info h0" << h.q << ": " << h.left << " vs " << h.right
        << (h.left == h.right ? "" : " (not a derived invariant in general)") << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "note: " << kNecessaryOnly << "\n";
  return out.str();
}

inline std::string render_stringy(const StringyPolynomial& e, const std::string& name,
                                  const std::string& format) {
  if (format == "json") {
    io::OrderedJson j;
    j["name"] = name;
    auto terms = io::OrderedJson::array();
    for (const auto& [key, c] : e.terms()) {
      io::OrderedJson t;
      t["p"] = io::grade_json(key.first);
      t["q"] = io::grade_json(key.second);
      t["c"] = c;
      terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return io::dump(j);
  }
  std::string out = name + ": E(u,v) =";
  if (e.terms().empty()) return out + " 0\n";
  bool first = true;
  for (const auto& [key, c] : e.terms()) {
    out += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
    auto power = [](const Grade& g) {
      return is_integral(g) ? format_grade(g) : "(" + format_grade(g) + ")";
    };
    out += std::to_string(c < 0 ? -c : c) + " u^" + power(key.first) + " v^" + power(key.second);
    first = false;
  }
  return out + "\n";
}

struct Options {
  std::string format = "text";
  std::string input;
  std::string second;
  bool serre = false;
  bool hodge = false;
  bool gorenstein = false;
  bool strict_dim3 = false;
  int dim = -1;
  std::string columns;
  std::optional<std::int64_t> h01;
};

inline void add_format(CLI::App* cmd, Options& opt, std::vector<std::string> allowed) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember(std::move(allowed)));
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbifold Hodge numbers and derived-invariance constraints", "orbikit"};
  app.require_subcommand(1);
  detail::Options opt;

  auto* catalog = app.add_subcommand("catalog", "list built-in and user catalog entries");
  detail::add_format(catalog, opt, {"text", "json"});

  auto* diamond = app.add_subcommand("diamond", "print the orbifold Hodge diamond");
  diamond->add_option("input", opt.input, "file path or catalog entry")->required();
  detail::add_format(diamond, opt, {"text", "json", "csv", "tex"});

  auto* check = app.add_subcommand("check", "check Serre/Hodge symmetry and the Gorenstein property");
  check->add_option("input", opt.input, "file path or catalog entry")->required();
  check->add_flag("--serre", opt.serre, "Serre duality h^{p,q} = h^{n-p,n-q}");
  check->add_flag("--hodge", opt.hodge, "conjugation symmetry h^{p,q} = h^{q,p}");
  check->add_flag("--gorenstein", opt.gorenstein, "all ages integral");
  detail::add_format(check, opt, {"text", "json"});

  auto* partners = app.add_subcommand("partners", "necessary conditions for derived equivalence");
  partners->add_option("a", opt.input, "first input")->required();
  partners->add_option("b", opt.second, "second input")->required();
  partners->add_flag("--strict-dim3", opt.strict_dim3,
                     "in dimension <= 3 with integer grades, require equal diamonds");
  detail::add_format(partners, opt, {"text", "json"});

  auto* reconstruct = app.add_subcommand(
      "reconstruct", "rebuild a Gorenstein diamond (dim <= 3) from Hochschild columns");
  reconstruct->add_option("--dim", opt.dim, "dimension")->required();
  reconstruct->add_option("--columns", opt.columns, "\"i:v,...\"; mirrored if no negative i")
      ->required();
  reconstruct->add_option("--h01", opt.h01, "h^{0,1} (required in dimension 3)");
  detail::add_format(reconstruct, opt, {"text", "json", "csv", "tex"});

  auto* stringy = app.add_subcommand("stringy", "stringy E-function of an inertia presentation");
  stringy->add_option("input", opt.input, "file path or catalog entry")->required();
  detail::add_format(stringy, opt, {"text", "json"});

  auto* mckay = app.add_subcommand("mckay", "compare an orbifold diamond with a resolution diamond");
  mckay->add_option("orbifold", opt.input, "orbifold input")->required();
  mckay->add_option("resolution", opt.second, "resolution diamond")->required();
  detail::add_format(mckay, opt, {"text", "json"});

  auto* inertia = app.add_subcommand("inertia", "print the canonical inertia-data document");
  inertia->add_option("input", opt.input, "file path or catalog entry")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (catalog->parsed()) {
      const auto entries = catalog_entries();
      if (opt.format == "json") {
        io::OrderedJson j;
        auto list = io::OrderedJson::array();
        for (const auto& e : entries) {
          io::OrderedJson x;
          x["name"] = e.name;
          x["description"] = e.description;
          x["source"] = e.source;
          list.push_back(std::move(x));
        }
        j["entries"] = std::move(list);
        out << io::dump(j);
      } else {
        std::size_t width = 0;
        for (const auto& e : entries) width = std::max(width, e.name.size());
        for (const auto& e : entries)
          out << e.name << std::string(width - e.name.size() + 2, ' ') << e.description << "\n";
      }
      return kOk;
    }

    if (diamond->parsed()) {
      const auto doc = load_input(opt.input);
      out << detail::render_diamond(io::resolve_diamond(doc), doc.name, opt.format);
      return kOk;
    }

    if (check->parsed()) {
      const auto doc = load_input(opt.input);
      const auto d = io::resolve_diamond(doc);
      if (!opt.serre && !opt.hodge && !opt.gorenstein) opt.serre = opt.hodge = opt.gorenstein = true;
      const auto sym = check_symmetries(d);
      const bool gorenstein = doc.presentation() ? is_gorenstein(*doc.presentation())
                                                 : d.integer_graded();
      std::vector<std::pair<std::string, bool>> results;
      if (opt.serre) results.emplace_back("serre", sym.serre);
      if (opt.hodge) results.emplace_back("hodge", sym.hodge);
      if (opt.gorenstein) results.emplace_back("gorenstein", gorenstein);
      bool all = true;
      for (const auto& [name, ok] : results) all = all && ok;
      if (opt.format == "json") {
        io::OrderedJson j;
        j["name"] = doc.name;
        for (const auto& [name, ok] : results) j[name] = ok;
        j["passed"] = all;
        out << io::dump(j);
      } else {
        for (const auto& [name, ok] : results) out << name << ": " << detail::pass_fail(ok) << "\n";
      }
      return all ? kOk : kCheckFailed;
    }

    if (partners->parsed()) {
      const auto a = load_input(opt.input);
      const auto b = load_input(opt.second);
      const auto report = check_partners(io::resolve_diamond(a), io::resolve_diamond(b),
                                         {opt.strict_dim3});
      out << detail::render_partners(report, a.name, b.name, opt.format);
      return report.verdict == Verdict::CompatibleSoFar ? kOk : kCheckFailed;
    }

    if (reconstruct->parsed()) {
      if (opt.dim > 3)
        fail(ErrorKind::UnsupportedRange, "reconstruction is only determined for dimension <= 3");
      if (opt.dim < 0) fail(ErrorKind::InvalidArgument, "--dim must be nonnegative");
      const auto cols = io::parse_columns_spec(opt.columns, opt.dim);
      const auto d = reconstruct_gorenstein(cols, opt.h01);
      out << detail::render_diamond(d, "reconstructed", opt.format);
      return kOk;
    }

    if (stringy->parsed()) {
      const auto doc = load_input(opt.input);
      if (!doc.presentation())
        fail(ErrorKind::InvalidArgument, "stringy needs inertia data (a sectors or family document)");
      out << detail::render_stringy(stringy_e(*doc.presentation()), doc.name, opt.format);
      return kOk;
    }

    if (mckay->parsed()) {
      const auto orb = load_input(opt.input);
      const auto res = load_input(opt.second);
      const auto report = mckay_compare(io::resolve_diamond(orb), io::resolve_diamond(res));
      if (opt.format == "json") {
        io::OrderedJson j;
        j["orbifold"] = orb.name;
        j["resolution"] = res.name;
        j["equal"] = report.equal;
        auto diffs = io::OrderedJson::array();
        for (const auto& e : report.differences) {
          io::OrderedJson x;
          x["p"] = io::grade_json(e.at.first);
          x["q"] = io::grade_json(e.at.second);
          x["orbifold"] = e.orbifold;
          x["resolution"] = e.resolution;
          diffs.push_back(std::move(x));
        }
        j["differences"] = std::move(diffs);
        out << io::dump(j);
      } else {
        out << orb.name << " vs " << res.name << ": " << (report.equal ? "equal" : "different") << "\n";
        for (const auto& e : report.differences)
          out << "  (" << format_grade(e.at.first) << "," << format_grade(e.at.second)
              << "): " << e.orbifold << " vs " << e.resolution << "\n";
      }
      return report.equal ? kOk : kCheckFailed;
    }

    if (inertia->parsed()) {
      const auto doc = load_input(opt.input);
      if (!doc.presentation())
        fail(ErrorKind::InvalidArgument, "inertia needs inertia data (a sectors or family document)");
      out << io::dump(io::presentation_json(*doc.presentation()));
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kParse;
}

}  // namespace orbikit::cli

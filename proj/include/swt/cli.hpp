#ifndef SWT_CLI_HPP
#define SWT_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swt/error.hpp"
#include "swt/intersection.hpp"
#include "swt/morse_torsion.hpp"
#include "swt/presentation.hpp"
#include "swt/presentation_io.hpp"
#include "swt/tqft.hpp"

namespace swt {

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_input = 2 };

/// A table plus metadata, rendered as TSV (metadata as leading '#' lines) or
/// as one JSON object.
struct Report {
  std::vector<std::pair<std::string, nlohmann::json>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  void write(std::ostream& os, bool json) const {
    if (json) {
      nlohmann::ordered_json doc;
      for (const auto& [k, v] : meta) doc[k] = v;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
        doc["rows"].push_back(std::move(obj));
      }
      os << doc.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : meta) os << "# " << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "\t" : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << (r[i].is_string() ? r[i].get<std::string>() : r[i].dump());
      os << '\n';
    }
  }
};

/// Exact integer as a JSON number when it fits in 64 bits, else a decimal string.
inline nlohmann::json json_integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline nlohmann::json json_rational(const Rational& v) {
  if (is_integral(v)) return json_integer(to_integer(v));
  return v.str();
}

namespace detail {

inline Presentation load_valid(const std::string& path) {
  Presentation p = read_presentation(path);
  (void)mapping_class(p);
  return p;
}

inline Report validate_report(const Presentation& p) {
  Report r;
  r.columns = {"name", "genus", "handles", "status"};
  r.rows.push_back({p.name, p.g, p.N, "valid"});
  return r;
}

inline Report sw_report(const Presentation& p, int nmax) {
  const SWTable t = sw_table(p, nmax);
  Report r;
  r.meta.emplace_back("b1", t.b1);
  r.meta.emplace_back("mode", t.b1_greater_than_one ? "b1>1" : "b1=1");
  nlohmann::json notes = nlohmann::json::array();
  for (const auto& n : t.notes) notes.push_back(n);
  if (!t.notes.empty()) r.meta.emplace_back("notes", notes);
  r.columns = {"n", "m", "value"};
  for (const auto& row : t.rows) r.rows.push_back({row.n, row.m, json_integer(row.value)});
  return r;
}

inline Report zeta_report(const Presentation& p, int kmax) {
  const TruncSeries z = zeta_series(p, kmax);
  Report r;
  r.columns = {"k", "coefficient"};
  for (int k = 0; k <= kmax; ++k) r.rows.push_back({k, json_rational(z[k])});
  return r;
}

inline Report torsion_report(const Presentation& p, int kmax) {
  const TruncSeries t = torsion_representative(p, kmax);
  Report r;
  r.columns = {"k", "determinant", "direct"};
  for (int k = 0; k <= kmax; ++k)
    r.rows.push_back({k, json_rational(t[k]), json_integer(torsion_coefficient_direct(p, k))});
  return r;
}

inline Report verify_report(const VerificationReport& v) {
  Report r;
  r.meta.emplace_back("pass", v.pass);
  r.columns = {"n", "surface_degree", "lhs", "kappa_trace", "rhs", "match"};
  for (const auto& row : v.rows)
    r.rows.push_back({row.n, row.surface_degree, json_integer(row.lhs), json_integer(row.kappa_trace),
                      json_integer(row.rhs), row.match ? "match" : "MISMATCH"});
  return r;
}

}  // namespace detail

/// Runs one CLI invocation; `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion, zeta and TQFT-trace invariants of M(g, N, h)", "swt"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "tsv";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));

  std::string file;
  int bound = 0;
  auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "Presentation JSON file")->required(); };

  auto* validate = app.add_subcommand("validate", "Check a presentation file");
  with_file(validate);
  auto* sw = app.add_subcommand("sw", "Averaged SW sums by spin^c degree");
  with_file(sw);
  sw->add_option("--nmax", bound, "Largest degree")->required()->check(CLI::NonNegativeNumber);
  auto* zeta = app.add_subcommand("zeta", "Zeta function coefficients");
  with_file(zeta);
  zeta->add_option("--kmax", bound, "Truncation order")->required()->check(CLI::NonNegativeNumber);
  auto* torsion = app.add_subcommand("torsion", "Torsion representative t^N det(d_M)");
  with_file(torsion);
  torsion->add_option("--kmax", bound, "Truncation order")->required()->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "Compare Tr kappa_n with the torsion-zeta coefficients");
  with_file(verify);
  verify->add_option("--nmax", bound, "Largest degree")->required()->check(CLI::NonNegativeNumber);
  auto* intersect = app.add_subcommand("intersect", "Diagonal-graph intersection number");
  with_file(intersect);
  intersect->add_option("--n", bound, "Degree")->required()->check(CLI::NonNegativeNumber);
  auto* b1 = app.add_subcommand("b1", "First Betti number");
  with_file(b1);

  auto* gen = app.add_subcommand("gen", "Write a random presentation");
  int gen_g = 0, gen_n = 0, gen_words = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out, gen_name;
  gen->add_option("--g", gen_g, "Genus of the inner surface")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--handles", gen_n, "Number of handles")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--words", gen_words, "Transvection word length")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed, "Seed")->required();
  gen->add_option("--out", gen_out, "Output file (default: standard output)");
  gen->add_option("--name", gen_name, "Presentation name");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }
  const bool json = format == "json";

  try {
    if (gen->parsed()) {
      const std::string text = write_presentation(generate_fixture(gen_g, gen_n, gen_words, gen_seed, gen_name));
      if (gen_out.empty()) {
        out << text;
      } else {
        std::ofstream f(gen_out, std::ios::binary);
        if (!f) throw ParseError("cannot write " + gen_out);
        f << text;
      }
      return exit_ok;
    }

    const Presentation p = detail::load_valid(file);
    if (validate->parsed()) {
      detail::validate_report(p).write(out, json);
    } else if (sw->parsed()) {
      detail::sw_report(p, bound).write(out, json);
    } else if (zeta->parsed()) {
      detail::zeta_report(p, bound).write(out, json);
    } else if (torsion->parsed()) {
      detail::torsion_report(p, bound).write(out, json);
    } else if (verify->parsed()) {
      const VerificationReport v = verify_main_identity(p, bound);
      detail::verify_report(v).write(out, json);
      return v.pass ? exit_ok : exit_mismatch;
    } else if (intersect->parsed()) {
      const Integer dg = intersection_number(p, bound);
      const Integer tr = trace_kappa_coefficient(p, bound);
      Report r;
      r.columns = {"n", "intersection", "trace", "match"};
      r.rows.push_back({bound, json_integer(dg), json_integer(tr), dg == tr ? "match" : "MISMATCH"});
      r.write(out, json);
      return dg == tr ? exit_ok : exit_mismatch;
    } else if (b1->parsed()) {
      Report r;
      r.columns = {"b1"};
      r.rows.push_back({compute_b1(p)});
      r.write(out, json);
    }
    return exit_ok;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvalidPresentation& e) {
    err << "error: invalid presentation: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_input;
}

}  // namespace swt

#endif  // SWT_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/errors.hpp"
#include "chroma/exactmat.hpp"
#include "chroma/json_io.hpp"
#include "chroma/oracle.hpp"
#include "chroma/render.hpp"
#include "chroma/restriction.hpp"
#include "chroma/rotrep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRegression = 3;
constexpr int kExitIo = 4;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) parts.push_back(part);
  return parts;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s;
}

int run_rep(std::uint64_t k, bool json_only) {
  const chroma::RotationRep r = chroma::rep(k);
  if (!json_only) {
    std::cout << "k = " << r.k << "\n";
    std::cout << "dim = " << r.dim << "\n";
    std::cout << "kind = " << chroma::to_string(r.kind) << "\n";
    std::cout << chroma::grid_string(r.matrix);
    if (k == 1 || k == 2 || k == 3 || k == 4 || k == 6) {
      std::cout << "2d lattice rotation:\n";
      std::cout << chroma::grid_string(chroma::rep_2d(k).matrix);
    }
  }
  std::cout << chroma::rep_json(r).dump(2) << "\n";
  return kExitOk;
}

int run_restrict(std::uint64_t k, bool dim2, bool equations, bool reduce,
                 bool json_only) {
  const chroma::RotationRep r = dim2 ? chroma::rep_2d(k) : chroma::rep(k);
  const chroma::RestrictionResult res = chroma::restriction_number(r);

  // Cross-check the matrix-derived bound against the closed form. The 2D
  // lattice rotations exist exactly for the orders whose minimal dimension
  // is at most 2, and their bounds coincide with the closed form as well.
  std::optional<std::uint64_t> derived;
  if (res.n_max) derived = res.n_max->convert_to<std::uint64_t>();
  if (derived != chroma::closed_form_N(k)) {
    std::cerr << "regression: derived colour bound for k=" << k
              << " disagrees with the closed form" << std::endl;
    return kExitRegression;
  }

  std::string eq;
  if (equations) eq = chroma::render_equations(r, reduce);
  if (json_only) {
    nlohmann::json j = chroma::restriction_json(res);
    if (equations) j["equations"] = split_lines(eq);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "k = " << res.k << "\n";
  std::cout << "dim = " << res.dim << "\n";
  if (res.n_max) {
    std::cout << "n_max = " << *res.n_max << "\n";
    std::cout << "valid moduli:";
    for (const chroma::Int& d : res.valid_moduli) std::cout << " " << d;
    std::cout << "\n";
  } else {
    std::cout << "n_max = unbounded\n";
    std::cout << "valid moduli: all\n";
  }
  if (equations) std::cout << eq;
  return kExitOk;
}

int run_table(std::uint64_t k_max, const std::string& format) {
  const std::vector<chroma::TableRow> rows = chroma::restriction_table(k_max);
  if (format == "json") {
    std::cout << chroma::table_json(rows).dump(2) << "\n";
    return kExitOk;
  }
  if (format == "csv") {
    std::cout << "k,totient,n_max\n";
    for (const chroma::TableRow& row : rows) {
      std::cout << row.k << "," << row.totient << ",";
      if (row.n_max)
        std::cout << *row.n_max;
      else
        std::cout << "unbounded";
      std::cout << "\n";
    }
    return kExitOk;
  }
  std::cout << std::left << std::setw(8) << "k" << std::setw(10) << "totient"
            << "n_max\n";
  for (const chroma::TableRow& row : rows) {
    std::cout << std::left << std::setw(8) << row.k << std::setw(10)
              << row.totient;
    if (row.n_max)
      std::cout << *row.n_max;
    else
      std::cout << "unbounded";
    std::cout << "\n";
  }
  return kExitOk;
}

int run_verify(std::optional<std::uint64_t> k, std::optional<std::uint64_t> k_max,
               std::uint64_t n_scan, std::int64_t half_width, bool json_only) {
  std::vector<chroma::AgreementRow> rows;
  if (k)
    rows.push_back(chroma::agreement_row(*k, n_scan, half_width));
  else
    rows = chroma::agreement_report(*k_max, n_scan, half_width);

  bool all_agree = true;
  for (const chroma::AgreementRow& row : rows)
    if (!row.skipped && !row.agree) all_agree = false;

  if (json_only) {
    std::cout << chroma::agreement_json(rows).dump(2) << "\n";
    return all_agree ? kExitOk : kExitRegression;
  }
  for (const chroma::AgreementRow& row : rows) {
    std::cout << "k=" << row.k << " dim=" << row.dim;
    if (row.skipped) {
      std::cout << " skipped (patch exceeds point budget)\n";
      continue;
    }
    std::cout << " symbolic {" << join(row.symbolic) << "}"
              << " bruteforce {" << join(row.bruteforce) << "} "
              << (row.agree ? "agree" : "DISAGREE");
    if (row.unbounded) std::cout << " (every modulus admissible)";
    std::cout << "\n";
    if (row.first_violation) {
      const chroma::Counterexample& ce = *row.first_violation;
      std::cout << "  violation: t=" << ce.t << " point=(" << join(ce.point)
                << ") colour " << ce.colour_base << " -> " << ce.colour_image
                << "\n";
    }
  }
  std::size_t skipped = 0;
  for (const chroma::AgreementRow& row : rows) skipped += row.skipped ? 1 : 0;
  std::cout << (all_agree ? "all non-skipped rows agree" : "DISAGREEMENT found")
            << " (" << rows.size() << " rows, " << skipped << " skipped)\n";
  return all_agree ? kExitOk : kExitRegression;
}

int run_mindim(std::uint64_t n, bool json_only) {
  const auto [k, dim] = chroma::min_dimension(n);
  if (json_only) {
    std::cout << chroma::mindim_json(n).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n = " << n << "\n";
  std::cout << "k = " << k << "\n";
  std::cout << "dim = " << dim << "\n";
  return kExitOk;
}

int run_render(const chroma::RenderSpec& spec, const std::string& out_path,
               bool force) {
  if (!force) {
    const chroma::RestrictionResult res =
        chroma::restriction_number(chroma::rep_2d(spec.k));
    const bool admissible = !res.n_max || (*res.n_max % spec.n) == 0;
    if (!admissible) {
      std::cerr << "render2d: n=" << spec.n
                << " is not an admissible modulus for k=" << spec.k
                << " (maximal modulus " << *res.n_max
                << "); pass --force to render the broken colouring anyway"
                << std::endl;
      return kExitUsage;
    }
  }
  const std::string svg = chroma::render_svg(spec);
  if (out_path.empty() || out_path == "-") {
    std::cout << svg;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "render2d: cannot open " << out_path << " for writing"
              << std::endl;
    return kExitIo;
  }
  out << svg;
  out.close();
  if (!out) {
    std::cerr << "render2d: failed while writing " << out_path << std::endl;
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact integer lattice rotations, modular colourings, and their "
      "restriction numbers"};
  app.require_subcommand(1);

  // rep
  std::uint64_t rep_k = 1;
  bool rep_json_only = false;
  CLI::App* rep_cmd =
      app.add_subcommand("rep", "Print the integer rotation of order k");
  rep_cmd->add_option("k", rep_k, "Rotation order (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  rep_cmd->add_flag("--json", rep_json_only, "JSON output only");

  // restrict
  std::uint64_t restrict_k = 1;
  bool restrict_dim2 = false;
  bool restrict_equations = false;
  bool restrict_reduce = false;
  bool restrict_json_only = false;
  CLI::App* restrict_cmd = app.add_subcommand(
      "restrict", "Maximal colour count preserved by the order-k rotation");
  restrict_cmd->add_option("k", restrict_k, "Rotation order (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  restrict_cmd->add_flag("--dim2", restrict_dim2,
                         "Use the 2D lattice rotation (k in {1,2,3,4,6})");
  CLI::Option* eq_opt = restrict_cmd->add_flag(
      "--equations", restrict_equations, "Print the congruence system");
  restrict_cmd
      ->add_flag("--reduce", restrict_reduce,
                 "Merge duplicate congruences and factor out the gcd")
      ->needs(eq_opt);
  restrict_cmd->add_flag("--json", restrict_json_only, "JSON output only");

  // table
  std::uint64_t table_kmax = 30;
  std::string table_format = "text";
  CLI::App* table_cmd = app.add_subcommand(
      "table", "Colour bounds for every rotation order up to --kmax");
  table_cmd->add_option("--kmax", table_kmax, "Largest rotation order")
      ->required()
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", table_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // verify
  std::uint64_t verify_k = 0;
  std::uint64_t verify_kmax = 0;
  std::uint64_t verify_nscan = 12;
  std::int64_t verify_box = 2;
  bool verify_json_only = false;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Compare the symbolic colour bound against a brute-force lattice scan");
  CLI::Option* verify_k_opt =
      verify_cmd->add_option("k", verify_k, "Single rotation order to verify")
          ->check(CLI::PositiveNumber);
  verify_cmd
      ->add_option("--kmax", verify_kmax, "Verify every order 1..kmax")
      ->check(CLI::PositiveNumber)
      ->excludes(verify_k_opt);
  verify_cmd->add_option("--nscan", verify_nscan, "Largest modulus to scan")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--box", verify_box, "Patch half-width M")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--json", verify_json_only, "JSON output only");

  // mindim
  std::uint64_t mindim_n = 2;
  bool mindim_json_only = false;
  CLI::App* mindim_cmd = app.add_subcommand(
      "mindim",
      "Smallest lattice dimension carrying an n-colour-compatible rotation");
  mindim_cmd->add_option("n", mindim_n, "Colour count (>= 2)")->required();
  mindim_cmd->add_flag("--json", mindim_json_only, "JSON output only");

  // render2d
  chroma::RenderSpec render_spec;
  std::string render_out;
  std::string render_basis = "auto";
  std::string render_palette;
  bool render_force = false;
  CLI::App* render_cmd = app.add_subcommand(
      "render2d", "Render a 2D modular colouring as a deterministic SVG");
  render_cmd->add_option("--k", render_spec.k, "Rotation order (2, 3, 4 or 6)")
      ->required();
  render_cmd->add_option("--n", render_spec.n, "Colour count")
      ->required()
      ->check(CLI::PositiveNumber);
  render_cmd
      ->add_option("--extent", render_spec.extent, "Patch half-width (>= 1)")
      ->check(CLI::PositiveNumber);
  render_cmd->add_option("--out", render_out,
                         "Output path (default: stdout, also '-')");
  render_cmd->add_flag("--force", render_force,
                       "Render even when n is not an admissible modulus");
  render_cmd->add_option("--basis", render_basis, "auto, cartesian or oblique")
      ->check(CLI::IsMember({"auto", "cartesian", "oblique"}));
  render_cmd->add_option("--palette", render_palette,
                         "Comma-separated fill colours (>= n entries)");
  render_cmd->add_option("--radius", render_spec.radius,
                         "Circle radius in pixels");
  render_cmd->add_option("--scale", render_spec.size,
                         "Canvas edge length in pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rep_cmd->parsed()) return run_rep(rep_k, rep_json_only);
    if (restrict_cmd->parsed())
      return run_restrict(restrict_k, restrict_dim2, restrict_equations,
                          restrict_reduce, restrict_json_only);
    if (table_cmd->parsed()) return run_table(table_kmax, table_format);
    if (verify_cmd->parsed()) {
      std::optional<std::uint64_t> single;
      std::optional<std::uint64_t> range;
      if (verify_k_opt->count() > 0) single = verify_k;
      if (verify_kmax > 0) range = verify_kmax;
      if (!single && !range) {
        std::cerr << "verify: give a rotation order or --kmax" << std::endl;
        return kExitUsage;
      }
      return run_verify(single, range, verify_nscan, verify_box,
                        verify_json_only);
    }
    if (mindim_cmd->parsed()) return run_mindim(mindim_n, mindim_json_only);
    if (render_cmd->parsed()) {
      if (render_basis == "cartesian")
        render_spec.basis = chroma::Basis::Cartesian;
      else if (render_basis == "oblique")
        render_spec.basis = chroma::Basis::Oblique;
      if (!render_palette.empty())
        render_spec.palette = split_commas(render_palette);
      return run_render(render_spec, render_out, render_force);
    }
  } catch (const chroma::regression_error& e) {
    std::cerr << "regression: " << e.what() << std::endl;
    return kExitRegression;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  }
  std::cerr << "error: no subcommand" << std::endl;
  return kExitUsage;
}

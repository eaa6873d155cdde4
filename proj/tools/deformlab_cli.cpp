// deformlab: command-line reports for the deformed Heisenberg algebra laboratory.
//
// Exit codes: 0 success, 1 argument or I/O error, 2 a `verify` check failed.

#include "deformlab/deformlab.hpp"
#include "deformlab/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace deformlab;
using report::Cell;
using report::Meta;
using report::Table;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verify_failed = 2;

struct GlobalOptions {
  std::string format = "csv";
  std::string out;
};

std::string num(double v) { return report::format_double(v); }

Meta base_meta(const std::string& subcommand)
{
  return {{"tool", std::string("deformlab ") + version},
          {"subcommand", subcommand},
          {"conventions", "hbar=c=1; r=1 unless given; well on [0,Delta]; odd_image lattice boundary unless given"}};
}

std::vector<double> sweep(double start, double stop, std::size_t steps, bool logarithmic)
{
  if (steps < 1) throw std::invalid_argument("sweep: steps must be >= 1");
  if (start > stop) throw std::invalid_argument("sweep: start must not exceed stop");
  return logarithmic ? log_grid(start, stop, steps) : linspace(start, stop, steps);
}

Cell opt_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

WellSpec well_from_flags(const AlgebraParams& params, std::optional<double> delta, std::optional<std::size_t> k)
{
  if (well_case(params) == WellCase::eps_minus) {
    if (k) {
      const auto spec = WellSpec::lattice(params, *k);
      if (delta && std::abs(*delta - spec.delta) > 1e-12 * spec.delta)
        throw std::invalid_argument("--delta disagrees with --k * --ell");
      return spec;
    }
    if (delta) return WellSpec::from_width(params, *delta);
    throw std::invalid_argument("eps = -1 needs --k or --delta");
  }
  if (!delta) throw std::invalid_argument("this case needs --delta");
  return WellSpec::continuous(params, *delta);
}

// ---------------------------------------------------------------------------

struct SpectraOptions {
  int epsilon = -1;
  double ell = 1.0;
  double mass = 1.0;
  std::optional<double> delta;
  std::optional<std::size_t> k;
  std::optional<std::size_t> levels;
  std::string boundary = "odd_image";
};

Table run_spectra(const SpectraOptions& o, Meta& meta)
{
  const AlgebraParams params{o.ell, o.epsilon, 1.0, o.mass};
  const WellSpec spec = well_from_flags(params, o.delta, o.k);
  const BoundaryMode mode = o.boundary == "hard_zero" ? BoundaryMode::hard_zero : BoundaryMode::odd_image;
  meta.emplace_back("epsilon", std::to_string(o.epsilon));
  meta.emplace_back("ell", num(o.ell));
  meta.emplace_back("mass", num(o.mass));
  meta.emplace_back("delta", num(spec.delta));
  meta.emplace_back("boundary", std::string(to_string(mode)));

  SpectrumReport rep;
  if (spec.label() == WellCase::eps_minus) {
    rep = lattice_well_solve(spec, mode);
    const auto count = lattice_level_count(spec.k);
    meta.emplace_back("k", std::to_string(spec.k));
    meta.emplace_back("interior_states", std::to_string(count.interior_states));
    meta.emplace_back("distinct_energies", std::to_string(count.distinct_energies));
    // pairing is done in energy order; rows are reported in level order
    std::stable_sort(rep.levels.begin(), rep.levels.end(), [](const auto& x, const auto& y) { return x.n < y.n; });
    if (o.levels && *o.levels < rep.levels.size()) rep.levels.resize(*o.levels);
  } else {
    rep = analytic_levels(spec, o.levels.value_or(5));
    if (spec.label() == WellCase::eps_plus) {
      meta.emplace_back("numeric_method", "complex-shift operator applied to sin(n pi x / Delta) at its first antinode");
      for (auto& level : rep.levels) {
        level.e_numeric = continuum_shift_eigenvalue(spec, level.n);
        level.abs_diff = std::abs(*level.e_numeric - level.e_analytic);
      }
    }
  }

  Table t{{"case", "epsilon", "ell", "mass", "delta", "n", "E_analytic", "E_numeric", "abs_diff"}, {}};
  for (const auto& l : rep.levels)
    t.add({std::string(to_string(rep.case_label)), std::int64_t{o.epsilon}, o.ell, o.mass, spec.delta,
           static_cast<std::int64_t>(l.n), l.e_analytic, opt_cell(l.e_numeric), opt_cell(l.abs_diff)});
  return t;
}

struct CountingOptions {
  int epsilon = 1;
  double ell = 0.0;
  double mass = 1.0;
  std::optional<double> delta;
  std::optional<std::size_t> k;
  std::size_t levels = 5;
};

Table run_counting(const CountingOptions& o, Meta& meta)
{
  const AlgebraParams params{o.ell, o.epsilon, 1.0, o.mass};
  const WellSpec spec = well_from_flags(params, o.delta, o.k);
  meta.emplace_back("epsilon", std::to_string(o.epsilon));
  meta.emplace_back("ell", num(o.ell));
  meta.emplace_back("mass", num(o.mass));
  meta.emplace_back("delta", num(spec.delta));
  const auto table = fill_table(spec, o.levels);

  Table t{{"case", "epsilon", "ell", "mass", "delta", "n", "p_n", "dp", "cell", "cell_closed_form", "cumulative", "band_edge"}, {}};
  for (const auto& r : table.rows)
    t.add({std::string(to_string(table.case_label)), std::int64_t{o.epsilon}, o.ell, o.mass, spec.delta,
           static_cast<std::int64_t>(r.n), r.p_n, r.dp, r.cell, r.cell_closed_form, r.cumulative, r.band_edge});
  return t;
}

struct MomstatsOptions {
  double r = 1.0;
  double s_max = 30.0;
  std::size_t steps = 61;
};

Table run_momstats(const MomstatsOptions& o, Meta& meta)
{
  if (!(o.s_max >= 0.0)) throw std::invalid_argument("--s-max must be >= 0");
  meta.emplace_back("r", num(o.r));
  meta.emplace_back("second_moment", num(arcsine_density(0.0, o.r).second_moment));
  Table t{{"s", "r", "C_series", "C_quadrature", "abs_diff"}, {}};
  for (double s : sweep(0.0, o.s_max, o.steps, false)) {
    const double series = char_fn(s, o.r);
    const double quadrature = char_fn_quadrature(s, o.r).real();
    t.add({s, o.r, series, quadrature, std::abs(series - quadrature)});
  }
  return t;
}

struct UncertaintyOptions {
  double alpha_start = 0.01;
  double alpha_stop = 6.0;
  std::size_t steps = 20;
  double ell = 1.0;
  bool log = false;
};

Table run_uncertainty(const UncertaintyOptions& o, Meta& meta)
{
  meta.emplace_back("ell", num(o.ell));
  meta.emplace_back("state", "Gaussian (2 pi alpha)^(-1/4) exp(-mu^2 / 4 alpha) on the eps=+1 hyperbola");
  meta.emplace_back("authoritative", "quadrature moments; *_printed columns are the closed forms as printed, for comparison");
  Table t{{"alpha", "ell", "dx", "dp", "product", "bound", "bound_kind", "satisfied", "x2_quad", "p2_quad",
           "x2_printed", "p2_printed", "p2_deviation", "product_printed", "product_deviation"},
          {}};
  for (double alpha : sweep(o.alpha_start, o.alpha_stop, o.steps, o.log)) {
    const auto g = gaussian_moments({alpha, {o.ell, 1, 1.0, 1.0}});
    const auto r = g.report();
    t.add({alpha, o.ell, r.dx, r.dp, r.product, r.bound, std::string(to_string(r.bound_kind)), r.satisfied, g.x2_quad,
           g.p2_quad, g.x2_printed, g.p2_printed, g.p2_printed - g.p2_quad, g.product_printed, g.product_printed - g.product});
  }
  return t;
}

struct GupOptions {
  double c = 2.0;
  double dp_min = 0.1;
  double dp_max = 10.0;
  std::size_t steps = 50;
  bool log = false;
};

Table run_gup(const GupOptions& o, Meta& meta)
{
  const auto dps = sweep(o.dp_min, o.dp_max, o.steps, o.log);
  const auto curve = gup_curve(o.c, dps);
  meta.emplace_back("C", num(o.c));
  meta.emplace_back("min_dx", num(curve.min_dx));
  meta.emplace_back("argmin_dp", num(curve.argmin_dp));
  Table t{{"dp", "bound", "min_dx", "argmin_dp"}, {}};
  for (std::size_t j = 0; j < dps.size(); ++j) t.add({dps[j], curve.bounds[j], curve.min_dx, curve.argmin_dp});
  return t;
}

struct DosOptions {
  double ell = 0.1;
  double r = 1.0;
};

Table run_dos(const DosOptions& o, Meta& meta)
{
  const AlgebraParams params{o.ell, -1, o.r, 1.0};
  const auto d = dos_product(params);
  meta.emplace_back("ell", num(o.ell));
  meta.emplace_back("r", num(o.r));
  Table t{{"kind", "ell", "r", "mu_x_inv", "mu_p", "mu_p_inv", "product", "mu_p_quadrature", "mu_p_small_ell", "small_ell_product"}, {}};
  t.add({std::string("deformed"), o.ell, o.r, d.mu_x_inv, d.mu_p, d.mu_p_inv, d.product, dos_mu_p_quadrature(params),
         d.mu_p_small_ell, d.small_ell_product});
  t.add({std::string("free_particle_reference"), Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, free_particle_dos_product, Cell{},
         Cell{}, Cell{}});
  return t;
}

struct MeasuresOptions {
  double ell = 1.0;
  double beta = 1.0;
  double tau = 1.0;
};

Table run_measures(const MeasuresOptions& o, Meta& meta)
{
  const auto m = measure_compare(o.ell, o.beta, o.tau);
  meta.emplace_back("weights", "flat dp; deformed dp/sqrt(1+l^2 p^2); gup dp/(1+beta p^2); all times exp(-p^2/2 tau)");
  Table t{{"ell", "beta", "tau", "z_flat", "z_deformed", "z_gup", "cutoff"}, {}};
  t.add({o.ell, o.beta, o.tau, m.z_flat, m.z_deformed, m.z_gup, m.cutoff});
  return t;
}

Table run_verify(Meta& meta, std::size_t& failures)
{
  const auto checks = verify::run_all();
  Table t{{"suite", "check", "value", "requirement", "status"}, {}};
  failures = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failures;
    t.add({std::int64_t{c.suite}, c.name, c.value, c.requirement, std::string(c.pass ? "PASS" : "FAIL")});
  }
  meta.emplace_back("summary", std::to_string(checks.size()) + " checks, " + std::to_string(checks.size() - failures) +
                                   " PASS, " + std::to_string(failures) + " FAIL");
  return t;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Numerical laboratory for deformed Heisenberg algebras"};
  app.set_version_flag("--version", std::string("deformlab ") + version);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", global.out, "Write the report to PATH instead of stdout");

  SpectraOptions spectra;
  auto* c_spectra = app.add_subcommand("spectra", "Square-well spectra, closed form and numeric");
  c_spectra->add_option("--epsilon", spectra.epsilon)->check(CLI::IsMember({-1, 1}))->capture_default_str();
  c_spectra->add_option("--ell", spectra.ell)->check(CLI::NonNegativeNumber)->capture_default_str();
  c_spectra->add_option("--mass", spectra.mass)->check(CLI::PositiveNumber)->capture_default_str();
  c_spectra->add_option("--delta", spectra.delta, "Well width")->check(CLI::PositiveNumber);
  c_spectra->add_option("--k", spectra.k, "Lattice sites, Delta = k ell (eps = -1)");
  c_spectra->add_option("--levels", spectra.levels, "Number of levels");
  c_spectra->add_option("--boundary", spectra.boundary)->check(CLI::IsMember({"odd_image", "hard_zero"}))->capture_default_str();

  CountingOptions counting;
  auto* c_counting = app.add_subcommand("counting", "Phase-space cell per added fermion");
  c_counting->add_option("--epsilon", counting.epsilon)->check(CLI::IsMember({-1, 1}))->capture_default_str();
  c_counting->add_option("--ell", counting.ell)->check(CLI::NonNegativeNumber)->capture_default_str();
  c_counting->add_option("--mass", counting.mass)->check(CLI::PositiveNumber)->capture_default_str();
  c_counting->add_option("--delta", counting.delta)->check(CLI::PositiveNumber);
  c_counting->add_option("--k", counting.k);
  c_counting->add_option("--levels", counting.levels, "Particles to add")->capture_default_str();

  MomstatsOptions momstats;
  auto* c_momstats = app.add_subcommand("momstats", "Characteristic function of a localized state");
  c_momstats->add_option("--r", momstats.r)->check(CLI::PositiveNumber)->capture_default_str();
  c_momstats->add_option("--s-max", momstats.s_max)->capture_default_str();
  c_momstats->add_option("--steps", momstats.steps)->capture_default_str();

  UncertaintyOptions uncertainty;
  auto* c_uncertainty = app.add_subcommand("uncertainty", "Gaussian states against the deformed bound");
  c_uncertainty->add_option("--alpha-start", uncertainty.alpha_start)->check(CLI::PositiveNumber)->capture_default_str();
  c_uncertainty->add_option("--alpha-stop", uncertainty.alpha_stop)->check(CLI::PositiveNumber)->capture_default_str();
  c_uncertainty->add_option("--steps", uncertainty.steps)->capture_default_str();
  c_uncertainty->add_option("--ell", uncertainty.ell)->check(CLI::PositiveNumber)->capture_default_str();
  c_uncertainty->add_flag("--log", uncertainty.log, "Logarithmic alpha sweep");

  GupOptions gup;
  auto* c_gup = app.add_subcommand("gup", "Generalized uncertainty principle curve");
  c_gup->add_option("--c", gup.c)->check(CLI::PositiveNumber)->capture_default_str();
  c_gup->add_option("--dp-min", gup.dp_min)->check(CLI::PositiveNumber)->capture_default_str();
  c_gup->add_option("--dp-max", gup.dp_max)->check(CLI::PositiveNumber)->capture_default_str();
  c_gup->add_option("--steps", gup.steps)->capture_default_str();
  c_gup->add_flag("--log", gup.log, "Logarithmic dp sweep");

  DosOptions dos;
  auto* c_dos = app.add_subcommand("dos", "Density-of-states product");
  c_dos->add_option("--ell", dos.ell)->check(CLI::PositiveNumber)->capture_default_str();
  c_dos->add_option("--r", dos.r)->check(CLI::PositiveNumber)->capture_default_str();

  MeasuresOptions measures;
  auto* c_measures = app.add_subcommand("measures", "Gaussian-weighted phase-space measures");
  c_measures->add_option("--ell", measures.ell)->check(CLI::NonNegativeNumber)->capture_default_str();
  c_measures->add_option("--beta", measures.beta)->check(CLI::NonNegativeNumber)->capture_default_str();
  c_measures->add_option("--tau", measures.tau)->check(CLI::PositiveNumber)->capture_default_str();

  auto* c_verify = app.add_subcommand("verify", "Run every invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  const auto format = global.format == "json" ? report::Format::json : report::Format::csv;
  try {
    Table table;
    Meta meta;
    std::size_t failures = 0;
    if (c_spectra->parsed()) { meta = base_meta("spectra"); table = run_spectra(spectra, meta); }
    else if (c_counting->parsed()) { meta = base_meta("counting"); table = run_counting(counting, meta); }
    else if (c_momstats->parsed()) { meta = base_meta("momstats"); table = run_momstats(momstats, meta); }
    else if (c_uncertainty->parsed()) { meta = base_meta("uncertainty"); table = run_uncertainty(uncertainty, meta); }
    else if (c_gup->parsed()) { meta = base_meta("gup"); table = run_gup(gup, meta); }
    else if (c_dos->parsed()) { meta = base_meta("dos"); table = run_dos(dos, meta); }
    else if (c_measures->parsed()) { meta = base_meta("measures"); table = run_measures(measures, meta); }
    else if (c_verify->parsed()) { meta = base_meta("verify"); table = run_verify(meta, failures); }

    report::emit_report(meta, table, format, global.out, std::cout);
    if (c_verify->parsed()) {
      std::cerr << "verify: " << meta.back().second << '\n';
      return failures == 0 ? exit_ok : exit_verify_failed;
    }
    return exit_ok;
  } catch (const std::exception& e) {
    std::cerr << "deformlab: " << e.what() << '\n';
    return exit_usage;
  }
}

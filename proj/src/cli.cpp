#include "residue/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "residue/experiments.hpp"
#include "residue/export.hpp"
#include "residue/gausscensus.hpp"
#include "residue/lattice.hpp"
#include "residue/quadcong.hpp"
#include "residue/twosquares.hpp"

namespace residue::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Args {
  RunConfig cfg;
  std::string format_name;
  // solve
  std::vector<std::string> triple;
  std::string instance_file;
  // wilson / decompose
  std::string prime;
  bool brute = false;
  // census
  bool histogram = false;
  bool exclude_axis = false;
  // lattice / ratio
  std::vector<std::uint64_t> radii;
  bool fit = false;
  // bench
  std::vector<std::string> grid;
  std::size_t reps = 5;
};

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// solve ----------------------------------------------------------------------

void cmd_solve(const Args& a, std::ostream& out) {
  std::vector<QCInstance> instances;
  if (!a.instance_file.empty()) {
    if (!a.triple.empty()) throw CLI::ValidationError("solve: give either 'a b c' or --file, not both");
    if (a.instance_file == "-") {
      instances = read_instances(std::cin);
    } else {
      std::ifstream in(a.instance_file);
      if (!in) throw DomainError("cannot open instance file " + a.instance_file);
      instances = read_instances(in);
    }
  } else {
    if (a.triple.size() != 3) throw CLI::ValidationError("solve: expected three arguments 'a b c'");
    instances.emplace_back(Natural::parse(a.triple[0]), Natural::parse(a.triple[1]), Natural::parse(a.triple[2]));
  }

  std::vector<QCVerdict> verdicts;
  verdicts.reserve(instances.size());
  for (const auto& inst : instances) verdicts.push_back(decide(inst));

  if (!a.cfg.format) {
    for (const auto& v : verdicts) {
      if (v.satisfiable()) {
        out << "SAT x=" << *v.witness << '\n';
      } else {
        out << "UNSAT\n";
      }
    }
  } else if (*a.cfg.format == Format::csv) {
    out << "a,b,c,satisfiable,witness\n";
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& inst = instances[i];
      out << inst.a() << ',' << inst.b() << ',' << inst.c() << ',' << (verdicts[i].satisfiable() ? "true" : "false")
          << ',' << (verdicts[i].satisfiable() ? verdicts[i].witness->str() : "") << '\n';
    }
  } else {
    auto arr = Json::array();
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& inst = instances[i];
      Json row = {{"a", inst.a().str()},
                  {"b", inst.b().str()},
                  {"c", inst.c().str()},
                  {"satisfiable", verdicts[i].satisfiable()}};
      row["witness"] = verdicts[i].satisfiable() ? Json(verdicts[i].witness->str()) : Json(nullptr);
      arr.push_back(std::move(row));
    }
    emit_json(out, arr);
  }
}

// wilson ---------------------------------------------------------------------

void cmd_wilson(const Args& a, std::ostream& out) {
  const Prime4m1 p(Natural::parse(a.prime), a.cfg.seed);
  OpCount ops;
  const Natural w = wilson_sqrt_minus_one(p, &ops);
  const Natural other = p.value() - w;
  const Natural& lo = std::min(w, other);
  const Natural& hi = std::max(w, other);
  if (!a.cfg.format) {
    out << "((" << p.value() << "-1)/2)! mod " << p.value() << " = " << w << "; roots {" << lo << ", " << hi
        << "}; multiplications " << ops.multiplications << '\n';
  } else if (*a.cfg.format == Format::csv) {
    out << "p,wilson,root_lo,root_hi,multiplications\n"
        << p.value() << ',' << w << ',' << lo << ',' << hi << ',' << ops.multiplications << '\n';
  } else {
    emit_json(out, Json{{"p", p.value().str()},
                        {"wilson", w.str()},
                        {"root_lo", lo.str()},
                        {"root_hi", hi.str()},
                        {"multiplications", ops.multiplications}});
  }
}

// decompose ------------------------------------------------------------------

void cmd_decompose(const Args& a, std::ostream& out) {
  if (a.prime.empty() == (a.cfg.limit == 0)) {
    throw CLI::ValidationError("decompose: give either a prime p or --limit X");
  }
  if (a.cfg.limit != 0) {
    std::vector<TwoSquareDecomposition> rows;
    for (std::uint64_t p : primes_in_class(a.cfg.limit, 1, 4)) rows.push_back(decompose(Prime4m1(Natural(p))));
    if (format_or(a.cfg, Format::csv) == Format::csv) {
      write_decompositions_csv(out, rows);
    } else {
      auto arr = Json::array();
      for (const auto& d : rows) {
        arr.push_back({{"p", d.p.value().str()}, {"s", d.s.str()}, {"t", d.t.str()}, {"theta", d.theta}});
      }
      emit_json(out, arr);
    }
    return;
  }

  const Prime4m1 p(Natural::parse(a.prime), a.cfg.seed);
  std::optional<std::uint64_t> visited;
  TwoSquareDecomposition d = [&] {
    if (!a.brute) return decompose(p);
    auto r = decompose_brute(p);
    visited = r.visited;
    return r.decomposition;
  }();

  if (!a.cfg.format) {
    out << d.p.value() << " = " << d.s << "^2 + " << d.t << "^2";
    if (visited) out << " (visited " << *visited << ')';
    out << '\n';
  } else if (*a.cfg.format == Format::csv) {
    write_decompositions_csv(out, std::span(&d, 1));
  } else {
    Json j = {{"p", d.p.value().str()}, {"s", d.s.str()}, {"t", d.t.str()}, {"theta", d.theta}};
    if (visited) j["visited"] = *visited;
    emit_json(out, j);
  }
}

// census ---------------------------------------------------------------------

void cmd_census(const Args& a, std::ostream& out) {
  const auto census = enumerate_gaussian_primes(a.cfg.limit, a.cfg.workers);
  const Format fmt = format_or(a.cfg, Format::csv);
  if (a.histogram) {
    const auto hist = sector_histogram(census, a.cfg.limit, a.cfg.bins, a.exclude_axis);
    if (fmt == Format::csv) {
      write_histogram_csv(out, hist);
    } else {
      auto arr = Json::array();
      for (std::size_t k = 0; k < hist.bins(); ++k) {
        arr.push_back({{"bin_lo", hist.bin_edges[k]},
                       {"bin_hi", hist.bin_edges[k + 1]},
                       {"count", hist.counts[k]},
                       {"expected", hist.expected(k)}});
      }
      emit_json(out, arr);
    }
    return;
  }
  if (fmt == Format::csv) {
    write_census_csv(out, census);
  } else {
    auto arr = Json::array();
    for (const auto& g : census) arr.push_back({{"re", g.re}, {"im", g.im}, {"norm", g.norm}, {"arg", g.arg}});
    emit_json(out, arr);
  }
}

// lattice / ratio ------------------------------------------------------------

void cmd_lattice(const Args& a, std::ostream& out) {
  const Format fmt = format_or(a.cfg, Format::csv);
  if (a.fit) {
    const auto fit = fit_octant_constant(a.radii, a.cfg.workers);
    if (fmt == Format::csv) {
      out << "R,c_fit,point_constant,residual\n";
      for (std::size_t i = 0; i < fit.R.size(); ++i) {
        out << fit.R[i] << ',' << format_real(fit.c) << ',' << format_real(fit.point_constants[i]) << ','
            << format_real(fit.residuals[i]) << '\n';
      }
    } else {
      auto arr = Json::array();
      for (std::size_t i = 0; i < fit.R.size(); ++i) {
        arr.push_back({{"R", fit.R[i]},
                       {"c_fit", fit.c},
                       {"point_constant", fit.point_constants[i]},
                       {"residual", fit.residuals[i]}});
      }
      emit_json(out, arr);
    }
    return;
  }
  std::vector<LatticeCensus> rows;
  for (auto R : a.radii) rows.push_back(lattice_census(R, a.cfg.workers));
  if (fmt == Format::csv) {
    write_lattice_csv(out, rows);
  } else {
    auto arr = Json::array();
    for (const auto& c : rows) {
      arr.push_back({{"R", c.R},
                     {"n_disc", c.n_disc},
                     {"n_octant", c.n_octant},
                     {"N", c.n_prime_points},
                     {"ratio", c.ratio()},
                     {"predicted", c.predicted()}});
    }
    emit_json(out, arr);
  }
}

void cmd_ratio(const Args& a, std::ostream& out) {
  std::vector<PrimePointRatio> rows;
  for (auto R : a.radii) rows.push_back(prime_point_ratio(R, a.cfg.workers));
  if (format_or(a.cfg, Format::csv) == Format::csv) {
    write_ratio_csv(out, rows);
  } else {
    auto arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"R", r.R},
                     {"N", r.N},
                     {"N0", r.N0},
                     {"ratio", r.ratio},
                     {"predicted", r.predicted},
                     {"estimate_half_pi", r.estimate_half_pi},
                     {"estimate_log", r.estimate_log}});
    }
    emit_json(out, arr);
  }
}

// stats / bench --------------------------------------------------------------

void cmd_stats(const Args& a, std::ostream& out) {
  const auto reports = randomness_suite(a.cfg.limit, {a.cfg.bins, a.exclude_axis, a.cfg.workers});
  if (format_or(a.cfg, Format::json) == Format::json) {
    write_reports_json(out, reports);
  } else {
    write_reports_csv(out, reports);
  }
}

void cmd_bench(const Args& a, std::ostream& out, std::ostream& err) {
  std::vector<Prime4m1> grid;
  if (a.grid.empty()) {
    grid = decade_prime_grid(4, 7);
  } else {
    for (const auto& p : a.grid) grid.emplace_back(Natural::parse(p), a.cfg.seed);
  }
  const auto bench = bench_sqrt_methods(grid, a.reps);
  if (format_or(a.cfg, Format::csv) == Format::csv) {
    write_bench_csv(out, bench.samples);
  } else {
    write_bench_json(out, bench.samples);
  }
  for (const auto& f : bench.fits) {
    err << "# fit " << f.op_label << " op_slope=" << format_real(f.op_slope)
        << " time_slope=" << format_real(f.time_slope) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Quadratic-residue and two-square workbench", "residue"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", a.format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", a.cfg.output_path, "Write results to this file instead of standard output");
  app.add_option("--workers", a.cfg.workers, "Worker threads for census and lattice counts")
      ->check(CLI::Range(1U, 1024U));
  app.add_option("--seed", a.cfg.seed, "Seed for Miller-Rabin rounds above 2^64");

  auto* solve = app.add_subcommand("solve", "Decide x^2 = a (mod b) with 0 < x < c");
  solve->add_option("instance", a.triple, "a b c");
  solve->add_option("--file", a.instance_file, "Instance file, one 'a b c' per line ('-' for stdin)");

  auto* wilson = app.add_subcommand("wilson", "((p-1)/2)! mod p for a prime p = 1 (mod 4)");
  wilson->add_option("p", a.prime)->required();

  auto* decomp = app.add_subcommand("decompose", "p = s^2 + t^2 for a prime p = 1 (mod 4)");
  decomp->add_option("p", a.prime);
  decomp->add_flag("--brute", a.brute, "Use the exhaustive scan and report visited candidates");
  decomp->add_option("--limit", a.cfg.limit, "Decompose every p = 1 (mod 4) up to this bound")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));

  auto* census = app.add_subcommand("census", "Gaussian primes by norm");
  census->add_option("--limit", a.cfg.limit, "Norm bound")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  census->add_option("--bins", a.cfg.bins, "Sector bins over [0, pi/2)")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  census->add_flag("--histogram", a.histogram, "Emit the sector histogram instead of the census");
  census->add_flag("--exclude-axis", a.exclude_axis, "Leave inert primes (arg 0) out of the histogram");

  auto* lattice = app.add_subcommand("lattice", "Disc and octant lattice-point counts");
  lattice->add_option("--R", a.radii, "Squared radius (comma separated list allowed)")
      ->required()
      ->delimiter(',');
  lattice->add_flag("--fit", a.fit, "Fit N0 = pi R / 8 - c sqrt(R) over the given R values");

  auto* ratio = app.add_subcommand("ratio", "Prime lattice points against the octant count");
  ratio->add_option("--R", a.radii, "Squared radius (comma separated list allowed)")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));

  auto* stats = app.add_subcommand("stats", "Equidistribution tests up to a prime bound");
  stats->add_option("--limit", a.cfg.limit, "Prime bound (at least 10000)")->required();
  stats->add_option("--bins", a.cfg.bins, "Chi-square bins")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  stats->add_flag("--exclude-axis", a.exclude_axis, "Leave inert primes out of the sector tests");

  auto* bench = app.add_subcommand("bench", "Scaling of square-root-of-minus-one methods");
  bench->add_option("--grid", a.grid, "Primes p = 1 (mod 4), ascending")->delimiter(',');
  bench->add_option("--reps", a.reps, "Timed repetitions per point")->check(CLI::Range(std::size_t{5}, std::size_t{100000}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (a.format_name == "csv") a.cfg.format = Format::csv;
  if (a.format_name == "json") a.cfg.format = Format::json;
  a.cfg.command = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  try {
    if (a.cfg.command == "solve") {
      cmd_solve(a, buffer);
    } else if (a.cfg.command == "wilson") {
      cmd_wilson(a, buffer);
    } else if (a.cfg.command == "decompose") {
      cmd_decompose(a, buffer);
    } else if (a.cfg.command == "census") {
      cmd_census(a, buffer);
    } else if (a.cfg.command == "lattice") {
      cmd_lattice(a, buffer);
    } else if (a.cfg.command == "ratio") {
      cmd_ratio(a, buffer);
    } else if (a.cfg.command == "stats") {
      cmd_stats(a, buffer);
    } else if (a.cfg.command == "bench") {
      cmd_bench(a, buffer, err);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }

  if (a.cfg.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(a.cfg.output_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write " << a.cfg.output_path << '\n';
      return kExitDomainError;
    }
  }
  return kExitOk;
}

}  // namespace residue::cli

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

#include "specgraph/bounds.hpp"
#include "specgraph/census.hpp"
#include "specgraph/eigen.hpp"
#include "specgraph/error.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/indices.hpp"
#include "specgraph/multipartite.hpp"
#include "specgraph/verify.hpp"

namespace specgraph::cli {
namespace {

using specgraph::format_fixed;

std::string edge_list(const std::vector<Edge>& edges) {
  std::string s;
  for (const auto& [u, v] : edges) {
    if (!s.empty()) s += ' ';
    s += std::to_string(u) + '-' + std::to_string(v);
  }
  return s;
}

std::string value_list(const Spectrum& s) {
  std::string out;
  for (double v : s) {
    if (!out.empty()) out += ' ';
    out += format_fixed(v);
  }
  return out;
}

void print_analytic(std::ostream& out, const AnalyticSpectrum& a) {
  out << "value,multiplicity,provenance\n";
  for (const auto& e : a.entries()) {
    out << format_fixed(e.value) << ',' << e.multiplicity << ',' << provenance_name(e.provenance) << '\n';
  }
}

// Usage-level failures: bad input rather than a broken computation.
bool is_usage_error(Errc c) {
  switch (c) {
    case Errc::invalid_char:
    case Errc::truncated_payload:
    case Errc::nonzero_padding:
    case Errc::invalid_params:
    case Errc::invalid_partition:
    case Errc::invalid_order:
    case Errc::order_too_large:
    case Errc::not_applicable:
    case Errc::io_error:
    case Errc::mixed_orders:
    case Errc::empty_source:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adjacency spectra, spectral indices and small-graph census"};
  app.name("specgraph");
  app.require_subcommand(1);

  std::string g6;
  double zero_tol = -1.0;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of a graph6 graph, descending");
  spectrum_cmd->add_option("graph6", g6)->required();

  auto* indices_cmd = app.add_subcommand("indices", "Spectral indices of a graph6 graph");
  indices_cmd->add_option("graph6", g6)->required();
  indices_cmd->add_option("--zero-tol", zero_tol, "Zero threshold (default 1e-9 m)")->check(CLI::PositiveNumber);

  std::vector<std::size_t> parts;
  bool analytic = false, numeric = false, both = false;
  auto* mp_cmd = app.add_subcommand("multipartite", "Spectrum of a complete multipartite graph");
  mp_cmd->add_option("--parts", parts, "Part sizes, comma separated")->required()->delimiter(',');
  auto* fa = mp_cmd->add_flag("--analytic", analytic);
  auto* fn = mp_cmd->add_flag("--numeric", numeric);
  auto* fb = mp_cmd->add_flag("--both", both);
  fa->excludes(fn, fb);
  fn->excludes(fb);

  std::string family;
  std::size_t fam_m = 0;
  auto* pert_cmd = app.add_subcommand("perturbed", "K_{m,m} with one edge removed or added");
  pert_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"kmm-minus-e", "kmm-plus-e"}));
  pert_cmd->add_option("--m", fam_m)->required()->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

  std::size_t order = 0;
  std::string file;
  std::string out_dir = ".";
  unsigned threads = 0;
  auto* census_cmd = app.add_subcommand("census", "Statistics and histogram CSVs for one order");
  census_cmd->add_option("--order", order)->required();
  census_cmd->add_option("--file", file, "graph6 list (required above order 7)");
  census_cmd->add_option("--out", out_dir, "Output directory");
  census_cmd->add_option("--threads", threads, "Worker threads (default: all cores)");

  std::string index_arg;
  std::string dir_arg;
  auto* ext_cmd = app.add_subcommand("extremal", "Extreme value of an index and every graph attaining it");
  ext_cmd->add_option("--order", order)->required();
  ext_cmd->add_option("--index", index_arg)->required()->check(
      CLI::IsMember({"gap", "ind", "pow", "lmax", "lmin", "lambda_max", "lambda_min"}));
  ext_cmd->add_option("--dir", dir_arg)->required()->check(CLI::IsMember({"min", "max"}));
  ext_cmd->add_option("--file", file);

  std::string check_arg;
  auto* verify_cmd = app.add_subcommand("verify", "Run a bound or extremality suite; exit 1 on failure");
  verify_cmd->add_option("--check", check_arg)->required()->check(CLI::IsMember(
      {"prop1", "prop2a", "prop2b", "prop3", "prop4", "bipartite-bound", "classical", "vertex-add"}));
  verify_cmd->add_option("--order", order)->required();
  verify_cmd->add_option("--file", file);

  double delta = 0.0, gamma = 0.0;
  auto* dens_cmd = app.add_subcommand("density", "Complete bipartite witness with m - gamma <= gap <= m - delta");
  dens_cmd->add_option("--delta", delta)->required();
  dens_cmd->add_option("--gamma", gamma)->required();

  auto* approx_cmd = app.add_subcommand("approx-count", "Approximate number of connected graphs");
  approx_cmd->add_option("--order", order)->required()->check(CLI::Range(std::size_t{2}, std::size_t{1000}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  auto optional_file = [&]() -> std::optional<std::filesystem::path> {
    if (file.empty()) return std::nullopt;
    return std::filesystem::path(file);
  };

  try {
    if (*spectrum_cmd) {
      for (double v : eigen_sym(decode_graph6(g6))) out << format_fixed(v) << '\n';
      return 0;
    }
    if (*indices_cmd) {
      const Graph g = decode_graph6(g6);
      const Spectrum s = eigen_sym(g);
      const SpectralIndices x = compute_indices(s, zero_tol > 0 ? zero_tol : default_zero_tol(g.order()));
      out << "lambda_max " << format_fixed(x.lambda_max) << '\n'
          << "lambda_min " << format_fixed(x.lambda_min) << '\n'
          << "lambda_plus " << format_fixed(x.lambda_plus) << '\n'
          << "lambda_minus " << format_fixed(x.lambda_minus) << '\n'
          << "gap " << format_fixed(x.gap) << '\n'
          << "ind " << format_fixed(x.ind) << '\n'
          << "pow " << format_fixed(x.pow) << '\n';
      return 0;
    }
    if (*mp_cmd) {
      const Partition p(parts);
      if (p.part_count() < 2) throw Error(Errc::invalid_partition, "need at least two parts");
      if (analytic) {
        print_analytic(out, multipartite_spectrum(p));
      } else if (numeric) {
        for (double v : eigen_sym(families::complete_multipartite(p))) out << format_fixed(v) << '\n';
      } else {
        const Spectrum a = multipartite_spectrum(p).expand();
        const Spectrum n = eigen_sym(families::complete_multipartite(p));
        double dev = 0.0;
        out << "analytic,numeric\n";
        for (std::size_t i = 0; i < a.size(); ++i) {
          out << format_fixed(a[i]) << ',' << format_fixed(n[i]) << '\n';
          dev = std::max(dev, std::abs(a[i] - n[i]));
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", dev);
        out << "max_deviation " << buf << '\n';
      }
      return 0;
    }
    if (*pert_cmd) {
      if (family == "kmm-minus-e") {
        const auto r = kmm_minus_e_report(fam_m);
        print_analytic(out, r.spectrum);
        out << "gap " << format_fixed(r.gap) << '\n'
            << "lower_bound " << format_fixed(r.lower_bound) << '\n'
            << "upper_bound " << format_fixed(r.upper_bound) << '\n'
            << "sandwich " << (r.sandwich_holds ? "holds" : "fails") << '\n'
            << "limit_residual " << format_fixed(r.limit_residual) << '\n';
      } else {
        const auto r = kmm_plus_e_report(fam_m);
        print_analytic(out, r.spectrum);
        out << "lambda_plus " << format_fixed(r.lambda_plus) << '\n'
            << "lambda_minus " << format_fixed(r.lambda_minus) << '\n'
            << "gap " << format_fixed(r.gap) << '\n'
            << "ind " << format_fixed(r.ind) << '\n'
            << "gap_limit_residual " << format_fixed(r.gap_limit_residual) << '\n'
            << "ind_limit_residual " << format_fixed(r.ind_limit_residual) << '\n';
      }
      return 0;
    }
    if (*census_cmd) {
      auto source = open_census_source(order, optional_file());
      CensusOptions opts;
      opts.threads = threads;
      const CensusReport rep = run_census(*source, opts);
      if (rep.count > 0 && rep.order != order) {
        throw Error(Errc::mixed_orders, "file holds order " + std::to_string(rep.order) + " graphs");
      }
      out << "order " << order << '\n' << "count " << rep.count << '\n' << "rejected " << rep.rejected << '\n';
      for (const auto& p : write_census_csv(rep, out_dir)) out << "wrote " << p.string() << '\n';
      return 0;
    }
    if (*ext_cmd) {
      auto source = open_census_source(order, optional_file());
      const IndexKind kind = *parse_index_name(index_arg);
      const auto res = extremal(*source, kind, dir_arg == "min" ? Direction::min : Direction::max);
      out << "value " << format_fixed(res.value) << '\n' << "witnesses " << res.witnesses.size() << '\n';
      for (const auto& w : res.witnesses) {
        out << w.graph6 << '\n'
            << "  edges " << edge_list(w.edges) << '\n'
            << "  spectrum " << value_list(w.spectrum) << '\n';
      }
      return 0;
    }
    if (*verify_cmd) {
      const Check c = *parse_check(check_arg);
      const CheckResult r = run_check(c, order, optional_file());
      out << check_name(c) << " order " << order << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases
          << " cases, " << r.skipped << " skipped)\n";
      if (!r.detail.empty()) out << r.detail << '\n';
      if (r.counterexample) out << "counterexample " << *r.counterexample << '\n';
      return r.passed ? 0 : 1;
    }
    if (*dens_cmd) {
      const DensityWitness w = density_search(delta, gamma);
      out << "m1 " << w.m1 << '\n'
          << "m2 " << w.m2 << '\n'
          << "m " << w.m << '\n'
          << "gap " << format_fixed(w.gap) << '\n'
          << "fraction " << format_fixed(w.fraction) << '\n'
          << "verified " << (w.verified ? "yes" : "no") << '\n';
      return w.verified ? 0 : 1;
    }
    if (*approx_cmd) {
      const double a = approx_count(order);
      out << "approx " << format_fixed(a) << '\n';
      if (const auto known = known_connected_count(order)) {
        const double k = static_cast<double>(*known);
        out << "known " << *known << '\n' << "relative_error " << format_fixed((a - k) / k) << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? 2 : 1;
  }
  return 2;
}

}  // namespace specgraph::cli

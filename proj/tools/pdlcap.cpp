// Command line front end: point evaluations, parameter-plane maps, w_n
// boundaries, capacity lower bounds, and the self-verification suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "pdl/closedform.hpp"
#include "pdl/errors.hpp"
#include "pdl/format.hpp"
#include "pdl/region.hpp"
#include "pdl/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output path: " << path << "\n";
    return kExitIo;
  }
  f << content;
  f.flush();
  if (!f) {
    std::cerr << "write failed: " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string fmt(double x) { return pdl::format_sig(x, 12); }

int run_point(double ph, double pv, std::int64_t n, int mmax, const std::string& format) {
  const pdl::ChannelParams params(ph, pv);
  const pdl::SuperadditivityReport report = pdl::superadditivity_report(params, n);
  const pdl::Q1Solution sol = pdl::solve_q1(params);
  const double bound = pdl::doubling_series_bound(params, sol, mmax);

  if (format == "json") {
    pdl::JsonWriter w;
    w.begin_object();
    w.key("classification").value(std::string(pdl::to_string(report.classification)));
    w.key("q1").value(report.q1);
    w.key("w_n").value(report.w_n);
    w.key("benefit").value(report.benefit);
    w.key("qn_lower").value(report.qn_lower);
    w.key("doubling_bound").value(bound);
    w.end_object();
    return write_output("", w.str() + "\n");
  }
  std::string out;
  out += "classification: " + std::string(pdl::to_string(report.classification)) + "\n";
  out += "q1: " + fmt(report.q1) + " bits\n";
  out += "w_n: " + fmt(report.w_n) + " (n=" + std::to_string(n) + ")\n";
  out += "benefit: " + fmt(report.benefit) + " bits\n";
  out += "qn_lower: " + fmt(report.qn_lower) + " bits\n";
  out += "doubling_bound: " + fmt(bound) + " bits\n";
  return write_output("", out);
}

int run_region(int res, const std::vector<std::int64_t>& n_list, const std::string& out_path,
               const std::string& format) {
  const pdl::RegionGrid grid = pdl::scan(res, n_list);
  if (format == "csv") return write_output(out_path, pdl::grid_csv(grid));
  if (format == "json") return write_output(out_path, pdl::grid_json(grid));
  std::vector<pdl::BoundaryCurve> contours;
  contours.reserve(n_list.size());
  for (std::int64_t n : n_list)
    if (n >= 2) contours.push_back(pdl::boundary(n, res));
  return write_output(out_path, pdl::grid_svg(grid, contours));
}

int run_boundary(std::int64_t n, int rays, const std::string& out_path,
                 const std::string& format) {
  const pdl::BoundaryCurve curve = pdl::boundary(n, rays);
  if (format == "csv") return write_output(out_path, pdl::boundary_csv(curve));
  if (format == "json") return write_output(out_path, pdl::boundary_json(curve));
  return write_output(out_path, pdl::boundary_svg(curve));
}

int run_q1(double ph, double pv, const std::string& format) {
  const pdl::Q1Solution sol = pdl::solve_q1(pdl::ChannelParams(ph, pv));
  if (format == "json") {
    pdl::JsonWriter w;
    w.begin_object();
    w.key("q1").value(sol.q1);
    w.key("rho_hh").value(sol.state.rho_hh);
    w.key("rho_vv").value(sol.state.rho_vv);
    w.key("degenerate").value(sol.degenerate);
    w.end_object();
    return write_output("", w.str() + "\n");
  }
  std::string out;
  out += "q1: " + fmt(sol.q1) + " bits\n";
  out += "rho_hh: " + fmt(sol.state.rho_hh) + "\n";
  out += "rho_vv: " + fmt(sol.state.rho_vv) + "\n";
  out += std::string("degenerate: ") + (sol.degenerate ? "true" : "false") + "\n";
  return write_output("", out);
}

int run_wn(double ph, double pv, std::int64_t n, const std::string& format) {
  const double w = pdl::w_n(pdl::ChannelParams(ph, pv), n);
  if (format == "json") {
    pdl::JsonWriter jw;
    jw.begin_object();
    jw.key("n").value(n);
    jw.key("w_n").value(w);
    jw.end_object();
    return write_output("", jw.str() + "\n");
  }
  return write_output("", "w_n: " + fmt(w) + " (n=" + std::to_string(n) + ")\n");
}

int run_bound(double ph, double pv, int mmax, const std::string& format) {
  const pdl::ChannelParams params(ph, pv);
  const pdl::Q1Solution sol = pdl::solve_q1(params);
  const double bound = pdl::doubling_series_bound(params, sol, mmax);
  if (format == "json") {
    pdl::JsonWriter w;
    w.begin_object();
    w.key("m_max").value(std::int64_t{mmax});
    w.key("doubling_bound").value(bound);
    w.end_object();
    return write_output("", w.str() + "\n");
  }
  return write_output("", "doubling_bound: " + fmt(bound) + " bits\n");
}

int run_verify(const std::string& level, std::uint64_t seed) {
  const bool full = level == "full";
  const auto checks = pdl::run_verification(full, seed);
  int failures = 0;
  for (const auto& c : checks) {
    if (!c.passed) ++failures;
    std::cout << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << " (" << c.detail << ", "
              << pdl::format_sig(c.seconds, 3) << " s)\n";
  }
  std::cout << "verification: " << (checks.size() - static_cast<std::size_t>(failures)) << "/"
            << checks.size() << " checks passed (" << level << " level)\n";
  if (failures > 0) {
    std::cerr << "verification failed: " << failures << " check(s)\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherent information and quantum-capacity lower bounds for the "
               "two-parameter polarization-dependent-loss channel (all rates in bits)"};
  app.require_subcommand(1);

  double ph = 0.0, pv = 0.0;
  std::int64_t n = 2;
  int mmax = 8;
  int res = 41;
  int threads = 0;
  std::uint64_t seed = 12345;
  std::vector<std::int64_t> n_list;
  std::string out_path;
  std::string format = "text";       // point/q1/wn/bound
  std::string file_format = "csv";   // region/boundary
  std::string level = "fast";

  const auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--ph", ph, "horizontal transmission factor")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--pv", pv, "vertical transmission factor")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
  };
  const auto add_text_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format (text, json)")
        ->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_file_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", file_format, "output format (csv, json, svg)")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  CLI::App* point = app.add_subcommand("point", "superadditivity report at one parameter point");
  add_params(point);
  point->add_option("--n", n, "number of channel uses")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{10000000}));
  point->add_option("--mmax", mmax, "doubling series cutoff")->check(CLI::Range(0, 64));
  add_text_format(point);

  CLI::App* region = app.add_subcommand("region", "parameter-plane scan to CSV/JSON/SVG");
  region->add_option("--res", res, "grid resolution")->required()->check(CLI::Range(2, pdl::kMaxResolution));
  region->add_option("--n-list", n_list, "channel-use counts")->required()->delimiter(',');
  region->add_option("--out", out_path, "output path (default stdout)");
  add_file_format(region);
  region->add_option("--threads", threads, "worker threads (0 = all)")->check(CLI::Range(0, 1024));

  CLI::App* bnd = app.add_subcommand("boundary", "w_n = 0 boundary curve");
  bnd->add_option("--n", n, "number of channel uses")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{10000000}));
  bnd->add_option("--res", res, "rays per direction")->check(CLI::Range(2, pdl::kMaxResolution));
  bnd->add_option("--out", out_path, "output path (default stdout)");
  add_file_format(bnd);
  bnd->add_option("--threads", threads, "worker threads (0 = all)")->check(CLI::Range(0, 1024));

  CLI::App* q1cmd = app.add_subcommand("q1", "optimal diagonal one-shot state");
  add_params(q1cmd);
  add_text_format(q1cmd);

  CLI::App* wncmd = app.add_subcommand("wn", "superadditivity weight w_n");
  add_params(wncmd);
  wncmd->add_option("--n", n, "number of channel uses")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{10000000}));
  add_text_format(wncmd);

  CLI::App* boundcmd = app.add_subcommand("bound", "doubling-series capacity bound");
  add_params(boundcmd);
  boundcmd->add_option("--mmax", mmax, "doubling series cutoff")->check(CLI::Range(0, 64));
  add_text_format(boundcmd);

  CLI::App* verify = app.add_subcommand("verify", "run the oracle/invariant suites");
  verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--seed", seed, "seed for randomized sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (app.got_subcommand(point)) return run_point(ph, pv, n, mmax, format);
    if (app.got_subcommand(region)) return run_region(res, n_list, out_path, file_format);
    if (app.got_subcommand(bnd)) return run_boundary(n, res, out_path, file_format);
    if (app.got_subcommand(q1cmd)) return run_q1(ph, pv, format);
    if (app.got_subcommand(wncmd)) return run_wn(ph, pv, n, format);
    if (app.got_subcommand(boundcmd)) return run_bound(ph, pv, mmax, format);
    if (app.got_subcommand(verify)) return run_verify(level, seed);
  } catch (const pdl::ResourceLimitError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const pdl::DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const pdl::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

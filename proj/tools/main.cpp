// Command-line front end: classify a single (degree, n), sweep a range, or
// solve a Pell equation.

#include "hilbk3/classify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace hilbk3;

Int parse_int(const std::string& text, const std::string& what) {
  Int x;
  if (mpz_set_str(x.get_mpz_t(), text.c_str(), 10) != 0)
    throw CLI::ValidationError(what, "not an integer: " + text);
  return x;
}

// "A:B" inclusive
std::pair<Int, Int> parse_range(const std::string& text, const std::string& what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError(what, "expected A:B, got " + text);
  const Int lo = parse_int(text.substr(0, colon), what);
  const Int hi = parse_int(text.substr(colon + 1), what);
  if (lo > hi) throw CLI::ValidationError(what, "empty range " + text);
  return {lo, hi};
}

Int degree_to_t(const Int& degree, const std::string& what) {
  if (degree < 2 || degree % 2 != 0)
    throw CLI::ValidationError(what, "degree must be a positive even integer (H^2 = 2t)");
  return degree / 2;
}

RenderFormat parse_format(const std::string& format) {
  if (format == "text") return RenderFormat::Text;
  if (format == "json") return RenderFormat::Json;
  throw CLI::ValidationError("--format", "expected text or json");
}

struct CommonOpts {
  std::string scan_bound = "100";
  std::string positivity_bound = "200";
  std::string aux_bound = "10000";
  std::string flop_search_bound = "100";
  std::string flop_profiles_file;
  std::string data_file;
  std::string format = "text";
  int workers = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--scan-bound", scan_bound, "wall scan box bound")->capture_default_str();
    cmd->add_option("--positivity-bound", positivity_bound, "spherical positivity scan bound")
        ->capture_default_str();
    cmd->add_option("--aux-bound", aux_bound, "auxiliary equation scan bound")
        ->capture_default_str();
    cmd->add_option("--flop-profiles", flop_profiles_file,
                    "file of 'p k' flopping profiles to test ('#' comments)");
    cmd->add_option("--flop-search-bound", flop_search_bound,
                    "direct search bound for inconclusive flopping profiles")
        ->capture_default_str();
    cmd->add_option("--workers", workers, "worker threads for scans (0 = hardware)")
        ->capture_default_str();
    cmd->add_option("--data", data_file, "known-examples json file");
    cmd->add_option("--format", format, "output format: text or json")->capture_default_str();
  }

  ClassifyOptions to_options() const {
    ClassifyOptions opt;
    opt.scan_bound = parse_int(scan_bound, "--scan-bound");
    opt.positivity_bound = parse_int(positivity_bound, "--positivity-bound");
    opt.aux_bound = parse_int(aux_bound, "--aux-bound");
    opt.flop_search_bound = parse_int(flop_search_bound, "--flop-search-bound");
    if (!flop_profiles_file.empty()) opt.flop_profiles = parse_flop_profiles(flop_profiles_file);
    opt.workers = workers;
    if (!data_file.empty()) opt.known_examples_file = data_file;
    return opt;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification of derived-natural involutions on Hilbert schemes of points "
               "on generic polarized K3 surfaces"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "classify a single (degree, points) case");
  std::string degree_str, points_str;
  classify_cmd->add_option("--degree", degree_str, "polarization degree 2t (even)")->required();
  classify_cmd->add_option("--points", points_str, "number of points n (>= 2)")->required();
  CommonOpts classify_opts;
  classify_opts.attach(classify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "classify a rectangle of (degree, points) cases");
  std::string degree_range_str, points_range_str;
  sweep_cmd->add_option("--degree-range", degree_range_str, "degrees A:B (even, inclusive)")
      ->required();
  sweep_cmd->add_option("--points-range", points_range_str, "points C:D (inclusive)")->required();
  CommonOpts sweep_opts;
  sweep_opts.attach(sweep_cmd);

  auto* pell_cmd = app.add_subcommand("pell", "solve X^2 - D Y^2 = -1 and +1");
  std::string d_str;
  pell_cmd->add_option("--d", d_str, "the coefficient D (>= 1)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) {
      const Int t = degree_to_t(parse_int(degree_str, "--degree"), "--degree");
      const Int n = parse_int(points_str, "--points");
      const ClassificationReport rep = classify(t, n, classify_opts.to_options());
      std::cout << render(rep, parse_format(classify_opts.format));
    } else if (sweep_cmd->parsed()) {
      const auto [deg_lo, deg_hi] = parse_range(degree_range_str, "--degree-range");
      const auto [n_lo, n_hi] = parse_range(points_range_str, "--points-range");
      if (deg_lo % 2 != 0 || deg_hi % 2 != 0)
        throw CLI::ValidationError("--degree-range", "degree endpoints must be even");
      const Int t_lo = degree_to_t(deg_lo, "--degree-range");
      const Int t_hi = degree_to_t(deg_hi, "--degree-range");
      const SweepResult result = batch_sweep(t_lo, t_hi, n_lo, n_hi, sweep_opts.to_options());
      std::cout << render(result, parse_format(sweep_opts.format));
    } else if (pell_cmd->parsed()) {
      const Int D = parse_int(d_str, "--d");
      const NegPellResult neg = solve_neg_pell(D);
      std::cout << "D = " << D << "\n";
      switch (neg.status) {
        case NegPellStatus::SquareD:
          std::cout << "D is a perfect square; both equations are degenerate\n";
          break;
        case NegPellStatus::Unsolvable: {
          std::cout << "X^2 - D Y^2 = -1: unsolvable (even continued-fraction period)\n";
          const PellPair pos = solve_pos_pell(D);
          std::cout << "X^2 - D Y^2 = +1: fundamental (" << pos.a << ", " << pos.b << ")\n";
          break;
        }
        case NegPellStatus::Solvable: {
          std::cout << "X^2 - D Y^2 = -1: fundamental (" << neg.pair->a << ", " << neg.pair->b
                    << ")\n";
          const PellPair pos = solve_pos_pell(D);
          std::cout << "X^2 - D Y^2 = +1: fundamental (" << pos.a << ", " << pos.b << ")\n";
          break;
        }
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

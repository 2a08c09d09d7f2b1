// cusp: sign-change experiments on level-1 Hecke eigenforms.
//
// Every subcommand writes CSV to stdout and diagnostics to stderr. Exit status is
// 0 on a complete result, 2 on a usage error and 1 on any other failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cusp/asymptotics.hpp"
#include "cusp/cache.hpp"
#include "cusp/census.hpp"
#include "cusp/commands.hpp"

namespace {

struct Flags {
  int weight_f = 12;
  int weight_g = 16;
  std::uint64_t modulus = 1;
  std::int64_t residue = 1;
  unsigned power = 2;
  std::uint64_t limit = 1000;
  double epsilon = cusp::kDefaultEpsilon;
  std::vector<double> checkpoints;
  bool fit = false;
  bool cumulative = false;
  bool exploratory = false;
  double s_re = 2.0;
  double s_im = 0.0;
  std::string cache_dir;
  std::string out;
};

void add_pair(CLI::App* cmd, Flags& f) {
  cmd->add_option("--weight-f", f.weight_f, "weight of f (12,16,18,20,22,26)");
  cmd->add_option("--weight-g", f.weight_g, "weight of g (12,16,18,20,22,26)");
}

std::vector<std::uint64_t> as_integers(const std::vector<double>& xs) {
  std::vector<std::uint64_t> out;
  for (double x : xs) {
    if (!(x >= 1) || x != static_cast<double>(static_cast<std::uint64_t>(x))) {
      throw cusp::UsageError("--checkpoints must be positive integers here");
    }
    out.push_back(static_cast<std::uint64_t>(x));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous sign changes of Hecke eigenform coefficients"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--cache-dir", f.cache_dir, "coefficient cache directory")
      ->envname("CUSP_CACHE_DIR");

  auto* coeffs = app.add_subcommand(
      "coeffs", "Write a coefficient cache: 17-byte header, then per n a sign byte and "
                "binary64 lambda(n), little-endian");
  coeffs->add_option("--weight,--weight-f", f.weight_f, "catalog weight");
  coeffs->add_option("--limit", f.limit, "X, highest n")->required();
  coeffs->add_option("--out", f.out, "output file (default: cache dir)");

  auto* census = app.add_subcommand(
      "census", "Progression census. CSV: n_checkpoint,same,opposite,zero,first_same,"
                "first_opposite");
  add_pair(census, f);
  census->add_option("--modulus", f.modulus, "m");
  census->add_option("--residue", f.residue, "l, coprime to m");
  census->add_option("--limit", f.limit, "X");
  census->add_flag("--cumulative", f.cumulative, "rows at powers of two and X");

  auto* sparse = app.add_subcommand(
      "sparse", "Census of a(n^j) b(n^j). CSV: n_checkpoint,same,opposite,zero,first_same,"
                "first_opposite");
  add_pair(sparse, f);
  sparse->add_option("--power", f.power, "j in {2,3,4}");
  sparse->add_option("--limit", f.limit, "X");
  sparse->add_flag("--cumulative", f.cumulative, "rows at powers of two and X");

  auto* windows = app.add_subcommand(
      "windows", "Window scan over (x, x + x^{1-beta_j+2eps}]. CSV: x,h,first,last,same,"
                 "opposite,zero,both_signs,degenerate,product_sum,g_sum");
  add_pair(windows, f);
  windows->add_option("--power", f.power, "j in {2,3,4}");
  windows->add_option("--epsilon", f.epsilon, "eps > 0");
  windows->add_option("--checkpoints", f.checkpoints, "window positions x")->delimiter(',');

  auto* sums = app.add_subcommand(
      "sums", "Partial sums of lambda(n^j). CSV: x,S_f,S_g,S_fg,S_fg_over_x and with --fit "
              "slope,slope_stderr,remainder_exponent,envelope_exponent");
  add_pair(sums, f);
  sums->add_option("--power", f.power, "j in {2,3,4}");
  sums->add_option("--checkpoints", f.checkpoints, "x values")->delimiter(',');
  sums->add_option("--limit", f.limit, "largest x when --checkpoints is absent");
  sums->add_flag("--fit", f.fit, "append main-term fit columns");

  auto* rankin = app.add_subcommand(
      "rankin", "Truncated Rankin-Selberg series. CSV: s_re,s_im,modulus,residue,X,R_re,R_im,"
                "tail_bound,archimedean_re,archimedean_im,zeta_re,zeta_im,completed_re,"
                "completed_im");
  add_pair(rankin, f);
  rankin->add_option("--modulus", f.modulus, "m");
  rankin->add_option("--residue", f.residue, "l, coprime to m");
  rankin->add_option("--s-re", f.s_re, "Re s (normalized)");
  rankin->add_option("--s-im", f.s_im, "Im s");
  rankin->add_option("--limit", f.limit, "truncation X");
  rankin->add_option("--checkpoints", f.checkpoints, "several truncations")->delimiter(',');
  rankin->add_flag("--exploratory", f.exploratory, "allow Re s <= 1 without a tail bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    std::optional<std::filesystem::path> dir;
    if (!f.cache_dir.empty()) dir = f.cache_dir;
    cusp::CoefficientSource src(dir);

    if (coeffs->parsed()) {
      std::filesystem::path out = f.out;
      if (out.empty()) {
        if (!dir) throw cusp::UsageError("coeffs needs --out or a cache directory");
        std::filesystem::create_directories(*dir);
        out = cusp::cache_file_name(*dir, f.weight_f, f.limit);
      }
      cusp::cmd_coeffs(src, f.weight_f, f.limit, out);
    } else if (census->parsed()) {
      cusp::cmd_census(src, {f.weight_f, f.weight_g, f.modulus, f.residue, f.limit, f.cumulative},
                       std::cout);
    } else if (sparse->parsed()) {
      cusp::cmd_sparse(src, {f.weight_f, f.weight_g, f.power, f.limit, f.cumulative}, std::cout);
    } else if (windows->parsed()) {
      cusp::cmd_windows(src, {f.weight_f, f.weight_g, f.power, f.checkpoints, f.epsilon},
                        std::cout);
    } else if (sums->parsed()) {
      std::vector<std::uint64_t> xs;
      if (f.checkpoints.empty()) {
        if (f.limit < 100) throw cusp::UsageError("--limit must be at least 100");
        xs = cusp::log_spaced_checkpoints(f.limit / 100.0, static_cast<double>(f.limit), 10);
      } else {
        xs = as_integers(f.checkpoints);
      }
      cusp::cmd_sums(src, {f.weight_f, f.weight_g, f.power, xs, f.fit}, std::cout);
    } else if (rankin->parsed()) {
      std::vector<std::uint64_t> xs =
          f.checkpoints.empty() ? std::vector<std::uint64_t>{f.limit} : as_integers(f.checkpoints);
      cusp::cmd_rankin(src, {f.weight_f, f.weight_g, f.modulus, f.residue, {f.s_re, f.s_im}, xs,
                             f.exploratory},
                       std::cout);
    }
    std::cout.flush();
    return std::cout ? 0 : 1;
  } catch (const cusp::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

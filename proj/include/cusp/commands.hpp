#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cusp/hecke.hpp"
#include "cusp/special.hpp"

namespace cusp {

/// Bad flags or arguments; the tool maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Supplies exact series and normalized coefficients, memoized per process and
/// optionally persisted as coefficient caches. Results never depend on cache presence.
class CoefficientSource {
 public:
  explicit CoefficientSource(std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const IntSeries& series(int weight, std::uint64_t limit);
  const NormalizedCoeffs& normalized(int weight, std::uint64_t limit);
  const FactorSieve& sieve(std::uint64_t limit);

 private:
  std::optional<std::filesystem::path> cache_dir_;
  std::map<std::uint64_t, std::unique_ptr<EigenformFactory>> factories_;
  std::map<std::pair<int, std::uint64_t>, IntSeries> series_;
  std::map<std::pair<int, std::uint64_t>, NormalizedCoeffs> normalized_;
  std::unique_ptr<FactorSieve> sieve_;
};

/// Formats binary64 with 17 significant digits.
std::string format_double(double v);

void cmd_coeffs(CoefficientSource& src, int weight, std::uint64_t limit,
                const std::filesystem::path& out_path);

struct CensusArgs {
  int weight_f = 12;
  int weight_g = 16;
  std::uint64_t modulus = 1;
  std::int64_t residue = 1;
  std::uint64_t limit = 1000;
  bool cumulative = false;
};
/// CSV: n_checkpoint,same,opposite,zero,first_same,first_opposite
void cmd_census(CoefficientSource& src, const CensusArgs& args, std::ostream& out);

struct SparseArgs {
  int weight_f = 12;
  int weight_g = 16;
  unsigned power = 2;
  std::uint64_t limit = 1000;
  bool cumulative = false;
};
/// CSV: n_checkpoint,same,opposite,zero,first_same,first_opposite
void cmd_sparse(CoefficientSource& src, const SparseArgs& args, std::ostream& out);

struct WindowArgs {
  int weight_f = 12;
  int weight_g = 16;
  unsigned power = 2;
  std::vector<double> x_grid;
  double epsilon = 0.05;
};
/// CSV: x,h,first,last,same,opposite,zero,both_signs,degenerate,product_sum,g_sum
void cmd_windows(CoefficientSource& src, const WindowArgs& args, std::ostream& out);

struct SumsArgs {
  int weight_f = 12;
  int weight_g = 16;
  unsigned power = 2;
  std::vector<std::uint64_t> checkpoints;
  bool fit = false;
};
/// CSV: x,S_f,S_g,S_fg,S_fg_over_x[,slope,slope_stderr,remainder_exponent,envelope_exponent]
void cmd_sums(CoefficientSource& src, const SumsArgs& args, std::ostream& out);

struct RankinArgs {
  int weight_f = 12;
  int weight_g = 12;
  std::uint64_t modulus = 1;
  std::int64_t residue = 1;
  Complex s{2.0, 0.0};
  std::vector<std::uint64_t> truncations;
  bool exploratory = false;  // allow Re s <= 1; tail bound and completion left blank
};
/// CSV: s_re,s_im,modulus,residue,X,R_re,R_im,tail_bound,archimedean_re,archimedean_im,
///      zeta_re,zeta_im,completed_re,completed_im
void cmd_rankin(CoefficientSource& src, const RankinArgs& args, std::ostream& out);

}  // namespace cusp

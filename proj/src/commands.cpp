#include "cusp/commands.hpp"

#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

#include "cusp/asymptotics.hpp"
#include "cusp/cache.hpp"
#include "cusp/census.hpp"
#include "cusp/dirichlet_series.hpp"

namespace cusp {
namespace {

void require_weight(int weight) {
  if (!EigenformId::in_catalog(weight)) {
    throw UsageError("weight " + std::to_string(weight) +
                     " is not in the catalog {12,16,18,20,22,26}");
  }
}

void require_limit(std::uint64_t limit) {
  if (limit < 2) throw UsageError("--limit must be at least 2");
}

void require_progression(std::uint64_t m, std::int64_t l) {
  if (m == 0) throw UsageError("--modulus must be >= 1");
  const auto mm = static_cast<std::int64_t>(m);
  const auto r = static_cast<std::uint64_t>(((l % mm) + mm) % mm);
  if (std::gcd(r, m) != 1) {
    throw UsageError("--residue " + std::to_string(l) + " is not coprime to --modulus " +
                     std::to_string(m));
  }
}

void require_power(unsigned j) {
  if (j < 2 || j > 4) throw UsageError("--power must be 2, 3 or 4");
}

std::string opt(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

void census_row(std::ostream& out, std::uint64_t checkpoint, std::uint64_t same,
                std::uint64_t opposite, std::uint64_t zero,
                const std::optional<std::uint64_t>& first_same,
                const std::optional<std::uint64_t>& first_opposite) {
  out << checkpoint << ',' << same << ',' << opposite << ',' << zero << ',' << opt(first_same)
      << ',' << opt(first_opposite) << '\n';
}

void write_census(std::ostream& out, const CensusReport& r) {
  out << "n_checkpoint,same,opposite,zero,first_same,first_opposite\n";
  if (r.cumulative.empty()) {
    census_row(out, r.limit, r.same_sign, r.opposite_sign, r.zero, r.first_same,
               r.first_opposite);
    return;
  }
  for (const auto& c : r.cumulative) {
    census_row(out, c.checkpoint, c.same, c.opposite, c.zero, c.first_same, c.first_opposite);
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CoefficientSource::CoefficientSource(std::optional<std::filesystem::path> cache_dir)
    : cache_dir_(std::move(cache_dir)) {}

const IntSeries& CoefficientSource::series(int weight, std::uint64_t limit) {
  require_weight(weight);
  const auto key = std::make_pair(weight, limit);
  if (auto it = series_.find(key); it != series_.end()) return it->second;
  auto& factory = factories_[limit];
  if (!factory) factory = std::make_unique<EigenformFactory>(limit);
  return series_.emplace(key, factory->eigenform(EigenformId(weight))).first->second;
}

const NormalizedCoeffs& CoefficientSource::normalized(int weight, std::uint64_t limit) {
  require_weight(weight);
  const auto key = std::make_pair(weight, limit);
  if (auto it = normalized_.find(key); it != normalized_.end()) return it->second;
  NormalizedCoeffs nc;
  const auto path = cache_dir_ ? std::optional(cache_file_name(*cache_dir_, weight, limit))
                               : std::nullopt;
  if (path && std::filesystem::exists(*path)) {
    nc = read_coeff_cache(*path);
    if (nc.weight() != weight || nc.limit() != limit) {
      throw CacheFormatError(path->string() + ": header does not match its file name");
    }
  } else {
    nc = normalize(series(weight, limit), weight);
    if (path) {
      std::filesystem::create_directories(*cache_dir_);
      write_coeff_cache(*path, nc);
    }
  }
  return normalized_.emplace(key, std::move(nc)).first->second;
}

const FactorSieve& CoefficientSource::sieve(std::uint64_t limit) {
  if (!sieve_ || sieve_->limit() < limit) {
    sieve_ = std::make_unique<FactorSieve>(std::max<std::uint64_t>(limit, 2));
  }
  return *sieve_;
}

void cmd_coeffs(CoefficientSource& src, int weight, std::uint64_t limit,
                const std::filesystem::path& out_path) {
  require_weight(weight);
  if (limit < 1) throw UsageError("--limit must be at least 1");
  write_coeff_cache(out_path, normalize(src.series(weight, limit), weight));
}

void cmd_census(CoefficientSource& src, const CensusArgs& a, std::ostream& out) {
  require_weight(a.weight_f);
  require_weight(a.weight_g);
  require_limit(a.limit);
  require_progression(a.modulus, a.residue);
  const auto& f = src.normalized(a.weight_f, a.limit);
  const auto& g = src.normalized(a.weight_g, a.limit);
  write_census(out, progression_census(f.signs(), g.signs(), a.modulus, a.residue, a.limit,
                                       a.cumulative));
}

void cmd_sparse(CoefficientSource& src, const SparseArgs& a, std::ostream& out) {
  require_weight(a.weight_f);
  require_weight(a.weight_g);
  require_limit(a.limit);
  require_power(a.power);
  const auto& sieve = src.sieve(a.limit);
  const auto report =
      sparse_census(src.series(a.weight_f, a.limit), a.weight_f, src.series(a.weight_g, a.limit),
                    a.weight_g, sieve, a.power, a.limit, a.cumulative);
  write_census(out, report);
}

void cmd_windows(CoefficientSource& src, const WindowArgs& a, std::ostream& out) {
  require_weight(a.weight_f);
  require_weight(a.weight_g);
  require_power(a.power);
  if (a.x_grid.empty()) throw UsageError("--checkpoints must list at least one x");
  if (!(a.epsilon > 0)) throw UsageError("--epsilon must be positive");
  const double beta = exponent_table().beta(a.power).value();
  double reach = 2;
  for (double x : a.x_grid) {
    if (!(x >= 1)) throw UsageError("window positions must be >= 1");
    reach = std::max(reach, std::floor(x + std::pow(x, 1.0 - beta + 2.0 * a.epsilon)));
  }
  const auto limit = static_cast<std::uint64_t>(reach);
  const auto& sieve = src.sieve(limit);
  const auto f = power_sequence(src.series(a.weight_f, limit), a.weight_f, sieve, a.power, limit);
  const auto g = power_sequence(src.series(a.weight_g, limit), a.weight_g, sieve, a.power, limit);
  out << "x,h,first,last,same,opposite,zero,both_signs,degenerate,product_sum,g_sum\n";
  for (const auto& w : window_scan(f, g, a.x_grid, a.epsilon)) {
    out << format_double(w.x) << ',' << format_double(w.h) << ',' << w.first << ',' << w.last
        << ',' << w.same_sign << ',' << w.opposite_sign << ',' << w.zero << ','
        << (w.both_signs() ? 1 : 0) << ',' << (w.degenerate ? 1 : 0) << ','
        << format_double(w.product_sum) << ',' << format_double(w.g_sum) << '\n';
  }
}

void cmd_sums(CoefficientSource& src, const SumsArgs& a, std::ostream& out) {
  require_weight(a.weight_f);
  require_weight(a.weight_g);
  require_power(a.power);
  if (a.checkpoints.empty()) throw UsageError("--checkpoints must list at least one x");
  const std::uint64_t limit = std::max<std::uint64_t>(a.checkpoints.back(), 2);
  const auto& sieve = src.sieve(limit);
  const auto f = power_sequence(src.normalized(a.weight_f, limit), sieve, a.power, limit);
  const auto g = power_sequence(src.normalized(a.weight_g, limit), sieve, a.power, limit);
  const auto sf = partial_sum_sparse(f, a.checkpoints);
  const auto sg = partial_sum_sparse(g, a.checkpoints);
  const auto sfg = partial_sum_product(f, g, a.checkpoints);
  std::optional<FitResult> fit;
  if (a.fit) fit = fit_main_term(sfg);

  out << "x,S_f,S_g,S_fg,S_fg_over_x";
  if (fit) out << ",slope,slope_stderr,remainder_exponent,envelope_exponent";
  out << '\n';
  auto opt_double = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  for (std::size_t i = 0; i < sfg.size(); ++i) {
    out << sfg[i].x << ',' << format_double(sf[i].sum) << ',' << format_double(sg[i].sum) << ','
        << format_double(sfg[i].sum) << ','
        << format_double(sfg[i].sum / static_cast<double>(sfg[i].x));
    if (fit) {
      out << ',' << format_double(fit->slope) << ',' << format_double(fit->slope_stderr) << ','
          << opt_double(fit->remainder_exponent) << ',' << opt_double(fit->envelope_exponent);
    }
    out << '\n';
  }
}

void cmd_rankin(CoefficientSource& src, const RankinArgs& a, std::ostream& out) {
  require_weight(a.weight_f);
  require_weight(a.weight_g);
  require_progression(a.modulus, a.residue);
  if (a.truncations.empty()) throw UsageError("at least one truncation is required");
  if (!a.exploratory && !(a.s.real() > 1.0)) {
    throw UsageError("Re s must exceed 1 (pass --exploratory to evaluate anyway)");
  }
  std::uint64_t limit = 2;
  for (std::uint64_t x : a.truncations) limit = std::max(limit, x);
  const auto& f = src.normalized(a.weight_f, limit);
  const auto& g = src.normalized(a.weight_g, limit);
  out << "s_re,s_im,modulus,residue,X,R_re,R_im,tail_bound,archimedean_re,archimedean_im,"
         "zeta_re,zeta_im,completed_re,completed_im\n";
  for (std::uint64_t x : a.truncations) {
    const auto mode = a.exploratory ? SeriesMode::Exploratory : SeriesMode::TailBounded;
    const SeriesPoint p = rankin_partial(f, g, a.modulus, a.residue, a.s, x, mode);
    out << format_double(a.s.real()) << ',' << format_double(a.s.imag()) << ',' << a.modulus
        << ',' << a.residue << ',' << x << ',' << format_double(p.value.real()) << ','
        << format_double(p.value.imag()) << ',' << format_double(p.tail_bound);
    if (a.s.real() > 1.0) {
      const auto c = completed_rankin(f, g, a.modulus, a.residue, a.weight_f, a.weight_g, a.s, x);
      for (const Complex& z : {c.archimedean, c.zeta_factor, c.value}) {
        out << ',' << format_double(z.real()) << ',' << format_double(z.imag());
      }
    } else {
      out << ",,,,,,";
    }
    out << '\n';
  }
}

}  // namespace cusp

#include "convolution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "modarith.hpp"

namespace cusp::detail {
namespace {

constexpr std::size_t kBlock = 256;

struct Operand {
  std::span<const mpz_class> coeffs;  // already truncated to limit + 1
  std::size_t nnz = 0;
  std::size_t max_bits = 0;
};

Operand describe(std::span<const mpz_class> c, std::size_t limit) {
  Operand op;
  op.coeffs = c.first(std::min(c.size(), limit + 1));
  for (const auto& x : op.coeffs) {
    if (sgn(x) != 0) {
      ++op.nnz;
      op.max_bits = std::max(op.max_bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    }
  }
  return op;
}

std::vector<std::uint32_t> residues(const Operand& op, std::uint32_t p) {
  std::vector<std::uint32_t> r(op.coeffs.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(op.coeffs[i].get_mpz_t(), p));
  }
  return r;
}

// ra is in Montgomery form, rb plain, so each mul yields a plain residue.
void schoolbook(const Montgomery& m, const std::vector<std::uint32_t>& ra,
                const std::vector<std::uint32_t>& rb, std::vector<std::uint32_t>& out) {
  const std::size_t limit = out.size() - 1;
  for (std::size_t ib = 0; ib < ra.size(); ib += kBlock) {
    const std::size_t ie = std::min(ra.size(), ib + kBlock);
    for (std::size_t jb = 0; jb < rb.size() && ib + jb <= limit; jb += kBlock) {
      const std::size_t je = std::min(rb.size(), jb + kBlock);
      for (std::size_t i = ib; i < ie; ++i) {
        if (ra[i] == 0) continue;
        const std::size_t jmax = std::min(je, i > limit ? 0 : limit - i + 1);
        for (std::size_t j = jb; j < jmax; ++j) {
          out[i + j] = m.add(out[i + j], m.mul(ra[i], rb[j]));
        }
      }
    }
  }
}

void sparse_dense(const Montgomery& m, const std::vector<std::uint32_t>& sparse_mont,
                  const std::vector<std::uint32_t>& dense, std::vector<std::uint32_t>& out) {
  const std::size_t limit = out.size() - 1;
  for (std::size_t i = 0; i < sparse_mont.size() && i <= limit; ++i) {
    const std::uint32_t v = sparse_mont[i];
    if (v == 0) continue;
    const std::size_t span_len = std::min(dense.size(), limit - i + 1);
    std::uint32_t* dst = out.data() + i;
    for (std::size_t j = 0; j < span_len; ++j) dst[j] = m.add(dst[j], m.mul(v, dense[j]));
  }
}

unsigned ntt_log_size(std::size_t len_a, std::size_t len_b) {
  const std::size_t need = len_a + len_b - 1;
  return static_cast<unsigned>(std::bit_width(need - 1));
}

void ntt_multiply(const NttPrime& prime, const std::vector<std::uint32_t>& ra,
                  const std::vector<std::uint32_t>& rb, bool squaring,
                  std::vector<std::uint32_t>& out) {
  const unsigned lg = ntt_log_size(ra.size(), rb.size());
  const Ntt ntt(prime, lg);
  const auto& m = ntt.arith();
  std::vector<std::uint32_t> fa(ntt.size(), 0);
  for (std::size_t i = 0; i < ra.size(); ++i) fa[i] = m.to_mont(ra[i]);
  ntt.forward(fa);
  if (squaring) {
    for (auto& x : fa) x = m.mul(x, x);
  } else {
    std::vector<std::uint32_t> fb(ntt.size(), 0);
    for (std::size_t i = 0; i < rb.size(); ++i) fb[i] = m.to_mont(rb[i]);
    ntt.forward(fb);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] = m.mul(fa[i], fb[i]);
  }
  ntt.inverse(fa);
  for (std::size_t i = 0; i < out.size() && i < fa.size(); ++i) out[i] = m.from_mont(fa[i]);
}

}  // namespace

ConvolutionKernel choose_kernel(std::size_t len_a, std::size_t nnz_a, std::size_t len_b,
                                std::size_t nnz_b, std::size_t limit) {
  const double sparse_cost =
      static_cast<double>(std::min(nnz_a, nnz_b)) * static_cast<double>(limit + 1);
  const double school_cost = 0.5 * static_cast<double>(len_a) * static_cast<double>(len_b);
  const unsigned lg = ntt_log_size(len_a, len_b);
  const double n = std::ldexp(1.0, static_cast<int>(lg));
  const double ntt_cost = lg > kNttMaxLog ? INFINITY : 1.5 * n * lg + 4.0 * n;
  if (ntt_cost < sparse_cost && ntt_cost < school_cost) return ConvolutionKernel::Ntt;
  return sparse_cost <= school_cost ? ConvolutionKernel::SparseDense
                                    : ConvolutionKernel::Schoolbook;
}

std::vector<mpz_class> exact_convolution(std::span<const mpz_class> a,
                                         std::span<const mpz_class> b, std::size_t limit,
                                         ConvolutionKernel kernel) {
  std::vector<mpz_class> result(limit + 1);
  const bool squaring = a.data() == b.data() && a.size() == b.size();
  const Operand oa = describe(a, limit);
  const Operand ob = describe(b, limit);
  if (oa.nnz == 0 || ob.nnz == 0) return result;

  if (kernel == ConvolutionKernel::Automatic) {
    kernel = choose_kernel(oa.coeffs.size(), oa.nnz, ob.coeffs.size(), ob.nnz, limit);
  }
  if (kernel == ConvolutionKernel::Ntt &&
      ntt_log_size(oa.coeffs.size(), ob.coeffs.size()) > kNttMaxLog) {
    throw std::length_error("exact_convolution: operands too long for the NTT primes");
  }

  // |out[n]| <= min(nnz) * max|a| * max|b| < 2^bound_bits.
  const std::size_t bound_bits =
      oa.max_bits + ob.max_bits + std::bit_width(std::min(oa.nnz, ob.nnz));

  const auto& pool = ntt_primes();
  std::vector<std::uint32_t> primes;
  double modulus_bits = 0.0;
  while (modulus_bits < static_cast<double>(bound_bits) + 2.0) {
    if (primes.size() == pool.size()) {
      throw std::length_error("exact_convolution: coefficient bound exceeds prime pool");
    }
    primes.push_back(pool[primes.size()].p);
    modulus_bits += std::log2(static_cast<double>(primes.back()));
  }

  const std::size_t k = primes.size();
  std::vector<std::vector<std::uint32_t>> res(k, std::vector<std::uint32_t>(limit + 1, 0));
  for (std::size_t t = 0; t < k; ++t) {
    const std::uint32_t p = primes[t];
    const auto ra = residues(oa, p);
    const auto rb = squaring ? ra : residues(ob, p);
    const Montgomery m(p);
    switch (kernel) {
      case ConvolutionKernel::Ntt:
        ntt_multiply(pool[t], ra, rb, squaring, res[t]);
        break;
      case ConvolutionKernel::SparseDense: {
        const bool a_sparse = oa.nnz <= ob.nnz;
        auto sp = a_sparse ? ra : rb;
        for (auto& x : sp) x = m.to_mont(x);
        sparse_dense(m, sp, a_sparse ? rb : ra, res[t]);
        break;
      }
      case ConvolutionKernel::Schoolbook:
      case ConvolutionKernel::Automatic: {
        auto am = ra;
        for (auto& x : am) x = m.to_mont(x);
        schoolbook(m, am, rb, res[t]);
        break;
      }
    }
  }

  // Garner: out = v_0 + v_1 p_0 + v_2 p_0 p_1 + ..., then shift to the symmetric range.
  std::vector<std::vector<std::uint32_t>> inv(k, std::vector<std::uint32_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) inv[j][i] = inverse_mod(primes[i] % primes[j], primes[j]);
  }
  mpz_class modulus = 1;
  for (std::uint32_t p : primes) modulus *= p;
  const mpz_class half = modulus / 2;

  std::vector<std::uint64_t> digits(k);
  for (std::size_t n = 0; n <= limit; ++n) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t pj = primes[j];
      std::uint64_t x = res[j][n];
      for (std::size_t i = 0; i < j; ++i) {
        x = (x + pj - digits[i] % pj) % pj * inv[j][i] % pj;
      }
      digits[j] = x;
    }
    mpz_class& out = result[n];
    out = static_cast<unsigned long>(digits[k - 1]);
    for (std::size_t j = k - 1; j-- > 0;) {
      mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), primes[j]);
      mpz_add_ui(out.get_mpz_t(), out.get_mpz_t(), digits[j]);
    }
    if (out > half) out -= modulus;
  }
  return result;
}

}  // namespace cusp::detail

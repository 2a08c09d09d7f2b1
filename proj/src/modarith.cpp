#include "modarith.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cusp::detail {

Montgomery::Montgomery(std::uint32_t modulus) : p_(modulus) {
  if (modulus % 2 == 0 || modulus >= (1u << 31)) {
    throw std::invalid_argument("Montgomery: modulus must be odd and below 2^31");
  }
  std::uint32_t inv = modulus;  // Newton iteration for p^{-1} mod 2^32
  for (int i = 0; i < 5; ++i) inv *= 2 - modulus * inv;
  neg_inv_ = 0u - inv;
  const std::uint64_t r = (std::uint64_t{1} << 32) % modulus;
  r2_ = static_cast<std::uint32_t>((r * r) % modulus);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exponent, std::uint32_t modulus) {
  std::uint64_t result = 1 % modulus;
  std::uint64_t b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t modulus) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = modulus, new_r = a % modulus;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  if (t < 0) t += modulus;
  return static_cast<std::uint32_t>(t);
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t small : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % small == 0) return n == small;
  }
  std::uint32_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Bases 2, 7, 61 are deterministic below 2^32.
  for (std::uint32_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t primitive_root(std::uint32_t prime) {
  if (prime == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t rest = prime - 1;
  for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= rest; ++q) {
    if (rest % q == 0) {
      factors.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  }
  if (rest > 1) factors.push_back(rest);
  for (std::uint32_t g = 2; g < prime; ++g) {
    bool ok = true;
    for (std::uint32_t q : factors) {
      if (pow_mod(g, (prime - 1) / q, prime) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

const std::vector<NttPrime>& ntt_primes() {
  static const std::vector<NttPrime> primes = [] {
    std::vector<NttPrime> out;
    const std::uint32_t step = 1u << kNttMaxLog;
    for (std::uint32_t c = ((1u << 31) - 1) / step; c >= 1; --c) {
      const std::uint32_t p = c * step + 1;
      if (is_prime_u32(p)) out.push_back({p, primitive_root(p)});
    }
    return out;
  }();
  return primes;
}

Ntt::Ntt(const NttPrime& prime, unsigned log_size) : mont_(prime.p), log_size_(log_size) {
  if (log_size > kNttMaxLog) throw std::invalid_argument("Ntt: transform too long");
  const std::size_t n = size();
  fwd_.assign(std::max<std::size_t>(n, 2), 0);
  inv_.assign(std::max<std::size_t>(n, 2), 0);
  for (std::size_t h = 1; h < n; h <<= 1) {
    const std::uint32_t w = pow_mod(prime.generator, (prime.p - 1) / (2 * h), prime.p);
    const std::uint32_t wi = inverse_mod(w, prime.p);
    std::uint32_t cur = mont_.to_mont(1), cur_inv = mont_.to_mont(1);
    const std::uint32_t wm = mont_.to_mont(w), wim = mont_.to_mont(wi);
    for (std::size_t j = 0; j < h; ++j) {
      fwd_[h + j] = cur;
      inv_[h + j] = cur_inv;
      cur = mont_.mul(cur, wm);
      cur_inv = mont_.mul(cur_inv, wim);
    }
  }
  size_inv_ = mont_.to_mont(inverse_mod(static_cast<std::uint32_t>(n % prime.p), prime.p));
}

void Ntt::transform(std::span<std::uint32_t> a, const std::vector<std::uint32_t>& twiddles) const {
  const std::size_t n = size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t h = 1; h < n; h <<= 1) {
    const std::uint32_t* tw = twiddles.data() + h;
    for (std::size_t i = 0; i < n; i += 2 * h) {
      std::uint32_t* lo = a.data() + i;
      std::uint32_t* hi = lo + h;
      for (std::size_t j = 0; j < h; ++j) {
        const std::uint32_t u = lo[j];
        const std::uint32_t v = mont_.mul(hi[j], tw[j]);
        lo[j] = mont_.add(u, v);
        hi[j] = mont_.sub(u, v);
      }
    }
  }
}

void Ntt::forward(std::span<std::uint32_t> a) const {
  if (a.size() != size()) throw std::invalid_argument("Ntt: length mismatch");
  transform(a, fwd_);
}

void Ntt::inverse(std::span<std::uint32_t> a) const {
  if (a.size() != size()) throw std::invalid_argument("Ntt: length mismatch");
  transform(a, inv_);
  for (auto& x : a) x = mont_.mul(x, size_inv_);
}

}  // namespace cusp::detail

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cusp::detail {

// Montgomery arithmetic for odd moduli below 2^31 (R = 2^32).
class Montgomery {
 public:
  explicit Montgomery(std::uint32_t modulus);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::uint64_t t) const {
    const std::uint32_t m = static_cast<std::uint32_t>(t) * neg_inv_;
    const std::uint32_t u =
        static_cast<std::uint32_t>((t + static_cast<std::uint64_t>(m) * p_) >> 32);
    return u >= p_ ? u - p_ : u;
  }
  // mul(aR, bR) = abR; mul(aR, b) = ab.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t to_mont(std::uint32_t x) const { return mul(x, r2_); }
  std::uint32_t from_mont(std::uint32_t x) const { return reduce(x); }

 private:
  std::uint32_t p_;
  std::uint32_t neg_inv_;  // -p^{-1} mod 2^32
  std::uint32_t r2_;       // 2^64 mod p
};

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exponent, std::uint32_t modulus);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t modulus);
bool is_prime_u32(std::uint32_t n);
std::uint32_t primitive_root(std::uint32_t prime);

struct NttPrime {
  std::uint32_t p;
  std::uint32_t generator;
};

// Every prime satisfies 2^kNttMaxLog | p - 1 and p < 2^31.
inline constexpr unsigned kNttMaxLog = 23;
const std::vector<NttPrime>& ntt_primes();

class Ntt {
 public:
  Ntt(const NttPrime& prime, unsigned log_size);

  std::size_t size() const { return std::size_t{1} << log_size_; }
  const Montgomery& arith() const { return mont_; }

  // In-place transforms on Montgomery-form data of length size().
  void forward(std::span<std::uint32_t> a) const;
  void inverse(std::span<std::uint32_t> a) const;

 private:
  void transform(std::span<std::uint32_t> a, const std::vector<std::uint32_t>& twiddles) const;

  Montgomery mont_;
  unsigned log_size_;
  std::vector<std::uint32_t> fwd_;  // fwd_[h + j] = w_{2h}^j in Montgomery form
  std::vector<std::uint32_t> inv_;
  std::uint32_t size_inv_;
};

}  // namespace cusp::detail

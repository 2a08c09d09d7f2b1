#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace cusp::detail {

enum class ConvolutionKernel { Automatic, Schoolbook, SparseDense, Ntt };

// Exact truncated product: out[n] = sum_{i+j=n} a[i] * b[j] for n <= limit.
// Residues are taken modulo enough word-sized primes to cover a rigorous bound
// on |out[n]|, convolved per prime, and lifted back by Garner's algorithm.
std::vector<mpz_class> exact_convolution(std::span<const mpz_class> a,
                                         std::span<const mpz_class> b, std::size_t limit,
                                         ConvolutionKernel kernel = ConvolutionKernel::Automatic);

// Kernel the automatic policy would pick for operands of these shapes.
ConvolutionKernel choose_kernel(std::size_t len_a, std::size_t nnz_a, std::size_t len_b,
                                std::size_t nnz_b, std::size_t limit);

}  // namespace cusp::detail

#ifndef PALIN_KERNELS_HPP
#define PALIN_KERNELS_HPP

#include <cstddef>
#include <span>
#include <vector>

// Data-parallel kernels over dense 2^d cell vectors.  All kernels are
// OpenMP-parallel above a size cutoff and fall back to the serial loop
// below it; the parallel and serial paths perform identical per-element
// operations, so results are bit-identical.  Serial counterparts used as
// test oracles live in palin/reference.hpp.

namespace palin::kernel {

/// Vectors at least this large run the parallel path.
inline constexpr std::size_t parallel_cutoff = std::size_t{1} << 15;

/// In-place fast Walsh-Hadamard butterfly, O(n log n).  Equivalent to
/// multiplying by the effect-coded design matrix with entries (-1)^(a.b)
/// under the first-index-fastest cell order.  Size must be a power of two.
void walsh_hadamard(std::span<double> v);

/// In-place inverse transform: walsh_hadamard followed by scaling with 1/n.
void walsh_hadamard_inverse(std::span<double> v);

void exp_inplace(std::span<double> v);
void log_inplace(std::span<double> v);
void scale_inplace(std::span<double> v, double factor);

/// out[k] = in[~k]; with the power-of-two layout this is an index reversal.
void mirror_complement(std::span<const double> in, std::span<double> out);

/// Deterministic serial sum (no parallel reduction, reproducible runs).
double sum(std::span<const double> v);

double max_abs(std::span<const double> v);

} // namespace palin::kernel

namespace palin {

/// H_d v with validation; the spec-level entry point for the transform.
std::vector<double> hadamard_apply(int d, std::vector<double> v);

/// 2^-d H_d v; exact inverse of hadamard_apply up to rounding.
std::vector<double> hadamard_inverse_apply(int d, std::vector<double> v);

} // namespace palin

#endif

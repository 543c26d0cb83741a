#ifndef PALIN_REFERENCE_HPP
#define PALIN_REFERENCE_HPP

#include <span>
#include <vector>

// Serial reference implementations.  Kept for correctness testing against
// the parallel kernels and for the benchmark tool; never called from the
// library's production paths.

namespace palin::ref {

/// Plain serial Walsh-Hadamard butterfly.
void walsh_hadamard_serial(std::span<double> v);

/// Dense O(4^d) multiply by the matrix with entries (-1)^(a.b), built on
/// the fly.  The independent oracle for the fast transform.
std::vector<double> hadamard_dense_apply(int d, std::span<const double> v);

} // namespace palin::ref

#endif

#include "palin/kernels.hpp"

#include <cmath>
#include <cstdint>

#include "palin/cells.hpp"
#include "palin/errors.hpp"

namespace palin::kernel {

namespace {

inline void butterfly(double* v, std::size_t t, std::size_t h) {
    // pair index t in [0, n/2): i = block base + offset, j = i + h
    const std::size_t i = ((t & ~(h - 1)) << 1) | (t & (h - 1));
    const double x = v[i];
    const double y = v[i + h];
    v[i] = x + y;
    v[i + h] = x - y;
}

} // namespace

void walsh_hadamard(std::span<double> v) {
    const std::size_t n = v.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw input_error("walsh_hadamard: length must be a power of two");
    double* p = v.data();
    const std::size_t half = n / 2;
    for (std::size_t h = 1; h < n; h <<= 1) {
        if (n >= parallel_cutoff) {
#pragma omp parallel for schedule(static)
            for (std::int64_t t = 0; t < static_cast<std::int64_t>(half); ++t)
                butterfly(p, static_cast<std::size_t>(t), h);
        } else {
            for (std::size_t t = 0; t < half; ++t) butterfly(p, t, h);
        }
    }
}

void walsh_hadamard_inverse(std::span<double> v) {
    walsh_hadamard(v);
    scale_inplace(v, 1.0 / static_cast<double>(v.size()));
}

#define PALIN_ELEMENTWISE(body)                                                  \
    const std::size_t n = v.size();                                              \
    double* p = v.data();                                                        \
    if (n >= parallel_cutoff) {                                                  \
        _Pragma("omp parallel for schedule(static)")                             \
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) { body } \
    } else {                                                                     \
        for (std::size_t i = 0; i < n; ++i) { body }                             \
    }

void exp_inplace(std::span<double> v) { PALIN_ELEMENTWISE(p[i] = std::exp(p[i]);) }

void log_inplace(std::span<double> v) { PALIN_ELEMENTWISE(p[i] = std::log(p[i]);) }

void scale_inplace(std::span<double> v, double factor) {
    PALIN_ELEMENTWISE(p[i] *= factor;)
}

#undef PALIN_ELEMENTWISE

void mirror_complement(std::span<const double> in, std::span<double> out) {
    const std::size_t n = in.size();
    if (out.size() != n) throw input_error("mirror_complement: size mismatch");
    const double* src = in.data();
    double* dst = out.data();
    if (n >= parallel_cutoff) {
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k)
            dst[k] = src[n - 1 - static_cast<std::size_t>(k)];
    } else {
        for (std::size_t k = 0; k < n; ++k) dst[k] = src[n - 1 - k];
    }
}

double sum(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace palin::kernel

namespace palin {

std::vector<double> hadamard_apply(int d, std::vector<double> v) {
    if (v.size() != cell_count(d))
        throw input_error("hadamard_apply: expected 2^d entries");
    kernel::walsh_hadamard(v);
    return v;
}

std::vector<double> hadamard_inverse_apply(int d, std::vector<double> v) {
    if (v.size() != cell_count(d))
        throw input_error("hadamard_inverse_apply: expected 2^d entries");
    kernel::walsh_hadamard_inverse(v);
    return v;
}

} // namespace palin

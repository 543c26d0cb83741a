#include "palin/reference.hpp"

#include <bit>
#include <cstdint>

#include "palin/cells.hpp"
#include "palin/errors.hpp"

namespace palin::ref {

void walsh_hadamard_serial(std::span<double> v) {
    const std::size_t n = v.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw input_error("walsh_hadamard_serial: length must be a power of two");
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = v[j];
                const double y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
    }
}

std::vector<double> hadamard_dense_apply(int d, std::span<const double> v) {
    const std::size_t n = cell_count(d);
    if (v.size() != n) throw input_error("hadamard_dense_apply: expected 2^d entries");
    std::vector<double> out(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        double acc = 0.0;
        for (std::size_t b = 0; b < n; ++b) {
            const int sign = (std::popcount(static_cast<std::uint32_t>(a & b)) & 1) ? -1 : 1;
            acc += sign * v[b];
        }
        out[a] = acc;
    }
    return out;
}

} // namespace palin::ref

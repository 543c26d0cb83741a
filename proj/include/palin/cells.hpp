#ifndef PALIN_CELLS_HPP
#define PALIN_CELLS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "palin/errors.hpp"

// Cell indexing for joint Bernoulli distributions on d binary variables.
//
// Cells are enumerated lexicographically with the FIRST variable running
// fastest: cell k (0 <= k < 2^d) decodes to the binary vector a with
// a_1 = bit 0 of k, ..., a_d = bit (d-1) of k.  Under this convention the
// cell<->subset map is the identity on bit patterns, so a subset b of
// {1,...,d} is represented by the mask whose bit (v-1) is set for v in b.

namespace palin {

inline constexpr int max_dimension = 24;

/// Validates 1 <= d <= max_dimension and returns it.
inline int checked_dim(int d) {
    if (d < 1 || d > max_dimension)
        throw input_error("dimension must be between 1 and " +
                          std::to_string(max_dimension) + ", got " + std::to_string(d));
    return d;
}

/// Number of cells, 2^d.
inline std::size_t cell_count(int d) {
    return std::size_t{1} << checked_dim(d);
}

/// Index of the complement cell ~a, i.e. k with every coordinate flipped.
inline std::uint32_t complement_index(std::uint32_t k, int d) {
    const std::uint32_t mask = static_cast<std::uint32_t>(cell_count(d) - 1);
    if (k > mask) throw input_error("cell index out of range");
    return k ^ mask;
}

/// |b|, the order of the interaction indexed by subset mask b.
inline int subset_order(std::uint32_t b) { return std::popcount(b); }

/// Index of a∩mask within the lexicographic enumeration of subsets of mask.
inline std::uint32_t compress_bits(std::uint32_t a, std::uint32_t mask) {
    std::uint32_t out = 0;
    int pos = 0;
    while (mask != 0) {
        const std::uint32_t low = mask & -mask;
        if (a & low) out |= std::uint32_t{1} << pos;
        ++pos;
        mask &= mask - 1;
    }
    return out;
}

/// Inverse of compress_bits: spreads the low bits of i onto the set bits of mask.
inline std::uint32_t expand_bits(std::uint32_t i, std::uint32_t mask) {
    std::uint32_t out = 0;
    int pos = 0;
    while (mask != 0) {
        const std::uint32_t low = mask & -mask;
        if (i >> pos & 1u) out |= low;
        ++pos;
        mask &= mask - 1;
    }
    return out;
}

/// Subset mask from 1-based variable indices.
std::uint32_t mask_from_vars(const std::vector<int>& vars, int d);

/// 1-based variable indices of a subset mask, ascending.
std::vector<int> vars_from_mask(std::uint32_t mask);

/// Human-readable subset key: "{}" for the empty set, else concatenated
/// 1-based indices ("134"); dot-separated when d > 9 to keep keys unambiguous.
std::string subset_label(std::uint32_t mask, int d);

} // namespace palin

#endif

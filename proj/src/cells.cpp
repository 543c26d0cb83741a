#include "palin/cells.hpp"

namespace palin {

std::uint32_t mask_from_vars(const std::vector<int>& vars, int d) {
    checked_dim(d);
    std::uint32_t mask = 0;
    for (int v : vars) {
        if (v < 1 || v > d)
            throw input_error("variable index " + std::to_string(v) +
                              " out of range 1.." + std::to_string(d));
        mask |= std::uint32_t{1} << (v - 1);
    }
    return mask;
}

std::vector<int> vars_from_mask(std::uint32_t mask) {
    std::vector<int> vars;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1u) vars.push_back(v + 1);
    return vars;
}

std::string subset_label(std::uint32_t mask, int d) {
    if (mask == 0) return "{}";
    std::string out;
    const bool dotted = d > 9;
    for (int v : vars_from_mask(mask)) {
        if (dotted && !out.empty()) out += '.';
        out += std::to_string(v);
    }
    return out;
}

} // namespace palin

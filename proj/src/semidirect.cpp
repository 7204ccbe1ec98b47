#include "jseg/semidirect.hpp"

#include <algorithm>
#include <stdexcept>

namespace jseg {

GElement::GElement(long long level_in, VMap v_in, ShiftedPermutation h_in)
    : level(level_in), v(std::move(v_in)), h(std::move(h_in)) {
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    if (!in_V_i(v, level) || !in_H_i(h, level))
        throw std::invalid_argument("element does not fit its level");
}

GElement gmul(const GElement& a, const GElement& b) {
    if (a.level != b.level)
        throw std::invalid_argument("level mismatch");
    return GElement{a.level, vmul(a.v, conj(a.h, b.v)), compose(a.h, b.h)};
}

GElement ginv(const GElement& a) {
    // (v h)^-1 = (conj(h^-1, v), h^-1); every VMap is its own inverse.
    ShiftedPermutation hinv = inverse(a.h);
    return GElement{a.level, conj(hinv, a.v), std::move(hinv)};
}

bool in_K(const GElement& a, long long i) {
    if (a.level != i && a.level != i + 1)
        throw std::invalid_argument("K_i not a designated subgroup of this factor");
    return (a.v.is_trivial() || a.v == z(i)) && in_H_i(a.h, i);
}

GElement transfer_K(const GElement& a, long long i, long long target_level) {
    if (target_level != i && target_level != i + 1)
        throw std::invalid_argument("K_i not a designated subgroup of this factor");
    if (!in_K(a, i))
        throw std::invalid_argument("not in K_i");
    return GElement{target_level, a.v, a.h};
}

std::vector<VMap> enumerate_V_i(long long i) {
    std::size_t window = static_cast<std::size_t>(2 * i + 1);
    if (window > 31)
        throw std::length_error("enumeration too large");
    std::vector<VMap> result;
    result.reserve(std::size_t{1} << window);
    for (std::size_t bits = 0; bits < (std::size_t{1} << window); ++bits) {
        std::vector<Point> support;
        for (std::size_t k = 0; k < window; ++k) {
            if (bits & (std::size_t{1} << k))
                support.push_back(-i + static_cast<Point>(k));
        }
        result.emplace_back(std::move(support));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<GElement> enumerate_G(long long i, const Limits& limits) {
    if (i < 1)
        throw std::invalid_argument("level must be positive");
    if (i > limits.g_enum_cap)
        throw std::length_error("enumeration too large");
    Limits relaxed = limits;
    relaxed.h_enum_cap = std::max(relaxed.h_enum_cap, i);
    std::vector<GElement> result;
    for (const VMap& v : enumerate_V_i(i)) {
        for (const ShiftedPermutation& h : enumerate_H_i(i, relaxed))
            result.emplace_back(i, v, h);
    }
    return result;
}

std::vector<GElement> enumerate_K(long long i, const Limits& limits) {
    if (i < 1)
        throw std::invalid_argument("level must be positive");
    if (i > limits.k_enum_cap)
        throw std::length_error("enumeration too large");
    Limits relaxed = limits;
    relaxed.h_enum_cap = std::max(relaxed.h_enum_cap, i);
    std::vector<GElement> result;
    for (const VMap& v : {VMap{}, z(i)}) {
        for (const ShiftedPermutation& h : enumerate_H_i(i, relaxed))
            result.emplace_back(i, v, h);
    }
    return result;
}

} // namespace jseg

#ifndef JSEG_SEMIDIRECT_HPP
#define JSEG_SEMIDIRECT_HPP

#include <compare>
#include <vector>

#include "jseg/charmap.hpp"
#include "jseg/limits.hpp"
#include "jseg/perm.hpp"

namespace jseg {

/**
 * An element (v, h) of the semidirect product V_i x| H_i at an explicit
 * level i, with the product (v0 h0)(v1 h1) = (v0 * conj(h0, v1), h0 h1).
 *
 * The level is a tag, not a coercion hint: V_i and H_i embed in V_{i+1}
 * and H_{i+1} as sets, but elements at different levels never multiply.
 * The only sanctioned crossing is transfer_K on the shared subgroup
 * K_i = <z_i> x H_i.
 */
struct GElement {
    long long level = 1;
    VMap v;
    ShiftedPermutation h;

    GElement() = default;
    GElement(long long level, VMap v, ShiftedPermutation h); // validates both coordinates

    bool is_identity() const { return v.is_trivial() && h == ShiftedPermutation{}; }

    auto operator<=>(const GElement&) const = default;
};

inline GElement g_identity(long long level) { return GElement{level, {}, {}}; }

GElement gmul(const GElement& a, const GElement& b); // throws on level mismatch
GElement ginv(const GElement& a);

// Membership in K_i = <z_i> x H_i, which sits inside both G_i and G_{i+1}.
bool in_K(const GElement& a, long long i);

// Re-tags a K_i element at the other factor level; data is unchanged.
GElement transfer_K(const GElement& a, long long i, long long target_level);

std::vector<GElement> enumerate_G(long long i, const Limits& limits = default_limits());
std::vector<GElement> enumerate_K(long long i, const Limits& limits = default_limits());

// Every subset of [-i, i], as VMaps, in lexicographic support order.
std::vector<VMap> enumerate_V_i(long long i);

} // namespace jseg

#endif

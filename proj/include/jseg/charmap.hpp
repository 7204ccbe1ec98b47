#ifndef JSEG_CHARMAP_HPP
#define JSEG_CHARMAP_HPP

#include <compare>
#include <vector>

#include "jseg/perm.hpp"

namespace jseg {

/**
 * A finitely supported map Z -> Z/2Z, written multiplicatively with values
 * in {1, -1} and stored as the sorted set of points sent to -1. The maps
 * supported on [-i, i] form the elementary abelian group V_i.
 */
class VMap {
public:
    VMap() = default;
    explicit VMap(std::vector<Point> support); // sorts, rejects duplicates

    const std::vector<Point>& support() const { return support_; }
    bool is_trivial() const { return support_.empty(); }
    int value_at(Point j) const; // 1 or -1

    auto operator<=>(const VMap&) const = default;

private:
    friend VMap vmul(const VMap&, const VMap&);
    friend VMap conj(const ShiftedPermutation&, const VMap&);
    std::vector<Point> support_;
};

// Pointwise product; supports combine by symmetric difference.
VMap vmul(const VMap& a, const VMap& b);

// The twisted map j -> v(h^{-1}(j)); its support is h(support(v)).
VMap conj(const ShiftedPermutation& h, const VMap& v);

// The map sending every point of [-i, i] to -1.
VMap z(long long i);

bool in_V_i(const VMap& v, long long i);

} // namespace jseg

#endif

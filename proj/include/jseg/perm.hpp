#ifndef JSEG_PERM_HPP
#define JSEG_PERM_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "jseg/limits.hpp"

namespace jseg {

using Point = long long;

/**
 * A finitely supported permutation of the integers, stored as its list of
 * non-fixed points in canonical form: the mapping is sorted by source and
 * contains no fixed points, so structural equality is group equality.
 */
class FinitePermutation {
public:
    using Mapping = std::vector<std::pair<Point, Point>>;

    FinitePermutation() = default;

    // Validates that `mapping` is a bijection of its domain onto itself,
    // drops fixed points, sorts by source.
    explicit FinitePermutation(Mapping mapping);

    static FinitePermutation transposition(Point a, Point b);
    // cycle({a, b, c}) maps a to b, b to c, c to a.
    static FinitePermutation cycle(const std::vector<Point>& points);
    // The permutation of window [lo, lo + images.size() - 1] sending
    // lo + k to images[k].
    static FinitePermutation from_window_images(Point lo, const std::vector<Point>& images);

    Point apply(Point j) const;
    FinitePermutation inverse() const;
    // Conjugate by the shift j -> j + offset; support translates by offset.
    FinitePermutation translated(Point offset) const;

    bool is_identity() const { return mapping_.empty(); }
    const Mapping& mapping() const { return mapping_; }
    std::vector<Point> support() const;

    // a * b applies b first.
    friend FinitePermutation operator*(const FinitePermutation& a, const FinitePermutation& b);

    auto operator<=>(const FinitePermutation&) const = default;

private:
    Mapping mapping_;
};

/**
 * An element of the group generated by the transposition (0 1) and the
 * shift s: j -> j + 1. Every such element acts as j -> pi(j) + k for a
 * unique shift k and finitely supported pi, and is stored that way.
 * shift == 0 exactly for the finitely supported permutations.
 */
struct ShiftedPermutation {
    Point shift = 0;
    FinitePermutation finite;

    auto operator<=>(const ShiftedPermutation&) const = default;
};

inline ShiftedPermutation perm_identity() { return {}; }
ShiftedPermutation shift_map(Point k); // s^k
ShiftedPermutation transposition(Point a, Point b);
ShiftedPermutation cycle(const std::vector<Point>& points);

Point apply(const ShiftedPermutation& h, Point j);

// compose(a, b) applies b first: apply(compose(a,b), j) == apply(a, apply(b, j)).
ShiftedPermutation compose(const ShiftedPermutation& a, const ShiftedPermutation& b);
ShiftedPermutation inverse(const ShiftedPermutation& h);

// Moved points. Throws for a nonzero shift, whose support is all of Z.
std::vector<Point> support(const ShiftedPermutation& h);

// True iff h permutes [-i, i]: zero shift and support inside the window.
bool in_H_i(const ShiftedPermutation& h, long long i);

// All (2i+1)! permutations of [-i, i], in lexicographic image order.
std::vector<ShiftedPermutation> enumerate_H_i(long long i, const Limits& limits = default_limits());

} // namespace jseg

#endif

#ifndef JSEG_TESTS_TEST_SUPPORT_HPP
#define JSEG_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "jseg/amalgam.hpp"
#include "jseg/charmap.hpp"
#include "jseg/perm.hpp"
#include "jseg/semidirect.hpp"

namespace jseg::testing {

// All suites draw from mt19937_64 with fixed seeds and index with modulo,
// so every run sees the same sample sequence on every platform.
using Rng = std::mt19937_64;

inline ShiftedPermutation random_h(Rng& rng, long long i) {
    std::vector<Point> images;
    for (Point j = -i; j <= i; ++j)
        images.push_back(j);
    for (std::size_t k = images.size() - 1; k > 0; --k)
        std::swap(images[k], images[rng() % (k + 1)]);
    return ShiftedPermutation{0, FinitePermutation::from_window_images(-i, images)};
}

inline VMap random_v(Rng& rng, long long i) {
    std::vector<Point> support;
    for (Point j = -i; j <= i; ++j) {
        if (rng() % 2)
            support.push_back(j);
    }
    return VMap{std::move(support)};
}

inline GElement random_g(Rng& rng, long long i) {
    return GElement{i, random_v(rng, i), random_h(rng, i)};
}

inline ShiftedPermutation random_shifted(Rng& rng, long long window, long long max_shift) {
    ShiftedPermutation h = random_h(rng, window);
    h.shift = static_cast<Point>(rng() % (2 * max_shift + 1)) - max_shift;
    return h;
}

//`length` syllables with random sides; not reduced in general.
inline Word random_word(Rng& rng, long long segment_level, std::size_t length) {
    std::vector<Syllable> syllables;
    syllables.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        Side side = (rng() % 2) ? Side::B : Side::A;
        long long level = (side == Side::A) ? segment_level : segment_level + 1;
        syllables.push_back(Syllable{side, random_g(rng, level)});
    }
    return Word{segment_level, std::move(syllables)};
}

// A random element of G_level outside K_{segment}; rejection sampling.
inline GElement random_non_k(Rng& rng, long long segment_level, long long level) {
    for (;;) {
        GElement g = random_g(rng, level);
        if (!in_K(g, segment_level))
            return g;
    }
}

// Alternating non-K syllables starting on `first`: reduced by construction.
inline Word random_reduced_word(Rng& rng, long long segment_level, Side first,
                                std::size_t length) {
    std::vector<Syllable> syllables;
    Side side = first;
    for (std::size_t k = 0; k < length; ++k) {
        long long level = (side == Side::A) ? segment_level : segment_level + 1;
        syllables.push_back(Syllable{side, random_non_k(rng, segment_level, level)});
        side = other_side(side);
    }
    return Word{segment_level, std::move(syllables)};
}

} // namespace jseg::testing

#endif

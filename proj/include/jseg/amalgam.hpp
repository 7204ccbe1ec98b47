#ifndef JSEG_AMALGAM_HPP
#define JSEG_AMALGAM_HPP

#include <compare>
#include <vector>

#include "jseg/semidirect.hpp"

namespace jseg {

// The two factors of the segment amalgam at level i: side A is G_i,
// side B is G_{i+1}, glued along C = K_i.
enum class Side { A, B };

inline Side other_side(Side side) { return side == Side::A ? Side::B : Side::A; }

struct Syllable {
    Side side = Side::A;
    GElement element;

    auto operator<=>(const Syllable&) const = default;
};

/**
 * An alternating-syllable word over the amalgam G_i *_{K_i} G_{i+1}.
 *
 * A word is REDUCED when it has no identity syllables, adjacent syllables
 * lie on distinct sides, and (for length >= 2) no syllable lies in K_i.
 * A length-1 word whose element lies in K_i is kept on side A. Reduction
 * applies the leftmost applicable rule until no rule fires:
 *
 *   drop      an identity syllable,
 *   merge     two adjacent same-side syllables via gmul,
 *   transfer  a K_i syllable across the gluing and merge it into its
 *             right neighbour (left neighbour when it is last).
 *
 * Every rule shortens the word, so reduction terminates; each rule rewrites
 * the word to an equal element of the amalgam, and a reduced word of length
 * >= 2 is never the identity, which is what makes equality decidable.
 */
class Word {
public:
    explicit Word(long long segment_level);
    Word(long long segment_level, std::vector<Syllable> syllables); // validates side/level tags

    long long segment_level() const { return level_; }
    const std::vector<Syllable>& syllables() const { return syllables_; }
    std::size_t size() const { return syllables_.size(); }
    bool empty() const { return syllables_.empty(); }

    auto operator<=>(const Word&) const = default;

private:
    friend Word reduce(const Word&);
    long long level_;
    std::vector<Syllable> syllables_;
};

// Single-syllable helpers; `factor_level` of the element decides the side.
Word word_from(long long segment_level, Side side, const GElement& element);

Word reduce(const Word& w);
Word wmul(const Word& a, const Word& b); // throws on level mismatch
Word winv(const Word& w);

bool is_identity(const Word& w);
bool equals(const Word& a, const Word& b);

// Whether w lies in the image of the given factor (side) inside the amalgam.
bool in_factor(const Word& w, Side side);

// A shortest word in the conjugacy class of w: while the first and last
// syllables share a side, conjugate the last one around to the front.
// The result has syllable length 0, 1, or an even number >= 2.
Word cyclic_reduce(const Word& w);

std::size_t syllable_length(const Word& w); // length of reduce(w)

} // namespace jseg

#endif

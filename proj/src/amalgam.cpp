#include "jseg/amalgam.hpp"

#include <algorithm>
#include <stdexcept>

namespace jseg {

namespace {

long long factor_level(long long segment_level, Side side) {
    return side == Side::A ? segment_level : segment_level + 1;
}

} // namespace

Word::Word(long long segment_level) : level_(segment_level) {
    if (segment_level < 1)
        throw std::invalid_argument("level must be positive");
}

Word::Word(long long segment_level, std::vector<Syllable> syllables)
    : level_(segment_level), syllables_(std::move(syllables)) {
    if (segment_level < 1)
        throw std::invalid_argument("level must be positive");
    for (const Syllable& syllable : syllables_) {
        if (syllable.element.level != factor_level(level_, syllable.side))
            throw std::invalid_argument("level mismatch");
    }
}

Word word_from(long long segment_level, Side side, const GElement& element) {
    return Word{segment_level, {Syllable{side, element}}};
}

Word reduce(const Word& w) {
    const long long i = w.segment_level();
    std::vector<Syllable> syls = w.syllables();

    // Fixpoint loop; each applied rule strictly shortens the word.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < syls.size(); ++j) {
            if (syls[j].element.is_identity()) {
                syls.erase(syls.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
                break;
            }
            if (j + 1 < syls.size() && syls[j].side == syls[j + 1].side) {
                syls[j].element = gmul(syls[j].element, syls[j + 1].element);
                syls.erase(syls.begin() + static_cast<std::ptrdiff_t>(j + 1));
                changed = true;
                break;
            }
            if (syls.size() >= 2 && in_K(syls[j].element, i)) {
                // Carry the K_i syllable across the gluing into a neighbour.
                Side target = other_side(syls[j].side);
                GElement moved = transfer_K(syls[j].element, i, factor_level(i, target));
                if (j + 1 < syls.size()) {
                    syls[j + 1].element = gmul(std::move(moved), syls[j + 1].element);
                } else {
                    syls[j - 1].element = gmul(syls[j - 1].element, std::move(moved));
                }
                syls.erase(syls.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
                break;
            }
        }
    }

    // Canonical home for a lone K_i syllable is side A.
    if (syls.size() == 1 && syls[0].side == Side::B && in_K(syls[0].element, i)) {
        syls[0].element = transfer_K(syls[0].element, i, i);
        syls[0].side = Side::A;
    }

    Word result{i};
    result.syllables_ = std::move(syls);
    return result;
}

Word wmul(const Word& a, const Word& b) {
    if (a.segment_level() != b.segment_level())
        throw std::invalid_argument("level mismatch");
    std::vector<Syllable> syls = a.syllables();
    syls.insert(syls.end(), b.syllables().begin(), b.syllables().end());
    return reduce(Word{a.segment_level(), std::move(syls)});
}

Word winv(const Word& w) {
    std::vector<Syllable> syls;
    syls.reserve(w.size());
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
        syls.push_back(Syllable{it->side, ginv(it->element)});
    return reduce(Word{w.segment_level(), std::move(syls)});
}

bool is_identity(const Word& w) {
    Word r = reduce(w);
    if (r.empty())
        return true;
    if (r.size() == 1)
        return r.syllables()[0].element.is_identity();
    return false; // reduced alternating word of length >= 2
}

bool equals(const Word& a, const Word& b) {
    if (a.segment_level() != b.segment_level())
        throw std::invalid_argument("level mismatch");
    return is_identity(wmul(a, winv(b)));
}

bool in_factor(const Word& w, Side side) {
    Word r = reduce(w);
    if (r.empty())
        return true;
    if (r.size() != 1)
        return false;
    const Syllable& syllable = r.syllables()[0];
    if (syllable.side == side)
        return true;
    return in_K(syllable.element, r.segment_level());
}

Word cyclic_reduce(const Word& w) {
    Word current = reduce(w);
    while (current.size() >= 2 &&
           current.syllables().front().side == current.syllables().back().side) {
        // Conjugating by the last syllable merges it into the first.
        std::vector<Syllable> syls;
        syls.reserve(current.size());
        syls.push_back(current.syllables().back());
        syls.insert(syls.end(), current.syllables().begin(), current.syllables().end() - 1);
        current = reduce(Word{current.segment_level(), std::move(syls)});
    }
    return current;
}

std::size_t syllable_length(const Word& w) { return reduce(w).size(); }

} // namespace jseg

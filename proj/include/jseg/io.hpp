#ifndef JSEG_IO_HPP
#define JSEG_IO_HPP

#include <stdexcept>
#include <string>

#include "jseg/amalgam.hpp"
#include "jseg/charmap.hpp"
#include "jseg/perm.hpp"
#include "jseg/semidirect.hpp"

namespace jseg {

// Element grammars, one per layer. Printing always emits canonical form and
// the parsers round-trip it bit-exactly.
//
//   permutation   product of terms, rightmost applied first:
//                 s^k for a shift, (a b c) for a cycle, () for the identity;
//                 e.g. "s^1 (0 1)" is the map j -> (0 1)(j) + 1.
//   vmap          v{a,b,c} (support set), v{} trivial, z@i for z_i.
//   gelement      g@2[v{-1,0}; (-2 -1)]
//   word          w@2[ A:g@2[...] ; B:g@3[...] ], w@2[] when empty;
//                 a syllable element may be wrapped as inv(g@...).

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

std::string to_string(const ShiftedPermutation& h);
std::string to_string(const VMap& v);
std::string to_string(const GElement& a);
std::string to_string(const Word& w);

ShiftedPermutation parse_permutation(const std::string& text);
VMap parse_vmap(const std::string& text);
GElement parse_gelement(const std::string& text);
Word parse_word(const std::string& text);

// Dispatches on the leading token (w@, g@, v{/z@, else permutation) and
// returns the canonical printed form; words are reduced first.
std::string eval_element(const std::string& text);

} // namespace jseg

#endif

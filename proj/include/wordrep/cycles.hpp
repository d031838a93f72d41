#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

// Circle layout of a 2-uniform word: the 2n positions sit clockwise from
// position 0, and each letter's chord joins its two occurrences. By
// construction every letter maps to a well-formed pair and the pairs cover
// 0..2n-1 exactly once.
struct CircleRepresentation {
  std::size_t length = 0;  // 2n
  std::map<Letter, PositionPair> chords;
};

// Throws std::invalid_argument if w is not 2-uniform.
CircleRepresentation circle_representation(const Word& w);

// The canonical 2-uniform representative of the n-cycle:
//   1 n 2 1 3 2 4 3 ... (n-1)(n-2) n (n-1)
// on the alphabet {"1".."n"}. Throws std::invalid_argument for n < 4.
Word gen_cycle_word(std::size_t n);

// Left cyclic shift: output position i holds input letter (i + k) mod
// length. k may be negative or exceed the length.
Word rotate(const Word& w, long long k);

// Letter sequence reversed.
Word reflect(const Word& w);

// All rotations of the cycle word and of its reflection, deduplicated and
// sorted. There are exactly 4n of them. Throws for n < 4.
std::vector<Word> orbit(std::size_t n);

// True iff the chords joining each pair's two circle positions cross,
// i.e. exactly one of q's positions lies strictly between p's. All four
// positions must be distinct (and each pair well-formed) or
// std::invalid_argument is thrown.
bool circle_crossing(const PositionPair& p, const PositionPair& q);

// Segment property of a 2-uniform word on {"1".."n"}: for every letter r,
// the positions of all letters not cyclically adjacent to r (cyclic
// distance > 1 in the n-cycle) lie entirely within one of the two open
// arcs cut by r's chord. Holds for every word representing the n-cycle.
// Throws std::invalid_argument if n < 4, w is not 2-uniform, or w's
// alphabet is not exactly {"1".."n"}.
bool check_segment_property(const Word& w, std::size_t n);

}  // namespace wordrep

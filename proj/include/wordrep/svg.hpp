#pragma once

#include <string>

#include "wordrep/word.hpp"

namespace wordrep {

// Circle diagram of a 2-uniform word: 2n points equally spaced clockwise
// (position 0 at the top), each labeled with its letter, and one straight
// chord per letter. Layout constants are documented in the output's
// header comment; byte-identical for identical words.
// Throws std::invalid_argument if w is not 2-uniform.
std::string emit_svg(const Word& w);

}  // namespace wordrep

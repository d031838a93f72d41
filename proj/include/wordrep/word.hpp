#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordrep {

// A letter is a non-empty token containing no whitespace, e.g. "a" or "17".
using Letter = std::string;

namespace detail {

// Transparent hashing so token lookups take string_view without building a
// temporary std::string (the per-vertex mapping in graph_check is hot).
struct TokenHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

using TokenIndex =
    std::unordered_map<std::string, std::int32_t, TokenHash, std::equal_to<>>;

}  // namespace detail

bool is_valid_letter(std::string_view token);

// The two occurrence positions of a letter in a 2-uniform word, 0-indexed.
// Well-formed pairs satisfy first < second.
struct PositionPair {
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  friend bool operator==(const PositionPair&, const PositionPair&) = default;
};

// True iff the two occurrence pairs interleave: a.first < b.first < a.second
// < b.second or the mirror. For 2-uniform words this is equivalent to the
// letters alternating, and to their chords crossing on the circle.
inline bool pairs_interleave(const PositionPair& a, const PositionPair& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

// An immutable sequence of letters. Letters are interned to dense ids in
// order of first appearance; occurrence positions are precomputed so that
// per-letter queries never rescan the sequence.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  // Parses whitespace-separated tokens, e.g. "1 5 2 1 3 2 4 3 5 4".
  static Word from_tokens(std::string_view text);
  // One letter per character; whitespace is ignored, e.g. "1521324354".
  static Word from_compact(std::string_view text);

  std::size_t length() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t alphabet_size() const { return alphabet_.size(); }

  const Letter& letter_at(std::size_t pos) const { return alphabet_[static_cast<std::size_t>(ids_[pos])]; }
  std::int32_t id_at(std::size_t pos) const { return ids_[pos]; }
  std::span<const std::int32_t> ids() const { return ids_; }

  const Letter& token_of(std::int32_t id) const { return alphabet_[static_cast<std::size_t>(id)]; }
  // Dense id of a letter, or -1 if it does not occur.
  std::int32_t id_of(std::string_view token) const;
  bool contains(std::string_view token) const { return id_of(token) >= 0; }

  // Distinct letters in order of first appearance.
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  // Strictly increasing occurrence positions of the letter with this id.
  const std::vector<std::uint32_t>& occurrences(std::int32_t id) const;

  std::vector<Letter> letters() const;
  // Space-separated tokens.
  std::string str() const;

  // Letter-sequence equality/order (token-wise, independent of interning).
  friend bool operator==(const Word& a, const Word& b);
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<Letter> alphabet_;
  detail::TokenIndex index_;
  std::vector<std::int32_t> ids_;
  std::vector<std::vector<std::uint32_t>> occ_;
};

// Subsequence of w consisting of the occurrences of a and b, order
// preserved. Neither letter needs to occur; a == b keeps that letter alone.
Word residual_word(const Word& w, const Letter& a, const Letter& b);

// True iff a and b strictly alternate in the residual word w_{a,b}.
// Throws std::invalid_argument if a == b or either letter is absent from w.
bool alternate(const Word& w, const Letter& a, const Letter& b);

// True iff every letter of w's alphabet occurs exactly k times.
// Vacuously true for the empty word.
bool is_k_uniform(const Word& w, std::size_t k);

// Occurrence pairs of a 2-uniform word, indexed by letter id.
// Throws std::invalid_argument if w is not 2-uniform.
std::vector<PositionPair> position_pairs(const Word& w);

}  // namespace wordrep

#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wordrep {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool is_valid_letter(std::string_view token) {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), is_space);
}

Word::Word(const std::vector<Letter>& letters) {
  ids_.reserve(letters.size());
  index_.reserve(letters.size());
  for (const Letter& tok : letters) {
    if (!is_valid_letter(tok))
      throw std::invalid_argument("invalid letter token: '" + tok + "'");
    auto [it, inserted] = index_.try_emplace(tok, static_cast<std::int32_t>(alphabet_.size()));
    if (inserted) {
      alphabet_.push_back(tok);
      occ_.emplace_back();
    }
    occ_[static_cast<std::size_t>(it->second)].push_back(static_cast<std::uint32_t>(ids_.size()));
    ids_.push_back(it->second);
  }
}

Word Word::from_tokens(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) letters.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return Word(letters);
}

Word Word::from_compact(std::string_view text) {
  std::vector<Letter> letters;
  for (char c : text) {
    if (is_space(c)) continue;
    letters.emplace_back(1, c);
  }
  return Word(letters);
}

std::int32_t Word::id_of(std::string_view token) const {
  auto it = index_.find(token);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<std::uint32_t>& Word::occurrences(std::int32_t id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= occ_.size())
    throw std::out_of_range("Word::occurrences: unknown letter id");
  return occ_[static_cast<std::size_t>(id)];
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(ids_.size());
  for (std::int32_t id : ids_) out.push_back(alphabet_[static_cast<std::size_t>(id)]);
  return out;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out += ' ';
    out += letter_at(i);
  }
  return out;
}

bool operator==(const Word& a, const Word& b) {
  if (a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (a.letter_at(i) != b.letter_at(i)) return false;
  return true;
}

bool operator<(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    int c = a.letter_at(i).compare(b.letter_at(i));
    if (c != 0) return c < 0;
  }
  return a.length() < b.length();
}

Word residual_word(const Word& w, const Letter& a, const Letter& b) {
  std::vector<Letter> kept;
  for (std::size_t i = 0; i < w.length(); ++i) {
    const Letter& tok = w.letter_at(i);
    if (tok == a || tok == b) kept.push_back(tok);
  }
  return Word(kept);
}

bool alternate(const Word& w, const Letter& a, const Letter& b) {
  if (a == b) throw std::invalid_argument("alternate: letters must be distinct");
  if (!w.contains(a)) throw std::invalid_argument("alternate: letter '" + a + "' does not occur");
  if (!w.contains(b)) throw std::invalid_argument("alternate: letter '" + b + "' does not occur");
  Word r = residual_word(w, a, b);
  for (std::size_t i = 1; i < r.length(); ++i)
    if (r.id_at(i) == r.id_at(i - 1)) return false;
  return true;
}

bool is_k_uniform(const Word& w, std::size_t k) {
  for (std::size_t id = 0; id < w.alphabet_size(); ++id)
    if (w.occurrences(static_cast<std::int32_t>(id)).size() != k) return false;
  return true;
}

std::vector<PositionPair> position_pairs(const Word& w) {
  if (!is_k_uniform(w, 2))
    throw std::invalid_argument("position_pairs: word is not 2-uniform");
  std::vector<PositionPair> pairs(w.alphabet_size());
  for (std::size_t id = 0; id < w.alphabet_size(); ++id) {
    const auto& occ = w.occurrences(static_cast<std::int32_t>(id));
    pairs[id] = PositionPair{occ[0], occ[1]};
  }
  return pairs;
}

}  // namespace wordrep

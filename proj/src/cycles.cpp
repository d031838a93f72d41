#include "wordrep/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wordrep {

Word gen_cycle_word(std::size_t n) {
  if (n < 4) throw std::invalid_argument("gen_cycle_word: need n >= 4");
  std::vector<Letter> letters;
  letters.reserve(2 * n);
  letters.push_back("1");
  letters.push_back(std::to_string(n));
  for (std::size_t k = 2; k <= n; ++k) {
    letters.push_back(std::to_string(k));
    letters.push_back(std::to_string(k - 1));
  }
  return Word(letters);
}

Word rotate(const Word& w, long long k) {
  const std::size_t len = w.length();
  if (len == 0) return w;
  const auto n = static_cast<long long>(len);
  std::size_t shift = static_cast<std::size_t>(((k % n) + n) % n);
  std::vector<Letter> letters;
  letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    letters.push_back(w.letter_at((i + shift) % len));
  return Word(letters);
}

Word reflect(const Word& w) {
  std::vector<Letter> letters = w.letters();
  std::reverse(letters.begin(), letters.end());
  return Word(letters);
}

std::vector<Word> orbit(std::size_t n) {
  Word base = gen_cycle_word(n);
  Word mirrored = reflect(base);
  std::vector<Word> words;
  words.reserve(4 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    words.push_back(rotate(base, static_cast<long long>(k)));
    words.push_back(rotate(mirrored, static_cast<long long>(k)));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

CircleRepresentation circle_representation(const Word& w) {
  std::vector<PositionPair> pairs = position_pairs(w);
  CircleRepresentation rep;
  rep.length = w.length();
  for (std::size_t id = 0; id < pairs.size(); ++id)
    rep.chords.emplace(w.token_of(static_cast<std::int32_t>(id)), pairs[id]);
  return rep;
}

bool circle_crossing(const PositionPair& p, const PositionPair& q) {
  if (p.first >= p.second || q.first >= q.second)
    throw std::invalid_argument("circle_crossing: pair positions must satisfy first < second");
  if (p.first == q.first || p.first == q.second || p.second == q.first ||
      p.second == q.second)
    throw std::invalid_argument("circle_crossing: chords share a position");
  return pairs_interleave(p, q);
}

bool check_segment_property(const Word& w, std::size_t n) {
  if (n < 4) throw std::invalid_argument("check_segment_property: need n >= 4");
  CircleRepresentation rep = circle_representation(w);  // enforces 2-uniformity
  if (rep.chords.size() != n)
    throw std::invalid_argument("check_segment_property: alphabet is not {1..n}");
  // chord[v] for letter value v in 1..n.
  std::vector<PositionPair> chord(n + 1);
  for (std::size_t v = 1; v <= n; ++v) {
    auto it = rep.chords.find(std::to_string(v));
    if (it == rep.chords.end())
      throw std::invalid_argument("check_segment_property: alphabet is not {1..n}");
    chord[v] = it->second;
  }

  auto cyclic_dist = [n](std::size_t a, std::size_t b) {
    std::size_t d = a > b ? a - b : b - a;
    return std::min(d, n - d);
  };

  for (std::size_t r = 1; r <= n; ++r) {
    const PositionPair rc = chord[r];
    bool inside = false, outside = false;
    for (std::size_t a = 1; a <= n; ++a) {
      if (a == r || cyclic_dist(a, r) <= 1) continue;
      for (std::uint32_t p : {chord[a].first, chord[a].second}) {
        if (rc.first < p && p < rc.second)
          inside = true;
        else
          outside = true;
      }
    }
    if (inside && outside) return false;
  }
  return true;
}

}  // namespace wordrep

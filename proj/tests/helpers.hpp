#ifndef BRAID_TESTS_HELPERS_HPP
#define BRAID_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "braid/braid_word.hpp"

namespace braid::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline BraidWord random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int t = 0; t < len; ++t) letters.push_back(Letter{idx(rng), sgn(rng) == 0 ? 1 : -1});
  return BraidWord(n, std::move(letters));
}

inline BraidWord random_positive_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int t = 0; t < len; ++t) letters.push_back(Letter{idx(rng), 1});
  return BraidWord(n, std::move(letters));
}

/// Independent permutation oracle: compose the transposition maps of the
/// letters as functions instead of tracing strand positions.
inline std::vector<int> oracle_permutation(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) image[static_cast<std::size_t>(s - 1)] = s;
  for (const Letter& l : w.letters()) {
    for (auto& v : image) {
      if (v == l.index)
        v = l.index + 1;
      else if (v == l.index + 1)
        v = l.index;
    }
  }
  return image;
}

/// One random move that rewrites the word without changing the braid:
/// a defining relation applied somewhere, or a canceling pair inserted or
/// removed. Returns the word unchanged only if no move applies (it always
/// does: insertion is always possible for n >= 2).
inline BraidWord random_relation_move(std::mt19937_64& rng, const BraidWord& w) {
  struct Move {
    int type;  // 0 commute, 1 braid, 2 insert, 3 remove
    std::size_t pos;
  };
  std::vector<Move> moves;
  const auto& ls = w.letters();
  for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
    if (std::abs(ls[p].index - ls[p + 1].index) >= 2) moves.push_back({0, p});
    if (ls[p].index == ls[p + 1].index && ls[p].sign == -ls[p + 1].sign) moves.push_back({3, p});
  }
  for (std::size_t p = 0; p + 2 < ls.size(); ++p)
    if (ls[p].index == ls[p + 2].index && std::abs(ls[p].index - ls[p + 1].index) == 1 &&
        ls[p].sign == ls[p + 1].sign && ls[p].sign == ls[p + 2].sign)
      moves.push_back({1, p});
  for (std::size_t p = 0; p <= ls.size(); ++p) moves.push_back({2, p});

  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  const Move m = moves[pick(rng)];
  std::vector<Letter> out = ls;
  switch (m.type) {
    case 0:
      std::swap(out[m.pos], out[m.pos + 1]);
      break;
    case 1: {
      const Letter a = out[m.pos], b = out[m.pos + 1];
      out[m.pos] = b;
      out[m.pos + 1] = a;
      out[m.pos + 2] = b;
      break;
    }
    case 2: {
      std::uniform_int_distribution<int> idx(1, w.strands() - 1);
      std::uniform_int_distribution<int> sgn(0, 1);
      const Letter l{idx(rng), sgn(rng) == 0 ? 1 : -1};
      out.insert(out.begin() + static_cast<long>(m.pos), {l, l.inverse()});
      break;
    }
    case 3:
      out.erase(out.begin() + static_cast<long>(m.pos),
                out.begin() + static_cast<long>(m.pos) + 2);
      break;
  }
  return BraidWord(w.strands(), std::move(out));
}

/// Random word with identity permutation: close a random word with a
/// position-sorting suffix.
inline BraidWord random_pure_word(std::mt19937_64& rng, int n, int len) {
  BraidWord w = random_word(rng, n, len);
  std::vector<Letter> letters = w.letters();
  // bubble the inverse permutation back to the identity
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) pos[static_cast<std::size_t>(s - 1)] = s;
  for (const Letter& l : w.letters())
    std::swap(pos[static_cast<std::size_t>(l.index - 1)], pos[static_cast<std::size_t>(l.index)]);
  std::uniform_int_distribution<int> sgn(0, 1);
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (std::size_t d = 0; d + 1 < pos.size(); ++d) {
      if (pos[d] > pos[d + 1]) {
        letters.push_back(Letter{static_cast<int>(d) + 1, sgn(rng) == 0 ? 1 : -1});
        std::swap(pos[d], pos[d + 1]);
        sorted = false;
      }
    }
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace braid::testing

#endif  // BRAID_TESTS_HELPERS_HPP

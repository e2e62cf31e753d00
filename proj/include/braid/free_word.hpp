#ifndef BRAID_FREE_WORD_HPP
#define BRAID_FREE_WORD_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid/braid_word.hpp"

namespace braid {

/// One letter a_{gen}^{sign} of a free word. Exponents are stored as +-1 so
/// free and cyclic reduction stay uniform; run-length display is a formatting
/// concern only.
struct Syllable {
  int gen = 1;   // 1 <= gen <= rank
  int sign = 1;  // +1 or -1

  friend bool operator==(const Syllable&, const Syllable&) = default;

  Syllable inverse() const { return Syllable{gen, -sign}; }
};

/// A freely reduced word in the rank generators a_1..a_rank of a free group.
class FreeWord {
 public:
  FreeWord() : rank_(0) {}

  explicit FreeWord(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("free word: rank must be >= 0");
  }

  /// Reduce an arbitrary syllable sequence.
  static FreeWord reduced(int rank, std::span<const Syllable> syllables) {
    FreeWord w(rank);
    for (const Syllable& s : syllables) w.push_reduce(s);
    return w;
  }

  static FreeWord reduced(int rank, std::initializer_list<Syllable> syllables) {
    return reduced(rank, std::span<const Syllable>(syllables.begin(), syllables.size()));
  }

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  void push_reduce(const Syllable& s) {
    if (s.sign != 1 && s.sign != -1)
      throw std::invalid_argument("free word: syllable sign must be +-1");
    if (s.gen < 1 || s.gen > rank_)
      throw std::invalid_argument("free word: generator a_" + std::to_string(s.gen) +
                                  " out of range 1.." + std::to_string(rank_));
    if (!syllables_.empty() && syllables_.back() == s.inverse())
      syllables_.pop_back();
    else
      syllables_.push_back(s);
  }

  friend FreeWord concat(const FreeWord&, const FreeWord&);

  int rank_;
  std::vector<Syllable> syllables_;
};

inline FreeWord concat(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("free concat: rank mismatch");
  FreeWord out = u;
  for (const Syllable& s : v.syllables()) out.push_reduce(s);
  return out;
}

inline FreeWord invert(const FreeWord& w) {
  std::vector<Syllable> rev;
  rev.reserve(w.length());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    rev.push_back(it->inverse());
  return FreeWord::reduced(w.rank(), rev);
}

inline FreeWord power(const FreeWord& w, int k) {
  const FreeWord base = k < 0 ? invert(w) : w;
  FreeWord out(w.rank());
  for (int r = 0; r < (k < 0 ? -k : k); ++r) out = concat(out, base);
  return out;
}

/// Single generator power a_gen^k as a reduced word.
inline FreeWord generator_power(int rank, int gen, int k) {
  std::vector<Syllable> syl(static_cast<std::size_t>(k < 0 ? -k : k),
                            Syllable{gen, k < 0 ? -1 : 1});
  return FreeWord::reduced(rank, syl);
}

/// w = outer * core * outer^{-1} with core cyclically reduced.
struct CyclicDecomposition {
  FreeWord core;
  FreeWord outer;
};

inline CyclicDecomposition cyclic_reduce(const FreeWord& w) {
  std::vector<Syllable> core(w.syllables());
  std::vector<Syllable> outer;
  while (core.size() >= 2 && core.front() == core.back().inverse()) {
    outer.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return CyclicDecomposition{FreeWord::reduced(w.rank(), core),
                             FreeWord::reduced(w.rank(), outer)};
}

/// If w is conjugate to a_gen^k, return Q with Q^{-1} a_gen^k Q = w (the same
/// q^{-1} x q orientation as braid conjugation); otherwise nullopt. Since
/// a_gen^k is cyclically reduced and all its cyclic rotations coincide,
/// conjugacy holds exactly when the cyclic core of w equals a_gen^k.
inline std::optional<FreeWord> conjugate_to_generator_power(const FreeWord& w, int gen, int k) {
  if (k == 0) throw std::invalid_argument("conjugate_to_generator_power: k must be nonzero");
  if (gen < 1 || gen > w.rank())
    throw std::invalid_argument("conjugate_to_generator_power: generator out of range");
  const CyclicDecomposition cd = cyclic_reduce(w);
  if (cd.core != generator_power(w.rank(), gen, k)) return std::nullopt;
  return invert(cd.outer);
}

/// The standard embedding of the free generator a_i into B_n:
/// a_i = sigma_1 ... sigma_{i-1} sigma_i^2 sigma_{i-1}^{-1} ... sigma_1^{-1}.
inline BraidWord embed_generator(int n, int i, int sign) {
  std::vector<Letter> letters;
  letters.reserve(2 * static_cast<std::size_t>(i));
  for (int t = 1; t < i; ++t) letters.push_back(Letter{t, 1});
  letters.push_back(Letter{i, sign});
  letters.push_back(Letter{i, sign});
  for (int t = i - 1; t >= 1; --t) letters.push_back(Letter{t, -1});
  return BraidWord(n, std::move(letters));
}

inline BraidWord embed(const FreeWord& w, int n) {
  if (w.rank() != n - 1)
    throw std::invalid_argument("embed: free word rank " + std::to_string(w.rank()) +
                                " does not match strand count " + std::to_string(n));
  std::vector<Letter> letters;
  for (const Syllable& s : w.syllables()) {
    const BraidWord g = embed_generator(n, s.gen, s.sign);
    letters.insert(letters.end(), g.letters().begin(), g.letters().end());
  }
  return free_cancel(BraidWord(n, std::move(letters)));
}

}  // namespace braid

#endif  // BRAID_FREE_WORD_HPP

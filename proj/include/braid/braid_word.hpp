#ifndef BRAID_BRAID_WORD_HPP
#define BRAID_BRAID_WORD_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braid {

/// One occurrence of a generator: sigma_{index}^{sign}.
struct Letter {
  int index = 1;  // generator subscript, 1 <= index <= strands-1
  int sign = 1;   // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;

  Letter inverse() const { return Letter{index, -sign}; }

  /// Signed-integer encoding used by the text format: e <-> sigma_{|e|}^{sign(e)}.
  int encoded() const { return sign * index; }
};

/// A braid word: a strand count n and a finite sequence of letters.
/// Words are immutable values; every operation returns a fresh word.
/// n = 1 is allowed as the degenerate group with no generators (it shows up
/// as the image of strand deletion from B_2).
class BraidWord {
 public:
  BraidWord() : strands_(2) {}

  BraidWord(int strands, std::vector<Letter> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw std::invalid_argument("braid word: strand count must be >= 1");
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      const Letter& l = letters_[k];
      if (l.sign != 1 && l.sign != -1)
        throw std::invalid_argument("braid word: letter " + std::to_string(k + 1) +
                                    " has sign " + std::to_string(l.sign));
      if (l.index < 1 || l.index > strands_ - 1)
        throw std::invalid_argument("braid word: letter " + std::to_string(k + 1) +
                                    " index " + std::to_string(l.index) +
                                    " out of range 1.." + std::to_string(strands_ - 1));
    }
  }

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Validated constructor from the signed-integer encoding.
/// Entry e stands for sigma_{|e|}^{sign(e)}; errors name the offending position.
inline BraidWord make_word(int n, std::span<const int> entries) {
  if (n < 2) throw std::invalid_argument("make_word: strand count must be >= 2");
  std::vector<Letter> letters;
  letters.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const int e = entries[k];
    if (e == 0)
      throw std::invalid_argument("make_word: entry " + std::to_string(k + 1) + " is zero");
    const int idx = std::abs(e);
    if (idx > n - 1)
      throw std::invalid_argument("make_word: entry " + std::to_string(k + 1) + " index " +
                                  std::to_string(idx) + " out of range 1.." +
                                  std::to_string(n - 1));
    letters.push_back(Letter{idx, e > 0 ? 1 : -1});
  }
  return BraidWord(n, std::move(letters));
}

inline BraidWord make_word(int n, std::initializer_list<int> entries) {
  return make_word(n, std::span<const int>(entries.begin(), entries.size()));
}

inline void require_same_strands(const BraidWord& u, const BraidWord& v, const char* op) {
  if (u.strands() != v.strands())
    throw std::invalid_argument(std::string(op) + ": strand counts differ (" +
                                std::to_string(u.strands()) + " vs " +
                                std::to_string(v.strands()) + ")");
}

inline BraidWord concat(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u, v, "concat");
  std::vector<Letter> letters;
  letters.reserve(u.length() + v.length());
  letters.insert(letters.end(), u.letters().begin(), u.letters().end());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

inline BraidWord invert(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    letters.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(letters));
}

/// Remove adjacent canceling pairs until none remain. Syntactic only:
/// braid relations are never applied.
inline BraidWord free_cancel(const BraidWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

/// q^{-1} w q, freely canceled. This orientation is used everywhere.
inline BraidWord conjugate(const BraidWord& w, const BraidWord& q) {
  require_same_strands(w, q, "conjugate");
  return free_cancel(concat(invert(q), concat(w, q)));
}

/// k-fold concatenation; negative k uses the inverse, k = 0 gives the empty word.
inline BraidWord power(const BraidWord& w, int k) {
  const BraidWord base = k < 0 ? invert(w) : w;
  const int reps = k < 0 ? -k : k;
  std::vector<Letter> letters;
  letters.reserve(base.length() * static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return free_cancel(BraidWord(w.strands(), std::move(letters)));
}

inline bool is_positive(const BraidWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [](const Letter& l) { return l.sign == 1; });
}

inline int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (const Letter& l : w.letters()) sum += l.sign;
  return sum;
}

/// The image of a braid in the symmetric group. Strand indices are 1-based.
/// Letters act left to right on positions, so as functions
/// permutation(concat(u, v)) = permutation(v) o permutation(u).
class Permutation {
 public:
  explicit Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
    if (degree < 1) throw std::invalid_argument("permutation: degree must be >= 1");
    std::iota(images_.begin(), images_.end(), 1);
  }

  static Permutation from_images(std::vector<int> images) {
    Permutation p(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("permutation: images are not a bijection");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    p.images_ = std::move(images);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int apply(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return from_images(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// If exactly two points move, returns them as (i, j) with i < j.
  std::optional<std::pair<int, int>> transposition() const {
    int a = 0, b = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] == static_cast<int>(i) + 1) continue;
      if (a == 0)
        a = static_cast<int>(i) + 1;
      else if (b == 0)
        b = static_cast<int>(i) + 1;
      else
        return std::nullopt;
    }
    if (a == 0 || b == 0) return std::nullopt;
    if (apply(a) != b || apply(b) != a) return std::nullopt;
    return std::make_pair(a, b);
  }

  /// Cycle notation, e.g. "(1 4)(2 3)"; "()" for the identity.
  std::string cycles() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (int s = 1; s <= degree(); ++s) {
      if (done[static_cast<std::size_t>(s - 1)] || apply(s) == s) continue;
      out += '(';
      int c = s;
      bool first = true;
      do {
        done[static_cast<std::size_t>(c - 1)] = true;
        if (!first) out += ' ';
        out += std::to_string(c);
        first = false;
        c = apply(c);
      } while (c != s);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

inline Permutation permutation(const BraidWord& w) {
  // Trace positions: the strand at position i and the strand at position i+1
  // swap at each letter, regardless of sign.
  std::vector<int> pos(static_cast<std::size_t>(w.strands()));
  std::iota(pos.begin(), pos.end(), 1);  // pos[p] = strand currently at position p+1
  std::vector<int> images(static_cast<std::size_t>(w.strands()));
  // Run the word once over "strand at position" state, then invert to get
  // start position -> end position.
  for (const Letter& l : w.letters())
    std::swap(pos[static_cast<std::size_t>(l.index - 1)], pos[static_cast<std::size_t>(l.index)]);
  for (std::size_t p = 0; p < pos.size(); ++p)
    images[static_cast<std::size_t>(pos[p] - 1)] = static_cast<int>(p) + 1;
  return Permutation::from_images(std::move(images));
}

/// The n x n table of crossing indices cr(i, j) between strands, indexed by
/// the strands' starting positions. Diagonal entries are zero; the sum of all
/// entries equals the exponent sum of the source word.
class CrossingMatrix {
 public:
  explicit CrossingMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

  int degree() const { return n_; }

  int at(int i, int j) const { return entries_[idx(i, j)]; }

  int total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

  /// Off-diagonal positions with a nonzero entry, as (i, j) pairs.
  std::vector<std::pair<int, int>> nonzero() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (i != j && at(i, j) != 0) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const CrossingMatrix&, const CrossingMatrix&) = default;

  void bump(int i, int j, int delta) { entries_[idx(i, j)] += delta; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<int> entries_;
};

/// Crossing indices by strand-position simulation. With s the strand at
/// position i and t the strand at position i+1 when a letter sigma_i^e is
/// read: e = +1 counts into p(s, t), e = -1 into n(t, s), and the entry is
/// p - n. The convention makes canceling pairs contribute zero and the
/// entry total equal exp(w); the relation-invariance tests pin it down.
inline CrossingMatrix crossing_matrix(const BraidWord& w) {
  CrossingMatrix cr(w.strands());
  std::vector<int> pos(static_cast<std::size_t>(w.strands()));
  std::iota(pos.begin(), pos.end(), 1);
  for (const Letter& l : w.letters()) {
    const int s = pos[static_cast<std::size_t>(l.index - 1)];
    const int t = pos[static_cast<std::size_t>(l.index)];
    if (l.sign > 0)
      cr.bump(s, t, +1);
    else
      cr.bump(t, s, -1);
    std::swap(pos[static_cast<std::size_t>(l.index - 1)], pos[static_cast<std::size_t>(l.index)]);
  }
  return cr;
}

/// Remove the strand that starts at position s, yielding a word on n-1
/// strands. Letters touching the tracked strand are dropped; other letters
/// shift down by one when they sit to the right of it.
inline BraidWord delete_strand(const BraidWord& w, int s) {
  if (s < 1 || s > w.strands())
    throw std::invalid_argument("delete_strand: strand " + std::to_string(s) +
                                " out of range 1.." + std::to_string(w.strands()));
  std::vector<Letter> out;
  out.reserve(w.length());
  int tracked = s;
  for (const Letter& l : w.letters()) {
    if (tracked == l.index)
      tracked = l.index + 1;
    else if (tracked == l.index + 1)
      tracked = l.index;
    else if (tracked < l.index)
      out.push_back(Letter{l.index - 1, l.sign});
    else
      out.push_back(l);
  }
  return BraidWord(w.strands() - 1, std::move(out));
}

}  // namespace braid

#endif  // BRAID_BRAID_WORD_HPP

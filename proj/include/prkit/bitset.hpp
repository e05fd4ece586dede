#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace prkit {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t nbits) {
  return nbits == 0 ? 1 : (nbits + kWordBits - 1) / kWordBits;
}

// Free helpers over raw word spans. Cells of a PR-structure are stored in one
// flat array and handed out as spans, so most hot loops work on these.
namespace bits {

inline bool test(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline bool any(std::span<const Word> w) {
  for (Word x : w)
    if (x != 0) return true;
  return false;
}

inline std::size_t count(std::span<const Word> w) {
  std::size_t n = 0;
  for (Word x : w) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

inline bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t find_next(std::span<const Word> w, std::size_t from) {
  std::size_t wi = from / kWordBits;
  if (wi >= w.size()) return npos;
  Word cur = w[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++wi == w.size()) return npos;
    cur = w[wi];
  }
}

inline std::size_t find_first(std::span<const Word> w) { return find_next(w, 0); }

}  // namespace bits

// Fixed-width dynamic bitset. Width is set at construction; binary operations
// require equal widths.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits, bool filled = false)
      : nbits_(nbits), words_(words_for(nbits), filled ? ~Word{0} : Word{0}) {
    trim();
  }
  Bitset(std::size_t nbits, std::span<const Word> w) : nbits_(nbits), words_(w.begin(), w.end()) {
    trim();
  }

  std::size_t size() const { return nbits_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return bits::test(words_, i); }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  bool any() const { return bits::any(words_); }
  bool none() const { return !any(); }
  std::size_t count() const { return bits::count(words_); }
  std::size_t find_first() const { return bits::find_first(words_); }
  std::size_t find_next(std::size_t from) const { return bits::find_next(words_, from); }

  bool is_subset_of(const Bitset& o) const { return bits::is_subset(words_, o.words_); }
  bool intersects(const Bitset& o) const { return bits::intersects(words_, o.words_); }

  Bitset& operator&=(std::span<const Word> o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) { return *this &= o.words(); }
  Bitset& operator|=(std::span<const Word> o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) { return *this |= o.words(); }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  // Indices of set bits in increasing order.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_first(); i != bits::npos; i = find_next(i + 1)) out.push_back(i);
    return out;
  }

  // Total order: lexicographic on the increasing element lists.
  friend bool element_order_less(const Bitset& a, const Bitset& b) {
    std::size_t i = a.find_first(), j = b.find_first();
    while (i != bits::npos && j != bits::npos) {
      if (i != j) return i < j;
      i = a.find_next(i + 1);
      j = b.find_next(j + 1);
    }
    return i == bits::npos && j != bits::npos;
  }

  std::size_t hash() const {
    std::size_t h = nbits_ * 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (nbits_ % kWordBits != 0) words_.back() &= (Word{1} << (nbits_ % kWordBits)) - 1;
    if (nbits_ == 0) words_.back() = 0;
  }

  std::size_t nbits_ = 0;
  std::vector<Word> words_ = std::vector<Word>(1, 0);
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace prkit

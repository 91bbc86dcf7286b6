#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ekrw {

/// A subset of the ground set [n] = {1,...,n}, n <= 128, stored as a
/// two-word bit mask.  Element i occupies bit i-1.  Value type; cheap to
/// copy; ordering is by numeric mask value (high word first).
class ElementSet {
 public:
  static constexpr int kMaxGround = 128;

  ElementSet() = default;

  explicit ElementSet(int n) : n_(check_ground(n)) {}

  static ElementSet from_elements(int n, std::span<const int> elems) {
    ElementSet s(n);
    for (int e : elems) s.add(e);
    return s;
  }

  static ElementSet of(int n, std::initializer_list<int> elems) {
    return from_elements(n, std::span<const int>(elems.begin(), elems.size()));
  }

  /// {1,...,m}; m = 0 gives the empty set.
  static ElementSet prefix(int n, int m) {
    check_ground(n);
    if (m < 0 || m > n) throw std::out_of_range("prefix length outside [0,n]");
    ElementSet s(n);
    for (int w = 0; w < 2; ++w) {
      int lo = w * 64, hi = lo + 64;
      if (m >= hi)
        s.words_[w] = ~std::uint64_t{0};
      else if (m > lo)
        s.words_[w] = (std::uint64_t{1} << (m - lo)) - 1;
    }
    return s;
  }

  /// {a,...,b} (1-based, inclusive); empty when a > b.
  static ElementSet window(int n, int a, int b) {
    ElementSet s = prefix(n, b < a ? 0 : b);
    if (b >= a && a > 1) s = s - prefix(n, a - 1);
    return s;
  }

  static ElementSet from_words(int n, std::uint64_t lo, std::uint64_t hi = 0) {
    ElementSet s(n);
    s.words_[0] = lo;
    s.words_[1] = hi;
    if (!s.mask_in_range()) throw std::out_of_range("bit set beyond ground size");
    return s;
  }

  int ground_size() const { return n_; }

  int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }

  bool empty() const { return (words_[0] | words_[1]) == 0; }

  bool contains(int e) const {
    check_element(e);
    return (words_[(e - 1) >> 6] >> ((e - 1) & 63)) & 1;
  }

  void add(int e) {
    check_element(e);
    words_[(e - 1) >> 6] |= std::uint64_t{1} << ((e - 1) & 63);
  }

  void remove(int e) {
    check_element(e);
    words_[(e - 1) >> 6] &= ~(std::uint64_t{1} << ((e - 1) & 63));
  }

  std::uint64_t word(int i) const { return words_[i]; }

  /// Smallest element, or 0 if empty.
  int min_element() const {
    if (words_[0]) return std::countr_zero(words_[0]) + 1;
    if (words_[1]) return std::countr_zero(words_[1]) + 65;
    return 0;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(std::countr_zero(bits) + 64 * w + 1);
        bits &= bits - 1;
      }
    }
    return out;
  }

  ElementSet operator&(const ElementSet& o) const {
    check_same_ground(o);
    ElementSet r(n_);
    r.words_[0] = words_[0] & o.words_[0];
    r.words_[1] = words_[1] & o.words_[1];
    return r;
  }

  ElementSet operator|(const ElementSet& o) const {
    check_same_ground(o);
    ElementSet r(n_);
    r.words_[0] = words_[0] | o.words_[0];
    r.words_[1] = words_[1] | o.words_[1];
    return r;
  }

  /// Set difference.
  ElementSet operator-(const ElementSet& o) const {
    check_same_ground(o);
    ElementSet r(n_);
    r.words_[0] = words_[0] & ~o.words_[0];
    r.words_[1] = words_[1] & ~o.words_[1];
    return r;
  }

  ElementSet& operator&=(const ElementSet& o) {
    check_same_ground(o);
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }

  ElementSet complement() const {
    ElementSet r = prefix(n_, n_);
    r.words_[0] &= ~words_[0];
    r.words_[1] &= ~words_[1];
    return r;
  }

  bool subset_of(const ElementSet& o) const {
    check_same_ground(o);
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  bool intersects(const ElementSet& o) const {
    check_same_ground(o);
    return (words_[0] & o.words_[0]) | (words_[1] & o.words_[1]);
  }

  int intersection_size(const ElementSet& o) const {
    check_same_ground(o);
    return std::popcount(words_[0] & o.words_[0]) +
           std::popcount(words_[1] & o.words_[1]);
  }

  bool operator==(const ElementSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

  /// Numeric mask order; only meaningful between sets over the same ground.
  std::strong_ordering operator<=>(const ElementSet& o) const {
    if (auto c = words_[1] <=> o.words_[1]; c != 0) return c;
    return words_[0] <=> o.words_[0];
  }

  /// Relabel through a permutation of [n]: perm[i-1] is the image of i.
  ElementSet permuted(std::span<const int> perm) const {
    ElementSet r(n_);
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int e = std::countr_zero(bits) + 64 * w + 1;
        r.add(perm[static_cast<std::size_t>(e - 1)]);
        bits &= bits - 1;
      }
    }
    return r;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  static int check_ground(int n) {
    if (n < 1 || n > kMaxGround)
      throw std::out_of_range("ground size must be in [1,128]");
    return n;
  }

  void check_element(int e) const {
    if (e < 1 || e > n_)
      throw std::out_of_range("element " + std::to_string(e) +
                              " outside ground set [1," + std::to_string(n_) + "]");
  }

  void check_same_ground(const ElementSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ground set sizes differ");
  }

  bool mask_in_range() const {
    ElementSet full = prefix(n_, n_);
    return (words_[0] & ~full.words_[0]) == 0 && (words_[1] & ~full.words_[1]) == 0;
  }

  int n_ = 0;
  std::array<std::uint64_t, 2> words_{0, 0};
};

}  // namespace ekrw

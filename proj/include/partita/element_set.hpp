#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "partita/error.hpp"

namespace partita {

/// A subset of the elements 0..n-1 of one particular group, stored as a
/// bitmask. Every set remembers the tag of its owning group; combining sets
/// from different groups is an error.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::uint32_t tag, int universe)
      : tag_(tag), n_(universe), w_((universe + 63) / 64, 0) {}

  std::uint32_t tag() const { return tag_; }
  int universe() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& o) const {
    check(o);
    ElementSet r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  ElementSet operator|(const ElementSet& o) const {
    check(o);
    ElementSet r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
    return r;
  }
  /// Set difference: elements of *this not in o.
  ElementSet minus(const ElementSet& o) const {
    check(o);
    ElementSet r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }

  bool subset_of(const ElementSet& o) const {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const ElementSet& o) const {
    return tag_ == o.tag_ && n_ == o.n_ && w_ == o.w_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  /// Ascending-element-list lexicographic order; used for canonical sorting.
  bool lex_less(const ElementSet& o) const {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t d = w_[i] ^ o.w_[i];
      if (d) return (w_[i] >> __builtin_ctzll(d)) & 1u;  // owner of lowest differing bit sorts first
    }
    return false;
  }

  int min_element() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(int(i * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::uint32_t>()(tag_);
    for (auto w : w_) h = h * 1099511628211ULL + std::hash<std::uint64_t>()(w);
    return h;
  }

 private:
  void check(const ElementSet& o) const {
    if (tag_ != o.tag_ || n_ != o.n_)
      throw Error("element sets belong to different groups");
  }

  std::uint32_t tag_ = 0;
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace partita

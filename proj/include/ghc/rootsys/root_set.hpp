#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace ghc::rootsys {

/// Subset of the roots of a fixed RootSystem, by canonical root index.
class RootSet {
public:
  RootSet() = default;
  explicit RootSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64) {}
  RootSet(std::size_t universe, std::initializer_list<std::size_t> members);
  RootSet(std::size_t universe, const std::vector<std::size_t> &members);

  [[nodiscard]] static RootSet full(std::size_t universe);

  [[nodiscard]] std::size_t universe() const { return universe_; }
  [[nodiscard]] bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] bool empty() const { return count() == 0; }
  [[nodiscard]] std::vector<std::size_t> indices() const;

  [[nodiscard]] RootSet operator|(const RootSet &o) const;
  [[nodiscard]] RootSet operator&(const RootSet &o) const;
  /// Set difference.
  [[nodiscard]] RootSet operator-(const RootSet &o) const;
  [[nodiscard]] RootSet complement() const;
  [[nodiscard]] bool subset_of(const RootSet &o) const;

  friend bool operator==(const RootSet &, const RootSet &) = default;
  /// Canonical order: by size, then lexicographically by sorted indices.
  friend std::strong_ordering operator<=>(const RootSet &a, const RootSet &b);

  [[nodiscard]] std::size_t hash() const;

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct RootSetHash {
  std::size_t operator()(const RootSet &s) const { return s.hash(); }
};

} // namespace ghc::rootsys

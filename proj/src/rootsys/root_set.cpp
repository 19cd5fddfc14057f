#include "ghc/rootsys/root_set.hpp"

#include <bit>

namespace ghc::rootsys {

RootSet::RootSet(std::size_t universe, std::initializer_list<std::size_t> members) : RootSet(universe) {
  for (auto i : members) insert(i);
}

RootSet::RootSet(std::size_t universe, const std::vector<std::size_t> &members) : RootSet(universe) {
  for (auto i : members) insert(i);
}

RootSet RootSet::full(std::size_t universe) {
  RootSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

std::size_t RootSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> RootSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

RootSet RootSet::operator|(const RootSet &o) const {
  RootSet r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] |= o.words_[w];
  return r;
}

RootSet RootSet::operator&(const RootSet &o) const {
  RootSet r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
  return r;
}

RootSet RootSet::operator-(const RootSet &o) const {
  RootSet r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~o.words_[w];
  return r;
}

RootSet RootSet::complement() const { return full(universe_) - *this; }

bool RootSet::subset_of(const RootSet &o) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~o.words_[w]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const RootSet &a, const RootSet &b) {
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  return a.indices() <=> b.indices();
}

std::size_t RootSet::hash() const {
  std::size_t h = universe_;
  for (auto w : words_) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
  return h;
}

} // namespace ghc::rootsys

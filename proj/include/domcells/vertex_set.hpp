#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "domcells/error.hpp"

namespace domcells {

using Vertex = std::uint32_t;

// Dense subset of [0, universe) stored as 64-bit blocks.
class VertexSet {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), blocks_((universe + kBlockBits - 1) / kBlockBits, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  VertexSet(std::size_t universe, std::span<const Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::span<const Block> blocks() const noexcept { return blocks_; }

  void insert(Vertex v) {
    check(v);
    blocks_[v / kBlockBits] |= Block{1} << (v % kBlockBits);
  }

  void erase(Vertex v) {
    check(v);
    blocks_[v / kBlockBits] &= ~(Block{1} << (v % kBlockBits));
  }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((blocks_[v / kBlockBits] >> (v % kBlockBits)) & 1U);
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (Block b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
    return n;
  }

  bool empty() const noexcept {
    for (Block b : blocks_)
      if (b != 0) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & other.blocks_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~other.blocks_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
    return *this;
  }

  VertexSet& operator-=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Members in increasing order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      Block b = blocks_[i];
      while (b != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(b));
        fn(static_cast<Vertex>(i * kBlockBits + bit));
        b &= b - 1;
      }
    }
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](Vertex v) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    });
    return s + "}";
  }

 private:
  void check(Vertex v) const {
    if (v >= universe_)
      throw Error(ErrorKind::InvalidArgument,
                  "vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(universe_));
  }

  void same_universe(const VertexSet& other) const {
    if (other.universe_ != universe_)
      throw Error(ErrorKind::InvalidArgument, "vertex sets over different universes");
  }

  std::size_t universe_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace domcells

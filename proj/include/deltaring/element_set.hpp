#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace deltaring {

using index_type = std::uint32_t;

// An index into one ring's canonical element order.
struct Element {
  index_type index = 0;

  constexpr Element() = default;
  constexpr explicit Element(index_type i) : index(i) {}

  constexpr auto operator<=>(Element const&) const = default;
};

// Subset of a ring's elements. Bitset semantics; the ring id tag stops sets
// from two different rings being combined by accident.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::uint64_t ring_id, std::size_t size);

  // Packs a per-element flag vector (nonzero == member).
  static ElementSet from_flags(std::uint64_t ring_id,
                               std::span<std::uint8_t const> flags);

  std::uint64_t ring_id() const noexcept { return _ring_id; }
  std::size_t universe_size() const noexcept { return _size; }

  bool contains(Element x) const;
  void insert(Element x);
  void erase(Element x);

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  // Smallest member, or universe_size() when empty.
  index_type first() const noexcept;

  bool is_subset_of(ElementSet const& other) const;

  ElementSet operator|(ElementSet const& other) const;
  ElementSet operator&(ElementSet const& other) const;
  ElementSet operator-(ElementSet const& other) const;
  ElementSet complement() const;

  bool operator==(ElementSet const& other) const;

  std::vector<Element> elements() const;
  std::vector<index_type> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < _words.size(); ++w) {
      std::uint64_t bits = _words[w];
      while (bits != 0) {
        auto const b = static_cast<std::size_t>(std::countr_zero(bits));
        f(Element(static_cast<index_type>(w * 64 + b)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same_ring(ElementSet const& other) const;
  void check_range(Element x) const;

  std::uint64_t _ring_id = 0;
  std::size_t _size = 0;
  std::vector<std::uint64_t> _words;
};

}  // namespace deltaring

#include "deltaring/element_set.hpp"

#include <string>

#include "deltaring/errors.hpp"

namespace deltaring {

ElementSet::ElementSet(std::uint64_t ring_id, std::size_t size)
    : _ring_id(ring_id), _size(size), _words((size + 63) / 64, 0) {}

ElementSet ElementSet::from_flags(std::uint64_t ring_id,
                                  std::span<std::uint8_t const> flags) {
  ElementSet s(ring_id, flags.size());
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i] != 0) {
      s._words[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  return s;
}

void ElementSet::check_range(Element x) const {
  if (x.index >= _size) {
    throw RangeError("element " + std::to_string(x.index)
                     + " out of range for set of size "
                     + std::to_string(_size));
  }
}

void ElementSet::check_same_ring(ElementSet const& other) const {
  if (_ring_id != other._ring_id || _size != other._size) {
    throw std::invalid_argument("element sets belong to different rings");
  }
}

bool ElementSet::contains(Element x) const {
  check_range(x);
  return ((_words[x.index / 64] >> (x.index % 64)) & 1U) != 0;
}

void ElementSet::insert(Element x) {
  check_range(x);
  _words[x.index / 64] |= std::uint64_t{1} << (x.index % 64);
}

void ElementSet::erase(Element x) {
  check_range(x);
  _words[x.index / 64] &= ~(std::uint64_t{1} << (x.index % 64));
}

std::size_t ElementSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : _words) {
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

index_type ElementSet::first() const noexcept {
  for (std::size_t w = 0; w < _words.size(); ++w) {
    if (_words[w] != 0) {
      return static_cast<index_type>(w * 64 + std::countr_zero(_words[w]));
    }
  }
  return static_cast<index_type>(_size);
}

bool ElementSet::is_subset_of(ElementSet const& other) const {
  check_same_ring(other);
  for (std::size_t w = 0; w < _words.size(); ++w) {
    if ((_words[w] & ~other._words[w]) != 0) {
      return false;
    }
  }
  return true;
}

ElementSet ElementSet::operator|(ElementSet const& other) const {
  check_same_ring(other);
  ElementSet r = *this;
  for (std::size_t w = 0; w < _words.size(); ++w) {
    r._words[w] |= other._words[w];
  }
  return r;
}

ElementSet ElementSet::operator&(ElementSet const& other) const {
  check_same_ring(other);
  ElementSet r = *this;
  for (std::size_t w = 0; w < _words.size(); ++w) {
    r._words[w] &= other._words[w];
  }
  return r;
}

ElementSet ElementSet::operator-(ElementSet const& other) const {
  check_same_ring(other);
  ElementSet r = *this;
  for (std::size_t w = 0; w < _words.size(); ++w) {
    r._words[w] &= ~other._words[w];
  }
  return r;
}

ElementSet ElementSet::complement() const {
  ElementSet r = *this;
  for (auto& w : r._words) {
    w = ~w;
  }
  if (_size % 64 != 0 && !r._words.empty()) {
    r._words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
  }
  return r;
}

bool ElementSet::operator==(ElementSet const& other) const {
  return _ring_id == other._ring_id && _size == other._size
         && _words == other._words;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

std::vector<index_type> ElementSet::indices() const {
  std::vector<index_type> out;
  out.reserve(count());
  for_each([&](Element x) { out.push_back(x.index); });
  return out;
}

}  // namespace deltaring

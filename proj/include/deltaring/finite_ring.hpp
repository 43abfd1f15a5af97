#pragma once

// Finite unital rings on dense element indices 0..size-1.
//
// Every ring carries full additive and multiplicative tables, compiled once
// at construction, so arithmetic is two array lookups. The inverse map is
// precomputed in the same pass. In a finite ring a one-sided inverse is
// automatically two-sided: if xy = 1 then left multiplication by y is
// injective on R, hence bijective (R is finite), so some z has yz = 1 and
// then x = x(yz) = (xy)z = z. The map records y only when xy = yx = 1, which
// by the argument is the same as xy = 1 whenever the tables form a ring.

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltaring/descriptor.hpp"
#include "deltaring/element_set.hpp"
#include "deltaring/errors.hpp"

namespace deltaring {

inline constexpr index_type npos = std::numeric_limits<index_type>::max();

inline constexpr std::size_t default_capacity = 4096;
inline constexpr std::size_t max_capacity = 65536;

// Element cap for every construction. DELTARING_CAPACITY overrides the
// default; values above max_capacity are rejected.
std::size_t capacity();

// Throws CapacityError when size exceeds capacity().
void check_capacity(std::size_t size, std::string const& what);

enum class CachedSet : std::size_t {
  units,
  idempotents,
  nilpotents,
  center,
  jacobson,
  delta,
  qnil,
  count_
};

class FiniteRing;
using RingPtr = std::shared_ptr<FiniteRing const>;

class FiniteRing {
 public:
  // Row-major size x size tables. Throws StructuralError on malformed input
  // (wrong dimensions, out-of-range entries, zero == one) and CapacityError
  // when size exceeds the cap. Axioms are not checked here; see
  // validate_ring().
  FiniteRing(std::size_t size,
             std::vector<index_type> add,
             std::vector<index_type> mul,
             index_type zero,
             index_type one,
             DescriptorPtr descriptor,
             std::vector<std::string> labels = {});

  FiniteRing(FiniteRing const&) = delete;
  FiniteRing& operator=(FiniteRing const&) = delete;

  static RingPtr from_tables(std::size_t size,
                             std::vector<index_type> add,
                             std::vector<index_type> mul,
                             index_type zero,
                             index_type one,
                             DescriptorPtr descriptor,
                             std::vector<std::string> labels = {});

  // Builds the tables by evaluating add(i, j) and mul(i, j) on every pair.
  // The callables must be pure; rows are filled in parallel.
  template <typename AddFn, typename MulFn>
  static RingPtr compile(std::size_t size,
                         AddFn&& add,
                         MulFn&& mul,
                         index_type zero,
                         index_type one,
                         DescriptorPtr descriptor,
                         std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return _size; }
  std::uint64_t id() const noexcept { return _id; }
  Element zero() const noexcept { return Element(_zero); }
  Element one() const noexcept { return Element(_one); }
  DescriptorPtr const& descriptor() const noexcept { return _descriptor; }
  std::string name() const;
  std::string const& label(Element x) const;

  Element add(Element x, Element y) const;
  Element mul(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const;
  Element pow(Element x, std::uint64_t k) const;
  std::optional<Element> inverse(Element x) const;
  bool is_unit(Element x) const;

  // The element 1 + 1 + ... + 1 (k times).
  Element natural(std::uint64_t k) const;

  // Unchecked table access for sweeps.
  index_type add_nc(index_type x, index_type y) const noexcept {
    return _add[static_cast<std::size_t>(x) * _size + y];
  }
  index_type mul_nc(index_type x, index_type y) const noexcept {
    return _mul[static_cast<std::size_t>(x) * _size + y];
  }
  index_type neg_nc(index_type x) const noexcept { return _neg[x]; }
  index_type sub_nc(index_type x, index_type y) const noexcept {
    return add_nc(x, _neg[y]);
  }
  index_type inverse_nc(index_type x) const noexcept { return _inv[x]; }

  std::span<index_type const> add_table() const noexcept { return _add; }
  std::span<index_type const> mul_table() const noexcept { return _mul; }
  std::span<index_type const> neg_table() const noexcept { return _neg; }
  std::span<index_type const> inverse_table() const noexcept { return _inv; }

  // False when some element has no additive inverse in the tables; then
  // neg() throws and the ring fails validation.
  bool has_negatives() const noexcept { return _has_negatives; }

  ElementSet empty_set() const { return ElementSet(_id, _size); }
  ElementSet full_set() const { return empty_set().complement(); }

  // Compute-then-publish cache slot. The first caller runs compute; every
  // caller gets the same object back.
  ElementSet const& cached(
      CachedSet slot,
      std::function<ElementSet(FiniteRing const&)> const& compute) const;

 private:
  void check(Element x) const;

  std::size_t _size;
  std::vector<index_type> _add;
  std::vector<index_type> _mul;
  std::vector<index_type> _neg;
  std::vector<index_type> _inv;
  index_type _zero;
  index_type _one;
  bool _has_negatives = true;
  DescriptorPtr _descriptor;
  std::vector<std::string> _labels;
  std::uint64_t _id;

  struct Caches {
    std::array<std::once_flag, static_cast<std::size_t>(CachedSet::count_)>
        flags;
    std::array<ElementSet, static_cast<std::size_t>(CachedSet::count_)> sets;
  };
  std::unique_ptr<Caches> _caches;
};

template <typename AddFn, typename MulFn>
RingPtr FiniteRing::compile(std::size_t size,
                            AddFn&& add,
                            MulFn&& mul,
                            index_type zero,
                            index_type one,
                            DescriptorPtr descriptor,
                            std::vector<std::string> labels) {
  check_capacity(size, descriptor ? descriptor->to_string() : "ring");
  std::vector<index_type> add_t(size * size);
  std::vector<index_type> mul_t(size * size);
  auto const n = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    auto const x = static_cast<index_type>(i);
    for (std::size_t j = 0; j < size; ++j) {
      auto const y = static_cast<index_type>(j);
      add_t[static_cast<std::size_t>(i) * size + j] = add(x, y);
      mul_t[static_cast<std::size_t>(i) * size + j] = mul(x, y);
    }
  }
  return from_tables(size,
                     std::move(add_t),
                     std::move(mul_t),
                     zero,
                     one,
                     std::move(descriptor),
                     std::move(labels));
}

struct AxiomViolation {
  std::string axiom;
  std::vector<index_type> witness;  // the failing pair or triple
};

struct ValidationReport {
  bool exhaustive = true;  // false: triples were sampled
  std::uint64_t triples_checked = 0;
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Checks every ring axiom. Rings up to exhaustive_limit elements get a full
// triple scan; larger rings get all pairs plus size^2 seeded triples.
inline constexpr std::size_t exhaustive_limit = 256;
ValidationReport validate_ring(FiniteRing const& ring);

}  // namespace deltaring

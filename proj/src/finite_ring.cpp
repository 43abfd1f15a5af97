#include "deltaring/finite_ring.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <string>

#include "deltaring/kernels.hpp"

namespace deltaring {

namespace {
  std::atomic<std::uint64_t> next_ring_id{1};
}

std::size_t capacity() {
  char const* env = std::getenv("DELTARING_CAPACITY");
  if (env == nullptr || *env == '\0') {
    return default_capacity;
  }
  char* end = nullptr;
  auto const value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) {
    throw CapacityError(std::string("DELTARING_CAPACITY is not a positive "
                                    "integer: ")
                        + env);
  }
  if (value > max_capacity) {
    throw CapacityError("DELTARING_CAPACITY=" + std::to_string(value)
                        + " is unsupported (maximum "
                        + std::to_string(max_capacity) + ")");
  }
  return static_cast<std::size_t>(value);
}

void check_capacity(std::size_t size, std::string const& what) {
  auto const cap = capacity();
  if (size > cap) {
    throw CapacityError(what + " has " + std::to_string(size)
                        + " elements, above the capacity of "
                        + std::to_string(cap));
  }
}

FiniteRing::FiniteRing(std::size_t size,
                       std::vector<index_type> add,
                       std::vector<index_type> mul,
                       index_type zero,
                       index_type one,
                       DescriptorPtr descriptor,
                       std::vector<std::string> labels)
    : _size(size),
      _add(std::move(add)),
      _mul(std::move(mul)),
      _zero(zero),
      _one(one),
      _descriptor(std::move(descriptor)),
      _labels(std::move(labels)),
      _id(next_ring_id.fetch_add(1)),
      _caches(std::make_unique<Caches>()) {
  if (_size == 0) {
    throw StructuralError("ring must have at least one element");
  }
  check_capacity(_size, _descriptor ? _descriptor->to_string() : "ring");
  if (_add.size() != _size * _size || _mul.size() != _size * _size) {
    throw StructuralError("tables must be " + std::to_string(_size) + "x"
                          + std::to_string(_size));
  }
  for (std::size_t i = 0; i < _add.size(); ++i) {
    if (_add[i] >= _size || _mul[i] >= _size) {
      throw StructuralError("table entry at row " + std::to_string(i / _size)
                            + ", column " + std::to_string(i % _size)
                            + " is out of range");
    }
  }
  if (_zero >= _size || _one >= _size) {
    throw StructuralError("zero/one index out of range");
  }
  if (_zero == _one) {
    throw StructuralError("zero ring rejected: one must differ from zero");
  }
  if (!_labels.empty() && _labels.size() != _size) {
    throw StructuralError("label count does not match ring size");
  }
  if (_labels.empty()) {
    _labels.reserve(_size);
    for (std::size_t i = 0; i < _size; ++i) {
      _labels.push_back(std::to_string(i));
    }
  }

  _neg.assign(_size, npos);
  for (index_type x = 0; x < _size; ++x) {
    for (index_type y = 0; y < _size; ++y) {
      if (add_nc(x, y) == _zero) {
        _neg[x] = y;
        break;
      }
    }
    if (_neg[x] == npos) {
      _has_negatives = false;
      // Keep sub_nc in range; validation reports the missing inverse.
      _neg[x] = _zero;
    }
  }
  _inv = kernels::parallel::inverse_map(_size, _mul, _one);
}

RingPtr FiniteRing::from_tables(std::size_t size,
                                std::vector<index_type> add,
                                std::vector<index_type> mul,
                                index_type zero,
                                index_type one,
                                DescriptorPtr descriptor,
                                std::vector<std::string> labels) {
  return std::make_shared<FiniteRing const>(size,
                                            std::move(add),
                                            std::move(mul),
                                            zero,
                                            one,
                                            std::move(descriptor),
                                            std::move(labels));
}

std::string FiniteRing::name() const {
  return _descriptor ? _descriptor->to_string() : "<anonymous>";
}

std::string const& FiniteRing::label(Element x) const {
  check(x);
  return _labels[x.index];
}

void FiniteRing::check(Element x) const {
  if (x.index >= _size) {
    throw RangeError("element " + std::to_string(x.index)
                     + " out of range for ring of size "
                     + std::to_string(_size));
  }
}

Element FiniteRing::add(Element x, Element y) const {
  check(x);
  check(y);
  return Element(add_nc(x.index, y.index));
}

Element FiniteRing::mul(Element x, Element y) const {
  check(x);
  check(y);
  return Element(mul_nc(x.index, y.index));
}

Element FiniteRing::neg(Element x) const {
  check(x);
  if (!_has_negatives) {
    throw StructuralError("additive table has no inverses; ring is invalid");
  }
  return Element(_neg[x.index]);
}

Element FiniteRing::sub(Element x, Element y) const {
  return add(x, neg(y));
}

Element FiniteRing::pow(Element x, std::uint64_t k) const {
  check(x);
  Element result = one();
  Element base = x;
  while (k > 0) {
    if ((k & 1U) != 0) {
      result = Element(mul_nc(result.index, base.index));
    }
    base = Element(mul_nc(base.index, base.index));
    k >>= 1U;
  }
  return result;
}

std::optional<Element> FiniteRing::inverse(Element x) const {
  check(x);
  if (_inv[x.index] == npos) {
    return std::nullopt;
  }
  return Element(_inv[x.index]);
}

bool FiniteRing::is_unit(Element x) const {
  check(x);
  return _inv[x.index] != npos;
}

Element FiniteRing::natural(std::uint64_t k) const {
  index_type acc = _zero;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc = add_nc(acc, _one);
  }
  return Element(acc);
}

ElementSet const& FiniteRing::cached(
    CachedSet slot,
    std::function<ElementSet(FiniteRing const&)> const& compute) const {
  auto const i = static_cast<std::size_t>(slot);
  std::call_once(_caches->flags[i],
                 [&] { _caches->sets[i] = compute(*this); });
  return _caches->sets[i];
}

ValidationReport validate_ring(FiniteRing const& ring) {
  ValidationReport report;
  auto const n = static_cast<index_type>(ring.size());
  auto const zero = ring.zero().index;
  auto const one = ring.one().index;

  auto note_pair = [&](std::string const& axiom, index_type x, index_type y) {
    for (auto const& v : report.violations) {
      if (v.axiom == axiom) {
        return;
      }
    }
    report.violations.push_back({axiom, {x, y}});
  };

  for (index_type x = 0; x < n; ++x) {
    if (ring.add_nc(x, zero) != x || ring.add_nc(zero, x) != x) {
      note_pair("additive identity", x, zero);
    }
    if (ring.mul_nc(x, one) != x || ring.mul_nc(one, x) != x) {
      note_pair("multiplicative identity", x, one);
    }
    bool has_neg = false;
    for (index_type y = 0; y < n && !has_neg; ++y) {
      has_neg = ring.add_nc(x, y) == zero && ring.add_nc(y, x) == zero;
    }
    if (!has_neg) {
      note_pair("additive inverse", x, x);
    }
    for (index_type y = 0; y < n; ++y) {
      if (ring.add_nc(x, y) != ring.add_nc(y, x)) {
        note_pair("additive commutativity", x, y);
      }
    }
  }

  kernels::TripleScan scan;
  if (ring.size() <= exhaustive_limit) {
    scan = kernels::parallel::scan_triples(ring);
    report.triples_checked = std::uint64_t{n} * n * n;
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(0x5eed'de17a'0000ULL + ring.size());
    std::uniform_int_distribution<index_type> pick(0, n - 1);
    std::vector<kernels::Triple> sample(ring.size() * ring.size());
    for (auto& t : sample) {
      t = {pick(rng), pick(rng), pick(rng)};
    }
    scan = kernels::parallel::scan_triples(ring, sample);
    report.triples_checked = sample.size();
  }

  static constexpr std::array<char const*, 4> names
      = {"additive associativity",
         "multiplicative associativity",
         "left distributivity",
         "right distributivity"};
  for (std::size_t i = 0; i < scan.first.size(); ++i) {
    if (scan.first[i]) {
      auto const& t = *scan.first[i];
      report.violations.push_back({names[i], {t[0], t[1], t[2]}});
    }
  }
  return report;
}

}  // namespace deltaring

#pragma once

// Element sweeps that dominate running time. Each kernel exists twice: a
// plain serial reference and an OpenMP version that partitions the outer
// element range across threads. Tests hold the two to identical output and
// bench/ compares their speed. Everything outside this file calls the
// parallel versions.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "deltaring/element_set.hpp"

namespace deltaring {

class FiniteRing;

namespace kernels {

  // Characterizations of Delta(R). All four define the same set.
  enum class DeltaForm {
    one_minus_xu,  // 1 - xu in U for all units u
    x_plus_u,      // x + u in U for all units u
    xu_plus_one,   // xu + 1 in U for all units u
    ux_plus_one,   // ux + 1 in U for all units u
  };

  enum class TripleAxiom : std::size_t {
    add_associative,
    mul_associative,
    left_distributive,
    right_distributive,
    count_
  };

  using Triple = std::array<index_type, 3>;

  // First failing triple per axiom, in scan order.
  struct TripleScan {
    std::array<std::optional<Triple>,
               static_cast<std::size_t>(TripleAxiom::count_)>
        first;
  };

  // Predicate per element, packed into a flag vector by the caller.
  struct SpectralQuery {
    ElementSet const* idempotents;
    ElementSet const* sum_target;      // a + p must land here
    ElementSet const* product_target;  // a * p must land here; may be null
  };

  namespace serial {
    std::vector<index_type> inverse_map(std::size_t size,
                                        std::span<index_type const> mul,
                                        index_type one);
    ElementSet delta(FiniteRing const& ring, DeltaForm form);
    ElementSet jacobson(FiniteRing const& ring);
    ElementSet qnil(FiniteRing const& ring);
    // sample empty: all size^3 triples.
    TripleScan scan_triples(FiniteRing const& ring,
                            std::span<Triple const> sample = {});
    std::vector<ElementSet> spectral_sets(FiniteRing const& ring,
                                          SpectralQuery const& query);
  }  // namespace serial

  namespace parallel {
    std::vector<index_type> inverse_map(std::size_t size,
                                        std::span<index_type const> mul,
                                        index_type one);
    ElementSet delta(FiniteRing const& ring, DeltaForm form);
    ElementSet jacobson(FiniteRing const& ring);
    ElementSet qnil(FiniteRing const& ring);
    TripleScan scan_triples(FiniteRing const& ring,
                            std::span<Triple const> sample = {});
    std::vector<ElementSet> spectral_sets(FiniteRing const& ring,
                                          SpectralQuery const& query);
  }  // namespace parallel

  // Caps OpenMP worker count; 0 restores the runtime default.
  void set_max_threads(int n);
  int max_threads();

}  // namespace kernels
}  // namespace deltaring

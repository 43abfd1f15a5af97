#include "deltaring/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "deltaring/finite_ring.hpp"

namespace deltaring::kernels {

namespace {

  std::vector<index_type> unit_list(FiniteRing const& ring) {
    std::vector<index_type> units;
    auto const inv = ring.inverse_table();
    for (index_type x = 0; x < ring.size(); ++x) {
      if (inv[x] != npos) {
        units.push_back(x);
      }
    }
    return units;
  }

  index_type inverse_of(std::size_t size,
                        std::span<index_type const> mul,
                        index_type one,
                        index_type x) {
    auto const row = static_cast<std::size_t>(x) * size;
    for (index_type y = 0; y < size; ++y) {
      if (mul[row + y] == one
          && mul[static_cast<std::size_t>(y) * size + x] == one) {
        return y;
      }
    }
    return npos;
  }

  bool in_delta(FiniteRing const& ring,
                std::vector<index_type> const& units,
                DeltaForm form,
                index_type x) {
    auto const one = ring.one().index;
    for (auto u : units) {
      index_type v = 0;
      switch (form) {
        case DeltaForm::one_minus_xu:
          v = ring.sub_nc(one, ring.mul_nc(x, u));
          break;
        case DeltaForm::x_plus_u:
          v = ring.add_nc(x, u);
          break;
        case DeltaForm::xu_plus_one:
          v = ring.add_nc(ring.mul_nc(x, u), one);
          break;
        case DeltaForm::ux_plus_one:
          v = ring.add_nc(ring.mul_nc(u, x), one);
          break;
      }
      if (ring.inverse_nc(v) == npos) {
        return false;
      }
    }
    return true;
  }

  bool in_jacobson(FiniteRing const& ring, index_type x) {
    auto const one = ring.one().index;
    for (index_type r = 0; r < ring.size(); ++r) {
      if (ring.inverse_nc(ring.sub_nc(one, ring.mul_nc(r, x))) == npos) {
        return false;
      }
    }
    return true;
  }

  bool in_qnil(FiniteRing const& ring, index_type a) {
    auto const one = ring.one().index;
    for (index_type x = 0; x < ring.size(); ++x) {
      if (ring.mul_nc(a, x) == ring.mul_nc(x, a)
          && ring.inverse_nc(ring.add_nc(one, ring.mul_nc(a, x))) == npos) {
        return false;
      }
    }
    return true;
  }

  void check_triple(FiniteRing const& ring, Triple const& t, TripleScan& out) {
    auto const [x, y, z] = t;
    auto note = [&](TripleAxiom ax, bool ok) {
      auto& slot = out.first[static_cast<std::size_t>(ax)];
      if (!ok && !slot) {
        slot = t;
      }
    };
    note(TripleAxiom::add_associative,
         ring.add_nc(ring.add_nc(x, y), z) == ring.add_nc(x, ring.add_nc(y, z)));
    note(TripleAxiom::mul_associative,
         ring.mul_nc(ring.mul_nc(x, y), z) == ring.mul_nc(x, ring.mul_nc(y, z)));
    note(TripleAxiom::left_distributive,
         ring.mul_nc(x, ring.add_nc(y, z))
             == ring.add_nc(ring.mul_nc(x, y), ring.mul_nc(x, z)));
    note(TripleAxiom::right_distributive,
         ring.mul_nc(ring.add_nc(x, y), z)
             == ring.add_nc(ring.mul_nc(x, z), ring.mul_nc(y, z)));
  }

  // Merges per-chunk scans, keeping the earliest chunk's witness.
  TripleScan merge_in_order(std::vector<TripleScan> const& parts) {
    TripleScan out;
    for (auto const& part : parts) {
      for (std::size_t i = 0; i < out.first.size(); ++i) {
        if (!out.first[i] && part.first[i]) {
          out.first[i] = part.first[i];
        }
      }
    }
    return out;
  }

  ElementSet spectral_one(FiniteRing const& ring,
                          SpectralQuery const& q,
                          index_type a,
                          std::vector<index_type>& commutant) {
    commutant.clear();
    for (index_type x = 0; x < ring.size(); ++x) {
      if (ring.mul_nc(a, x) == ring.mul_nc(x, a)) {
        commutant.push_back(x);
      }
    }
    ElementSet result = ring.empty_set();
    q.idempotents->for_each([&](Element p) {
      if (!q.sum_target->contains(Element(ring.add_nc(a, p.index)))) {
        return;
      }
      if (q.product_target != nullptr
          && !q.product_target->contains(Element(ring.mul_nc(a, p.index)))) {
        return;
      }
      bool const central_in_commutant
          = std::all_of(commutant.begin(), commutant.end(), [&](index_type x) {
              return ring.mul_nc(p.index, x) == ring.mul_nc(x, p.index);
            });
      if (central_in_commutant) {
        result.insert(p);
      }
    });
    return result;
  }

  template <typename Pred>
  ElementSet sweep_serial(FiniteRing const& ring, Pred&& pred) {
    std::vector<std::uint8_t> flags(ring.size(), 0);
    for (index_type x = 0; x < ring.size(); ++x) {
      flags[x] = pred(x) ? 1 : 0;
    }
    return ElementSet::from_flags(ring.id(), flags);
  }

  template <typename Pred>
  ElementSet sweep_parallel(FiniteRing const& ring, Pred&& pred) {
    std::vector<std::uint8_t> flags(ring.size(), 0);
    auto const n = static_cast<std::int64_t>(ring.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      flags[static_cast<std::size_t>(i)]
          = pred(static_cast<index_type>(i)) ? 1 : 0;
    }
    return ElementSet::from_flags(ring.id(), flags);
  }

}  // namespace

namespace serial {

  std::vector<index_type> inverse_map(std::size_t size,
                                      std::span<index_type const> mul,
                                      index_type one) {
    std::vector<index_type> inv(size, npos);
    for (index_type x = 0; x < size; ++x) {
      inv[x] = inverse_of(size, mul, one, x);
    }
    return inv;
  }

  ElementSet delta(FiniteRing const& ring, DeltaForm form) {
    auto const units = unit_list(ring);
    return sweep_serial(
        ring, [&](index_type x) { return in_delta(ring, units, form, x); });
  }

  ElementSet jacobson(FiniteRing const& ring) {
    return sweep_serial(ring,
                        [&](index_type x) { return in_jacobson(ring, x); });
  }

  ElementSet qnil(FiniteRing const& ring) {
    return sweep_serial(ring, [&](index_type a) { return in_qnil(ring, a); });
  }

  TripleScan scan_triples(FiniteRing const& ring,
                          std::span<Triple const> sample) {
    TripleScan out;
    if (!sample.empty()) {
      for (auto const& t : sample) {
        check_triple(ring, t, out);
      }
      return out;
    }
    auto const n = static_cast<index_type>(ring.size());
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = 0; y < n; ++y) {
        for (index_type z = 0; z < n; ++z) {
          check_triple(ring, {x, y, z}, out);
        }
      }
    }
    return out;
  }

  std::vector<ElementSet> spectral_sets(FiniteRing const& ring,
                                        SpectralQuery const& query) {
    std::vector<ElementSet> out;
    out.reserve(ring.size());
    std::vector<index_type> commutant;
    for (index_type a = 0; a < ring.size(); ++a) {
      out.push_back(spectral_one(ring, query, a, commutant));
    }
    return out;
  }

}  // namespace serial

namespace parallel {

  std::vector<index_type> inverse_map(std::size_t size,
                                      std::span<index_type const> mul,
                                      index_type one) {
    std::vector<index_type> inv(size, npos);
    auto const n = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      inv[static_cast<std::size_t>(i)]
          = inverse_of(size, mul, one, static_cast<index_type>(i));
    }
    return inv;
  }

  ElementSet delta(FiniteRing const& ring, DeltaForm form) {
    auto const units = unit_list(ring);
    return sweep_parallel(
        ring, [&](index_type x) { return in_delta(ring, units, form, x); });
  }

  ElementSet jacobson(FiniteRing const& ring) {
    return sweep_parallel(ring,
                          [&](index_type x) { return in_jacobson(ring, x); });
  }

  ElementSet qnil(FiniteRing const& ring) {
    return sweep_parallel(ring,
                          [&](index_type a) { return in_qnil(ring, a); });
  }

  TripleScan scan_triples(FiniteRing const& ring,
                          std::span<Triple const> sample) {
    if (!sample.empty()) {
      constexpr std::size_t chunk = 4096;
      auto const chunks
          = static_cast<std::int64_t>((sample.size() + chunk - 1) / chunk);
      std::vector<TripleScan> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t c = 0; c < chunks; ++c) {
        auto const lo = static_cast<std::size_t>(c) * chunk;
        auto const hi = std::min(sample.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) {
          check_triple(ring, sample[i], parts[static_cast<std::size_t>(c)]);
        }
      }
      return merge_in_order(parts);
    }
    auto const n = static_cast<std::int64_t>(ring.size());
    auto const m = static_cast<index_type>(ring.size());
    std::vector<TripleScan> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
      auto const x = static_cast<index_type>(i);
      TripleScan part;
      for (index_type y = 0; y < m; ++y) {
        for (index_type z = 0; z < m; ++z) {
          check_triple(ring, {x, y, z}, part);
        }
      }
      parts[static_cast<std::size_t>(i)] = part;
    }
    return merge_in_order(parts);
  }

  std::vector<ElementSet> spectral_sets(FiniteRing const& ring,
                                        SpectralQuery const& query) {
    std::vector<ElementSet> out(ring.size());
    auto const n = static_cast<std::int64_t>(ring.size());
#pragma omp parallel
    {
      std::vector<index_type> commutant;
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = spectral_one(
            ring, query, static_cast<index_type>(i), commutant);
      }
    }
    return out;
  }

}  // namespace parallel

void set_max_threads(int n) {
#ifdef _OPENMP
  static int const runtime_default = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : runtime_default);
#else
  (void) n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace deltaring::kernels

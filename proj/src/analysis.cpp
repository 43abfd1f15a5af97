#include "deltaring/analysis.hpp"

#include "deltaring/kernels.hpp"

namespace deltaring {

namespace {
  template <typename Pred>
  ElementSet filter(FiniteRing const& ring, Pred&& pred) {
    ElementSet out = ring.empty_set();
    for (index_type x = 0; x < ring.size(); ++x) {
      if (pred(x)) {
        out.insert(Element(x));
      }
    }
    return out;
  }
}  // namespace

ElementSet const& units(FiniteRing const& ring) {
  return ring.cached(CachedSet::units, [](FiniteRing const& r) {
    return filter(r, [&](index_type x) { return r.inverse_nc(x) != npos; });
  });
}

ElementSet const& idempotents(FiniteRing const& ring) {
  return ring.cached(CachedSet::idempotents, [](FiniteRing const& r) {
    return filter(r, [&](index_type x) { return r.mul_nc(x, x) == x; });
  });
}

bool is_nilpotent(FiniteRing const& ring, Element a) {
  auto const zero = ring.zero().index;
  index_type power = ring.mul(a, ring.one()).index;
  for (std::size_t k = 1; k <= ring.size(); ++k) {
    if (power == zero) {
      return true;
    }
    power = ring.mul_nc(power, a.index);
  }
  return false;
}

ElementSet const& nilpotents(FiniteRing const& ring) {
  return ring.cached(CachedSet::nilpotents, [](FiniteRing const& r) {
    return filter(r, [&](index_type x) { return is_nilpotent(r, Element(x)); });
  });
}

ElementSet const& center(FiniteRing const& ring) {
  return ring.cached(CachedSet::center, [](FiniteRing const& r) {
    return filter(r, [&](index_type x) {
      for (index_type y = 0; y < r.size(); ++y) {
        if (r.mul_nc(x, y) != r.mul_nc(y, x)) {
          return false;
        }
      }
      return true;
    });
  });
}

ElementSet const& jacobson_radical(FiniteRing const& ring) {
  return ring.cached(CachedSet::jacobson, [](FiniteRing const& r) {
    return kernels::parallel::jacobson(r);
  });
}

ElementSet const& delta(FiniteRing const& ring) {
  return ring.cached(CachedSet::delta, [](FiniteRing const& r) {
    return kernels::parallel::delta(r, kernels::DeltaForm::one_minus_xu);
  });
}

ElementSet const& qnil(FiniteRing const& ring) {
  return ring.cached(CachedSet::qnil, [](FiniteRing const& r) {
    return kernels::parallel::qnil(r);
  });
}

DeltaForms delta_alternative_forms(FiniteRing const& ring) {
  using kernels::DeltaForm;
  return {kernels::parallel::delta(ring, DeltaForm::x_plus_u),
          kernels::parallel::delta(ring, DeltaForm::xu_plus_one),
          kernels::parallel::delta(ring, DeltaForm::ux_plus_one)};
}

ElementSet comm(FiniteRing const& ring, Element a) {
  ring.label(a);  // range check
  return filter(ring, [&](index_type x) {
    return ring.mul_nc(a.index, x) == ring.mul_nc(x, a.index);
  });
}

ElementSet comm2(FiniteRing const& ring, Element a) {
  ElementSet out = ring.full_set();
  comm(ring, a).for_each([&](Element x) { out = out & comm(ring, x); });
  return out;
}

ElementSet ann_left(FiniteRing const& ring, Element a) {
  ring.label(a);
  return filter(ring, [&](index_type x) {
    return ring.mul_nc(x, a.index) == ring.zero().index;
  });
}

ElementSet ann_right(FiniteRing const& ring, Element a) {
  ring.label(a);
  return filter(ring, [&](index_type x) {
    return ring.mul_nc(a.index, x) == ring.zero().index;
  });
}

bool is_two_sided_ideal(FiniteRing const& ring, ElementSet const& set) {
  if (set.ring_id() != ring.id() || !set.contains(ring.zero())) {
    return false;
  }
  auto const members = set.indices();
  for (auto x : members) {
    if (!set.contains(Element(ring.neg_nc(x)))) {
      return false;
    }
    for (auto y : members) {
      if (!set.contains(Element(ring.add_nc(x, y)))) {
        return false;
      }
    }
    for (index_type r = 0; r < ring.size(); ++r) {
      if (!set.contains(Element(ring.mul_nc(r, x)))
          || !set.contains(Element(ring.mul_nc(x, r)))) {
        return false;
      }
    }
  }
  return true;
}

ElementSet make_set(FiniteRing const& ring,
                    std::initializer_list<index_type> members) {
  ElementSet out = ring.empty_set();
  for (auto m : members) {
    out.insert(Element(m));
  }
  return out;
}

}  // namespace deltaring

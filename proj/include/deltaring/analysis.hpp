#pragma once

// Distinguished subsets of a finite ring. The ring-wide sets are cached on
// the ring and computed from their definitions:
//
//   U(R)     elements with a two-sided inverse
//   Id(R)    x^2 = x
//   Nil(R)   x^n = 0 for some n <= |R|; a nilpotent of a ring with |R|
//            elements has index at most |R|, so the cutoff is exact
//   C(R)     xy = yx for all y
//   J(R)     x with 1 - rx in U(R) for every r. In any ring J(R) is the set
//            of x with 1 - rx left invertible for all r; in a finite ring a
//            left invertible element is a unit, so testing U(R) is exact
//   Delta(R) x with 1 - xu in U(R) for every unit u
//   qnil     a with 1 + ax in U(R) for every x in comm(a)

#include <initializer_list>

#include "deltaring/element_set.hpp"
#include "deltaring/finite_ring.hpp"

namespace deltaring {

ElementSet const& units(FiniteRing const& ring);
ElementSet const& idempotents(FiniteRing const& ring);
ElementSet const& nilpotents(FiniteRing const& ring);
ElementSet const& center(FiniteRing const& ring);
ElementSet const& jacobson_radical(FiniteRing const& ring);
ElementSet const& delta(FiniteRing const& ring);
ElementSet const& qnil(FiniteRing const& ring);

// The three other descriptions of Delta(R), each computed on its own:
// {r : r + u in U}, {r : ru + 1 in U}, {r : ur + 1 in U} over all units u.
struct DeltaForms {
  ElementSet plus_unit;
  ElementSet right_times_unit_plus_one;
  ElementSet left_times_unit_plus_one;
};
DeltaForms delta_alternative_forms(FiniteRing const& ring);

ElementSet comm(FiniteRing const& ring, Element a);
// Intersection of comm(x) over x in comm(a).
ElementSet comm2(FiniteRing const& ring, Element a);

ElementSet ann_left(FiniteRing const& ring, Element a);
ElementSet ann_right(FiniteRing const& ring, Element a);

bool is_nilpotent(FiniteRing const& ring, Element a);

// Closed under +, negation, and two-sided multiplication by R; contains 0.
bool is_two_sided_ideal(FiniteRing const& ring, ElementSet const& set);

ElementSet make_set(FiniteRing const& ring,
                    std::initializer_list<index_type> members);

}  // namespace deltaring

#pragma once

// Ring families: Z_n, table rings, direct products, M_k(R), T_k(R),
// H_(s,t)(R), Dorroh extensions D(R, V), corners eRe and quotients R/I.
//
// Every construction encodes its elements as mixed-radix integers over the
// indices of its components, most significant component first:
//   product(R, S)     (r, s)            -> r * |S| + s
//   matrix_ring(k, R) row-major entries -> sum entry_i * |R|^(k*k-1-i)
//   upper_triangular  entries (i <= j), row-major, same radix scheme
//   h_ring            (c, e, f)         -> (c * |R| + e) * |R| + f
//   dorroh(R, V)      (r, v)            -> r * |V| + v
// Corners and quotients index their members in increasing parent order.

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "deltaring/finite_ring.hpp"

namespace deltaring {

RingPtr zn(std::int64_t n);

// {"size": n, "add": [[...]], "mul": [[...]], "zero": i, "one": j}
RingPtr table_ring_from_json(std::string const& text, DescriptorPtr descriptor);
RingPtr load_table_ring(std::filesystem::path const& file,
                        std::string const& spec_path);

RingPtr product(RingPtr const& r, RingPtr const& s);

RingPtr matrix_ring(std::int64_t k, RingPtr const& base);
RingPtr upper_triangular(std::int64_t k, RingPtr const& base);

// Requires s, t in C(R) and U(R).
RingPtr h_ring(Element s, Element t, RingPtr const& base);

// Requires e^2 = e and e != 0. The identity of the corner is e.
RingPtr corner(RingPtr const& base, Element e);

// Saturation: adds sums, negatives and r*x, x*r until nothing changes.
ElementSet ideal_generated(FiniteRing const& ring,
                           std::span<Element const> generators);

// Cosets are represented by their minimum-index member. Throws
// ConstructionError when the set is not a proper two-sided ideal.
RingPtr quotient(RingPtr const& base, ElementSet const& ideal);
RingPtr quotient(RingPtr const& base, std::vector<index_type> const& gens);

// The natural projection R -> R/I as a map on indices.
std::vector<index_type> quotient_projection(FiniteRing const& base,
                                            FiniteRing const& quotient_ring,
                                            ElementSet const& ideal);

// A ring given by tables that need not have an identity.
struct RngTables {
  std::size_t size = 0;
  std::vector<index_type> add;
  std::vector<index_type> mul;
  index_type zero = 0;
  std::vector<std::string> labels;

  index_type add_nc(index_type x, index_type y) const {
    return add[static_cast<std::size_t>(x) * size + y];
  }
  index_type mul_nc(index_type x, index_type y) const {
    return mul[static_cast<std::size_t>(x) * size + y];
  }
};

// V together with left R x V -> V and right V x R -> V actions.
struct BimoduleRingAction {
  RngTables module;
  std::vector<index_type> left;   // |R| x |V|, left[r * |V| + v] = r v
  std::vector<index_type> right;  // |V| x |R|, right[v * |R| + r] = v r

  index_type act_left(index_type r, index_type v) const {
    return left[static_cast<std::size_t>(r) * module.size + v];
  }
  index_type act_right(index_type v, index_type r, std::size_t base_size) const {
    return right[static_cast<std::size_t>(v) * base_size + r];
  }
};

BimoduleRingAction self_action(FiniteRing const& base);
BimoduleRingAction zero_action(FiniteRing const& base);
// V = an ideal of the base ring with inherited operations.
BimoduleRingAction ideal_action(FiniteRing const& base, ElementSet const& ideal);
// V = an ideal of another ring S; base must be Z_n, acting by r-fold sums.
BimoduleRingAction zmod_action(FiniteRing const& base,
                               FiniteRing const& other,
                               ElementSet const& ideal);

// Empty string when every law holds; otherwise the first violated law with
// its witness. Checks V's ring axioms, biadditivity, unital and associative
// module laws and the three compatibility laws
// (vw)r = v(wr), (vr)w = v(rw), (rv)w = r(vw).
std::string check_action_laws(FiniteRing const& base,
                              BimoduleRingAction const& action);

// (r, v)(s, w) = (rs, rw + vs + vw). Throws ConstructionError naming the
// violated law when the action is not compatible.
RingPtr dorroh(RingPtr const& base,
               BimoduleRingAction const& action,
               DorrohModuleSpec const& spec);

// Element layout helpers used by tests and the verification harness.
class MatrixCodec {
 public:
  MatrixCodec(std::size_t k, FiniteRing const& base, bool upper);

  std::size_t dimension() const noexcept { return _k; }
  std::size_t stored_entries() const noexcept { return _positions.size(); }

  // k*k row-major entries; entries below the diagonal must be zero for T_k.
  index_type encode(std::span<index_type const> entries) const;
  std::vector<index_type> decode(index_type index) const;

 private:
  std::size_t _k;
  std::size_t _base_size;
  index_type _base_zero;
  std::vector<std::size_t> _positions;  // row-major slots that are stored
};

// The 3x3 matrix (row-major) of an H_(s,t)(R) element.
std::array<index_type, 9> h_matrix(FiniteRing const& base,
                                   Element s,
                                   Element t,
                                   index_type index);

// Decomposition of a product / Dorroh index into component indices.
std::array<index_type, 2> split_pair(index_type index, std::size_t second_size);

}  // namespace deltaring

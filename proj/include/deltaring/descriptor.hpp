#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deltaring/element_set.hpp"

namespace deltaring {

enum class ConstructionKind {
  zn,
  table,
  product,
  matrix,
  upper_triangular,
  h_st,
  dorroh,
  corner,
  quotient,
};

struct ConstructionDescriptor;
using DescriptorPtr = std::shared_ptr<ConstructionDescriptor const>;

// The module V of a Dorroh extension D(R, V), as written in the ring-spec
// language:
//   self           V = R, both actions are ring multiplication
//   zero           V = {0}
//   ideal(i, ...)  V = two-sided ideal of R generated by the indices
//   zmod(S, i, ...) V = ideal of S generated by the indices, R = Z_n acting
//                  by repeated addition
struct DorrohModuleSpec {
  enum class Kind { self, zero, ideal, zmod };

  Kind kind = Kind::self;
  DescriptorPtr ring;  // only for zmod
  std::vector<index_type> generators;
};

// How a ring was built. Canonical text form (to_string) is the ring-spec
// language and is what reports use to name rings.
struct ConstructionDescriptor {
  ConstructionKind kind = ConstructionKind::zn;
  std::int64_t n = 0;  // modulus for zn, dimension for matrix/T
  std::string path;    // table files
  std::vector<DescriptorPtr> operands;
  std::vector<index_type> elements;  // s,t for h_st; e for corner; ideal gens
  std::optional<DorrohModuleSpec> module;

  std::string to_string() const;
};

std::string to_string(DorrohModuleSpec const& m);

DescriptorPtr make_zn(std::int64_t n);
DescriptorPtr make_table(std::string path);
DescriptorPtr make_product(DescriptorPtr r, DescriptorPtr s);
DescriptorPtr make_matrix(std::int64_t k, DescriptorPtr r);
DescriptorPtr make_upper_triangular(std::int64_t k, DescriptorPtr r);
DescriptorPtr make_h_st(index_type s, index_type t, DescriptorPtr r);
DescriptorPtr make_dorroh(DescriptorPtr r, DorrohModuleSpec m);
DescriptorPtr make_corner(DescriptorPtr r, index_type e);
DescriptorPtr make_quotient(DescriptorPtr r, std::vector<index_type> gens);

}  // namespace deltaring

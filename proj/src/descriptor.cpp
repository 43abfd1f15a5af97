#include "deltaring/descriptor.hpp"

#include <utility>

namespace deltaring {

namespace {
  std::string join_indices(std::vector<index_type> const& v) {
    std::string out;
    for (auto i : v) {
      out += ", " + std::to_string(i);
    }
    return out;
  }
}  // namespace

std::string to_string(DorrohModuleSpec const& m) {
  using K = DorrohModuleSpec::Kind;
  switch (m.kind) {
    case K::self:
      return "self";
    case K::zero:
      return "zero";
    case K::ideal: {
      auto inner = join_indices(m.generators);
      return "ideal(" + inner.substr(2) + ")";
    }
    case K::zmod:
      return "zmod(" + m.ring->to_string() + join_indices(m.generators) + ")";
  }
  return "?";
}

std::string ConstructionDescriptor::to_string() const {
  using K = ConstructionKind;
  switch (kind) {
    case K::zn:
      return "Z" + std::to_string(n);
    case K::table:
      return "table:" + path;
    case K::product:
      return "prod(" + operands[0]->to_string() + ", "
             + operands[1]->to_string() + ")";
    case K::matrix:
      return "M(" + std::to_string(n) + ", " + operands[0]->to_string() + ")";
    case K::upper_triangular:
      return "T(" + std::to_string(n) + ", " + operands[0]->to_string() + ")";
    case K::h_st:
      return "H(" + std::to_string(elements[0]) + ", "
             + std::to_string(elements[1]) + ", " + operands[0]->to_string()
             + ")";
    case K::dorroh:
      return "dorroh(" + operands[0]->to_string() + ", "
             + deltaring::to_string(*module) + ")";
    case K::corner:
      return "corner(" + operands[0]->to_string() + ", "
             + std::to_string(elements[0]) + ")";
    case K::quotient:
      return "quot(" + operands[0]->to_string() + join_indices(elements) + ")";
  }
  return "?";
}

DescriptorPtr make_zn(std::int64_t n) {
  auto d = std::make_shared<ConstructionDescriptor>();
  d->kind = ConstructionKind::zn;
  d->n = n;
  return d;
}

DescriptorPtr make_table(std::string path) {
  auto d = std::make_shared<ConstructionDescriptor>();
  d->kind = ConstructionKind::table;
  d->path = std::move(path);
  return d;
}

DescriptorPtr make_product(DescriptorPtr r, DescriptorPtr s) {
  auto d = std::make_shared<ConstructionDescriptor>();
  d->kind = ConstructionKind::product;
  d->operands = {std::move(r), std::move(s)};
  return d;
}

DescriptorPtr make_matrix(std::int64_t k, DescriptorPtr r) {
  auto d = std::make_shared<ConstructionDescriptor>();
  d->kind = ConstructionKind::matrix;
  d->n = k;
  d->operands = {std::move(r)};
  return d;
}

DescriptorPtr make_upper_triangular(std::int64_t k, DescriptorPtr r) {
  auto d = std::make_shared<ConstructionDescriptor>();
  d->kind = ConstructionKind::upper_triangular;
  d->n = k;
  d->operands = {std::move(r)};
  return d;
}

DescriptorPtr make_h_st(index_type s, index_type t, DescriptorPtr r) {
  auto d = std::make_shared<ConstructionDescriptor>();
  d->kind = ConstructionKind::h_st;
  d->elements = {s, t};
  d->operands = {std::move(r)};
  return d;
}

DescriptorPtr make_dorroh(DescriptorPtr r, DorrohModuleSpec m) {
  auto d = std::make_shared<ConstructionDescriptor>();
  d->kind = ConstructionKind::dorroh;
  d->operands = {std::move(r)};
  d->module = std::move(m);
  return d;
}

DescriptorPtr make_corner(DescriptorPtr r, index_type e) {
  auto d = std::make_shared<ConstructionDescriptor>();
  d->kind = ConstructionKind::corner;
  d->elements = {e};
  d->operands = {std::move(r)};
  return d;
}

DescriptorPtr make_quotient(DescriptorPtr r, std::vector<index_type> gens) {
  auto d = std::make_shared<ConstructionDescriptor>();
  d->kind = ConstructionKind::quotient;
  d->elements = std::move(gens);
  d->operands = {std::move(r)};
  return d;
}

}  // namespace deltaring

#include "deltaring/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "deltaring/analysis.hpp"

namespace deltaring {

namespace {

  // base^exponent, or capacity()+1 once it exceeds the cap.
  std::size_t bounded_power(std::size_t base, std::size_t exponent) {
    auto const cap = capacity();
    std::size_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
      result *= base;
      if (result > cap) {
        return cap + 1;
      }
    }
    return result;
  }

  std::string matrix_label(FiniteRing const& base,
                           std::size_t k,
                           std::vector<index_type> const& entries) {
    std::string out = "[";
    for (std::size_t i = 0; i < k; ++i) {
      out += i == 0 ? "[" : ",[";
      for (std::size_t j = 0; j < k; ++j) {
        if (j != 0) {
          out += ",";
        }
        out += base.label(Element(entries[i * k + j]));
      }
      out += "]";
    }
    return out + "]";
  }

  RingPtr matrix_like(std::int64_t k, RingPtr const& base, bool upper) {
    if (k < 1) {
      throw ConstructionError("matrix dimension must be at least 1, got "
                              + std::to_string(k));
    }
    auto const kk = static_cast<std::size_t>(k);
    auto desc = upper ? make_upper_triangular(k, base->descriptor())
                      : make_matrix(k, base->descriptor());
    std::size_t const stored = upper ? kk * (kk + 1) / 2 : kk * kk;
    auto const size = bounded_power(base->size(), stored);
    check_capacity(size, desc->to_string());

    MatrixCodec codec(kk, *base, upper);
    auto const& r = *base;
    auto add = [&](index_type x, index_type y) {
      auto a = codec.decode(x);
      auto const b = codec.decode(y);
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = r.add_nc(a[i], b[i]);
      }
      return codec.encode(a);
    };
    auto mul = [&](index_type x, index_type y) {
      auto const a = codec.decode(x);
      auto const b = codec.decode(y);
      std::vector<index_type> c(kk * kk, r.zero().index);
      for (std::size_t i = 0; i < kk; ++i) {
        for (std::size_t j = 0; j < kk; ++j) {
          index_type acc = r.zero().index;
          for (std::size_t l = 0; l < kk; ++l) {
            acc = r.add_nc(acc, r.mul_nc(a[i * kk + l], b[l * kk + j]));
          }
          c[i * kk + j] = acc;
        }
      }
      return codec.encode(c);
    };

    std::vector<index_type> zero_entries(kk * kk, r.zero().index);
    std::vector<index_type> one_entries = zero_entries;
    for (std::size_t i = 0; i < kk; ++i) {
      one_entries[i * kk + i] = r.one().index;
    }
    std::vector<std::string> labels;
    labels.reserve(size);
    for (index_type x = 0; x < size; ++x) {
      labels.push_back(matrix_label(r, kk, codec.decode(x)));
    }
    return FiniteRing::compile(size,
                               add,
                               mul,
                               codec.encode(zero_entries),
                               codec.encode(one_entries),
                               std::move(desc),
                               std::move(labels));
  }

  std::vector<index_type> member_map(std::size_t size,
                                     std::vector<index_type> const& members) {
    std::vector<index_type> pos(size, npos);
    for (std::size_t i = 0; i < members.size(); ++i) {
      pos[members[i]] = static_cast<index_type>(i);
    }
    return pos;
  }

  RngTables sub_rng(FiniteRing const& ring, ElementSet const& subset) {
    auto const members = subset.indices();
    auto const pos = member_map(ring.size(), members);
    RngTables v;
    v.size = members.size();
    v.add.resize(v.size * v.size);
    v.mul.resize(v.size * v.size);
    for (std::size_t i = 0; i < v.size; ++i) {
      for (std::size_t j = 0; j < v.size; ++j) {
        v.add[i * v.size + j] = pos[ring.add_nc(members[i], members[j])];
        v.mul[i * v.size + j] = pos[ring.mul_nc(members[i], members[j])];
      }
    }
    v.zero = pos[ring.zero().index];
    for (auto m : members) {
      v.labels.push_back(ring.label(Element(m)));
    }
    return v;
  }

  // Minimum-index member of each coset x + I.
  std::vector<index_type> coset_representatives(FiniteRing const& ring,
                                                ElementSet const& ideal) {
    auto const members = ideal.indices();
    std::vector<index_type> rep(ring.size());
    for (index_type x = 0; x < ring.size(); ++x) {
      index_type best = npos;
      for (auto i : members) {
        best = std::min(best, ring.add_nc(x, i));
      }
      rep[x] = best;
    }
    return rep;
  }

  std::string witness(std::string const& law,
                      std::initializer_list<index_type> xs) {
    std::string out = law + " fails at (";
    bool first = true;
    for (auto x : xs) {
      out += (first ? "" : ", ") + std::to_string(x);
      first = false;
    }
    return out + ")";
  }

}  // namespace

RingPtr zn(std::int64_t n) {
  if (n < 2) {
    throw ConstructionError("Z_n needs n >= 2, got " + std::to_string(n));
  }
  auto const size = static_cast<std::size_t>(n);
  auto desc = make_zn(n);
  check_capacity(size, desc->to_string());
  auto const m = static_cast<std::uint64_t>(n);
  return FiniteRing::compile(
      size,
      [m](index_type x, index_type y) {
        return static_cast<index_type>((std::uint64_t{x} + y) % m);
      },
      [m](index_type x, index_type y) {
        return static_cast<index_type>((std::uint64_t{x} * y) % m);
      },
      0,
      1,
      std::move(desc));
}

RingPtr table_ring_from_json(std::string const& text, DescriptorPtr descriptor) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw StructuralError(std::string("malformed table JSON: ") + e.what());
  }
  try {
    auto const size = doc.at("size").get<std::int64_t>();
    if (size <= 0) {
      throw StructuralError("table size must be positive");
    }
    auto const n = static_cast<std::size_t>(size);
    check_capacity(n, descriptor ? descriptor->to_string() : "table ring");
    auto read_table = [&](char const* key) {
      auto const& rows = doc.at(key);
      if (!rows.is_array() || rows.size() != n) {
        throw StructuralError(std::string("table '") + key + "' must have "
                              + std::to_string(n) + " rows");
      }
      std::vector<index_type> out;
      out.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        auto const& row = rows[i];
        if (!row.is_array() || row.size() != n) {
          throw StructuralError(std::string("table '") + key + "' row "
                                + std::to_string(i) + " must have "
                                + std::to_string(n) + " entries");
        }
        for (auto const& entry : row) {
          auto const v = entry.get<std::int64_t>();
          if (v < 0 || static_cast<std::size_t>(v) >= n) {
            throw StructuralError(std::string("table '") + key + "' row "
                                  + std::to_string(i)
                                  + " has out-of-range entry "
                                  + std::to_string(v));
          }
          out.push_back(static_cast<index_type>(v));
        }
      }
      return out;
    };
    auto add = read_table("add");
    auto mul = read_table("mul");
    auto const zero = doc.at("zero").get<std::int64_t>();
    auto const one = doc.at("one").get<std::int64_t>();
    if (zero < 0 || one < 0 || static_cast<std::size_t>(zero) >= n
        || static_cast<std::size_t>(one) >= n) {
      throw StructuralError("zero/one index out of range");
    }
    return FiniteRing::from_tables(n,
                                   std::move(add),
                                   std::move(mul),
                                   static_cast<index_type>(zero),
                                   static_cast<index_type>(one),
                                   std::move(descriptor));
  } catch (nlohmann::json::exception const& e) {
    throw StructuralError(std::string("malformed table JSON: ") + e.what());
  }
}

RingPtr load_table_ring(std::filesystem::path const& file,
                        std::string const& spec_path) {
  std::ifstream in(file);
  if (!in) {
    throw ConstructionError("cannot open table file " + file.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return table_ring_from_json(buffer.str(), make_table(spec_path));
}

RingPtr product(RingPtr const& r, RingPtr const& s) {
  auto desc = make_product(r->descriptor(), s->descriptor());
  auto const size = r->size() * s->size();
  check_capacity(size, desc->to_string());
  auto const m = s->size();
  auto const& a = *r;
  auto const& b = *s;
  std::vector<std::string> labels;
  labels.reserve(size);
  for (index_type x = 0; x < size; ++x) {
    labels.push_back("(" + a.label(Element(x / m)) + ", "
                     + b.label(Element(x % m)) + ")");
  }
  auto const pack = [m](index_type x, index_type y) {
    return static_cast<index_type>(x * m + y);
  };
  return FiniteRing::compile(
      size,
      [&](index_type x, index_type y) {
        return pack(a.add_nc(x / m, y / m), b.add_nc(x % m, y % m));
      },
      [&](index_type x, index_type y) {
        return pack(a.mul_nc(x / m, y / m), b.mul_nc(x % m, y % m));
      },
      pack(a.zero().index, b.zero().index),
      pack(a.one().index, b.one().index),
      std::move(desc),
      std::move(labels));
}

RingPtr matrix_ring(std::int64_t k, RingPtr const& base) {
  return matrix_like(k, base, false);
}

RingPtr upper_triangular(std::int64_t k, RingPtr const& base) {
  return matrix_like(k, base, true);
}

MatrixCodec::MatrixCodec(std::size_t k, FiniteRing const& base, bool upper)
    : _k(k), _base_size(base.size()), _base_zero(base.zero().index) {
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!upper || i <= j) {
        _positions.push_back(i * k + j);
      }
    }
  }
}

index_type MatrixCodec::encode(std::span<index_type const> entries) const {
  std::size_t index = 0;
  for (auto p : _positions) {
    index = index * _base_size + entries[p];
  }
  return static_cast<index_type>(index);
}

std::vector<index_type> MatrixCodec::decode(index_type index) const {
  std::vector<index_type> entries(_k * _k, _base_zero);
  std::size_t rest = index;
  for (auto it = _positions.rbegin(); it != _positions.rend(); ++it) {
    entries[*it] = static_cast<index_type>(rest % _base_size);
    rest /= _base_size;
  }
  return entries;
}

std::array<index_type, 9> h_matrix(FiniteRing const& base,
                                   Element s,
                                   Element t,
                                   index_type index) {
  auto const n = base.size();
  auto const c = static_cast<index_type>(index / (n * n));
  auto const e = static_cast<index_type>((index / n) % n);
  auto const f = static_cast<index_type>(index % n);
  // a - d = sc, d - f = te
  auto const d = base.add_nc(f, base.mul_nc(t.index, e));
  auto const a = base.add_nc(d, base.mul_nc(s.index, c));
  auto const z = base.zero().index;
  return {a, z, z, c, d, e, z, z, f};
}

RingPtr h_ring(Element s, Element t, RingPtr const& base) {
  auto const& r = *base;
  auto desc = make_h_st(s.index, t.index, r.descriptor());
  if (s.index >= r.size() || t.index >= r.size()) {
    throw ConstructionError("H(s, t, R): s and t must be elements of R");
  }
  auto const& c = center(r);
  auto const& u = units(r);
  for (auto x : {s, t}) {
    if (!c.contains(x) || !u.contains(x)) {
      throw ConstructionError("H(s, t, R): element " + std::to_string(x.index)
                              + " must be a central unit");
    }
  }
  auto const n = r.size();
  auto const size = bounded_power(n, 3);
  check_capacity(size, desc->to_string());
  auto pack = [n](index_type c0, index_type e0, index_type f0) {
    return static_cast<index_type>((c0 * n + e0) * n + f0);
  };
  auto combine = [&](index_type x, index_type y, bool multiply) {
    auto const a = h_matrix(r, s, t, x);
    auto const b = h_matrix(r, s, t, y);
    std::array<index_type, 9> out{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (!multiply) {
          out[i * 3 + j] = r.add_nc(a[i * 3 + j], b[i * 3 + j]);
          continue;
        }
        index_type acc = r.zero().index;
        for (std::size_t l = 0; l < 3; ++l) {
          acc = r.add_nc(acc, r.mul_nc(a[i * 3 + l], b[l * 3 + j]));
        }
        out[i * 3 + j] = acc;
      }
    }
    return pack(out[3], out[5], out[8]);
  };
  std::vector<std::string> labels;
  labels.reserve(size);
  for (index_type x = 0; x < size; ++x) {
    auto const m = h_matrix(r, s, t, x);
    labels.push_back(matrix_label(r, 3, {m.begin(), m.end()}));
  }
  auto const z = r.zero().index;
  return FiniteRing::compile(
      size,
      [&](index_type x, index_type y) { return combine(x, y, false); },
      [&](index_type x, index_type y) { return combine(x, y, true); },
      pack(z, z, z),
      pack(z, z, r.one().index),
      std::move(desc),
      std::move(labels));
}

RingPtr corner(RingPtr const& base, Element e) {
  auto const& r = *base;
  auto desc = make_corner(r.descriptor(), e.index);
  if (e.index >= r.size()) {
    throw ConstructionError("corner: element out of range");
  }
  if (r.mul_nc(e.index, e.index) != e.index) {
    throw ConstructionError("corner: element " + std::to_string(e.index)
                            + " is not idempotent");
  }
  if (e == r.zero()) {
    throw ConstructionError("corner: e = 0 gives a ring without identity");
  }
  ElementSet members_set = r.empty_set();
  for (index_type x = 0; x < r.size(); ++x) {
    members_set.insert(Element(r.mul_nc(r.mul_nc(e.index, x), e.index)));
  }
  auto const members = members_set.indices();
  auto const pos = member_map(r.size(), members);
  std::vector<std::string> labels;
  for (auto m : members) {
    labels.push_back(r.label(Element(m)));
  }
  return FiniteRing::compile(
      members.size(),
      [&](index_type x, index_type y) {
        return pos[r.add_nc(members[x], members[y])];
      },
      [&](index_type x, index_type y) {
        return pos[r.mul_nc(members[x], members[y])];
      },
      pos[r.zero().index],
      pos[e.index],
      std::move(desc),
      std::move(labels));
}

ElementSet ideal_generated(FiniteRing const& ring,
                           std::span<Element const> generators) {
  ElementSet ideal = ring.empty_set();
  std::vector<index_type> work;
  std::vector<index_type> members;
  auto push = [&](index_type x) {
    if (!ideal.contains(Element(x))) {
      ideal.insert(Element(x));
      work.push_back(x);
    }
  };
  push(ring.zero().index);
  for (auto g : generators) {
    ring.label(g);
    push(g.index);
  }
  while (!work.empty()) {
    auto const x = work.back();
    work.pop_back();
    members.push_back(x);
    push(ring.neg_nc(x));
    for (index_type r = 0; r < ring.size(); ++r) {
      push(ring.mul_nc(r, x));
      push(ring.mul_nc(x, r));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      push(ring.add_nc(x, members[i]));
    }
  }
  return ideal;
}

std::vector<index_type> quotient_projection(FiniteRing const& base,
                                            FiniteRing const& quotient_ring,
                                            ElementSet const& ideal) {
  auto const rep = coset_representatives(base, ideal);
  ElementSet reps = base.empty_set();
  for (auto x : rep) {
    reps.insert(Element(x));
  }
  if (reps.count() != quotient_ring.size()) {
    throw ConstructionError("quotient_projection: ring does not match ideal");
  }
  auto const pos = member_map(base.size(), reps.indices());
  std::vector<index_type> proj(base.size());
  for (index_type x = 0; x < base.size(); ++x) {
    proj[x] = pos[rep[x]];
  }
  return proj;
}

RingPtr quotient(RingPtr const& base, ElementSet const& ideal) {
  return quotient(base, ideal.indices());
}

RingPtr quotient(RingPtr const& base, std::vector<index_type> const& gens) {
  auto const& r = *base;
  std::vector<Element> gen_elements;
  for (auto g : gens) {
    if (g >= r.size()) {
      throw ConstructionError("quotient: generator " + std::to_string(g)
                              + " out of range");
    }
    gen_elements.emplace_back(g);
  }
  auto const ideal = ideal_generated(r, gen_elements);
  if (!is_two_sided_ideal(r, ideal)) {
    throw ConstructionError("quotient: generated set is not an ideal");
  }
  if (ideal.contains(r.one())) {
    throw ConstructionError("quotient: ideal is the whole ring");
  }
  auto desc = make_quotient(r.descriptor(), gens);
  auto const rep = coset_representatives(r, ideal);
  ElementSet reps = r.empty_set();
  for (auto x : rep) {
    reps.insert(Element(x));
  }
  auto const rep_list = reps.indices();
  auto const pos = member_map(r.size(), rep_list);
  std::vector<std::string> labels;
  for (auto m : rep_list) {
    labels.push_back("[" + r.label(Element(m)) + "]");
  }
  return FiniteRing::compile(
      rep_list.size(),
      [&](index_type x, index_type y) {
        return pos[rep[r.add_nc(rep_list[x], rep_list[y])]];
      },
      [&](index_type x, index_type y) {
        return pos[rep[r.mul_nc(rep_list[x], rep_list[y])]];
      },
      pos[rep[r.zero().index]],
      pos[rep[r.one().index]],
      std::move(desc),
      std::move(labels));
}

BimoduleRingAction self_action(FiniteRing const& base) {
  BimoduleRingAction act;
  auto& v = act.module;
  v.size = base.size();
  v.add.assign(base.add_table().begin(), base.add_table().end());
  v.mul.assign(base.mul_table().begin(), base.mul_table().end());
  v.zero = base.zero().index;
  for (index_type x = 0; x < base.size(); ++x) {
    v.labels.push_back(base.label(Element(x)));
  }
  act.left = v.mul;
  act.right = v.mul;
  return act;
}

BimoduleRingAction zero_action(FiniteRing const& base) {
  BimoduleRingAction act;
  act.module.size = 1;
  act.module.add = {0};
  act.module.mul = {0};
  act.module.zero = 0;
  act.module.labels = {"0"};
  act.left.assign(base.size(), 0);
  act.right.assign(base.size(), 0);
  return act;
}

BimoduleRingAction ideal_action(FiniteRing const& base, ElementSet const& ideal) {
  if (!is_two_sided_ideal(base, ideal)) {
    throw ConstructionError("dorroh: V is not a two-sided ideal of R");
  }
  BimoduleRingAction act;
  act.module = sub_rng(base, ideal);
  auto const members = ideal.indices();
  auto const pos = member_map(base.size(), members);
  auto const vs = members.size();
  act.left.resize(base.size() * vs);
  act.right.resize(vs * base.size());
  for (index_type r = 0; r < base.size(); ++r) {
    for (std::size_t i = 0; i < vs; ++i) {
      act.left[r * vs + i] = pos[base.mul_nc(r, members[i])];
      act.right[i * base.size() + r] = pos[base.mul_nc(members[i], r)];
    }
  }
  return act;
}

BimoduleRingAction zmod_action(FiniteRing const& base,
                               FiniteRing const& other,
                               ElementSet const& ideal) {
  if (!base.descriptor() || base.descriptor()->kind != ConstructionKind::zn) {
    throw ConstructionError("dorroh: zmod(...) modules need R = Z_n");
  }
  if (!is_two_sided_ideal(other, ideal)) {
    throw ConstructionError("dorroh: zmod(...) set is not an ideal");
  }
  BimoduleRingAction act;
  act.module = sub_rng(other, ideal);
  auto const& v = act.module;
  auto const vs = v.size;
  act.left.resize(base.size() * vs);
  act.right.resize(vs * base.size());
  // Z_n's index is its residue, so r acts as r-fold addition.
  for (std::size_t i = 0; i < vs; ++i) {
    index_type acc = v.zero;
    for (index_type r = 0; r < base.size(); ++r) {
      act.left[r * vs + i] = acc;
      act.right[i * base.size() + r] = acc;
      acc = v.add_nc(acc, static_cast<index_type>(i));
    }
  }
  return act;
}

std::string check_action_laws(FiniteRing const& base,
                              BimoduleRingAction const& action) {
  auto const& v = action.module;
  auto const n = static_cast<index_type>(base.size());
  auto const m = static_cast<index_type>(v.size);
  if (v.add.size() != v.size * v.size || v.mul.size() != v.size * v.size
      || action.left.size() != base.size() * v.size
      || action.right.size() != base.size() * v.size || v.zero >= m) {
    return "module tables have the wrong shape";
  }
  auto L = [&](index_type r, index_type x) { return action.act_left(r, x); };
  auto R = [&](index_type x, index_type r) {
    return action.act_right(x, r, base.size());
  };
  auto const one = base.one().index;

  for (index_type x = 0; x < m; ++x) {
    if (v.add_nc(x, v.zero) != x) {
      return witness("V additive identity", {x});
    }
    bool has_neg = false;
    for (index_type y = 0; y < m && !has_neg; ++y) {
      has_neg = v.add_nc(x, y) == v.zero;
    }
    if (!has_neg) {
      return witness("V additive inverse", {x});
    }
    if (L(one, x) != x || R(x, one) != x) {
      return witness("1v = v = v1", {x});
    }
    for (index_type y = 0; y < m; ++y) {
      if (v.add_nc(x, y) != v.add_nc(y, x)) {
        return witness("V additive commutativity", {x, y});
      }
      for (index_type z = 0; z < m; ++z) {
        if (v.add_nc(v.add_nc(x, y), z) != v.add_nc(x, v.add_nc(y, z))) {
          return witness("V additive associativity", {x, y, z});
        }
        if (v.mul_nc(v.mul_nc(x, y), z) != v.mul_nc(x, v.mul_nc(y, z))) {
          return witness("V multiplicative associativity", {x, y, z});
        }
        if (v.mul_nc(x, v.add_nc(y, z))
                != v.add_nc(v.mul_nc(x, y), v.mul_nc(x, z))
            || v.mul_nc(v.add_nc(x, y), z)
                   != v.add_nc(v.mul_nc(x, z), v.mul_nc(y, z))) {
          return witness("V distributivity", {x, y, z});
        }
      }
    }
  }

  for (index_type r = 0; r < n; ++r) {
    for (index_type x = 0; x < m; ++x) {
      for (index_type y = 0; y < m; ++y) {
        if (L(r, v.add_nc(x, y)) != v.add_nc(L(r, x), L(r, y))
            || R(v.add_nc(x, y), r) != v.add_nc(R(x, r), R(y, r))) {
          return witness("additivity in V", {r, x, y});
        }
        // (vw)r = v(wr), (vr)w = v(rw), (rv)w = r(vw)
        if (R(v.mul_nc(x, y), r) != v.mul_nc(x, R(y, r))) {
          return witness("(vw)r = v(wr)", {x, y, r});
        }
        if (v.mul_nc(R(x, r), y) != v.mul_nc(x, L(r, y))) {
          return witness("(vr)w = v(rw)", {x, r, y});
        }
        if (v.mul_nc(L(r, x), y) != L(r, v.mul_nc(x, y))) {
          return witness("(rv)w = r(vw)", {r, x, y});
        }
      }
      for (index_type s = 0; s < n; ++s) {
        if (L(base.add_nc(r, s), x) != v.add_nc(L(r, x), L(s, x))
            || R(x, base.add_nc(r, s)) != v.add_nc(R(x, r), R(x, s))) {
          return witness("additivity in R", {r, s, x});
        }
        if (L(base.mul_nc(r, s), x) != L(r, L(s, x))) {
          return witness("(rs)v = r(sv)", {r, s, x});
        }
        if (R(x, base.mul_nc(r, s)) != R(R(x, r), s)) {
          return witness("v(rs) = (vr)s", {x, r, s});
        }
        if (R(L(r, x), s) != L(r, R(x, s))) {
          return witness("(rv)s = r(vs)", {r, x, s});
        }
      }
    }
  }
  return {};
}

RingPtr dorroh(RingPtr const& base,
               BimoduleRingAction const& action,
               DorrohModuleSpec const& spec) {
  auto desc = make_dorroh(base->descriptor(), spec);
  auto const failure = check_action_laws(*base, action);
  if (!failure.empty()) {
    throw ConstructionError("dorroh: " + failure);
  }
  auto const& r = *base;
  auto const& v = action.module;
  auto const m = v.size;
  auto const size = r.size() * m;
  check_capacity(size, desc->to_string());
  auto pack = [m](index_type x, index_type y) {
    return static_cast<index_type>(x * m + y);
  };
  std::vector<std::string> labels;
  labels.reserve(size);
  for (index_type x = 0; x < size; ++x) {
    labels.push_back("(" + r.label(Element(x / m)) + ", " + v.labels[x % m]
                     + ")");
  }
  return FiniteRing::compile(
      size,
      [&](index_type x, index_type y) {
        return pack(r.add_nc(x / m, y / m), v.add_nc(x % m, y % m));
      },
      [&](index_type x, index_type y) {
        auto const a = x / m;
        auto const b = y / m;
        auto const p = x % m;
        auto const q = y % m;
        // (a, p)(b, q) = (ab, aq + pb + pq)
        auto const tail = v.add_nc(
            v.add_nc(action.act_left(a, q), action.act_right(p, b, r.size())),
            v.mul_nc(p, q));
        return pack(r.mul_nc(a, b), tail);
      },
      pack(r.zero().index, v.zero),
      pack(r.one().index, v.zero),
      std::move(desc),
      std::move(labels));
}

std::array<index_type, 2> split_pair(index_type index, std::size_t second_size) {
  return {static_cast<index_type>(index / second_size),
          static_cast<index_type>(index % second_size)};
}

}  // namespace deltaring

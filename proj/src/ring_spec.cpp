#include "deltaring/ring_spec.hpp"

#include <cctype>
#include <cstdlib>

#include "deltaring/constructions.hpp"

#ifndef DELTARING_SOURCE_DATA_DIR
#define DELTARING_SOURCE_DATA_DIR ""
#endif

namespace deltaring {

namespace {

  class Parser {
   public:
    explicit Parser(std::string_view text) : _text(text) {}

    DescriptorPtr parse() {
      auto d = spec();
      skip_ws();
      if (_pos != _text.size()) {
        fail("unexpected trailing input '" + std::string(_text.substr(_pos))
             + "'");
      }
      return d;
    }

   private:
    [[noreturn]] void fail(std::string const& msg) const {
      throw ParseError(msg, _pos + 1);
    }

    void skip_ws() {
      while (_pos < _text.size()
             && std::isspace(static_cast<unsigned char>(_text[_pos])) != 0) {
        ++_pos;
      }
    }

    bool try_consume(std::string_view token) {
      skip_ws();
      if (_text.substr(_pos, token.size()) == token) {
        _pos += token.size();
        return true;
      }
      return false;
    }

    void expect(char c) {
      skip_ws();
      if (_pos >= _text.size() || _text[_pos] != c) {
        fail(std::string("expected '") + c + "'");
      }
      ++_pos;
    }

    std::int64_t integer() {
      skip_ws();
      auto const start = _pos;
      while (_pos < _text.size()
             && std::isdigit(static_cast<unsigned char>(_text[_pos])) != 0) {
        ++_pos;
      }
      if (start == _pos) {
        fail("expected integer");
      }
      if (_pos - start > 9) {
        _pos = start;
        fail("integer too large");
      }
      return std::stoll(std::string(_text.substr(start, _pos - start)));
    }

    index_type index() { return static_cast<index_type>(integer()); }

    std::vector<index_type> index_tail() {
      std::vector<index_type> out;
      while (try_consume(",")) {
        out.push_back(index());
      }
      return out;
    }

    // Longest identifier at the cursor, without consuming it.
    std::string_view peek_word() {
      skip_ws();
      auto end = _pos;
      while (end < _text.size()
             && std::isalpha(static_cast<unsigned char>(_text[end])) != 0) {
        ++end;
      }
      return _text.substr(_pos, end - _pos);
    }

    DescriptorPtr spec() {
      skip_ws();
      if (_pos >= _text.size()) {
        fail("expected ring spec");
      }
      if (try_consume("table:")) {
        auto const start = _pos;
        while (_pos < _text.size() && _text[_pos] != ',' && _text[_pos] != ')'
               && std::isspace(static_cast<unsigned char>(_text[_pos])) == 0) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected table path");
        }
        return make_table(std::string(_text.substr(start, _pos - start)));
      }
      auto const word_start = _pos;
      auto const word = peek_word();
      if (word == "Z") {
        ++_pos;
        auto const n = integer();
        if (n < 2) {
          _pos = word_start;
          fail("Z_n needs n >= 2");
        }
        return make_zn(n);
      }
      _pos += word.size();
      if (word == "prod") {
        expect('(');
        auto r = spec();
        expect(',');
        auto s = spec();
        expect(')');
        return make_product(std::move(r), std::move(s));
      }
      if (word == "M" || word == "T") {
        expect('(');
        auto const k_pos = _pos;
        auto const k = integer();
        if (k < 1) {
          _pos = k_pos;
          fail("matrix dimension must be at least 1");
        }
        expect(',');
        auto r = spec();
        expect(')');
        return word == "M" ? make_matrix(k, std::move(r))
                           : make_upper_triangular(k, std::move(r));
      }
      if (word == "H") {
        expect('(');
        auto const s = index();
        expect(',');
        auto const t = index();
        expect(',');
        auto r = spec();
        expect(')');
        return make_h_st(s, t, std::move(r));
      }
      if (word == "corner") {
        expect('(');
        auto r = spec();
        expect(',');
        auto const e = index();
        expect(')');
        return make_corner(std::move(r), e);
      }
      if (word == "quot") {
        expect('(');
        auto r = spec();
        auto gens = index_tail();
        if (gens.empty()) {
          fail("quot needs at least one generator");
        }
        expect(')');
        return make_quotient(std::move(r), std::move(gens));
      }
      if (word == "dorroh") {
        expect('(');
        auto r = spec();
        expect(',');
        auto m = module();
        expect(')');
        return make_dorroh(std::move(r), std::move(m));
      }
      _pos = word_start;
      fail(word.empty() ? "expected ring spec"
                        : "unknown construction '" + std::string(word) + "'");
    }

    DorrohModuleSpec module() {
      skip_ws();
      auto const start = _pos;
      auto const word = peek_word();
      _pos += word.size();
      DorrohModuleSpec m;
      using K = DorrohModuleSpec::Kind;
      if (word == "self") {
        m.kind = K::self;
      } else if (word == "zero") {
        m.kind = K::zero;
      } else if (word == "ideal") {
        m.kind = K::ideal;
        expect('(');
        m.generators.push_back(index());
        auto rest = index_tail();
        m.generators.insert(m.generators.end(), rest.begin(), rest.end());
        expect(')');
      } else if (word == "zmod") {
        m.kind = K::zmod;
        expect('(');
        m.ring = spec();
        m.generators = index_tail();
        if (m.generators.empty()) {
          fail("zmod needs at least one generator");
        }
        expect(')');
      } else {
        _pos = start;
        fail("expected Dorroh module (self, zero, ideal(...), zmod(...))");
      }
      return m;
    }

    std::string_view _text;
    std::size_t _pos = 0;
  };

  std::vector<Element> to_elements(FiniteRing const& ring,
                                   std::vector<index_type> const& xs) {
    std::vector<Element> out;
    for (auto x : xs) {
      if (x >= ring.size()) {
        throw ConstructionError("element " + std::to_string(x)
                                + " out of range for " + ring.name());
      }
      out.emplace_back(x);
    }
    return out;
  }

}  // namespace

DescriptorPtr parse_ring_spec(std::string_view text) {
  return Parser(text).parse();
}

RingBuilder::RingBuilder(std::vector<std::filesystem::path> search_dirs)
    : _search_dirs(std::move(search_dirs)) {}

std::filesystem::path RingBuilder::resolve_table(std::string const& path) const {
  std::filesystem::path p(path);
  if (p.is_absolute()) {
    return p;
  }
  std::vector<std::filesystem::path> dirs = _search_dirs;
  dirs.emplace_back(".");
  if (char const* env = std::getenv("DELTARING_DATA_DIR"); env != nullptr) {
    dirs.emplace_back(env);
  }
  if (std::string_view(DELTARING_SOURCE_DATA_DIR).size() > 0) {
    dirs.emplace_back(DELTARING_SOURCE_DATA_DIR);
  }
  for (auto const& dir : dirs) {
    auto const candidate = dir / p;
    if (std::filesystem::exists(candidate)) {
      return candidate;
    }
  }
  return p;
}

BimoduleRingAction RingBuilder::action_for(FiniteRing const& base,
                                          DorrohModuleSpec const& m) {
  using MK = DorrohModuleSpec::Kind;
  switch (m.kind) {
    case MK::self:
      return self_action(base);
    case MK::zero:
      return zero_action(base);
    case MK::ideal: {
      auto const gens = to_elements(base, m.generators);
      return ideal_action(base, ideal_generated(base, gens));
    }
    case MK::zmod: {
      auto other = build(m.ring);
      auto const gens = to_elements(*other, m.generators);
      return zmod_action(base, *other, ideal_generated(*other, gens));
    }
  }
  throw ConstructionError("unknown Dorroh module");
}

RingPtr RingBuilder::build(std::string_view spec) {
  return build(parse_ring_spec(spec));
}

RingPtr RingBuilder::build(DescriptorPtr const& d) {
  auto const key = d->to_string();
  {
    std::lock_guard lock(_mutex);
    if (auto it = _memo.find(key); it != _memo.end()) {
      return it->second;
    }
  }
  using K = ConstructionKind;
  RingPtr ring;
  switch (d->kind) {
    case K::zn:
      ring = zn(d->n);
      break;
    case K::table:
      ring = load_table_ring(resolve_table(d->path), d->path);
      break;
    case K::product:
      ring = product(build(d->operands[0]), build(d->operands[1]));
      break;
    case K::matrix:
      ring = matrix_ring(d->n, build(d->operands[0]));
      break;
    case K::upper_triangular:
      ring = upper_triangular(d->n, build(d->operands[0]));
      break;
    case K::h_st: {
      auto base = build(d->operands[0]);
      auto const st = to_elements(*base, d->elements);
      ring = h_ring(st[0], st[1], base);
      break;
    }
    case K::corner: {
      auto base = build(d->operands[0]);
      ring = corner(base, to_elements(*base, d->elements)[0]);
      break;
    }
    case K::quotient: {
      auto base = build(d->operands[0]);
      to_elements(*base, d->elements);
      ring = quotient(base, d->elements);
      break;
    }
    case K::dorroh: {
      auto base = build(d->operands[0]);
      auto const& m = *d->module;
      auto const action = action_for(*base, m);
      ring = dorroh(base, action, m);
      break;
    }
  }
  std::lock_guard lock(_mutex);
  return _memo.emplace(key, ring).first->second;
}

}  // namespace deltaring

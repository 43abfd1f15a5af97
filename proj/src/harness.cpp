#include "deltaring/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "deltaring/analysis.hpp"

namespace deltaring {

namespace {

  constexpr std::array<CheckInfo, 32> catalog = {{
      {"AXIOMS", "tables form a unital associative ring"},
      {"C01", "Delta(R) = {r : r+u in U} = {r : ru+1 in U} = {r : ur+1 in U}"},
      {"C02", "d in Delta(R), u in U(R) => ud, du in Delta(R)"},
      {"C03", "Delta(R) is a subring (0, differences, products)"},
      {"C04", "Delta(R) is an ideal <=> Delta(R) = J(R)"},
      {"C05", "Delta(R x S) = Delta(R) x Delta(S)"},
      {"C06", "U(R) in C(R) => R^qnil in Delta(R)"},
      {"C07", "Delta(T_2(R)) = D_2(Delta(R)) + J_2(R); spectral idempotents "
              "need not be unique"},
      {"C08", "every element of Delta(R) is Delta-quasipolar"},
      {"C09", "J-quasipolar => Delta-quasipolar"},
      {"C10", "a Delta-quasipolar => -1-a Delta-quasipolar"},
      {"C11", "Delta-qp => strongly Delta-clean; converse when abelian"},
      {"C12", "abelian: Delta-qp <=> strongly Delta-clean <=> uniquely clean"},
      {"C13", "T_2(Z_2) is Delta-qp, not abelian, not uniquely clean"},
      {"C14", "uniquely clean or uniquely Delta-clean => Delta-qp"},
      {"C15", "Delta-qp => 2 in Delta(R)"},
      {"C16", "M_k(R), k >= 2: E_12 in R^qnil but not in Delta = J"},
      {"C17", "a Delta-qp => u^-1 a u Delta-qp with conjugated idempotents"},
      {"C18", "Delta-qp ring: the Delta-spectral idempotent of a unit is 1"},
      {"C19", "Delta-qp ring: the Delta-spectral idempotent of a nilpotent "
              "is 0"},
      {"C20", "Delta-qp => Nil(R) in Delta(R)"},
      {"C21", "Delta-qp => every a has p in comm2(a) with a+p in U(R)"},
      {"C22", "Delta-qp and 2 in U(R) => Delta(R) is an ideal"},
      {"C23", "local and Delta-qp <=> Delta-qp with Id = {0,1} <=> R/J = Z_2"},
      {"C24", "a + p = d Delta-qp => ann_l(a) in ann_l(p), ann_r(a) in "
              "ann_r(p)"},
      {"C25", "abelian and J-clean => Delta-qp"},
      {"C26", "Delta-qp, Delta = J: strongly pi-regular <=> J = qnil = Nil = "
              "Delta"},
      {"C27", "R x S Delta-qp <=> R and S Delta-qp"},
      {"C28", "Delta-qp => eRe Delta-qp for every idempotent e != 0"},
      {"C29", "Dorroh extension: D(R,V) Delta-qp => R Delta-qp; (i)-(iii) => "
              "D(R,V) Delta-qp"},
      {"C30", "H_(s,t)(R): U and Delta by diagonal; H Delta-qp <=> R "
              "Delta-qp"},
      {"C31", "M_k(R), k >= 2, is not Delta-qp"},
  }};

  constexpr char const* default_manifest_text = R"(# Default verification corpus.
# Z_n
Z2
Z3
Z4
Z5
Z6
Z8
Z9
Z16
# field with four elements
table:rings/f4.json
# triangular and full matrix rings
T(2, Z2)
T(2, Z4)
T(3, Z2)
M(2, Z2)
M(2, Z4)
# products
prod(Z2, Z2)
prod(Z2, Z3)
prod(Z2, Z4)
prod(Z3, Z3)
prod(Z3, Z4)
prod(Z4, Z4)
# corners at E_11 and a quotient by the radical
corner(T(2, Z2), 4)
corner(M(2, Z2), 8)
quot(T(2, Z2), 2)
# H_(s,t)(R)
H(1, 1, Z2)
H(1, 1, Z3)
H(1, 1, Z4)
# Dorroh extensions
dorroh(Z2, self)
dorroh(Z4, ideal(2))
dorroh(Z2, zmod(Z4, 2))
)";

  struct Outcome {
    VerdictKind verdict = VerdictKind::pass;
    std::string witness;
    std::string note;
  };

  Outcome pass(std::string note = {}) {
    return {VerdictKind::pass, {}, std::move(note)};
  }
  Outcome fail(std::string witness, std::string note = {}) {
    return {VerdictKind::fail, std::move(witness), std::move(note)};
  }
  Outcome not_applicable(std::string note) {
    return {VerdictKind::not_applicable, {}, std::move(note)};
  }
  Outcome vacuous(std::string note) {
    return {VerdictKind::vacuous, {}, std::move(note)};
  }

  std::string el(FiniteRing const& r, Element x) {
    return "#" + std::to_string(x.index) + " " + r.label(x);
  }

  std::string yes_no(bool b) { return b ? "yes" : "no"; }

  std::string set_text(FiniteRing const& r, ElementSet const& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Element x) {
      out += (first ? "" : ", ") + el(r, x);
      first = false;
    });
    return out + "}";
  }

  // First element in the symmetric difference, as a witness.
  std::string first_difference(FiniteRing const& r,
                               ElementSet const& a,
                               ElementSet const& b) {
    auto const diff = (a - b) | (b - a);
    return el(r, Element(diff.first()));
  }

  bool has_kind(FiniteRing const& r, ConstructionKind k) {
    return r.descriptor() && r.descriptor()->kind == k;
  }

  struct Context {
    Harness& harness;
    RingFacts const& facts;
    FiniteRing const& ring;

    bool delta_qp() const { return facts.delta_qp.verdict.holds; }
    ElementSet const& cert(index_type a) const {
      return facts.delta_qp.certificates[a].idempotents;
    }
  };

  using CheckFn = Outcome (*)(Context const&);

  Outcome c01(Context const& c) {
    auto const& r = c.ring;
    auto const& d = delta(r);
    auto const forms = delta_alternative_forms(r);
    std::array<std::pair<char const*, ElementSet const*>, 3> const all
        = {{{"r + u in U", &forms.plus_unit},
            {"ru + 1 in U", &forms.right_times_unit_plus_one},
            {"ur + 1 in U", &forms.left_times_unit_plus_one}}};
    for (auto const& [name, set] : all) {
      if (*set != d) {
        return fail(first_difference(r, *set, d),
                    std::string("form '") + name + "' differs from Delta(R)");
      }
    }
    return pass("|Delta| = " + std::to_string(d.count())
                + ", four characterizations agree");
  }

  Outcome c02(Context const& c) {
    auto const& r = c.ring;
    auto const& d = delta(r);
    auto const us = units(r).indices();
    std::optional<Outcome> bad;
    d.for_each([&](Element x) {
      for (auto u : us) {
        if (bad) {
          return;
        }
        if (!d.contains(Element(r.mul_nc(u, x.index)))
            || !d.contains(Element(r.mul_nc(x.index, u)))) {
          bad = fail(el(r, x), "unit " + el(r, Element(u)));
        }
      }
    });
    return bad ? *bad : pass();
  }

  Outcome c03(Context const& c) {
    auto const& r = c.ring;
    auto const& d = delta(r);
    if (!d.contains(r.zero())) {
      return fail(el(r, r.zero()), "0 not in Delta(R)");
    }
    auto const members = d.indices();
    for (auto x : members) {
      for (auto y : members) {
        if (!d.contains(Element(r.sub_nc(x, y)))) {
          return fail(el(r, Element(x)) + ", " + el(r, Element(y)),
                      "difference leaves Delta(R)");
        }
        if (!d.contains(Element(r.mul_nc(x, y)))) {
          return fail(el(r, Element(x)) + ", " + el(r, Element(y)),
                      "product leaves Delta(R)");
        }
      }
    }
    return pass();
  }

  Outcome c04(Context const& c) {
    auto const& r = c.ring;
    bool const ideal = is_two_sided_ideal(r, delta(r));
    bool const equal = delta(r) == jacobson_radical(r);
    std::string note
        = "Delta ideal: " + yes_no(ideal) + ", Delta = J: " + yes_no(equal);
    if (ideal != equal) {
      return fail(first_difference(r, delta(r), jacobson_radical(r)), note);
    }
    return pass(note);
  }

  Outcome c05(Context const& c) {
    auto const& r = c.ring;
    if (!has_kind(r, ConstructionKind::product)) {
      return not_applicable("not a product ring");
    }
    auto& b = c.harness.builder();
    auto const first = b.build(r.descriptor()->operands[0]);
    auto const second = b.build(r.descriptor()->operands[1]);
    auto const& d1 = delta(*first);
    auto const& d2 = delta(*second);
    for (index_type x = 0; x < r.size(); ++x) {
      auto const [i, j] = split_pair(x, second->size());
      bool const expected = d1.contains(Element(i)) && d2.contains(Element(j));
      if (delta(r).contains(Element(x)) != expected) {
        return fail(el(r, Element(x)),
                    "membership differs from Delta(R) x Delta(S)");
      }
    }
    return pass("|Delta| = " + std::to_string(d1.count()) + " * "
                + std::to_string(d2.count()));
  }

  Outcome c06(Context const& c) {
    auto const& r = c.ring;
    if (!units(r).is_subset_of(center(r))) {
      return not_applicable("U(R) is not central");
    }
    auto const outside = qnil(r) - delta(r);
    if (!outside.empty()) {
      return fail(el(r, Element(outside.first())), "in R^qnil, not in Delta");
    }
    return pass("|qnil| = " + std::to_string(qnil(r).count()));
  }

  Outcome c07(Context const& c) {
    auto const& r = c.ring;
    if (!has_kind(r, ConstructionKind::upper_triangular)
        || r.descriptor()->n != 2) {
      return not_applicable("not T_2(R)");
    }
    auto const base = c.harness.builder().build(r.descriptor()->operands[0]);
    MatrixCodec const codec(2, *base, true);
    auto const& db = delta(*base);
    ElementSet expected = r.empty_set();
    for (index_type x = 0; x < r.size(); ++x) {
      auto const m = codec.decode(x);
      // diagonal in Delta(R), corner entry free
      if (db.contains(Element(m[0])) && db.contains(Element(m[3]))) {
        expected.insert(Element(x));
      }
    }
    if (expected != delta(r)) {
      return fail(first_difference(r, expected, delta(r)),
                  "Delta(T_2(R)) differs from D_2(Delta(R)) + J_2(R)");
    }
    std::string note = "Delta(T_2(R)) = " + set_text(r, delta(r));
    if (has_kind(*base, ConstructionKind::zn) && base->size() == 2) {
      // [[1,1],[0,0]]: report its spectral idempotents next to the set
      // obtained when p is not required to lie in comm2(a).
      auto const one = base->one().index;
      auto const zero = base->zero().index;
      std::array<index_type, 4> const entries = {one, one, zero, zero};
      Element const a(codec.encode(entries));
      auto const direct = delta_spectral_idempotents(r, a);
      if (direct != c.cert(a.index)) {
        return fail(el(r, a), "direct and swept spectral sets differ");
      }
      ElementSet relaxed = r.empty_set();
      idempotents(r).for_each([&](Element p) {
        if (delta(r).contains(r.add(a, p))) {
          relaxed.insert(p);
        }
      });
      note += "; " + el(r, a) + " has spectral idempotents "
              + set_text(r, direct) + ", without comm2 "
              + set_text(r, relaxed);
    }
    return pass(note);
  }

  Outcome c08(Context const& c) {
    auto const& r = c.ring;
    std::optional<Outcome> bad;
    delta(r).for_each([&](Element d) {
      if (!bad && c.cert(d.index).empty()) {
        bad = fail(el(r, d), "element of Delta(R) with no spectral idempotent");
      }
    });
    return bad ? *bad : pass();
  }

  Outcome c09(Context const& c) {
    auto const& r = c.ring;
    for (index_type a = 0; a < r.size(); ++a) {
      if (!c.facts.j_qp.certificates[a].idempotents.empty()
          && c.cert(a).empty()) {
        return fail(el(r, Element(a)), "J-quasipolar but not Delta-quasipolar");
      }
    }
    bool const jqp = c.facts.j_qp.verdict.holds;
    if (jqp && !c.delta_qp()) {
      return fail(el(r, *c.facts.delta_qp.verdict.witness),
                  "J-quasipolar ring that is not Delta-quasipolar");
    }
    return pass("ring J-qp: " + yes_no(jqp));
  }

  Outcome c10(Context const& c) {
    auto const& r = c.ring;
    auto const minus_one = r.neg_nc(r.one().index);
    for (index_type a = 0; a < r.size(); ++a) {
      auto const b = r.sub_nc(minus_one, a);
      if (!c.cert(a).empty() && c.cert(b).empty()) {
        return fail(el(r, Element(a)), "-1-a = " + el(r, Element(b))
                                           + " is not Delta-quasipolar");
      }
    }
    return pass();
  }

  Outcome c11(Context const& c) {
    auto const& r = c.ring;
    bool const dqp = c.delta_qp();
    auto const& sdc = c.facts.strongly_delta_clean.verdict;
    bool const ab = c.facts.abelian.holds;
    if (!dqp && !(ab && sdc.holds)) {
      return not_applicable("not Delta-qp, and not abelian strongly Delta-clean");
    }
    if (dqp && !sdc.holds) {
      return fail(el(r, *sdc.witness), "Delta-qp but not strongly Delta-clean");
    }
    if (ab && sdc.holds && !dqp) {
      return fail(el(r, *c.facts.delta_qp.verdict.witness),
                  "abelian strongly Delta-clean but not Delta-qp");
    }
    return pass("Delta-qp: " + yes_no(dqp) + ", abelian: " + yes_no(ab));
  }

  Outcome c12(Context const& c) {
    if (!c.facts.abelian.holds) {
      return not_applicable("not abelian");
    }
    bool const dqp = c.delta_qp();
    bool const sdc = c.facts.strongly_delta_clean.verdict.holds;
    bool const uc = c.facts.uniquely_clean.verdict.holds;
    std::string const note = "Delta-qp: " + yes_no(dqp)
                             + ", strongly Delta-clean: " + yes_no(sdc)
                             + ", uniquely clean: " + yes_no(uc);
    if (dqp != sdc || sdc != uc) {
      std::optional<Element> w;
      for (auto const* v : {&c.facts.delta_qp.verdict,
                            &c.facts.strongly_delta_clean.verdict,
                            &c.facts.uniquely_clean.verdict}) {
        if (!v->holds) {
          w = v->witness;
          break;
        }
      }
      return fail(el(c.ring, *w), note);
    }
    return pass(note);
  }

  Outcome c13(Context const& c) {
    auto const& r = c.ring;
    if (r.name() != "T(2, Z2)") {
      return not_applicable("statement is about T_2(Z_2) only");
    }
    bool const dqp = c.delta_qp();
    bool const jqp = c.facts.j_qp.verdict.holds;
    bool const ab = c.facts.abelian.holds;
    bool const uc = c.facts.uniquely_clean.verdict.holds;
    std::string const note = "J-qp: " + yes_no(jqp) + ", Delta-qp: "
                             + yes_no(dqp) + ", abelian: " + yes_no(ab)
                             + ", uniquely clean: " + yes_no(uc);
    if (!dqp || !jqp) {
      return fail(el(r, *(dqp ? c.facts.j_qp.verdict.witness
                              : c.facts.delta_qp.verdict.witness)),
                  note);
    }
    if (ab || uc) {
      return fail(el(r, r.zero()), note);
    }
    return pass(note + "; non-central idempotent "
                + el(r, *c.facts.abelian.witness));
  }

  Outcome c14(Context const& c) {
    bool const uc = c.facts.uniquely_clean.verdict.holds;
    bool const udc = c.facts.uniquely_delta_clean.verdict.holds;
    if (!uc && !udc) {
      return not_applicable("neither uniquely clean nor uniquely Delta-clean");
    }
    std::string const note
        = "uniquely clean: " + yes_no(uc) + ", uniquely Delta-clean: "
          + yes_no(udc);
    if (!c.delta_qp()) {
      return fail(el(c.ring, *c.facts.delta_qp.verdict.witness), note);
    }
    return pass(note);
  }

  Outcome c15(Context const& c) {
    auto const& r = c.ring;
    if (!c.delta_qp()) {
      return not_applicable("not Delta-qp");
    }
    auto const two = r.natural(2);
    if (!delta(r).contains(two)) {
      return fail(el(r, two), "2 not in Delta(R)");
    }
    return pass("2 = " + el(r, two) + " in Delta(R)");
  }

  Outcome c16(Context const& c) {
    auto const& r = c.ring;
    if (!has_kind(r, ConstructionKind::matrix) || r.descriptor()->n < 2) {
      return not_applicable("not M_k(R) with k >= 2");
    }
    auto const k = static_cast<std::size_t>(r.descriptor()->n);
    auto const base = c.harness.builder().build(r.descriptor()->operands[0]);
    MatrixCodec const codec(k, *base, false);
    std::vector<index_type> entries(k * k, base->zero().index);
    entries[1] = base->one().index;
    Element const e12(codec.encode(entries));
    if (!qnil(r).contains(e12)) {
      return fail(el(r, e12), "E_12 not quasinilpotent");
    }
    if (delta(r).contains(e12)) {
      return fail(el(r, e12), "E_12 in Delta(R)");
    }
    if (delta(r) != jacobson_radical(r)) {
      return fail(first_difference(r, delta(r), jacobson_radical(r)),
                  "Delta(M_k(R)) differs from J(M_k(R))");
    }
    return pass("E_12 = " + el(r, e12) + " in qnil \\ Delta; Delta = J has "
                + std::to_string(delta(r).count()) + " elements");
  }

  Outcome c17(Context const& c) {
    auto const& r = c.ring;
    auto const us = units(r).indices();
    for (index_type a = 0; a < r.size(); ++a) {
      for (auto u : us) {
        auto const v = r.inverse_nc(u);
        auto const conj = [&](index_type x) {
          return r.mul_nc(r.mul_nc(v, x), u);
        };
        ElementSet mapped = r.empty_set();
        c.cert(a).for_each(
            [&](Element p) { mapped.insert(Element(conj(p.index))); });
        auto const b = conj(a);
        if (mapped != c.cert(b)) {
          return fail(el(r, Element(a)),
                      "conjugating by " + el(r, Element(u))
                          + " does not carry spectral idempotents to those "
                            "of "
                          + el(r, Element(b)));
        }
      }
    }
    return pass();
  }

  Outcome c18(Context const& c) {
    auto const& r = c.ring;
    if (!c.delta_qp()) {
      return not_applicable("not Delta-qp");
    }
    auto const want = make_set(r, {r.one().index});
    std::optional<Outcome> bad;
    units(r).for_each([&](Element u) {
      if (!bad && c.cert(u.index) != want) {
        bad = fail(el(r, u), "spectral idempotents "
                                 + set_text(r, c.cert(u.index)));
      }
    });
    return bad ? *bad : pass();
  }

  Outcome c19(Context const& c) {
    auto const& r = c.ring;
    if (!c.delta_qp()) {
      return not_applicable("not Delta-qp");
    }
    auto const want = make_set(r, {r.zero().index});
    std::optional<Outcome> bad;
    nilpotents(r).for_each([&](Element a) {
      if (!bad && c.cert(a.index) != want) {
        bad = fail(el(r, a), "spectral idempotents "
                                 + set_text(r, c.cert(a.index)));
      }
    });
    return bad ? *bad : pass();
  }

  Outcome c20(Context const& c) {
    auto const& r = c.ring;
    if (!c.delta_qp()) {
      return not_applicable("not Delta-qp");
    }
    auto const outside = nilpotents(r) - delta(r);
    if (!outside.empty()) {
      return fail(el(r, Element(outside.first())), "nilpotent outside Delta");
    }
    return pass("|Nil| = " + std::to_string(nilpotents(r).count()));
  }

  Outcome c21(Context const& c) {
    auto const& r = c.ring;
    if (!c.delta_qp()) {
      return not_applicable("not Delta-qp");
    }
    auto const& v = c.facts.unit_variant.verdict;
    if (!v.holds) {
      return fail(el(r, *v.witness), "no p in comm2(a) with a + p a unit");
    }
    return pass();
  }

  Outcome c22(Context const& c) {
    auto const& r = c.ring;
    if (!c.delta_qp()) {
      return not_applicable("not Delta-qp");
    }
    auto const two = r.natural(2);
    if (r.is_unit(two)) {
      if (!is_two_sided_ideal(r, delta(r))) {
        return fail(el(r, two), "2 is a unit but Delta(R) is not an ideal");
      }
      return pass("2 is a unit and Delta(R) is an ideal");
    }
    std::string const evidence = delta(r).contains(two)
                                     ? "2 = " + el(r, two) + " in Delta(R)"
                                     : "2 = " + el(r, two) + " not in Delta(R)";
    return vacuous("hypothesis 2 in U(R) fails; " + evidence);
  }

  Outcome c23(Context const& c) {
    auto const& r = c.ring;
    bool const dqp = c.delta_qp();
    bool const local_dqp = c.facts.local.holds && dqp;
    bool const trivial_idempotents = dqp && idempotents(r).count() == 2;
    auto const q = quotient(c.facts.ring, jacobson_radical(r));
    // A two-element unital ring has 1 != 0, so it is Z_2.
    bool const quotient_z2 = q->size() == 2;
    std::string const note
        = "local and Delta-qp: " + yes_no(local_dqp)
          + ", Delta-qp with Id = {0,1}: " + yes_no(trivial_idempotents)
          + ", |R/J| = " + std::to_string(q->size());
    if (local_dqp != trivial_idempotents || trivial_idempotents != quotient_z2) {
      auto const w = c.facts.local.witness.value_or(
          c.facts.delta_qp.verdict.witness.value_or(r.one()));
      return fail(el(r, w), note);
    }
    return pass(note);
  }

  Outcome c24(Context const& c) {
    auto const& r = c.ring;
    std::vector<ElementSet> annl;
    std::vector<ElementSet> annr;
    annl.reserve(r.size());
    annr.reserve(r.size());
    for (index_type x = 0; x < r.size(); ++x) {
      annl.push_back(ann_left(r, Element(x)));
      annr.push_back(ann_right(r, Element(x)));
    }
    std::size_t pairs = 0;
    for (index_type a = 0; a < r.size(); ++a) {
      std::optional<Outcome> bad;
      c.cert(a).for_each([&](Element p) {
        ++pairs;
        if (!bad
            && (!annl[a].is_subset_of(annl[p.index])
                || !annr[a].is_subset_of(annr[p.index]))) {
          bad = fail(el(r, Element(a)), "idempotent " + el(r, p));
        }
      });
      if (bad) {
        return *bad;
      }
    }
    return pass(std::to_string(pairs) + " decompositions");
  }

  Outcome c25(Context const& c) {
    bool const ab = c.facts.abelian.holds;
    bool const jc = c.facts.j_clean.verdict.holds;
    if (!ab || !jc) {
      return not_applicable("abelian: " + yes_no(ab) + ", J-clean: "
                            + yes_no(jc));
    }
    if (!c.delta_qp()) {
      return fail(el(c.ring, *c.facts.delta_qp.verdict.witness),
                  "abelian J-clean but not Delta-qp");
    }
    return pass();
  }

  Outcome c26(Context const& c) {
    auto const& r = c.ring;
    auto const& d = delta(r);
    auto const& j = jacobson_radical(r);
    if (!c.delta_qp() || d != j) {
      return not_applicable("needs Delta-qp and Delta(R) = J(R)");
    }
    bool const spr = c.facts.pi_regular.holds;
    bool const equal
        = j == qnil(r) && qnil(r) == nilpotents(r) && nilpotents(r) == d;
    std::string const note = "strongly pi-regular: " + yes_no(spr)
                             + ", J = qnil = Nil = Delta: " + yes_no(equal);
    if (spr != equal) {
      auto const w = (qnil(r) - nilpotents(r)) | (nilpotents(r) - qnil(r))
                     | (j - qnil(r)) | (qnil(r) - j);
      return fail(el(r, Element(w.empty() ? 0 : w.first())), note);
    }
    return pass(note);
  }

  Outcome c27(Context const& c) {
    auto const& r = c.ring;
    if (!has_kind(r, ConstructionKind::product)) {
      return not_applicable("not a product ring");
    }
    auto& b = c.harness.builder();
    auto const first = b.build(r.descriptor()->operands[0]);
    auto const second = b.build(r.descriptor()->operands[1]);
    auto const& f1 = c.harness.facts(first);
    auto const& f2 = c.harness.facts(second);
    auto const m = second->size();
    for (index_type x = 0; x < r.size(); ++x) {
      auto const [i, j] = split_pair(x, m);
      ElementSet expected = r.empty_set();
      f1.delta_qp.certificates[i].idempotents.for_each([&](Element p) {
        f2.delta_qp.certificates[j].idempotents.for_each([&](Element q) {
          expected.insert(Element(static_cast<index_type>(p.index * m + q.index)));
        });
      });
      if (expected != c.cert(x)) {
        return fail(el(r, Element(x)),
                    "spectral idempotents are not the componentwise product");
      }
    }
    bool const lhs = c.delta_qp();
    bool const rhs = f1.delta_qp.verdict.holds && f2.delta_qp.verdict.holds;
    std::string const note = "R x S Delta-qp: " + yes_no(lhs)
                             + ", both factors Delta-qp: " + yes_no(rhs);
    if (lhs != rhs) {
      return fail(el(r, r.zero()), note);
    }
    return pass(note);
  }

  Outcome c28(Context const& c) {
    auto const& r = c.ring;
    if (!c.delta_qp()) {
      return not_applicable("not Delta-qp");
    }
    std::size_t corners = 0;
    std::optional<Outcome> bad;
    idempotents(r).for_each([&](Element e) {
      if (bad || e == r.zero()) {
        return;
      }
      auto const sub = corner(c.facts.ring, e);
      ++corners;
      auto const result = is_delta_quasipolar(*sub, Search::first_witness);
      if (!result.verdict.holds) {
        bad = fail(el(r, e), "corner eRe of size " + std::to_string(sub->size())
                                 + " is not Delta-qp");
      }
    });
    return bad ? *bad
               : pass(std::to_string(corners) + " corners eRe are Delta-qp");
  }

  Outcome c29(Context const& c) {
    if (!has_kind(c.ring, ConstructionKind::dorroh)) {
      return not_applicable("not a Dorroh extension");
    }
    auto data = c.harness.dorroh_data(c.ring);
    auto const res
        = check_dorroh(c.harness, data.base, data.action, c.facts.ring);
    return {res.verdict, res.witness, res.note};
  }

  Outcome c30(Context const& c) {
    auto const& r = c.ring;
    if (!has_kind(r, ConstructionKind::h_st)) {
      return not_applicable("not H_(s,t)(R)");
    }
    auto const base = c.harness.builder().build(r.descriptor()->operands[0]);
    auto const& el_st = r.descriptor()->elements;
    auto const res = check_h_ring_equivalence(
        c.harness, base, Element(el_st[0]), Element(el_st[1]), c.facts.ring);
    return {res.verdict, res.witness, res.note};
  }

  Outcome c31(Context const& c) {
    auto const& r = c.ring;
    if (!has_kind(r, ConstructionKind::matrix) || r.descriptor()->n < 2) {
      return not_applicable("not M_k(R) with k >= 2");
    }
    if (c.delta_qp()) {
      return fail(el(r, r.zero()), "M_k(R) classified Delta-qp");
    }
    auto const w = *c.facts.delta_qp.verdict.witness;
    // Re-verify from the definitions: no idempotent is spectral for w.
    for (index_type p = 0; p < r.size(); ++p) {
      if (r.mul_nc(p, p) == p
          && is_spectral_idempotent(r, w, Element(p), SpectralFlavor::delta)) {
        return fail(el(r, w), "witness has spectral idempotent "
                                  + el(r, Element(p)));
      }
    }
    return pass("witness " + el(r, w) + " has no Delta-spectral idempotent");
  }

  constexpr std::array<CheckFn, 31> check_fns = {
      c01, c02, c03, c04, c05, c06, c07, c08, c09, c10, c11,
      c12, c13, c14, c15, c16, c17, c18, c19, c20, c21, c22,
      c23, c24, c25, c26, c27, c28, c29, c30, c31};

  std::string trim(std::string_view s) {
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
      return {};
    }
    auto const e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
  }

}  // namespace

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::pass:
      return "PASS";
    case VerdictKind::fail:
      return "FAIL";
    case VerdictKind::not_applicable:
      return "NOT-APPLICABLE";
    case VerdictKind::vacuous:
      return "VACUOUS";
  }
  return "?";
}

std::span<CheckInfo const> check_catalog() { return catalog; }

bool is_known_check(std::string_view id) {
  return std::any_of(catalog.begin(), catalog.end(), [&](CheckInfo const& c) {
    return c.id == id;
  });
}

std::vector<std::string> parse_manifest(std::string_view text) {
  std::vector<std::string> specs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto spec = trim(line);
    if (!spec.empty()) {
      try {
        parse_ring_spec(spec);
      } catch (ParseError const& e) {
        throw ManifestError(e.what(), line_no);
      }
      specs.push_back(std::move(spec));
    }
    start = end + 1;
  }
  return specs;
}

std::string_view default_manifest() { return default_manifest_text; }

RingFacts::RingFacts(RingPtr r, CleanOptions const& clean)
    : ring(std::move(r)), validation(validate_ring(*ring)) {
  if (!validation.ok()) {
    return;
  }
  auto const& R = *ring;
  delta_qp = is_delta_quasipolar(R, Search::exhaustive);
  j_qp = is_j_quasipolar(R, Search::exhaustive);
  unit_variant = is_spectral_ring(R, SpectralFlavor::unit, Search::exhaustive);
  strongly_delta_clean = check_clean(
      R, CleanKind::strongly_delta_clean, Search::exhaustive, clean);
  uniquely_delta_clean = check_clean(
      R, CleanKind::uniquely_delta_clean, Search::exhaustive, clean);
  uniquely_clean
      = check_clean(R, CleanKind::uniquely_clean, Search::exhaustive, clean);
  j_clean = check_clean(R, CleanKind::j_clean, Search::exhaustive, clean);
  abelian = is_abelian(R);
  local = is_local(R);
  pi_regular = is_strongly_pi_regular(R);
}

void SuiteReport::tally() {
  pass = fail = not_applicable = vacuous = 0;
  for (auto const& r : results) {
    switch (r.verdict) {
      case VerdictKind::pass:
        ++pass;
        break;
      case VerdictKind::fail:
        ++fail;
        break;
      case VerdictKind::not_applicable:
        ++not_applicable;
        break;
      case VerdictKind::vacuous:
        ++vacuous;
        break;
    }
  }
}

Harness::Harness(RingBuilder& builder, CleanOptions clean)
    : _builder(builder), _clean(clean) {}

RingFacts const& Harness::facts(RingPtr const& ring) {
  {
    std::lock_guard lock(_mutex);
    if (auto it = _facts.find(ring->id()); it != _facts.end()) {
      return *it->second;
    }
  }
  auto computed = std::make_shared<RingFacts>(ring, _clean);
  std::lock_guard lock(_mutex);
  return *_facts.emplace(ring->id(), std::move(computed)).first->second;
}

DorrohData Harness::dorroh_data(FiniteRing const& dorroh_ring) {
  auto const& d = dorroh_ring.descriptor();
  if (!d || d->kind != ConstructionKind::dorroh) {
    throw std::invalid_argument(dorroh_ring.name()
                                + " is not a Dorroh extension");
  }
  DorrohData data;
  data.base = _builder.build(d->operands[0]);
  data.action = _builder.action_for(*data.base, *d->module);
  return data;
}

CheckResult Harness::run_check(std::string_view id, RingPtr const& ring) {
  if (!is_known_check(id)) {
    throw std::invalid_argument("unknown check id '" + std::string(id) + "'");
  }
  auto const start = std::chrono::steady_clock::now();
  CheckResult result;
  result.check = std::string(id);
  result.ring = ring->name();
  auto const& f = facts(ring);
  Outcome outcome;
  if (id == "AXIOMS") {
    auto const& v = f.validation;
    if (v.ok()) {
      outcome = pass((v.exhaustive ? "exhaustive, " : "sampled, ")
                     + std::to_string(v.triples_checked) + " triples");
    } else {
      std::string w;
      for (auto x : v.violations.front().witness) {
        w += (w.empty() ? "" : ", ") + el(*ring, Element(x));
      }
      outcome = fail(w, v.violations.front().axiom + " violated ("
                            + std::to_string(v.violations.size())
                            + " axioms fail)");
    }
  } else if (!f.validation.ok()) {
    outcome = not_applicable("ring failed axiom validation");
  } else {
    auto const n = static_cast<std::size_t>(std::stoi(std::string(id.substr(1))));
    Context const ctx{*this, f, *ring};
    outcome = check_fns[n - 1](ctx);
  }
  result.verdict = outcome.verdict;
  result.witness = std::move(outcome.witness);
  result.note = std::move(outcome.note);
  result.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return result;
}

SuiteReport Harness::run_suite(std::vector<std::string> const& corpus,
                               SuiteOptions const& options) {
  for (auto const& id : options.checks) {
    if (!is_known_check(id)) {
      throw std::invalid_argument("unknown check id '" + id + "'");
    }
  }
  SuiteReport report;
  for (auto const& spec : corpus) {
    auto const ring = _builder.build(spec);
    report.corpus.push_back(ring->name());
    for (auto const& info : catalog) {
      if (!options.checks.empty()
          && std::find(options.checks.begin(), options.checks.end(), info.id)
                 == options.checks.end()) {
        continue;
      }
      report.results.push_back(run_check(info.id, ring));
    }
  }
  report.tally();
  return report;
}

CheckResult check_dorroh(Harness& harness,
                         RingPtr const& base,
                         BimoduleRingAction const& action,
                         RingPtr const& dorroh_ring) {
  CheckResult result;
  result.check = "C29";
  result.ring = dorroh_ring->name();
  auto const& r = *base;
  auto const& v = action.module;
  bool const d_qp = harness.facts(dorroh_ring).delta_qp.verdict.holds;
  bool const r_qp = harness.facts(base).delta_qp.verdict.holds;

  bool commute = true;  // (ii)
  idempotents(r).for_each([&](Element e) {
    for (index_type x = 0; x < v.size && commute; ++x) {
      commute = action.act_left(e.index, x)
                == action.act_right(x, e.index, r.size());
    }
  });
  bool quasi_inverse = true;  // (iii)
  for (index_type x = 0; x < v.size && quasi_inverse; ++x) {
    bool found = false;
    for (index_type w = 0; w < v.size && !found; ++w) {
      found = v.add_nc(v.add_nc(x, w), v.mul_nc(x, w)) == v.zero;
    }
    quasi_inverse = found;
  }

  result.note = "D Delta-qp: " + yes_no(d_qp) + ", (i) R Delta-qp: "
                + yes_no(r_qp) + ", (ii) idempotents commute with V: "
                + yes_no(commute) + ", (iii) quasi-inverses in V: "
                + yes_no(quasi_inverse);
  bool const conditions = r_qp && commute && quasi_inverse;
  if (d_qp && !r_qp) {
    result.verdict = VerdictKind::fail;
    result.witness = el(r, *harness.facts(base).delta_qp.verdict.witness);
    result.note += "; direction (1) fails";
  } else if (conditions && !d_qp) {
    result.verdict = VerdictKind::fail;
    result.witness = el(*dorroh_ring,
                        *harness.facts(dorroh_ring).delta_qp.verdict.witness);
    result.note += "; direction (2) fails";
  } else if (!d_qp && !conditions) {
    result.verdict = VerdictKind::not_applicable;
  } else {
    result.verdict = VerdictKind::pass;
  }
  return result;
}

CheckResult check_h_ring_equivalence(Harness& harness,
                                     RingPtr const& base,
                                     Element s,
                                     Element t,
                                     RingPtr const& h) {
  CheckResult result;
  result.check = "C30";
  result.ring = h->name();
  auto const& r = *base;
  auto const& u_r = units(r);
  auto const& d_r = delta(r);
  for (index_type x = 0; x < h->size(); ++x) {
    auto const m = h_matrix(r, s, t, x);
    bool const diag_units = u_r.contains(Element(m[0]))
                            && u_r.contains(Element(m[4]))
                            && u_r.contains(Element(m[8]));
    bool const diag_delta = d_r.contains(Element(m[0]))
                            && d_r.contains(Element(m[4]))
                            && d_r.contains(Element(m[8]));
    if (units(*h).contains(Element(x)) != diag_units) {
      result.verdict = VerdictKind::fail;
      result.witness = el(*h, Element(x));
      result.note = "unit membership differs from a, d, f in U(R)";
      return result;
    }
    if (delta(*h).contains(Element(x)) != diag_delta) {
      result.verdict = VerdictKind::fail;
      result.witness = el(*h, Element(x));
      result.note = "Delta membership differs from a, d, f in Delta(R)";
      return result;
    }
  }
  bool const h_qp = harness.facts(h).delta_qp.verdict.holds;
  bool const r_qp = harness.facts(base).delta_qp.verdict.holds;
  result.note = "|U(H)| = " + std::to_string(units(*h).count())
                + ", |Delta(H)| = " + std::to_string(delta(*h).count())
                + ", H Delta-qp: " + yes_no(h_qp)
                + ", R Delta-qp: " + yes_no(r_qp);
  if (h_qp != r_qp) {
    result.verdict = VerdictKind::fail;
    auto const& w = h_qp ? harness.facts(base).delta_qp.verdict.witness
                         : harness.facts(h).delta_qp.verdict.witness;
    result.witness = h_qp ? el(r, *w) : el(*h, *w);
    return result;
  }
  result.verdict = VerdictKind::pass;
  return result;
}

}  // namespace deltaring

#include "deltaring/report.hpp"

#include <sstream>

#include "deltaring/analysis.hpp"

namespace deltaring::report {

namespace {

  std::string md_set(FiniteRing const& ring, ElementSet const& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Element x) {
      out += (first ? "" : ", ") + std::to_string(x.index) + " `"
             + ring.label(x) + "`";
      first = false;
    });
    return out + "}";
  }

  std::string md_verdict(FiniteRing const& ring, Verdict const& v) {
    if (v.holds) {
      return "true";
    }
    return "false (witness " + std::to_string(v.witness->index) + " `"
           + ring.label(*v.witness) + "`)";
  }

}  // namespace

Json element_json(FiniteRing const& ring, Element x) {
  return Json{{"index", x.index}, {"label", ring.label(x)}};
}

Json set_json(FiniteRing const& ring, ElementSet const& s) {
  Json out = Json::array();
  s.for_each([&](Element x) { out.push_back(element_json(ring, x)); });
  return out;
}

Json classification(FiniteRing const& ring, ClassificationReport const& r) {
  Json preds = Json::object();
  for (auto const& [name, v] : r.predicates()) {
    Json p{{"holds", v->holds}};
    if (v->witness) {
      p["witness"] = element_json(ring, *v->witness);
    }
    preds[std::string(name)] = std::move(p);
  }
  return Json{{"ring", r.ring},
              {"size", r.size},
              {"predicates", std::move(preds)},
              {"sizes",
               {{"units", r.units},
                {"idempotents", r.idempotents},
                {"nilpotents", r.nilpotents},
                {"jacobson", r.jacobson},
                {"delta", r.delta},
                {"qnil", r.qnil}}}};
}

std::string classification_md(FiniteRing const& ring,
                              ClassificationReport const& r) {
  std::ostringstream os;
  os << "# " << r.ring << " (" << r.size << " elements)\n\n"
     << "| predicate | value |\n|---|---|\n";
  for (auto const& [name, v] : r.predicates()) {
    os << "| " << name << " | " << md_verdict(ring, *v) << " |\n";
  }
  os << "\n| set | size |\n|---|---|\n"
     << "| U(R) | " << r.units << " |\n"
     << "| Id(R) | " << r.idempotents << " |\n"
     << "| Nil(R) | " << r.nilpotents << " |\n"
     << "| J(R) | " << r.jacobson << " |\n"
     << "| Delta(R) | " << r.delta << " |\n"
     << "| qnil(R) | " << r.qnil << " |\n";
  return os.str();
}

Json delta(FiniteRing const& ring) {
  auto const& d = deltaring::delta(ring);
  auto const& j = jacobson_radical(ring);
  return Json{{"ring", ring.name()},
              {"delta", set_json(ring, d)},
              {"jacobson", set_json(ring, j)},
              {"coincide", d == j},
              {"delta_is_ideal", is_two_sided_ideal(ring, d)}};
}

std::string delta_md(FiniteRing const& ring) {
  auto const& d = deltaring::delta(ring);
  auto const& j = jacobson_radical(ring);
  std::ostringstream os;
  os << "# " << ring.name() << "\n\n"
     << "- Delta(R) = " << md_set(ring, d) << "\n"
     << "- J(R) = " << md_set(ring, j) << "\n"
     << "- coincide: " << (d == j ? "yes" : "no") << "\n"
     << "- Delta(R) is an ideal: "
     << (is_two_sided_ideal(ring, d) ? "yes" : "no") << "\n";
  return os.str();
}

Json spectral(FiniteRing const& ring, Element a, ElementSet const& idempotents) {
  return Json{{"ring", ring.name()},
              {"element", element_json(ring, a)},
              {"delta_quasipolar", !idempotents.empty()},
              {"idempotents", set_json(ring, idempotents)}};
}

std::string spectral_md(FiniteRing const& ring,
                        Element a,
                        ElementSet const& idempotents) {
  std::ostringstream os;
  os << "# " << ring.name() << ", element " << a.index << " `"
     << ring.label(a) << "`\n\n"
     << "- Delta-quasipolar: " << (idempotents.empty() ? "no" : "yes") << "\n"
     << "- Delta-spectral idempotents: " << md_set(ring, idempotents) << "\n";
  return os.str();
}

Json validation(FiniteRing const& ring, ValidationReport const& v) {
  Json violations = Json::array();
  for (auto const& x : v.violations) {
    Json w = Json::array();
    for (auto i : x.witness) {
      w.push_back(element_json(ring, Element(i)));
    }
    violations.push_back(Json{{"axiom", x.axiom}, {"witness", std::move(w)}});
  }
  return Json{{"ring", ring.name()},
              {"valid", v.ok()},
              {"exhaustive", v.exhaustive},
              {"triples_checked", v.triples_checked},
              {"violations", std::move(violations)}};
}

std::string validation_md(FiniteRing const& ring, ValidationReport const& v) {
  std::ostringstream os;
  os << "# " << ring.name() << "\n\n"
     << "- valid: " << (v.ok() ? "yes" : "no") << "\n"
     << "- triples checked: " << v.triples_checked
     << (v.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  for (auto const& x : v.violations) {
    os << "- " << x.axiom << " fails at (";
    for (std::size_t i = 0; i < x.witness.size(); ++i) {
      os << (i == 0 ? "" : ", ") << x.witness[i];
    }
    os << ")\n";
  }
  return os.str();
}

Json describe(FiniteRing const& ring) {
  Json elems = Json::array();
  for (index_type x = 0; x < ring.size(); ++x) {
    elems.push_back(element_json(ring, Element(x)));
  }
  return Json{{"ring", ring.name()},
              {"size", ring.size()},
              {"zero", ring.zero().index},
              {"one", ring.one().index},
              {"elements", std::move(elems)}};
}

std::string describe_md(FiniteRing const& ring) {
  std::ostringstream os;
  os << "# " << ring.name() << "\n\n| index | element |\n|---|---|\n";
  for (index_type x = 0; x < ring.size(); ++x) {
    os << "| " << x << " | `" << ring.label(Element(x)) << "` |\n";
  }
  return os.str();
}

Json suite(SuiteReport const& r, bool timing) {
  Json results = Json::array();
  for (auto const& c : r.results) {
    Json j{{"check", c.check},
           {"ring", c.ring},
           {"verdict", std::string(to_string(c.verdict))}};
    if (!c.witness.empty()) {
      j["witness"] = c.witness;
    }
    if (!c.note.empty()) {
      j["note"] = c.note;
    }
    if (timing) {
      j["millis"] = c.millis;
    }
    results.push_back(std::move(j));
  }
  return Json{{"corpus", r.corpus},
              {"results", std::move(results)},
              {"summary",
               {{"pass", r.pass},
                {"fail", r.fail},
                {"na", r.not_applicable},
                {"vacuous", r.vacuous}}}};
}

std::string suite_md(SuiteReport const& r, bool timing) {
  auto cell = [](std::string s) {
    std::string out;
    for (char c : s) {
      out += c == '|' ? std::string("\\|") : std::string(1, c);
    }
    return out;
  };
  std::ostringstream os;
  os << "| check | ring | verdict | witness | note |"
     << (timing ? " ms |" : "") << "\n|---|---|---|---|---|"
     << (timing ? "---|" : "") << "\n";
  for (auto const& c : r.results) {
    os << "| " << c.check << " | " << cell(c.ring) << " | "
       << to_string(c.verdict) << " | " << cell(c.witness) << " | "
       << cell(c.note) << " |";
    if (timing) {
      os << " " << c.millis << " |";
    }
    os << "\n";
  }
  os << "\n" << r.corpus.size() << " rings: " << r.pass << " pass, " << r.fail
     << " fail, " << r.not_applicable << " not applicable, " << r.vacuous
     << " vacuous\n";
  return os.str();
}

std::string dump(Json const& j) { return j.dump(2) + "\n"; }

}  // namespace deltaring::report

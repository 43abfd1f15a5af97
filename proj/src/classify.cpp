#include "deltaring/classify.hpp"

#include "deltaring/analysis.hpp"
#include "deltaring/kernels.hpp"

namespace deltaring {

namespace {

  ElementSet const& sum_target(FiniteRing const& ring, SpectralFlavor flavor) {
    switch (flavor) {
      case SpectralFlavor::delta:
        return delta(ring);
      case SpectralFlavor::jacobson:
        return jacobson_radical(ring);
      case SpectralFlavor::quasipolar:
      case SpectralFlavor::unit:
        return units(ring);
    }
    return delta(ring);
  }

  ElementSet const& clean_target(FiniteRing const& ring, CleanKind kind) {
    switch (kind) {
      case CleanKind::clean:
      case CleanKind::strongly_clean:
      case CleanKind::uniquely_clean:
        return units(ring);
      case CleanKind::j_clean:
        return jacobson_radical(ring);
      case CleanKind::strongly_delta_clean:
      case CleanKind::uniquely_delta_clean:
        return delta(ring);
    }
    return units(ring);
  }

  bool clean_holds(CleanKind kind, CleanCertificate const& cert) {
    switch (kind) {
      case CleanKind::uniquely_clean:
      case CleanKind::uniquely_delta_clean:
        return cert.qualifying == 1;
      default:
        return cert.qualifying >= 1;
    }
  }

}  // namespace

std::string_view to_string(SpectralFlavor f) {
  switch (f) {
    case SpectralFlavor::delta:
      return "delta";
    case SpectralFlavor::jacobson:
      return "jacobson";
    case SpectralFlavor::quasipolar:
      return "quasipolar";
    case SpectralFlavor::unit:
      return "unit";
  }
  return "?";
}

std::string_view to_string(CleanKind k) {
  switch (k) {
    case CleanKind::clean:
      return "clean";
    case CleanKind::strongly_clean:
      return "strongly_clean";
    case CleanKind::uniquely_clean:
      return "uniquely_clean";
    case CleanKind::j_clean:
      return "j_clean";
    case CleanKind::strongly_delta_clean:
      return "strongly_delta_clean";
    case CleanKind::uniquely_delta_clean:
      return "uniquely_delta_clean";
  }
  return "?";
}

ElementSet spectral_idempotents(FiniteRing const& ring,
                                Element a,
                                SpectralFlavor flavor) {
  auto const& target = sum_target(ring, flavor);
  ElementSet out = ring.empty_set();
  auto const candidates = idempotents(ring) & comm2(ring, a);
  candidates.for_each([&](Element p) {
    if (!target.contains(ring.add(a, p))) {
      return;
    }
    if (flavor == SpectralFlavor::quasipolar
        && !qnil(ring).contains(ring.mul(a, p))) {
      return;
    }
    out.insert(p);
  });
  return out;
}

ElementSet delta_spectral_idempotents(FiniteRing const& ring, Element a) {
  return spectral_idempotents(ring, a, SpectralFlavor::delta);
}

bool is_spectral_idempotent(FiniteRing const& ring,
                            Element a,
                            Element p,
                            SpectralFlavor flavor) {
  if (ring.mul(p, p) != p) {
    return false;
  }
  for (index_type x = 0; x < ring.size(); ++x) {
    Element const y(x);
    if (ring.mul(a, y) == ring.mul(y, a) && ring.mul(p, y) != ring.mul(y, p)) {
      return false;
    }
  }
  auto const s = ring.add(a, p);
  switch (flavor) {
    case SpectralFlavor::delta: {
      // 1 - su in U for every unit u, straight from the definition.
      for (index_type u = 0; u < ring.size(); ++u) {
        if (ring.is_unit(Element(u))
            && !ring.is_unit(ring.sub(ring.one(), ring.mul(s, Element(u))))) {
          return false;
        }
      }
      return true;
    }
    case SpectralFlavor::jacobson: {
      for (index_type r = 0; r < ring.size(); ++r) {
        if (!ring.is_unit(ring.sub(ring.one(), ring.mul(Element(r), s)))) {
          return false;
        }
      }
      return true;
    }
    case SpectralFlavor::quasipolar: {
      if (!ring.is_unit(s)) {
        return false;
      }
      auto const ap = ring.mul(a, p);
      for (index_type x = 0; x < ring.size(); ++x) {
        Element const y(x);
        if (ring.mul(ap, y) == ring.mul(y, ap)
            && !ring.is_unit(ring.add(ring.one(), ring.mul(ap, y)))) {
          return false;
        }
      }
      return true;
    }
    case SpectralFlavor::unit:
      return ring.is_unit(s);
  }
  return false;
}

SpectralResult is_spectral_ring(FiniteRing const& ring,
                                SpectralFlavor flavor,
                                Search search) {
  SpectralResult result;
  if (search == Search::exhaustive) {
    kernels::SpectralQuery const query{
        &idempotents(ring),
        &sum_target(ring, flavor),
        flavor == SpectralFlavor::quasipolar ? &qnil(ring) : nullptr};
    auto sets = kernels::parallel::spectral_sets(ring, query);
    result.certificates.reserve(sets.size());
    for (index_type a = 0; a < ring.size(); ++a) {
      if (sets[a].empty()) {
        result.verdict.fail(Element(a));
      }
      result.certificates.push_back({Element(a), flavor, std::move(sets[a])});
    }
    return result;
  }
  for (index_type a = 0; a < ring.size(); ++a) {
    auto set = spectral_idempotents(ring, Element(a), flavor);
    bool const empty = set.empty();
    result.certificates.push_back({Element(a), flavor, std::move(set)});
    if (empty) {
      result.verdict.fail(Element(a));
      break;
    }
  }
  return result;
}

SpectralResult is_delta_quasipolar(FiniteRing const& ring, Search search) {
  return is_spectral_ring(ring, SpectralFlavor::delta, search);
}

SpectralResult is_j_quasipolar(FiniteRing const& ring, Search search) {
  return is_spectral_ring(ring, SpectralFlavor::jacobson, search);
}

SpectralResult is_quasipolar(FiniteRing const& ring, Search search) {
  return is_spectral_ring(ring, SpectralFlavor::quasipolar, search);
}

CleanCertificate clean_certificate(FiniteRing const& ring,
                                   Element a,
                                   CleanKind kind,
                                   CleanOptions const& options) {
  CleanCertificate cert{a, {}, 0};
  auto const& target = clean_target(ring, kind);
  idempotents(ring).for_each([&](Element e) {
    auto const rest = ring.sub(a, e);
    if (!target.contains(rest)) {
      return;
    }
    bool const commuting = ring.mul(e, rest) == ring.mul(rest, e);
    cert.decompositions.push_back({e, rest, commuting});
    bool counts = true;
    if (kind == CleanKind::strongly_clean
        || kind == CleanKind::strongly_delta_clean
        || (kind == CleanKind::uniquely_delta_clean
            && options.strict_commuting)) {
      counts = commuting;
    }
    if (counts) {
      ++cert.qualifying;
    }
  });
  return cert;
}

CleanResult check_clean(FiniteRing const& ring,
                        CleanKind kind,
                        Search search,
                        CleanOptions const& options) {
  CleanResult result;
  for (index_type a = 0; a < ring.size(); ++a) {
    auto cert = clean_certificate(ring, Element(a), kind, options);
    bool const ok = clean_holds(kind, cert);
    result.certificates.push_back(std::move(cert));
    if (!ok) {
      result.verdict.fail(Element(a));
      if (search == Search::first_witness) {
        break;
      }
    }
  }
  return result;
}

Verdict is_abelian(FiniteRing const& ring) {
  Verdict v;
  (idempotents(ring) - center(ring)).for_each([&](Element e) { v.fail(e); });
  return v;
}

Verdict is_local(FiniteRing const& ring) {
  Verdict v;
  auto const non_units = units(ring).complement().indices();
  for (auto x : non_units) {
    for (auto y : non_units) {
      if (ring.inverse_nc(ring.add_nc(x, y)) != npos) {
        v.fail(Element(x));
        break;
      }
    }
  }
  return v;
}

std::optional<std::pair<std::uint64_t, Element>> pi_regular_witness(
    FiniteRing const& ring,
    Element a) {
  auto const commutant = comm(ring, a).indices();
  auto power = a;  // a^n
  for (std::uint64_t n = 1; n <= ring.size(); ++n) {
    auto const next = ring.mul(power, a);  // a^(n+1)
    for (auto b : commutant) {
      if (ring.mul_nc(next.index, b) == power.index) {
        return std::pair{n, Element(b)};
      }
    }
    power = next;
  }
  return std::nullopt;
}

Verdict is_strongly_pi_regular(FiniteRing const& ring) {
  Verdict v;
  for (index_type a = 0; a < ring.size(); ++a) {
    if (!pi_regular_witness(ring, Element(a))) {
      v.fail(Element(a));
    }
  }
  return v;
}

std::vector<std::pair<std::string_view, Verdict const*>>
ClassificationReport::predicates() const {
  return {{"delta_quasipolar", &delta_quasipolar},
          {"j_quasipolar", &j_quasipolar},
          {"quasipolar", &quasipolar},
          {"clean", &clean},
          {"strongly_clean", &strongly_clean},
          {"uniquely_clean", &uniquely_clean},
          {"strongly_delta_clean", &strongly_delta_clean},
          {"uniquely_delta_clean", &uniquely_delta_clean},
          {"j_clean", &j_clean},
          {"abelian", &abelian},
          {"local", &local},
          {"strongly_pi_regular", &strongly_pi_regular}};
}

ClassificationReport classification_report(FiniteRing const& ring,
                                           ClassificationOptions const& opts) {
  ClassificationReport r;
  r.ring = ring.name();
  r.size = ring.size();
  r.delta_quasipolar = is_delta_quasipolar(ring, opts.search).verdict;
  r.j_quasipolar = is_j_quasipolar(ring, opts.search).verdict;
  r.quasipolar = is_quasipolar(ring, opts.search).verdict;
  auto clean_verdict = [&](CleanKind k) {
    return check_clean(ring, k, opts.search, opts.clean).verdict;
  };
  r.clean = clean_verdict(CleanKind::clean);
  r.strongly_clean = clean_verdict(CleanKind::strongly_clean);
  r.uniquely_clean = clean_verdict(CleanKind::uniquely_clean);
  r.strongly_delta_clean = clean_verdict(CleanKind::strongly_delta_clean);
  r.uniquely_delta_clean = clean_verdict(CleanKind::uniquely_delta_clean);
  r.j_clean = clean_verdict(CleanKind::j_clean);
  r.abelian = is_abelian(ring);
  r.local = is_local(ring);
  r.strongly_pi_regular = is_strongly_pi_regular(ring);
  r.units = units(ring).count();
  r.idempotents = idempotents(ring).count();
  r.nilpotents = nilpotents(ring).count();
  r.jacobson = jacobson_radical(ring).count();
  r.delta = delta(ring).count();
  r.qnil = qnil(ring).count();
  return r;
}

}  // namespace deltaring

#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "deltaring/element_set.hpp"
#include "deltaring/finite_ring.hpp"

namespace deltaring {

// Which condition a spectral idempotent p (p^2 = p, p in comm2(a)) meets:
//   delta       a + p in Delta(R)
//   jacobson    a + p in J(R)
//   quasipolar  a + p in U(R) and ap in R^qnil
//   unit        a + p in U(R)
enum class SpectralFlavor { delta, jacobson, quasipolar, unit };

std::string_view to_string(SpectralFlavor f);

struct SpectralCertificate {
  Element element;
  SpectralFlavor flavor = SpectralFlavor::delta;
  ElementSet idempotents;  // every qualifying p; empty when there is none
};

// All p with p^2 = p, p in comm2(a) and the flavor's condition, computed
// from comm2() directly.
ElementSet spectral_idempotents(FiniteRing const& ring,
                                Element a,
                                SpectralFlavor flavor);
ElementSet delta_spectral_idempotents(FiniteRing const& ring, Element a);

// Re-checks the defining conditions of one candidate from scratch.
bool is_spectral_idempotent(FiniteRing const& ring,
                            Element a,
                            Element p,
                            SpectralFlavor flavor);

// first_witness stops at the lowest-index failing element; exhaustive keeps
// going and records every failure and certificate.
enum class Search { first_witness, exhaustive };

struct Verdict {
  bool holds = true;
  std::optional<Element> witness;  // lowest failing element
  std::vector<Element> failures;   // every failing element (exhaustive)

  void fail(Element x) {
    if (holds) {
      witness = x;
    }
    holds = false;
    failures.push_back(x);
  }
};

struct SpectralResult {
  Verdict verdict;
  std::vector<SpectralCertificate> certificates;  // indexed by element
};

SpectralResult is_spectral_ring(FiniteRing const& ring,
                                SpectralFlavor flavor,
                                Search search = Search::exhaustive);
SpectralResult is_delta_quasipolar(FiniteRing const& ring,
                                   Search search = Search::exhaustive);
SpectralResult is_j_quasipolar(FiniteRing const& ring,
                               Search search = Search::exhaustive);
SpectralResult is_quasipolar(FiniteRing const& ring,
                             Search search = Search::exhaustive);

enum class CleanKind {
  clean,                 // a = e + u
  strongly_clean,        // a = e + u, eu = ue
  uniquely_clean,        // exactly one e with a - e in U(R)
  j_clean,               // a = e + j, j in J(R)
  strongly_delta_clean,  // a = e + d, d in Delta(R), ed = de
  uniquely_delta_clean,  // exactly one (e, d), d in Delta(R)
};

std::string_view to_string(CleanKind k);

struct CleanDecomposition {
  Element idempotent;
  Element rest;  // a - idempotent
  bool commuting = false;
};

struct CleanCertificate {
  Element element;
  std::vector<CleanDecomposition> decompositions;  // rest in the target set
  std::size_t qualifying = 0;  // pairs that count for the kind
};

struct CleanOptions {
  // uniquely Delta-clean: count only pairs with ed = de.
  bool strict_commuting = false;
};

CleanCertificate clean_certificate(FiniteRing const& ring,
                                   Element a,
                                   CleanKind kind,
                                   CleanOptions const& options = {});

struct CleanResult {
  Verdict verdict;
  std::vector<CleanCertificate> certificates;
};

CleanResult check_clean(FiniteRing const& ring,
                        CleanKind kind,
                        Search search = Search::exhaustive,
                        CleanOptions const& options = {});

// Id(R) in C(R); witness is a non-central idempotent.
Verdict is_abelian(FiniteRing const& ring);

// Non-units closed under addition. For a unital ring this is equivalent to
// having a unique maximal left ideal, which then equals J(R). Witness is a
// non-unit x with x + y a unit for some non-unit y.
Verdict is_local(FiniteRing const& ring);

// a^n = a^(n+1) b for some n <= |R| and b in comm(a). Returns (n, b).
std::optional<std::pair<std::uint64_t, Element>> pi_regular_witness(
    FiniteRing const& ring,
    Element a);
Verdict is_strongly_pi_regular(FiniteRing const& ring);

struct ClassificationOptions {
  Search search = Search::first_witness;
  CleanOptions clean;
};

struct ClassificationReport {
  std::string ring;
  std::size_t size = 0;

  Verdict delta_quasipolar;
  Verdict j_quasipolar;
  Verdict quasipolar;
  Verdict clean;
  Verdict strongly_clean;
  Verdict uniquely_clean;
  Verdict strongly_delta_clean;
  Verdict uniquely_delta_clean;
  Verdict j_clean;
  Verdict abelian;
  Verdict local;
  Verdict strongly_pi_regular;

  std::size_t units = 0;
  std::size_t idempotents = 0;
  std::size_t nilpotents = 0;
  std::size_t jacobson = 0;
  std::size_t delta = 0;
  std::size_t qnil = 0;

  // Predicates in report order.
  std::vector<std::pair<std::string_view, Verdict const*>> predicates() const;
};

ClassificationReport classification_report(
    FiniteRing const& ring,
    ClassificationOptions const& options = {});

}  // namespace deltaring

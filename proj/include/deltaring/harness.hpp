#pragma once

// Corpus-quantified checks C01..C31. Each check states one result about
// Delta(R), quasipolarity or the clean-ring taxonomy and evaluates it on a
// single ring (pulling in components, corners or the base ring where the
// statement relates several rings). A verdict is never a proof: PASS means
// "not falsified on this ring".
//
// An extra check, AXIOMS, runs validate_ring first; rings that fail it get
// NOT-APPLICABLE for every C-check.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deltaring/classify.hpp"
#include "deltaring/constructions.hpp"
#include "deltaring/finite_ring.hpp"
#include "deltaring/ring_spec.hpp"

namespace deltaring {

enum class VerdictKind { pass, fail, not_applicable, vacuous };

std::string_view to_string(VerdictKind v);

struct CheckResult {
  std::string check;
  std::string ring;
  VerdictKind verdict = VerdictKind::pass;
  std::string witness;  // set on FAIL
  std::string note;
  double millis = 0.0;
};

struct CheckInfo {
  std::string_view id;
  std::string_view statement;
};

// AXIOMS followed by C01..C31.
std::span<CheckInfo const> check_catalog();
bool is_known_check(std::string_view id);

class ManifestError : public Error {
 public:
  ManifestError(std::string const& msg, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + msg), _line(line) {}
  char const* kind() const noexcept override { return "manifest"; }
  std::size_t line() const noexcept { return _line; }

 private:
  std::size_t _line;
};

// One ring spec per line; '#' starts a comment. Every spec is parsed (not
// built) here, so syntax errors surface with their line number.
std::vector<std::string> parse_manifest(std::string_view text);

// Z_n for n in {2,3,4,5,6,8,9,16}, F_4, T_2(Z_2), T_2(Z_4), T_3(Z_2),
// M_2(Z_2), M_2(Z_4), products of pairs from {Z_2, Z_3, Z_4}, corners of
// T_2(Z_2) and M_2(Z_2), H(1,1,-) over Z_2, Z_3, Z_4, three Dorroh rings.
std::string_view default_manifest();

// Everything the checks need about one ring, computed once.
struct RingFacts {
  explicit RingFacts(RingPtr ring, CleanOptions const& clean = {});

  RingPtr ring;
  ValidationReport validation;
  SpectralResult delta_qp;
  SpectralResult j_qp;
  SpectralResult unit_variant;
  CleanResult strongly_delta_clean;
  CleanResult uniquely_delta_clean;
  CleanResult uniquely_clean;
  CleanResult j_clean;
  Verdict abelian;
  Verdict local;
  Verdict pi_regular;
};

struct SuiteOptions {
  std::vector<std::string> checks;  // empty: all
  CleanOptions clean;
};

struct SuiteReport {
  std::vector<std::string> corpus;
  std::vector<CheckResult> results;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::size_t vacuous = 0;

  void tally();
};

struct DorrohData {
  RingPtr base;
  BimoduleRingAction action;
};

class Harness {
 public:
  explicit Harness(RingBuilder& builder, CleanOptions clean = {});

  // Throws std::invalid_argument for an unknown id.
  CheckResult run_check(std::string_view id, RingPtr const& ring);
  SuiteReport run_suite(std::vector<std::string> const& corpus,
                        SuiteOptions const& options = {});

  RingFacts const& facts(RingPtr const& ring);
  RingBuilder& builder() noexcept { return _builder; }

  // Base ring and action of a ring built from a dorroh(...) spec.
  DorrohData dorroh_data(FiniteRing const& dorroh_ring);

 private:
  RingBuilder& _builder;
  CleanOptions _clean;
  std::mutex _mutex;
  std::map<std::uint64_t, std::shared_ptr<RingFacts>> _facts;
};

// Dorroh theorem on D = D(R, V): D Delta-qp implies R Delta-qp, and
// conditions (i) R Delta-qp, (ii) idempotents of R commute with V,
// (iii) every v has w with v + w + vw = 0 imply D Delta-qp.
CheckResult check_dorroh(Harness& harness,
                         RingPtr const& base,
                         BimoduleRingAction const& action,
                         RingPtr const& dorroh_ring);

// H = H_(s,t)(R): U(H) and Delta(H) are the triples whose diagonal lies in
// U(R) (resp. Delta(R)); H is Delta-qp iff R is.
CheckResult check_h_ring_equivalence(Harness& harness,
                                     RingPtr const& base,
                                     Element s,
                                     Element t,
                                     RingPtr const& h);

}  // namespace deltaring

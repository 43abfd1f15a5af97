#pragma once

// JSON and markdown renderings of every CLI result. JSON keys are emitted in
// a fixed order so identical inputs give byte-identical output.

#include <string>

#include <nlohmann/json.hpp>

#include "deltaring/classify.hpp"
#include "deltaring/finite_ring.hpp"
#include "deltaring/harness.hpp"

namespace deltaring::report {

using Json = nlohmann::ordered_json;

Json element_json(FiniteRing const& ring, Element x);
Json set_json(FiniteRing const& ring, ElementSet const& s);

Json classification(FiniteRing const& ring, ClassificationReport const& r);
std::string classification_md(FiniteRing const& ring,
                              ClassificationReport const& r);

// Delta(R), J(R) and whether they coincide.
Json delta(FiniteRing const& ring);
std::string delta_md(FiniteRing const& ring);

Json spectral(FiniteRing const& ring, Element a, ElementSet const& idempotents);
std::string spectral_md(FiniteRing const& ring,
                        Element a,
                        ElementSet const& idempotents);

Json validation(FiniteRing const& ring, ValidationReport const& v);
std::string validation_md(FiniteRing const& ring, ValidationReport const& v);

// Index <-> label table.
Json describe(FiniteRing const& ring);
std::string describe_md(FiniteRing const& ring);

// millis appears only when timing is set.
Json suite(SuiteReport const& r, bool timing);
std::string suite_md(SuiteReport const& r, bool timing);

// Pretty JSON with a trailing newline.
std::string dump(Json const& j);

}  // namespace deltaring::report

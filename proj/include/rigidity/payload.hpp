#pragma once

// JSON payloads for every query. Rationals render as "p/q" strings, integer
// quantities as JSON integers; node numbers are 1-based.

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "rigidity/cartan.hpp"
#include "rigidity/grading.hpp"
#include "rigidity/kostant.hpp"
#include "rigidity/oracle.hpp"
#include "rigidity/paper_tables.hpp"
#include "rigidity/reps.hpp"

namespace rigidity {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json weight_json(const Weight& w);
[[nodiscard]] Json marking_json(const ParabolicMarking& m);

[[nodiscard]] Json root_system_payload(const RootSystemData& rs);

/// `report` is absent when only a marking was given; then only the 𝔤-side fields are filled.
[[nodiscard]] Json grading_payload(const RootSystemData& rs, const ParabolicMarking& marking,
                                   const std::optional<Weight>& lambda, const std::optional<GradingReport>& report);

[[nodiscard]] Json decompose_payload(const RootSystemData& rs, const Weight& lambda, const ModuleDecomposition& tensor,
                                     const ModuleDecomposition& gamma);

[[nodiscard]] Json h1_payload(const RootSystemData& rs, const Weight& lambda, const ParabolicMarking& marking,
                              const std::vector<H1Component>& comps);

[[nodiscard]] Json certify_payload(const RootSystemData& rs, const Weight& lambda, const RigidityVerdict& v,
                                   QuickVanishing quick);

[[nodiscard]] Json oracle_payload(const MatrixRep& rep, const GradedComplexDims& dims,
                                  const std::vector<H1Component>& predicted);

[[nodiscard]] Json paper_tables_payload(const PaperTablesReport& r);

}  // namespace rigidity

#pragma once

#include <json.hpp>

#include "thetakit/coaction.hpp"
#include "thetakit/presentation.hpp"

namespace thetakit {

using nlohmann::json;

json affine_to_json(const AffineForm& f);
AffineForm affine_from_json(const json& j);

json coefficient_to_json(const Coefficient& c, bool approx = false);
Coefficient coefficient_from_json(const json& j);

/// Presentation interchange format. Rationals are serialized as "p/q"
/// strings so exactness survives serialization; words reference generator
/// indices in the listed order.
json presentation_to_json(const Presentation& p, bool approx = false);
Presentation presentation_from_json(const json& j);

bool presentations_equal(const Presentation& a, const Presentation& b);

enum class TableFormat { Text, Json, Latex };

std::string phase_factor_text(const PhaseExponent& p);
std::string phase_factor_latex(const PhaseExponent& p);
std::string letter_latex(const Letter& l);

/// Deterministic exchange-relation table in the requested format;
/// structural relations are appended on request.
std::string format_relations(const AlgebraContext::Ptr& ctx,
                             const std::vector<ExchangeRelation>& relations,
                             const Presentation* structural, TableFormat format,
                             bool approx = false);

json constraint_report_to_json(const ConstraintReport& r);
json check_report_to_json(const CheckReport& r);
json fixed_points_to_json(const AlgebraContext::Ptr& ctx, const FixedPointResult& r,
                          const MatchReport* match);

}  // namespace thetakit

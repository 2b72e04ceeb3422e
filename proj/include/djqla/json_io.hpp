#pragma once

// JSON encodings. Scalars are strings in the scalar syntax; operator entries
// use 0-based composite indices; residual, bracket, word and permutation labels
// are 1-based (0 is the adjoined vector of the extended space).

#include "json.hpp"

#include "djqla/classify.hpp"
#include "djqla/qla.hpp"
#include "djqla/rmatrix.hpp"
#include "djqla/tensor.hpp"
#include "djqla/uea.hpp"

namespace djqla {

using json = nlohmann::json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const ParamSpec& spec);
ParamSpec param_spec_from_json(const json& j);

json to_json(const Operator2& m);
Operator2 operator_from_json(const json& j);

json to_json(const IceMatrix& m);
IceMatrix ice_from_json(const json& j);

json to_json(const StructureConstants& C);
StructureConstants structure_constants_from_json(const json& j);

json to_json(const ResidualTensor& r);
ResidualTensor residual_from_json(const json& j);

json to_json(const Element& e);
Element element_from_json(const json& j, int dim);

json to_json(const StandardForm& f);
StandardForm standard_form_from_json(const json& j);

json to_json(const EquivalenceReport& r);
json to_json(const AxiomReport& r);
json to_json(const DiamondReport& r);

json to_json(const SweepCell& c);
SweepCell sweep_cell_from_json(const json& j);
json to_json(const TargetedSample& t);
TargetedSample targeted_sample_from_json(const json& j);
json to_json(const SweepReport& r);
SweepReport sweep_report_from_json(const json& j);

}  // namespace djqla

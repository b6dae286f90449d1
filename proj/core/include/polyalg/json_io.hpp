#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "polyalg/algebra.hpp"
#include "polyalg/budget.hpp"
#include "polyalg/compact_set.hpp"
#include "polyalg/hulls.hpp"
#include "polyalg/identity_approx.hpp"
#include "polyalg/power_sum.hpp"
#include "polyalg/symmetric_form.hpp"
#include "polyalg/tensor_element.hpp"

namespace polyalg {

using json = nlohmann::json;

/// Canonical serialization: object keys sorted, floats printed with 17
/// significant digits. Identical values produce identical bytes.
std::string canonical_dump(const json& j, int indent = 0);

json complex_to_json(const Cx& z);
Cx complex_from_json(const json& j);
json cvec_to_json(const CVec& v);
CVec cvec_from_json(const json& j);
json cmat_to_json(const CMat& m);
CMat cmat_from_json(const json& j);

json norm_spec_to_json(const NormSpec& spec);
NormSpec norm_spec_from_json(const json& j);

json space_to_json(const FiniteSpace& space);
SpacePtr space_from_json(const json& j);

json algebra_to_json(const FiniteBanachAlgebra& algebra);
AlgebraPtr algebra_from_json(const json& j);

json power_sum_to_json(const PowerSumRep& rep);
PowerSumRep power_sum_from_json(const json& j, const SpacePtr& space, const AlgebraPtr& algebra);

json polynomial_sum_to_json(const PolynomialSum& p);
/// Accepts either a single power-sum document or a {"parts": [...]} sum.
PolynomialSum polynomial_sum_from_json(const json& j, const SpacePtr& space,
                                       const AlgebraPtr& algebra);

json compact_set_to_json(const CompactSet& K);
CompactSet compact_set_from_json(const json& j, const SpacePtr& space);

json symmetric_form_to_json(const SymmetricForm& form);

json tensor_element_to_json(const TensorElement& t);
TensorElement tensor_element_from_json(const json& j, const SpacePtr& space,
                                       const AlgebraPtr& algebra);

json budget_to_json(const SearchBudget& b);
SearchBudget budget_from_json(const json& j);

json witness_to_json(const Witness& w);
json norm_estimate_to_json(const NormEstimate& e);

json hull_certificate_to_json(const HullCertificate& cert);

}  // namespace polyalg

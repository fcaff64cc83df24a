#pragma once

#include "germcq/codim.hpp"
#include "germcq/cones.hpp"
#include "germcq/cq_tables.hpp"
#include "germcq/germ.hpp"
#include "germcq/normal_form.hpp"
#include "germcq/oracle.hpp"

#include <json.hpp>

namespace germcq {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

/// {"v":1,"n":2,"g":["x1 - 1/3"],"h":[...]} with polynomial text bodies.
Json germ_to_json(const ConstraintGerm& germ);
ConstraintGerm germ_from_json(const Json& j);

/// {"v":1,"table":"T2","type":"(1,k)","k":2,"n":3,"q":2,"l":1,"l1":0,
///  "eps":{...},"delta":{...},"alpha":{...}}
Json descriptor_to_json(const NormalForm& nf);
NormalForm descriptor_from_json(const Json& j);

/// True when the document carries a descriptor rather than a germ.
bool json_is_descriptor(const Json& j);

Json verdict_to_json(const CqVerdict& v);

Json cone_to_json(PolyhedralCone cone);  // {"le":[[..]],"eq":[[..]],"rays":..,"lineality":..}
PolyhedralCone cone_from_json(const Json& j);

Json cone_descriptor_to_json(const ConeDescriptor& c);

Json codim_report_to_json(const CodimReport& r);

Json agreement_report_to_json(const AgreementReport& r);
Json direction_estimate_to_json(const DirectionEstimate& e);

}  // namespace germcq

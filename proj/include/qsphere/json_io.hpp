#pragma once

#include <string>

#include "json.hpp"

#include "qsphere/orbit_oracle.hpp"
#include "qsphere/roots.hpp"
#include "qsphere/sphericity.hpp"

namespace qsphere {

using OrderedJson = nlohmann::ordered_json;

/// Accepts exactly {"vertices": [id...], "arrows": [[src,tgt]...],
/// "dims": {id: n...}} with dims covering exactly the vertex set.
QuiverSetting parse_setting(const std::string& text);
QuiverSetting setting_from_json(const OrderedJson& j);

OrderedJson setting_to_json(const QuiverSetting& s);
/// Canonical text form: vertices in declaration order, arrows in input
/// order, dims keyed in vertex order, two-space indent, trailing newline.
std::string serialize_setting(const QuiverSetting& s);

/// Vector keyed by vertex id; the key set must equal the vertex set.
DimVector vector_from_json(const Quiver& q, const OrderedJson& j);
OrderedJson vector_to_json(const Quiver& q, const DimVector& v);

OrderedJson root_class_to_json(const Quiver& q, const RootClass& rc);
OrderedJson verdict_to_json(const SphericityVerdict& v);
/// The five-key verdict shape for a whole input: components combined as in
/// analyze(), pieces concatenated.
OrderedJson combined_verdict_to_json(const std::vector<SphericityVerdict>& components);
OrderedJson orbit_report_to_json(const OrbitReport& r);
OrderedJson scan_report_to_json(const ScanReport& r);

std::string method_name(Method m);
std::string root_kind_name(RootKind k);
std::string group_kind_name(GroupKind k);

}  // namespace qsphere

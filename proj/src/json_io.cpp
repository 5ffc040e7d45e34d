#include "qsphere/json_io.hpp"

#include <stdexcept>

namespace qsphere {

namespace {

constexpr Int kMaxDimension = 1'000'000;
constexpr Int kMaxVectorEntry = 1'000'000;

[[noreturn]] void bad_input(const std::string& what) {
  throw std::runtime_error("invalid setting: " + what);
}

Int integer_value(const OrderedJson& j, const std::string& key, Int bound) {
  if (!j.is_number_integer())
    bad_input("value for \"" + key + "\" is not an integer");
  const Int v = j.get<Int>();
  if (v > bound || v < -bound)
    bad_input("value for \"" + key + "\" exceeds " + std::to_string(bound));
  return v;
}

}  // namespace

QuiverSetting setting_from_json(const OrderedJson& j) {
  if (!j.is_object()) bad_input("top level is not an object");
  for (const auto& [key, value] : j.items())
    if (key != "vertices" && key != "arrows" && key != "dims")
      bad_input("unexpected key \"" + key + "\"");
  if (!j.contains("vertices") || !j.contains("arrows") || !j.contains("dims"))
    bad_input("vertices, arrows and dims are all required");

  const OrderedJson& jv = j["vertices"];
  if (!jv.is_array()) bad_input("vertices is not an array");
  std::vector<std::string> vertices;
  for (const OrderedJson& v : jv) {
    if (!v.is_string()) bad_input("vertex identifier is not a string");
    vertices.push_back(v.get<std::string>());
  }

  const OrderedJson& ja = j["arrows"];
  if (!ja.is_array()) bad_input("arrows is not an array");
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const OrderedJson& a : ja) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
      bad_input("arrow is not a [source, target] pair of identifiers");
    arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
  }

  const OrderedJson& jd = j["dims"];
  if (!jd.is_object()) bad_input("dims is not an object");

  try {
    Quiver quiver(std::move(vertices), arrows);
    if (jd.size() != static_cast<size_t>(quiver.vertex_count()))
      bad_input("dims does not cover exactly the vertex set");
    DimVector dims(quiver.vertex_count());
    for (const auto& [key, value] : jd.items()) {
      const int v = quiver.index_of(key);  // throws on unknown vertex
      const Int d = integer_value(value, key, kMaxDimension);
      if (d < 0) bad_input("negative dimension for \"" + key + "\"");
      dims[v] = d;
    }
    return {std::move(quiver), std::move(dims)};
  } catch (const std::invalid_argument& e) {
    bad_input(e.what());
  }
}

QuiverSetting parse_setting(const std::string& text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const OrderedJson::parse_error& e) {
    throw std::runtime_error(std::string("malformed JSON: ") + e.what());
  }
  return setting_from_json(j);
}

OrderedJson setting_to_json(const QuiverSetting& s) {
  OrderedJson j;
  j["vertices"] = OrderedJson::array();
  for (const std::string& id : s.quiver.vertex_ids()) j["vertices"].push_back(id);
  j["arrows"] = OrderedJson::array();
  for (const Arrow& a : s.quiver.arrows())
    j["arrows"].push_back({s.quiver.vertex_id(a.src), s.quiver.vertex_id(a.tgt)});
  j["dims"] = vector_to_json(s.quiver, s.dims);
  return j;
}

std::string serialize_setting(const QuiverSetting& s) {
  return setting_to_json(s).dump(2) + "\n";
}

DimVector vector_from_json(const Quiver& q, const OrderedJson& j) {
  if (!j.is_object()) bad_input("vector is not an object");
  if (j.size() != static_cast<size_t>(q.vertex_count()))
    bad_input("vector does not cover exactly the vertex set");
  DimVector v(q.vertex_count());
  try {
    for (const auto& [key, value] : j.items())
      v[q.index_of(key)] = integer_value(value, key, kMaxVectorEntry);
  } catch (const std::invalid_argument& e) {
    bad_input(e.what());
  }
  return v;
}

OrderedJson vector_to_json(const Quiver& q, const DimVector& v) {
  OrderedJson j = OrderedJson::object();
  for (int i = 0; i < q.vertex_count(); ++i) j[q.vertex_id(i)] = v[i];
  return j;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::RootCriterion: return "root_criterion";
    case Method::Structural: return "structural";
    case Method::Both: return "both";
  }
  return "structural";
}

std::string root_kind_name(RootKind k) {
  switch (k) {
    case RootKind::RealRoot: return "RealRoot";
    case RootKind::ImaginaryRoot: return "ImaginaryRoot";
    case RootKind::NotRoot: return "NotRoot";
  }
  return "NotRoot";
}

std::string group_kind_name(GroupKind k) {
  return k == GroupKind::Borel ? "borel" : "full";
}

OrderedJson root_class_to_json(const Quiver& q, const RootClass& rc) {
  OrderedJson j;
  j["kind"] = root_kind_name(rc.kind);
  j["trace"] = OrderedJson::array();
  for (int v : rc.trace) j["trace"].push_back(q.vertex_id(v));
  j["representative"] =
      rc.representative ? vector_to_json(q, *rc.representative) : OrderedJson(nullptr);
  return j;
}

namespace {

OrderedJson pieces_to_json(const SphericityVerdict& v) {
  if (!v.decomposition) return nullptr;
  OrderedJson pieces = OrderedJson::array();
  for (size_t i = 0; i < v.decomposition->pieces.size(); ++i) {
    OrderedJson piece = setting_to_json(v.decomposition->pieces[i]);
    piece["label"] = i < v.piece_labels.size() ? v.piece_labels[i] : "forbidden";
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

OrderedJson witness_to_json(const SphericityVerdict& v) {
  if (!v.witness) return nullptr;
  const LegExtendedSetting x = extend(v.setting);
  return vector_to_json(x.extended.quiver, *v.witness);
}

}  // namespace

OrderedJson verdict_to_json(const SphericityVerdict& v) {
  OrderedJson j;
  j["spherical"] = v.spherical;
  j["method"] = method_name(v.method);
  j["witness"] = witness_to_json(v);
  j["pieces"] = pieces_to_json(v);
  j["agreement"] = v.agreement ? OrderedJson(*v.agreement) : OrderedJson(nullptr);
  return j;
}

OrderedJson combined_verdict_to_json(const std::vector<SphericityVerdict>& components) {
  OrderedJson j;
  if (components.empty()) {
    j["spherical"] = true;
    j["method"] = method_name(Method::Both);
    j["witness"] = nullptr;
    j["pieces"] = nullptr;
    j["agreement"] = true;
    return j;
  }

  bool spherical = true;
  bool all_both = true;
  bool agreement = true;
  bool any_decomposed = false;
  OrderedJson witness = nullptr;
  OrderedJson pieces = OrderedJson::array();
  for (const SphericityVerdict& v : components) {
    spherical = spherical && v.spherical;
    all_both = all_both && v.method == Method::Both;
    if (v.agreement) agreement = agreement && *v.agreement;
    if (witness.is_null()) witness = witness_to_json(v);
    const OrderedJson p = pieces_to_json(v);
    if (p.is_array()) {
      any_decomposed = true;
      for (const OrderedJson& piece : p) pieces.push_back(piece);
    }
  }
  j["spherical"] = spherical;
  j["method"] = method_name(all_both ? Method::Both : Method::Structural);
  j["witness"] = std::move(witness);
  j["pieces"] = any_decomposed ? std::move(pieces) : OrderedJson(nullptr);
  j["agreement"] = all_both ? OrderedJson(agreement) : OrderedJson(nullptr);
  return j;
}

OrderedJson orbit_report_to_json(const OrbitReport& r) {
  OrderedJson j;
  j["setting"] = setting_to_json(r.setting);
  j["prime"] = r.prime;
  j["kind"] = group_kind_name(r.kind);
  j["group_order"] = r.group_order;
  j["space_dim"] = r.space_dim;
  j["space_size"] = r.space_size;
  j["orbit_count"] = r.orbit_count;
  return j;
}

OrderedJson scan_report_to_json(const ScanReport& r) {
  OrderedJson j;
  j["max_vertices"] = r.max_vertices;
  j["max_dim"] = r.max_dim;
  j["settings"] = r.settings;
  j["spherical"] = r.spherical;
  j["non_spherical"] = r.non_spherical;
  j["disagreements"] = OrderedJson::array();
  for (const ScanDisagreement& d : r.disagreements) {
    OrderedJson dj;
    dj["setting"] = setting_to_json(d.setting);
    dj["structural"] = d.structural;
    dj["root_criterion"] = d.root_criterion;
    j["disagreements"].push_back(std::move(dj));
  }
  return j;
}

}  // namespace qsphere

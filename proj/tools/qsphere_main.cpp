#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qsphere/json_io.hpp"

namespace {

using qsphere::CostGuard;
using qsphere::DimVector;
using qsphere::GroupKind;
using qsphere::Int;
using qsphere::OrbitReport;
using qsphere::OrderedJson;
using qsphere::QuiverSetting;
using qsphere::SphericityVerdict;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CostGuard guard_from_environment() {
  CostGuard guard;
  if (const char* raw = std::getenv("QSPHERE_MAX_COST")) {
    try {
      const long long v = std::stoll(raw);
      if (v < 1) throw std::invalid_argument("below 1");
      guard.max_group_order = static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw std::runtime_error(std::string("QSPHERE_MAX_COST is not a positive integer: ") + raw);
    }
  }
  return guard;
}

void emit(const OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

std::string format_vector(const OrderedJson& j) {
  if (j.is_null()) return "none";
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (!out.empty()) out += " ";
    out += key + "=" + value.dump();
  }
  return out.empty() ? "{}" : out;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int run_check(const std::string& input, bool text) {
  const QuiverSetting s = qsphere::parse_setting(read_input(input));
  const std::vector<SphericityVerdict> components = qsphere::analyze(s);
  const OrderedJson j = qsphere::combined_verdict_to_json(components);

  if (text) {
    std::cout << "spherical: " << (j["spherical"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "method: " << j["method"].get<std::string>() << "\n";
    std::cout << "witness: " << format_vector(j["witness"]) << "\n";
    if (j["pieces"].is_array()) {
      for (const OrderedJson& piece : j["pieces"]) {
        std::cout << "piece: " << piece["label"].get<std::string>() << " dims "
                  << format_vector(piece["dims"]) << "\n";
      }
    }
    std::cout << "agreement: "
              << (j["agreement"].is_null() ? "n/a"
                                           : (j["agreement"].get<bool>() ? "yes" : "no"))
              << "\n";
  } else {
    emit(j);
  }

  for (const SphericityVerdict& v : components)
    if (v.agreement && !*v.agreement) return 1;
  return 0;
}

int run_classify_root(const std::string& input, const std::string& vector_text,
                      bool text) {
  const QuiverSetting s = qsphere::parse_setting(read_input(input));
  OrderedJson jv;
  try {
    jv = OrderedJson::parse(vector_text);
  } catch (const OrderedJson::parse_error& e) {
    throw std::runtime_error(std::string("malformed vector JSON: ") + e.what());
  }
  const DimVector d = qsphere::vector_from_json(s.quiver, jv);
  const qsphere::RootClass rc = qsphere::classify_root(s.quiver, d);
  const OrderedJson j = qsphere::root_class_to_json(s.quiver, rc);

  if (text) {
    std::cout << "kind: " << j["kind"].get<std::string>() << "\n";
    std::string trace;
    for (const OrderedJson& t : j["trace"]) {
      if (!trace.empty()) trace += " ";
      trace += t.get<std::string>();
    }
    std::cout << "trace: " << (trace.empty() ? "-" : trace) << "\n";
    std::cout << "representative: " << format_vector(j["representative"]) << "\n";
  } else {
    emit(j);
  }
  return 0;
}

int run_extend(const std::string& input, bool text) {
  const QuiverSetting s = qsphere::parse_setting(read_input(input));
  const qsphere::LegExtendedSetting x = qsphere::extend(s);
  const OrderedJson j = qsphere::setting_to_json(x.extended);
  if (text) {
    std::cout << "vertices: " << j["vertices"].size() << "\n";
    std::cout << "arrows: " << j["arrows"].size() << "\n";
    std::cout << "dims: " << format_vector(j["dims"]) << "\n";
  } else {
    emit(j);
  }
  return 0;
}

int run_witness(const std::string& input, bool text) {
  const QuiverSetting s = qsphere::parse_setting(read_input(input));
  const auto witness = qsphere::minimal_witness(s);
  OrderedJson j;
  if (witness) {
    const qsphere::LegExtendedSetting x = qsphere::extend(s);
    j["witness"] = qsphere::vector_to_json(x.extended.quiver, *witness);
    j["entry_sum"] = witness->sum();
  } else {
    j["witness"] = nullptr;
    j["entry_sum"] = nullptr;
  }
  if (text) {
    std::cout << "witness: " << format_vector(j["witness"]) << "\n";
    if (!j["entry_sum"].is_null())
      std::cout << "entry_sum: " << j["entry_sum"].get<Int>() << "\n";
  } else {
    emit(j);
  }
  return 0;
}

int run_scan(int max_vertices, int max_dim, bool text) {
  const qsphere::ScanReport report = qsphere::scan(max_vertices, max_dim);
  const OrderedJson j = qsphere::scan_report_to_json(report);
  if (text) {
    std::cout << "settings: " << report.settings << "\n";
    std::cout << "spherical: " << report.spherical << "\n";
    std::cout << "non_spherical: " << report.non_spherical << "\n";
    std::cout << "disagreements: " << report.disagreements.size() << "\n";
  } else {
    emit(j);
  }
  return report.disagreements.empty() ? 0 : 1;
}

int run_oracle(const std::string& input, std::vector<Int> primes,
               const std::string& group, bool bijection, bool text) {
  const QuiverSetting s = qsphere::parse_setting(read_input(input));
  const CostGuard guard = guard_from_environment();
  const GroupKind kind = group == "full" ? GroupKind::Full : GroupKind::Borel;

  OrderedJson j;
  j["reports"] = OrderedJson::array();
  std::vector<OrbitReport> reports;
  for (Int p : primes) {
    reports.push_back(qsphere::count_orbits(s, p, kind, guard));
    j["reports"].push_back(qsphere::orbit_report_to_json(reports.back()));
  }

  if (primes.size() >= 2 && kind == GroupKind::Borel) {
    const qsphere::GrowthProbe probe = qsphere::growth_probe(s, primes, guard);
    j["growing"] = probe.growing;
  } else {
    j["growing"] = nullptr;
  }

  if (bijection) {
    OrderedJson checks = OrderedJson::array();
    for (Int p : primes) {
      OrderedJson c;
      c["prime"] = p;
      c["equal"] = qsphere::flag_bijection_check(s, p, guard);
      checks.push_back(std::move(c));
    }
    j["flag_bijection"] = std::move(checks);
  } else {
    j["flag_bijection"] = nullptr;
  }

  if (text) {
    std::cout << "setting\tp\tgroup\t|G|\torbits\n";
    for (const OrbitReport& r : reports) {
      std::cout << format_vector(qsphere::vector_to_json(r.setting.quiver, r.setting.dims))
                << "\t" << r.prime << "\t" << qsphere::group_kind_name(r.kind) << "\t"
                << r.group_order << "\t" << r.orbit_count << "\n";
    }
    if (!j["growing"].is_null())
      std::cout << "growing: " << (j["growing"].get<bool>() ? "yes" : "no") << "\n";
    if (!j["flag_bijection"].is_null())
      for (const OrderedJson& c : j["flag_bijection"])
        std::cout << "flag_bijection p=" << c["prime"].get<Int>() << ": "
                  << (c["equal"].get<bool>() ? "ok" : "MISMATCH") << "\n";
  } else {
    emit(j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sphericity analysis for quiver representation spaces"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string input = "-";
  std::string vector_text;
  int max_vertices = 4;
  int max_dim = 3;
  std::vector<Int> primes{2, 3, 5};
  std::string group = "borel";
  bool bijection = false;

  CLI::App* check = app.add_subcommand("check", "decide sphericity both ways");
  check->fallthrough();
  check->add_option("--input", input, "setting file, or - for stdin")->required();

  CLI::App* classify = app.add_subcommand("classify-root", "reflection reduction of a vector");
  classify->fallthrough();
  classify->add_option("--input", input, "setting file, or - for stdin")->required();
  classify->add_option("--vector", vector_text, "vector as inline JSON")->required();

  CLI::App* extend = app.add_subcommand("extend", "emit the leg-extended setting");
  extend->fallthrough();
  extend->add_option("--input", input, "setting file, or - for stdin")->required();

  CLI::App* witness = app.add_subcommand("witness", "minimal gentle imaginary vector");
  witness->fallthrough();
  witness->add_option("--input", input, "setting file, or - for stdin")->required();

  CLI::App* scan = app.add_subcommand("scan", "cross-validate both deciders over tree settings");
  scan->fallthrough();
  scan->add_option("--max-vertices", max_vertices, "tree size bound")->required();
  scan->add_option("--max-dim", max_dim, "dimension bound")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "finite-field orbit counts");
  oracle->fallthrough();
  oracle->add_option("--input", input, "setting file, or - for stdin")->required();
  oracle->add_option("--primes", primes, "ascending primes")->delimiter(',');
  oracle->add_option("--group", group, "group kind")
      ->check(CLI::IsMember({"borel", "full"}));
  oracle->add_flag("--bijection", bijection, "also run the flag bijection check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool text = format == "text";
  try {
    if (app.got_subcommand(check)) return run_check(input, text);
    if (app.got_subcommand(classify)) return run_classify_root(input, vector_text, text);
    if (app.got_subcommand(extend)) return run_extend(input, text);
    if (app.got_subcommand(witness)) return run_witness(input, text);
    if (app.got_subcommand(scan)) return run_scan(max_vertices, max_dim, text);
    if (app.got_subcommand(oracle)) return run_oracle(input, primes, group, bijection, text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

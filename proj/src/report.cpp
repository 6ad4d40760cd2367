#include "mustafin/report.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>

#include "mustafin/apartment.hpp"
#include "mustafin/errors.hpp"
#include "mustafin/hull.hpp"
#include "mustafin/linked_graph.hpp"
#include "mustafin/oracles.hpp"
#include "mustafin/special_fiber.hpp"

namespace mustafin {

using nlohmann::json;

// ---------------------------------------------------------------- JSON

void to_json(json& j, const ConfigurationDocument& x) {
  j = json{{"d", x.d}, {"points", x.points}};
  if (x.label) j["label"] = *x.label;
}

void from_json(const json& j, ConfigurationDocument& x) {
  j.at("d").get_to(x.d);
  j.at("points").get_to(x.points);
  if (j.contains("label") && !j.at("label").is_null()) {
    x.label = j.at("label").get<std::string>();
  } else {
    x.label.reset();
  }
}

void to_json(json& j, const HullReport& x) {
  j = json{{"config", x.config}, {"hull", x.hull}, {"size", x.hull.size()},
           {"convex", x.convex}};
}

void from_json(const json& j, HullReport& x) {
  j.at("config").get_to(x.config);
  j.at("hull").get_to(x.hull);
  j.at("convex").get_to(x.convex);
}

void to_json(json& j, const VertexReport& x) {
  j = json{{"vertex", x.vertex},
           {"argmins", x.argmins},
           {"kernel_dims", x.kernel_dims},
           {"factor_dims", x.factor_dims},
           {"signature", x.signature},
           {"p", x.p},
           {"multidegrees", x.multidegrees},
           {"is_component", x.is_component},
           {"is_primary", x.is_primary}};
}

void from_json(const json& j, VertexReport& x) {
  j.at("vertex").get_to(x.vertex);
  j.at("argmins").get_to(x.argmins);
  j.at("kernel_dims").get_to(x.kernel_dims);
  j.at("factor_dims").get_to(x.factor_dims);
  j.at("signature").get_to(x.signature);
  j.at("p").get_to(x.p);
  j.at("multidegrees").get_to(x.multidegrees);
  j.at("is_component").get_to(x.is_component);
  j.at("is_primary").get_to(x.is_primary);
}

void to_json(json& j, const PartitionEntry& x) {
  j = json{{"multidegree", x.multidegree}, {"vertex", x.vertex}};
}

void from_json(const json& j, PartitionEntry& x) {
  j.at("multidegree").get_to(x.multidegree);
  j.at("vertex").get_to(x.vertex);
}

void to_json(json& j, const CountsReport& x) {
  j = json{{"total", x.total}, {"primary", x.primary}, {"secondary", x.secondary}};
}

void from_json(const json& j, CountsReport& x) {
  j.at("total").get_to(x.total);
  j.at("primary").get_to(x.primary);
  j.at("secondary").get_to(x.secondary);
}

void to_json(json& j, const ClassificationReport& x) {
  j = json{{"config", x.config},
           {"hull", x.hull},
           {"vertices", x.vertices},
           {"counts", x.counts},
           {"general_position", x.general_position},
           {"monomial_type", x.monomial_type},
           {"partition", x.partition}};
}

void from_json(const json& j, ClassificationReport& x) {
  j.at("config").get_to(x.config);
  j.at("hull").get_to(x.hull);
  j.at("vertices").get_to(x.vertices);
  j.at("counts").get_to(x.counts);
  j.at("general_position").get_to(x.general_position);
  j.at("monomial_type").get_to(x.monomial_type);
  j.at("partition").get_to(x.partition);
}

void to_json(json& j, const GraphEdgeReport& x) {
  j = json{{"u", x.u}, {"v", x.v}, {"forward", x.forward}, {"backward", x.backward}};
}

void from_json(const json& j, GraphEdgeReport& x) {
  j.at("u").get_to(x.u);
  j.at("v").get_to(x.v);
  j.at("forward").get_to(x.forward);
  j.at("backward").get_to(x.backward);
}

void to_json(json& j, const GraphReport& x) {
  j = json{{"d", x.d}, {"vertices", x.vertices}, {"edges", x.edges}};
}

void from_json(const json& j, GraphReport& x) {
  j.at("d").get_to(x.d);
  j.at("vertices").get_to(x.vertices);
  j.at("edges").get_to(x.edges);
}

void to_json(json& j, const MinorReport& x) {
  j = json{{"rows", x.rows},
           {"cols", x.cols},
           {"value", x.value},
           {"optimal_count", x.optimal_count}};
}

void from_json(const json& j, MinorReport& x) {
  j.at("rows").get_to(x.rows);
  j.at("cols").get_to(x.cols);
  j.at("value").get_to(x.value);
  j.at("optimal_count").get_to(x.optimal_count);
}

void to_json(json& j, const GeneralPositionReport& x) {
  j = json{{"general_position", x.general_position}};
  j["witness"] = x.witness ? json(*x.witness) : json(nullptr);
}

void from_json(const json& j, GeneralPositionReport& x) {
  j.at("general_position").get_to(x.general_position);
  if (j.contains("witness") && !j.at("witness").is_null()) {
    x.witness = j.at("witness").get<MinorReport>();
  } else {
    x.witness.reset();
  }
}

void to_json(json& j, const CheckResult& x) {
  j = json{{"name", x.name},
           {"cases", x.cases},
           {"failures", x.failures},
           {"first_failure", x.first_failure}};
}

void from_json(const json& j, CheckResult& x) {
  j.at("name").get_to(x.name);
  j.at("cases").get_to(x.cases);
  j.at("failures").get_to(x.failures);
  j.at("first_failure").get_to(x.first_failure);
}

void to_json(json& j, const VerifyReport& x) {
  j = json{{"seed", x.seed}, {"checks", x.checks}, {"passed", x.passed}};
}

void from_json(const json& j, VerifyReport& x) {
  j.at("seed").get_to(x.seed);
  j.at("checks").get_to(x.checks);
  j.at("passed").get_to(x.passed);
}

// ------------------------------------------------------------ documents

ConfigurationDocument parse_configuration_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("configuration document must be a JSON object");
  if (!j.contains("d") || !j.at("d").is_number_integer()) {
    throw ParseError("field \"d\" must be an integer");
  }
  if (!j.contains("points") || !j.at("points").is_array()) {
    throw ParseError("field \"points\" must be an array of integer arrays");
  }
  for (const auto& p : j.at("points")) {
    if (!p.is_array()) throw ParseError("each point must be an array of integers");
    for (const auto& c : p) {
      if (!c.is_number_integer()) throw ParseError("point coordinates must be integers");
    }
  }
  if (j.contains("label") && !j.at("label").is_null() && !j.at("label").is_string()) {
    throw ParseError("field \"label\" must be a string");
  }
  if (j.at("d").get<long long>() < 2) throw DimensionError("d must be at least 2");
  ConfigurationDocument doc;
  try {
    j.get_to(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed configuration: ") + e.what());
  }
  for (const auto& p : doc.points) {
    if (p.size() != doc.d) {
      throw DimensionError("point of length " + std::to_string(p.size()) +
                           " in dimension " + std::to_string(doc.d));
    }
  }
  return doc;
}

Configuration to_configuration(const ConfigurationDocument& doc) {
  return Configuration::from_raw(doc.d, doc.points);
}

ConfigurationDocument to_document(const Configuration& config,
                                  std::optional<std::string> label) {
  ConfigurationDocument doc{config.dim(), {}, std::move(label)};
  for (const auto& p : config.points()) doc.points.push_back(p.coords());
  return doc;
}

// -------------------------------------------------------------- builders

namespace {

std::vector<std::size_t> one_based(std::uint64_t mask, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d; ++j)
    if (mask >> j & 1) out.push_back(j + 1);
  return out;
}

}  // namespace

HullReport build_hull_report(const Configuration& config,
                             std::optional<std::string> label) {
  HullReport r{to_document(config, std::move(label)), {}, false};
  const auto hull = lattice_points(config);
  for (const auto& p : hull.points) r.hull.push_back(p.coords());
  r.convex = hull.points.size() == config.size();
  return r;
}

ClassificationReport build_classification_report(const Configuration& config,
                                                 std::optional<std::string> label) {
  ClassificationReport r;
  r.config = to_document(config, std::move(label));
  const auto descriptors = classify(config);
  const std::size_t d = config.dim();
  for (const auto& desc : descriptors) {
    r.hull.push_back(desc.vertex.coords());
    VertexReport v;
    v.vertex = desc.vertex.coords();
    for (std::size_t i = 0; i < config.size(); ++i) {
      v.argmins.push_back(one_based(desc.profile.argmins[i], d));
      v.kernel_dims.push_back(desc.profile.kernels[i].dim());
    }
    v.factor_dims = desc.factor_dims;
    v.signature = skeleton_signature(config, desc.vertex).codims;
    v.p = desc.p();
    v.multidegrees.assign(desc.multidegrees.tuples.begin(), desc.multidegrees.tuples.end());
    v.is_component = desc.is_component;
    v.is_primary = desc.is_primary;
    r.vertices.push_back(std::move(v));
  }
  const auto counts = component_counts(descriptors);
  if (counts.primary != config.size()) {
    throw InvariantViolation("expected one primary component per generator");
  }
  r.counts = {counts.total, counts.primary, counts.secondary};
  r.general_position = is_general_position(config);
  r.monomial_type = is_monomial_type(config, descriptors);
  for (const auto& [m, v] : multidegree_partition(config, descriptors)) {
    r.partition.push_back({m, v.coords()});
  }
  return r;
}

GraphReport build_graph_report(const Configuration& config) {
  const auto g = build_graph(config);
  GraphReport r{g.d, {}, {}};
  for (const auto& v : g.vertices) r.vertices.push_back(v.coords());
  for (const auto& [a, b] : g.edges) {
    r.edges.push_back({g.vertices[a].coords(), g.vertices[b].coords(),
                       g.map(a, b).entries(), g.map(b, a).entries()});
  }
  return r;
}

GeneralPositionReport build_general_position_report(const Configuration& config) {
  GeneralPositionReport r;
  const auto minor = find_singular_minor(config);
  r.general_position = !minor.has_value();
  if (minor) {
    MinorReport w;
    for (auto i : minor->rows) w.rows.push_back(i + 1);
    for (auto j : minor->cols) w.cols.push_back(j + 1);
    w.value = minor->det.value;
    w.optimal_count = minor->det.optimal_count;
    r.witness = w;
  }
  return r;
}

// ---------------------------------------------------------- verification

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok) {
      if (result_.failures == 0) result_.first_failure = what;
      ++result_.failures;
    }
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

// Brute-force hull enumeration is (spread+1)^n; skip configurations where
// that is out of reach.
bool brute_force_feasible(const Configuration& config) {
  Coord lo = 0, hi = 0;
  for (const auto& v : config.points())
    for (auto c : v.coords()) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  double work = 1;
  for (std::size_t i = 0; i < config.size(); ++i) work *= static_cast<double>(hi - lo + 1);
  return work <= 2e6;
}

void verify_one(const Configuration& config, Check& membership, Check& locate,
                Check& partition, Check& roots, Check& kernels) {
  std::string tag;
  for (const auto& p : config.points()) tag += p.to_string();
  const auto hull = lattice_points(config);

  if (brute_force_feasible(config)) {
    const auto brute = oracle::hull_by_combinations(config);
    membership.record(brute == hull.points, "hull mismatch for " + tag);
    for (const auto& x : oracle::box_points(config)) {
      membership.record(contains(config, x) == (brute.count(x) > 0),
                        "membership of " + x.to_string() + " in " + tag);
    }
    for (const auto& m : compositions(config.size(), config.dim() - 1)) {
      const auto fast = locate_by_multidegree(config, m);
      const auto scan = oracle::signature_scan(config, m);
      locate.record(fast == scan, "locate mismatch in " + tag);
    }
  }

  try {
    const auto descriptors = classify(config);
    multidegree_partition(config, descriptors);
    partition.record(true, "");
    for (const auto& desc : descriptors) {
      const auto sig = skeleton_signature(config, desc.vertex);
      const auto maps = simple_root_maps(config, desc.vertex);
      for (std::size_t i = 0; i < config.size(); ++i) {
        roots.record(maps[i].support == desc.profile.argmins[i],
                     "root map " + desc.vertex.to_string() + " factor " +
                         std::to_string(i + 1) + " in " + tag);
        kernels.record(desc.profile.kernels[i].dim() + 1 + sig.codims[i] == config.dim(),
                       "kernel dimension at " + desc.vertex.to_string() + " in " + tag);
      }
    }
  } catch (const InvariantViolation& e) {
    partition.record(false, std::string(e.what()) + " in " + tag);
  }
}

}  // namespace

VerifyReport run_verification(const Configuration& config, std::uint64_t seed,
                              std::size_t random_cases) {
  Check membership("membership_vs_bruteforce");
  Check determinant("determinant_vs_permutations");
  Check locate("locate_vs_signature_scan");
  Check partition("partition_totality");
  Check roots("root_maps_vs_profiles");
  Check kernels("kernel_dimension_identity");

  verify_one(config, membership, locate, partition, roots, kernels);

  // Every square minor of the coordinate matrix up to 6x6.
  if (config.size() <= 16 && config.dim() <= 16) {
    for (std::uint32_t rows = 1; rows < (1u << config.size()); ++rows) {
      const int k = std::popcount(rows);
      if (k > 6) continue;
      for (std::uint32_t cols = 1; cols < (1u << config.dim()); ++cols) {
        if (std::popcount(cols) != k) continue;
        std::vector<std::vector<Coord>> m;
        for (std::size_t i = 0; i < config.size(); ++i) {
          if (!(rows >> i & 1)) continue;
          m.emplace_back();
          for (std::size_t j = 0; j < config.dim(); ++j)
            if (cols >> j & 1) m.back().push_back(config[i][j]);
        }
        const auto a = tropical_determinant(m);
        const auto b = oracle::determinant_by_permutations(m);
        determinant.record(a.value == b.value && a.optimal_count == b.optimal_count,
                           "minor determinant mismatch");
      }
    }
  }

  std::mt19937_64 rng(seed);
  const std::size_t d = std::min<std::size_t>(config.dim(), 4);
  const std::size_t n = std::min<std::size_t>(config.size(), 4);
  for (std::size_t c = 0; c < random_cases; ++c) {
    const auto rc = oracle::random_configuration(rng, d, n, -5, 5);
    verify_one(rc, membership, locate, partition, roots, kernels);
    const std::size_t r = 1 + c % 6;
    const auto m = oracle::random_matrix(rng, r, -10, 10);
    const auto a = tropical_determinant(m);
    const auto b = oracle::determinant_by_permutations(m);
    determinant.record(a.value == b.value && a.optimal_count == b.optimal_count,
                       "random determinant mismatch (r=" + std::to_string(r) + ")");
  }

  VerifyReport r;
  r.seed = seed;
  for (const auto* c : {&membership, &determinant, &locate, &partition, &roots, &kernels}) {
    r.checks.push_back(c->result());
  }
  r.passed = std::all_of(r.checks.begin(), r.checks.end(),
                         [](const CheckResult& c) { return c.failures == 0; });
  return r;
}

// --------------------------------------------------------------- tables

namespace {

template <typename T>
std::string vec(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string set_of(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::string header(const ConfigurationDocument& doc) {
  std::ostringstream os;
  if (doc.label) os << "label: " << *doc.label << '\n';
  os << "d = " << doc.d << ", n = " << doc.points.size() << '\n';
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    os << "  v" << i + 1 << " = " << vec(doc.points[i]) << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_table(const ConfigurationDocument& r) { return header(r); }

std::string render_table(const HullReport& r) {
  std::ostringstream os;
  os << header(r.config);
  os << "hull lattice points: " << r.hull.size()
     << (r.convex ? " (configuration is convex)" : "") << '\n';
  for (const auto& p : r.hull) os << "  " << vec(p) << '\n';
  return os.str();
}

std::string render_table(const ClassificationReport& r) {
  std::ostringstream os;
  os << header(r.config);
  os << std::left << std::setw(20) << "vertex" << std::setw(22) << "argmins"
     << std::setw(14) << "factor dims" << std::setw(4) << "p" << std::setw(11)
     << "component" << "multidegrees\n";
  for (const auto& v : r.vertices) {
    std::string args;
    for (const auto& a : v.argmins) args += set_of(a);
    std::string md;
    for (const auto& t : v.multidegrees) md += (md.empty() ? "" : " ") + vec(t);
    const char* kind = !v.is_component ? "-" : v.is_primary ? "primary" : "secondary";
    os << std::left << std::setw(20) << vec(v.vertex) << std::setw(22) << args
       << std::setw(14) << vec(v.factor_dims) << std::setw(4) << v.p << std::setw(11)
       << kind << md << '\n';
  }
  os << "components: " << r.counts.total << " (primary " << r.counts.primary
     << ", secondary " << r.counts.secondary << ")\n";
  os << "general position: " << (r.general_position ? "yes" : "no")
     << ", monomial type: " << (r.monomial_type ? "yes" : "no") << '\n';
  os << "multidegree partition:\n";
  for (const auto& e : r.partition) {
    os << "  " << std::left << std::setw(14) << vec(e.multidegree) << "-> "
       << vec(e.vertex) << '\n';
  }
  return os.str();
}

std::string render_table(const GraphReport& r) {
  std::ostringstream os;
  os << "vertices: " << r.vertices.size() << ", edges: " << r.edges.size() << '\n';
  os << std::left << std::setw(20) << "u" << std::setw(20) << "v" << std::setw(16)
     << "u->v" << "v->u\n";
  for (const auto& e : r.edges) {
    os << std::left << std::setw(20) << vec(e.u) << std::setw(20) << vec(e.v)
       << std::setw(16) << vec(e.forward) << vec(e.backward) << '\n';
  }
  return os.str();
}

std::string render_table(const GeneralPositionReport& r) {
  std::ostringstream os;
  os << "general position: " << (r.general_position ? "yes" : "no") << '\n';
  if (r.witness) {
    os << "singular minor: rows " << set_of(r.witness->rows) << ", columns "
       << set_of(r.witness->cols) << ", value " << r.witness->value << " attained "
       << r.witness->optimal_count << " times\n";
  }
  return os.str();
}

std::string render_table(const VerifyReport& r) {
  std::ostringstream os;
  os << "seed " << r.seed << '\n';
  for (const auto& c : r.checks) {
    os << std::left << std::setw(32) << c.name << std::setw(6)
       << (c.failures == 0 ? "PASS" : "FAIL") << c.cases << " cases, " << c.failures
       << " failures";
    if (c.failures) os << " (first: " << c.first_failure << ")";
    os << '\n';
  }
  os << (r.passed ? "all checks passed" : "verification FAILED") << '\n';
  return os.str();
}

}  // namespace mustafin

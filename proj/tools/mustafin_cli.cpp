// mustafin: command-line front end over the C interface.
//
//   mustafin hull        CONFIG [--format json|table]
//   mustafin classify    CONFIG [--format json|table]
//   mustafin hilbert     CONFIG --vertex a,b,c --u k1,k2
//   mustafin graph       CONFIG [--format json|table] [--dot]
//   mustafin gp          CONFIG [--format json|table]
//   mustafin local-model --d D  [--format json|table]
//   mustafin verify      CONFIG [--seed S] [--format json|table]
//
// CONFIG is a path to {"d": int, "points": [[...], ...]} or "-" for stdin.
// Errors go to stderr as one JSON object; the exit code is the status code.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mustafin/mustafin.h"

namespace {

struct Failure {
  mf_status status;
  std::string message;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

int report_failure(const Failure& f) {
  std::cerr << "{\"error\":\"" << mf_status_name(f.status) << "\",\"code\":"
            << static_cast<int>(f.status) << ",\"message\":\"" << json_escape(f.message)
            << "\"}\n";
  return static_cast<int>(f.status);
}

void check(mf_status s) {
  if (s != MF_OK) throw Failure{s, mf_last_error()};
}

// Owns a configuration handle for the duration of one command.
class ConfigHandle {
 public:
  explicit ConfigHandle(mf_config* c) : c_(c) {}
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
  ~ConfigHandle() { mf_config_free(c_); }
  const mf_config* get() const { return c_; }

 private:
  mf_config* c_;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Failure{MF_ERR_PARSE, "cannot read " + path};
  buf << in.rdbuf();
  return buf.str();
}

ConfigHandle load(const std::string& path) {
  mf_config* c = nullptr;
  check(mf_config_parse_json(read_input(path).c_str(), &c));
  return ConfigHandle(c);
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if constexpr (std::is_unsigned_v<T>) {
        if (v < 0) throw std::invalid_argument(item);
      }
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw Failure{MF_ERR_PARSE, std::string("bad entry '") + item + "' in " + what};
    }
  }
  if (out.empty()) throw Failure{MF_ERR_PARSE, std::string("empty ") + what};
  return out;
}

void print_owned(char* s) {
  std::cout << s;
  mf_string_free(s);
}

mf_format to_format(const std::string& f) {
  return f == "table" ? MF_FORMAT_TABLE : MF_FORMAT_JSON;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special fibers of Mustafin varieties in one apartment"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mf_version());

  std::string path;
  std::string format = "json";
  std::string vertex_text;
  std::string u_text;
  bool dot = false;
  std::size_t d = 0;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", path, "configuration JSON file, or - for stdin")->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  auto* hull = app.add_subcommand("hull", "lattice points of the tropical convex hull");
  add_common(hull);
  auto* classify = app.add_subcommand("classify", "components of the special fiber");
  add_common(classify);
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of one component");
  hilbert->add_option("config", path, "configuration JSON file, or - for stdin")->required();
  hilbert->add_option("--vertex", vertex_text, "hull point, e.g. 0,-1,-4")->required();
  hilbert->add_option("--u", u_text, "multidegree argument, e.g. 1,1")->required();
  auto* graph = app.add_subcommand("graph", "linked graph over the hull");
  add_common(graph);
  graph->add_flag("--dot", dot, "emit Graphviz instead");
  auto* gp = app.add_subcommand("gp", "general position test with witness minor");
  add_common(gp);
  auto* local = app.add_subcommand("local-model", "lattice chain configuration");
  local->add_option("--d", d, "ambient dimension")->required();
  local->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  auto* verify = app.add_subcommand("verify", "cross-check against brute-force oracles");
  add_common(verify);
  verify->add_option("--seed", seed, "seed for the randomized cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_failure({MF_ERR_USAGE, e.what()});
  }

  const mf_format fmt = to_format(format);
  char* out = nullptr;
  try {
    if (*hull) {
      auto c = load(path);
      check(mf_report_hull(c.get(), fmt, &out));
    } else if (*classify) {
      auto c = load(path);
      check(mf_report_classify(c.get(), fmt, &out));
    } else if (*hilbert) {
      auto c = load(path);
      const auto v = parse_list<std::int64_t>(vertex_text, "--vertex");
      const auto u = parse_list<std::size_t>(u_text, "--u");
      if (v.size() != mf_config_dim(c.get())) {
        throw Failure{MF_ERR_DIMENSION, "--vertex needs d entries"};
      }
      if (u.size() != mf_config_size(c.get())) {
        throw Failure{MF_ERR_DIMENSION, "--u needs one entry per point"};
      }
      check(mf_hilbert(c.get(), v.data(), u.data(), &out));
      std::cout << out << '\n';
      mf_string_free(out);
      return 0;
    } else if (*graph) {
      auto c = load(path);
      check(mf_report_graph(c.get(), dot ? MF_FORMAT_DOT : fmt, &out));
    } else if (*gp) {
      auto c = load(path);
      check(mf_report_gp(c.get(), fmt, &out));
    } else if (*local) {
      mf_config* raw = nullptr;
      check(mf_config_local_model(d, &raw));
      ConfigHandle c(raw);
      check(mf_report_config(c.get(), fmt, &out));
    } else if (*verify) {
      auto c = load(path);
      int passed = 0;
      check(mf_report_verify(c.get(), seed, fmt, &out, &passed));
      print_owned(out);
      return passed ? 0 : static_cast<int>(MF_ERR_INVARIANT);
    }
  } catch (const Failure& f) {
    return report_failure(f);
  }
  print_owned(out);
  return 0;
}

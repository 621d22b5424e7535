// Copyright 2026 The kimm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// kimm command line front end. Links only the C interface.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kimm/kimm.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelArgs {
  std::vector<std::string> model;
  std::string series_file;
  std::string config_file;
  std::vector<std::string> params;
  std::map<std::string, std::string> shorthand;
  std::optional<std::string> b;
  std::optional<unsigned> degree;
  std::string output;
};

const char* const kShorthand[] = {"n", "m", "scale", "mu", "nu", "p", "alpha", "base", "mode"};

void add_model_options(CLI::App* app, ModelArgs& args, bool b_is_target) {
  app->add_option("--model", args.model, "model name, optionally followed by n")
      ->expected(1, 2);
  app->add_option("--series", args.series_file, "BiSeries text file");
  app->add_option("--config", args.config_file, "JSON model config file");
  app->add_option("--param", args.params, "model parameter k=v (repeatable)");
  for (const char* key : kShorthand) {
    std::string k = key;
    app->add_option_function<std::string>(
        "--" + k, [&args, k](const std::string& v) { args.shorthand[k] = v; },
        "model parameter " + k);
  }
  app->add_option_function<std::string>(
      "--b", [&args](const std::string& v) { args.b = v; },
      b_is_target ? "target curvature parameter b (p/q)" : "model curvature parameter b (p/q)");
  app->add_option_function<unsigned>(
      "--degree", [&args](unsigned v) { args.degree = v; }, "truncation degree");
  app->add_option("-o,--output", args.output, "write JSON here instead of stdout");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Series {
 public:
  Series() = default;
  Series(const Series&) = delete;
  Series& operator=(const Series&) = delete;
  ~Series() { kimm_series_free(s_); }
  kimm_series** out() { return &s_; }
  const kimm_series* get() const { return s_; }

 private:
  kimm_series* s_ = nullptr;
};

class CString {
 public:
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { kimm_string_free(p_); }
  char** out() { return &p_; }
  const char* get() const { return p_ ? p_ : ""; }
  bool empty() const { return p_ == nullptr; }

 private:
  char* p_ = nullptr;
};

void check(kimm_status st) {
  if (st != KIMM_OK) throw InputError(kimm_last_error());
}

struct Resolved {
  unsigned degree = 4;
  std::string b;
};

/// Model spec JSON from --model/--config plus parameter flags. A "b" in the
/// config file is moved to `b` when it names the target.
Json build_spec(const ModelArgs& args, bool b_is_target, std::optional<std::string>& b) {
  Json spec;
  if (!args.config_file.empty()) {
    try {
      spec = Json::parse(read_file(args.config_file));
    } catch (const Json::parse_error& e) {
      throw InputError(args.config_file + ": " + e.what());
    }
    if (!spec.is_object()) throw InputError(args.config_file + ": expected a JSON object");
    if (spec.contains("b") && !b && b_is_target) {
      if (!spec.at("b").is_string())
        throw InputError(args.config_file + ": \"b\" must be a p/q string");
      b = spec.at("b").get<std::string>();
    }
    spec.erase("b");
    if (!spec.contains("parameters")) spec["parameters"] = Json::object();
  } else {
    spec["model"] = args.model[0];
    spec["parameters"] = Json::object();
    if (args.model.size() == 2) spec["parameters"]["n"] = args.model[1];
  }
  for (const auto& [k, v] : args.shorthand) spec["parameters"][k] = v;
  for (const auto& kv : args.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects k=v, got '" + kv + "'");
    spec["parameters"][kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (!b_is_target && b) spec["parameters"]["b"] = *b;
  if (args.degree) spec["degree"] = *args.degree;
  if (!spec.contains("degree")) spec["degree"] = 4;
  return spec;
}

/// Loads the series named by the model options. When `b_is_target` is false,
/// --b is passed to the model as a parameter.
Resolved load(const ModelArgs& args, Series& series, bool b_is_target) {
  Resolved r;
  int sources = !args.model.empty() + !args.series_file.empty() + !args.config_file.empty();
  if (sources != 1) throw InputError("give exactly one of --model, --series, --config");
  std::optional<std::string> b = args.b;
  if (!args.series_file.empty()) {
    if (!args.params.empty() || !args.shorthand.empty())
      throw InputError("model parameters do not apply to --series input");
    check(kimm_series_parse(read_file(args.series_file).c_str(), series.out()));
    r.degree = args.degree.value_or(kimm_series_degree(series.get()));
  } else {
    Json spec = build_spec(args, b_is_target, b);
    check(kimm_series_from_model(spec.dump().c_str(), series.out()));
    r.degree = kimm_series_degree(series.get());
  }
  if (b_is_target) r.b = b.value_or("");
  return r;
}

void write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text << "\n";
}

std::string require_b(const Resolved& r) {
  if (r.b.empty()) throw InputError("--b is required");
  return r.b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kimm: Kähler immersions of formal diastases into complex space forms"};
  app.require_subcommand(0, 1);
  std::string certificate_file;
  app.add_option("--check-certificate", certificate_file,
                 "re-validate an emitted analysis or immersion JSON file");

  ModelArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Calabi criterion verdict with certificate");
  add_model_options(analyze, analyze_args, true);

  ModelArgs emit_args;
  bool indefinite = false;
  std::string map_alpha;
  CLI::App* emit = app.add_subcommand("emit-immersion", "verified truncated immersion map");
  add_model_options(emit, emit_args, true);
  emit->add_flag("--indefinite", indefinite, "indefinite target (requires b = 0)");
  emit->add_option("--map-alpha", map_alpha,
                   "Cartan-Hartogs models: map alpha times the metric into b = 1");

  ModelArgs einstein_args;
  CLI::App* einstein = app.add_subcommand("einstein", "Einstein constant from the diastasis");
  add_model_options(einstein, einstein_args, false);

  ModelArgs hartogs_args;
  std::string hartogs_c;
  unsigned jmax = 8, kmax = 8;
  CLI::App* hartogs = app.add_subcommand("hartogs", "coefficient criterion for Hartogs models");
  add_model_options(hartogs, hartogs_args, false);
  hartogs->add_option("--c", hartogs_c, "metric multiple c (p/q)")->required();
  hartogs->add_option("--jmax", jmax, "largest j");
  hartogs->add_option("--kmax", kmax, "largest k");

  std::string wallach_domain, wallach_a, wallach_c, wallach_mu, wallach_out;
  std::optional<unsigned> wallach_r, wallach_gamma;
  CLI::App* wallach = app.add_subcommand("wallach", "Wallach set decisions");
  wallach->add_option("--domain", wallach_domain, "catalog domain, e.g. omega1:2,3 or ch:2");
  wallach->add_option("--r", wallach_r, "rank");
  wallach->add_option("--a", wallach_a, "multiplicity a (p/q)");
  wallach->add_option("--gamma", wallach_gamma, "genus");
  wallach->add_option("--c", wallach_c, "multiple c (p/q)")->required();
  wallach->add_option("--mu", wallach_mu, "Cartan-Hartogs exponent mu (p/q)");
  wallach->add_option("-o,--output", wallach_out, "output file");

  std::string cigar_c = "1", cigar_out;
  unsigned cigar_nmax = 12, cigar_terms = 40;
  CLI::App* cigar = app.add_subcommand("cigar", "cigar soliton coefficient scan and limit");
  cigar->add_option("--c", cigar_c, "multiple c (p/q)");
  cigar->add_option("--nmax", cigar_nmax, "largest n scanned");
  cigar->add_option("--limit-terms", cigar_terms, "terms in the limit report (0 disables)");
  cigar->add_option("-o,--output", cigar_out, "output file");

  unsigned bell_n = 5;
  std::string bell_x, bell_out;
  CLI::App* bell = app.add_subcommand("bell", "partial and complete Bell polynomials");
  bell->add_option("--n", bell_n, "largest n");
  bell->add_option("--x", bell_x, "comma separated x_1,x_2,... (p/q)")->required();
  bell->add_option("-o,--output", bell_out, "output file");

  CLI::App* models = app.add_subcommand("models", "list the model catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!certificate_file.empty()) {
      if (app.get_subcommands().size() > 0)
        throw InputError("--check-certificate takes no subcommand");
      CString report;
      int valid = 0;
      check(kimm_check_certificate(read_file(certificate_file).c_str(), report.out(), &valid));
      write_output("", report.get());
      return valid ? kExitOk : kExitNegative;
    }
    if (*analyze) {
      Series s;
      Resolved r = load(analyze_args, s, true);
      CString out;
      int resolvable = 0;
      check(kimm_analyze(s.get(), require_b(r).c_str(), r.degree, out.out(), &resolvable));
      write_output(analyze_args.output, out.get());
      return resolvable ? kExitOk : kExitNegative;
    }
    if (*emit) {
      Series s;
      Resolved r = load(emit_args, s, true);
      Json options = Json::object();
      if (indefinite) options["indefinite"] = true;
      if (!map_alpha.empty()) options["alpha"] = map_alpha;
      CString out;
      kimm_status st = kimm_emit_immersion(s.get(), require_b(r).c_str(), r.degree,
                                           options.dump().c_str(), out.out());
      if (st == KIMM_E_NOT_RESOLVABLE && !out.empty()) {
        std::cerr << "kimm: " << kimm_last_error() << "\n";
        write_output(emit_args.output, out.get());
        return kExitNegative;
      }
      check(st);
      write_output(emit_args.output, out.get());
      return kExitOk;
    }
    if (*einstein) {
      Series s;
      Resolved r = load(einstein_args, s, false);
      CString out;
      check(kimm_einstein(s.get(), r.degree, out.out()));
      write_output(einstein_args.output, out.get());
      return kExitOk;
    }
    if (*hartogs) {
      if (!hartogs_args.series_file.empty()) throw InputError("hartogs needs a model");
      if (hartogs_args.model.empty() == hartogs_args.config_file.empty())
        throw InputError("give exactly one of --model, --config");
      ModelArgs a = hartogs_args;
      a.degree = jmax;
      std::optional<std::string> b = a.b;
      Json spec = build_spec(a, false, b);
      CString out;
      check(kimm_hartogs(spec.dump().c_str(), hartogs_c.c_str(), jmax, kmax, out.out()));
      write_output(a.output, out.get());
      return Json::parse(out.get()).at("hartogs").at("passed").get<bool>() ? kExitOk
                                                                            : kExitNegative;
    }
    if (*wallach) {
      Json req;
      if (!wallach_domain.empty()) {
        if (wallach_r || wallach_gamma || !wallach_a.empty())
          throw InputError("give --domain or --r/--a/--gamma, not both");
        req["domain"] = wallach_domain;
      } else {
        if (!wallach_r || !wallach_gamma || wallach_a.empty())
          throw InputError("--r, --a and --gamma are required without --domain");
        req["r"] = *wallach_r;
        req["a"] = wallach_a;
        req["gamma"] = *wallach_gamma;
      }
      req["c"] = wallach_c;
      if (!wallach_mu.empty()) req["mu"] = wallach_mu;
      CString out;
      check(kimm_wallach(req.dump().c_str(), out.out()));
      write_output(wallach_out, out.get());
      return kExitOk;
    }
    if (*cigar) {
      CString out;
      check(kimm_cigar(cigar_c.c_str(), cigar_nmax, cigar_terms, out.out()));
      write_output(cigar_out, out.get());
      return kExitOk;
    }
    if (*bell) {
      Json xs = Json::array();
      std::stringstream ss(bell_x);
      for (std::string item; std::getline(ss, item, ',');) xs.push_back(item);
      CString out;
      check(kimm_bell(bell_n, xs.dump().c_str(), out.out()));
      write_output(bell_out, out.get());
      return kExitOk;
    }
    if (*models) {
      CString out;
      check(kimm_models_list(out.out()));
      write_output("", out.get());
      return kExitOk;
    }
    std::cout << app.help();
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "kimm: " << e.what() << "\n";
    return kExitInput;
  }
}

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


#include "kimm/kimm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "kimm/bell.hpp"
#include "kimm/certificate.hpp"
#include "kimm/einstein.hpp"
#include "kimm/symmetric_domains.hpp"

struct kimm_series {
  kimm::Source source;
  kimm::BiSeries series{1, 0};
  unsigned degree = 0;
};

namespace {

using kimm::Json;
using kimm::Rational;

thread_local std::string g_last_error;

kimm_status set_error(kimm_status status, const std::string& what) {
  g_last_error = what;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = dup_string(j.dump(2)); }

Json parse_json(const char* text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw kimm::Error(kimm::ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

template <class F>
kimm_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const kimm::Error& e) {
    return set_error(static_cast<kimm_status>(static_cast<int>(e.code())), e.what());
  } catch (const Json::exception& e) {
    return set_error(KIMM_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(KIMM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(KIMM_E_INTERNAL, e.what());
  }
}

#define KIMM_REQUIRE(cond, what)                                           \
  do {                                                                     \
    if (!(cond)) return set_error(KIMM_E_INVALID_ARGUMENT, (what));        \
  } while (0)

Json membership_json(const kimm::WallachMembership& m) {
  Json j{{"class", kimm::to_string(m.cls)}};
  if (m.cls == kimm::WallachClass::kDiscrete) j["k"] = m.k;
  return j;
}

kimm::DomainInvariants invariants_from(const Json& req) {
  if (req.contains("domain")) {
    return kimm::reference_invariants(kimm::parse_cartan_domain(req.at("domain").get<std::string>()));
  }
  kimm::DomainInvariants inv;
  for (const char* key : {"r", "a", "gamma"})
    if (!req.contains(key))
      throw kimm::Error(kimm::ErrorCode::kInvalidArgument,
                        std::string("wallach: missing '") + key + "'");
  const Json& r = req.at("r");
  const Json& g = req.at("gamma");
  if (!r.is_number_unsigned() || r.get<unsigned>() == 0)
    throw kimm::Error(kimm::ErrorCode::kInvalidArgument, "wallach: r must be a positive integer");
  if (!g.is_number_unsigned() || g.get<unsigned>() == 0)
    throw kimm::Error(kimm::ErrorCode::kInvalidArgument,
                      "wallach: gamma must be a positive integer");
  inv.rank = r.get<unsigned>();
  inv.genus = g.get<unsigned>();
  const Json& a = req.at("a");
  inv.a = a.is_string() ? kimm::parse_rational(a.get<std::string>())
                        : Rational(a.get<long>());
  if (sgn(inv.a) < 0) throw kimm::Error(kimm::ErrorCode::kInvalidArgument, "wallach: a must be >= 0");
  return inv;
}

}  // namespace

extern "C" {

const char* kimm_version(void) { return "1.0.0"; }

const char* kimm_last_error(void) { return g_last_error.c_str(); }

void kimm_string_free(char* s) { std::free(s); }

kimm_status kimm_series_from_model(const char* spec_json, kimm_series** out) {
  KIMM_REQUIRE(spec_json && out, "null argument");
  return guarded([&] {
    kimm::ModelSpec spec = kimm::model_spec_from_json(parse_json(spec_json));
    kimm::Model model = kimm::get_model(spec);
    auto* s = new kimm_series;
    s->source.model = model.spec;
    s->series = model.diastasis;
    s->degree = spec.degree;
    *out = s;
    return KIMM_OK;
  });
}

kimm_status kimm_series_parse(const char* text, kimm_series** out) {
  KIMM_REQUIRE(text && out, "null argument");
  return guarded([&] {
    kimm::BiSeries series = kimm::parse_biseries(text);
    auto* s = new kimm_series;
    s->source.series_text = text;
    s->degree = series.degree();
    s->series = std::move(series);
    *out = s;
    return KIMM_OK;
  });
}

kimm_status kimm_series_to_text(const kimm_series* s, char** out) {
  KIMM_REQUIRE(s && out, "null argument");
  return guarded([&] {
    *out = dup_string(kimm::to_text(s->series));
    return KIMM_OK;
  });
}

unsigned kimm_series_arity(const kimm_series* s) { return s ? s->series.arity() : 0; }

unsigned kimm_series_degree(const kimm_series* s) { return s ? s->degree : 0; }

void kimm_series_free(kimm_series* s) { delete s; }

kimm_status kimm_analyze(const kimm_series* s, const char* b, unsigned degree, char** json_out,
                         int* resolvable) {
  KIMM_REQUIRE(s && b && json_out, "null argument");
  return guarded([&] {
    if (degree > s->degree)
      return set_error(KIMM_E_OUT_OF_RANGE, "requested degree " + std::to_string(degree) +
                                                " exceeds series truncation " +
                                                std::to_string(s->degree));
    int code = 0;
    Json j = kimm::analyze(s->source, kimm::parse_rational(b), degree, &code);
    emit(j, json_out);
    if (resolvable) *resolvable = code == 0 ? 1 : 0;
    return KIMM_OK;
  });
}

kimm_status kimm_emit_immersion(const kimm_series* s, const char* b, unsigned degree,
                                const char* options_json, char** json_out) {
  KIMM_REQUIRE(s && b && json_out, "null argument");
  return guarded([&] {
    if (degree > s->degree)
      return set_error(KIMM_E_OUT_OF_RANGE, "requested degree " + std::to_string(degree) +
                                                " exceeds series truncation " +
                                                std::to_string(s->degree));
    kimm::EmitOptions options;
    if (options_json) {
      Json o = parse_json(options_json);
      if (o.contains("indefinite")) options.indefinite = o.at("indefinite").get<bool>();
      if (o.contains("alpha")) options.alpha = kimm::parse_rational(o.at("alpha").get<std::string>());
    }
    Rational br = kimm::parse_rational(b);
    try {
      emit(kimm::emit_immersion(s->source, br, degree, options), json_out);
      return KIMM_OK;
    } catch (const kimm::NotResolvableError& e) {
      emit(kimm::analyze(s->source, br, degree), json_out);
      return set_error(KIMM_E_NOT_RESOLVABLE, e.what());
    }
  });
}

kimm_status kimm_check_certificate(const char* certificate_json, char** report_json, int* valid) {
  KIMM_REQUIRE(certificate_json && report_json, "null argument");
  return guarded([&] {
    Json report = kimm::check_certificate(parse_json(certificate_json));
    if (valid) *valid = report.at("valid").get<bool>() ? 1 : 0;
    emit(report, report_json);
    return KIMM_OK;
  });
}

kimm_status kimm_models_list(char** json_out) {
  KIMM_REQUIRE(json_out, "null argument");
  return guarded([&] {
    Json list = Json::array();
    for (const auto& m : kimm::model_catalog()) {
      Json params = Json::array();
      for (const auto& p : m.params)
        params.push_back({{"name", p.name},
                          {"type", p.type},
                          {"default", p.default_value},
                          {"constraint", p.constraint}});
      list.push_back({{"name", m.name}, {"description", m.description}, {"parameters", params}});
    }
    emit(Json{{"schema_version", kimm::kSchemaVersion}, {"models", list}}, json_out);
    return KIMM_OK;
  });
}

kimm_status kimm_hartogs(const char* spec_json, const char* c, unsigned jmax, unsigned kmax,
                         char** json_out) {
  KIMM_REQUIRE(spec_json && c && json_out, "null argument");
  return guarded([&] {
    kimm::ModelSpec spec = kimm::model_spec_from_json(parse_json(spec_json));
    emit(kimm::hartogs_report(spec, kimm::parse_rational(c), jmax, kmax), json_out);
    return KIMM_OK;
  });
}

kimm_status kimm_wallach(const char* request_json, char** json_out) {
  KIMM_REQUIRE(request_json && json_out, "null argument");
  return guarded([&] {
    Json req = parse_json(request_json);
    if (!req.is_object() || !req.contains("c") || !req.at("c").is_string())
      return set_error(KIMM_E_INVALID_ARGUMENT, "wallach: \"c\" must be a p/q string");
    kimm::DomainInvariants inv = invariants_from(req);
    Rational c = kimm::parse_rational(req.at("c").get<std::string>());
    Json out;
    out["schema_version"] = kimm::kSchemaVersion;
    out["c"] = kimm::to_pq(c);
    out["invariants"] = {{"r", inv.rank},
                         {"a", kimm::to_pq(inv.a)},
                         {"gamma", inv.genus},
                         {"source", req.contains("domain") ? "reference_table" : "request"}};
    if (req.contains("domain")) out["domain"] = req.at("domain");
    out["threshold"] = kimm::to_pq(kimm::wallach_threshold(inv));
    if (req.contains("mu")) {
      Rational mu = kimm::parse_rational(req.at("mu").get<std::string>());
      kimm::CartanHartogsDecision d = kimm::cartan_hartogs_decision(inv, mu, c);
      out["mode"] = "cartan_hartogs";
      out["mu"] = kimm::to_pq(mu);
      out["decision"] = d.induced;
      out["checked"] = d.checked;
      if (!d.induced) {
        out["failing_m"] = d.failing_m;
        out["membership"] = membership_json(d.failing_membership);
      }
    } else {
      Rational eta = c * inv.genus;
      out["mode"] = "bergman";
      out["eta"] = kimm::to_pq(eta);
      out["decision"] = kimm::bergman_scaling_decision(inv, c);
      out["membership"] = membership_json(kimm::wallach_membership(inv, eta));
    }
    emit(out, json_out);
    return KIMM_OK;
  });
}

kimm_status kimm_cigar(const char* c, unsigned n_max, unsigned limit_terms, char** json_out) {
  KIMM_REQUIRE(c && json_out, "null argument");
  return guarded([&] {
    Rational cr = kimm::parse_rational(c);
    kimm::CigarScan scan = kimm::cigar_scan(cr, n_max);
    Json out;
    out["schema_version"] = kimm::kSchemaVersion;
    out["c"] = kimm::to_pq(cr);
    out["n_max"] = n_max;
    if (scan.first_negative_n) {
      out["first_negative_n"] = *scan.first_negative_n;
      out["bell_value"] = kimm::to_pq(scan.bell_value);
      out["coefficient"] = kimm::to_pq(scan.coefficient);
    } else {
      out["first_negative_n"] = nullptr;
    }
    Json coeffs = Json::array();
    for (const auto& q : scan.coefficients) coeffs.push_back(kimm::to_pq(q));
    out["coefficients"] = coeffs;
    if (limit_terms > 0) {
      kimm::CigarLimit lim = kimm::cigar_limit(cr, limit_terms);
      out["limit"] = {{"terms", lim.terms},
                      {"partial_sum_lo", kimm::to_pq(lim.partial_sum.lo)},
                      {"partial_sum_hi", kimm::to_pq(lim.partial_sum.hi)},
                      {"tail_bound", kimm::to_pq(lim.tail_bound)},
                      {"value_float", lim.value},
                      {"reference_float", lim.reference}};
    }
    emit(out, json_out);
    return KIMM_OK;
  });
}

kimm_status kimm_bell(unsigned n_max, const char* x_json, char** json_out) {
  KIMM_REQUIRE(x_json && json_out, "null argument");
  return guarded([&] {
    Json xs = parse_json(x_json);
    if (!xs.is_array()) return set_error(KIMM_E_INVALID_ARGUMENT, "bell: x must be an array");
    std::vector<Rational> x;
    for (const auto& v : xs) x.push_back(kimm::parse_rational(v.get<std::string>()));
    kimm::BellTable table(n_max, x);
    Json partial = Json::array(), complete = Json::array();
    for (unsigned n = 0; n <= n_max; ++n) {
      Json row = Json::array();
      for (unsigned k = 0; k <= n; ++k) row.push_back(kimm::to_pq(table.partial(n, k)));
      partial.push_back(row);
      complete.push_back(kimm::to_pq(table.complete(n)));
    }
    Json x_out = Json::array();
    for (const auto& q : x) x_out.push_back(kimm::to_pq(q));
    emit(Json{{"schema_version", kimm::kSchemaVersion},
              {"n_max", n_max},
              {"x", x_out},
              {"partial", partial},
              {"complete", complete}},
         json_out);
    return KIMM_OK;
  });
}

kimm_status kimm_einstein(const kimm_series* s, unsigned degree, char** json_out) {
  KIMM_REQUIRE(s && json_out, "null argument");
  return guarded([&] {
    if (degree > s->degree)
      return set_error(KIMM_E_OUT_OF_RANGE, "requested degree exceeds series truncation");
    kimm::LoadedSource loaded = kimm::load_source(s->source, degree);
    kimm::EinsteinEstimate e = kimm::einstein_estimate(loaded.series, degree);
    Json out;
    out["schema_version"] = kimm::kSchemaVersion;
    out["model"] = loaded.model ? loaded.model->spec.name : "series";
    out["degree"] = degree;
    out["einstein"] = e.einstein;
    out["flat"] = e.flat;
    out["checked_degree"] = e.checked_degree;
    out["lambda"] = kimm::to_pq(e.lambda);
    if (!e.einstein) {
      const auto& ord = loaded.series.order();
      out["mismatch"] = {{"hol", kimm::to_string(ord.index(e.j))},
                         {"anti", kimm::to_string(ord.index(e.k))},
                         {"log_det", kimm::to_string(e.log_det_coefficient)},
                         {"expected", kimm::to_string(e.expected_coefficient)}};
    }
    emit(out, json_out);
    return KIMM_OK;
  });
}

}  // extern "C"

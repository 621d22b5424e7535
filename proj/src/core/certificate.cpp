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


#include "kimm/certificate.hpp"

#include <algorithm>

#include "kimm/diastasis.hpp"
#include "kimm/symmetric_domains.hpp"

namespace kimm {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json rank_json(const std::optional<Integer>& r) {
  if (!r) return "infinite";
  return integer_json(*r);
}

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::kParse, std::string("certificate: missing key '") + key + "'");
  return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require_key(j, key);
  if (!v.is_string())
    throw Error(ErrorCode::kParse, std::string("certificate: '") + key + "' must be a string");
  return v.get<std::string>();
}

unsigned require_unsigned(const Json& j, const char* key) {
  const Json& v = require_key(j, key);
  if (!v.is_number_unsigned())
    throw Error(ErrorCode::kParse,
                std::string("certificate: '") + key + "' must be a nonnegative integer");
  return v.get<unsigned>();
}

Json scalar_list(const std::vector<std::string>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

BiSeries transformed(const BiSeries& d, const Rational& b, unsigned degree) {
  return b_transform(normalize_to_diastasis(d.truncated(degree)), b);
}

Json envelope(const char* kind, const Source& src, const LoadedSource& loaded,
              const Rational& b, unsigned degree) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = kind;
  out["b"] = to_pq(b);
  out["degree"] = degree;
  if (loaded.model) {
    out["model"] = loaded.model->spec.name;
    Json params = Json::object();
    for (const auto& [k, v] : loaded.model->spec.parameters) params[k] = v;
    out["parameters"] = params;
    Source full;
    full.model = loaded.model->spec;
    out["source"] = source_to_json(full);
  } else {
    out["model"] = "series";
    out["parameters"] = Json::object();
    out["source"] = source_to_json(src);
  }
  return out;
}

Json hartogs_json(const HartogsVerdict& v, const Rational& c) {
  Json h;
  h["c"] = to_pq(c);
  h["jmax"] = v.jmax;
  h["kmax"] = v.kmax;
  h["passed"] = v.passed;
  if (!v.passed) {
    h["j"] = v.j;
    h["k"] = v.k;
    h["coefficient"] = to_pq(v.coefficient);
  }
  return h;
}

/// Coefficient of x^j in (F/F(0))^{-(c+k)} via exp and log rather than the
/// binomial series.
Rational hartogs_coefficient(const UniSeries& f, const Rational& c, unsigned j, unsigned k) {
  UniSeries u = f.truncated(j) * (Rational(1) / f[0]);
  u[0] = 0;
  UniSeries l = log1p(u) * Rational(-(c + k));
  return exp(l)[j];
}

}  // namespace

ModelSpec model_spec_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "model config must be a JSON object");
  ModelSpec spec;
  const Json& name = require_key(j, "model");
  if (!name.is_string()) throw Error(ErrorCode::kParse, "'model' must be a string");
  spec.name = name.get<std::string>();
  if (j.contains("parameters")) {
    const Json& p = j.at("parameters");
    if (!p.is_object()) throw Error(ErrorCode::kParse, "'parameters' must be an object");
    for (const auto& [k, v] : p.items()) {
      if (v.is_string()) {
        spec.parameters[k] = v.get<std::string>();
      } else if (v.is_number_integer()) {
        spec.parameters[k] = std::to_string(v.get<long long>());
      } else {
        throw Error(ErrorCode::kParse, "parameter '" + k +
                                           "' must be an integer or a \"p/q\" string");
      }
    }
  }
  if (j.contains("degree")) spec.degree = require_unsigned(j, "degree");
  return spec;
}

Json model_spec_to_json(const ModelSpec& spec) {
  Json j;
  j["model"] = spec.name;
  Json params = Json::object();
  for (const auto& [k, v] : spec.parameters) params[k] = v;
  j["parameters"] = params;
  j["degree"] = spec.degree;
  return j;
}

Json source_to_json(const Source& src) {
  Json j;
  if (src.model) {
    j["model"] = model_spec_to_json(*src.model);
  } else {
    j["series"] = src.series_text;
  }
  return j;
}

Source source_from_json(const Json& j) {
  Source src;
  if (j.is_object() && j.contains("model")) {
    src.model = model_spec_from_json(j.at("model"));
  } else if (j.is_object() && j.contains("series") && j.at("series").is_string()) {
    src.series_text = j.at("series").get<std::string>();
  } else {
    throw Error(ErrorCode::kParse, "source must contain 'model' or 'series'");
  }
  return src;
}

LoadedSource load_source(const Source& src, unsigned degree) {
  LoadedSource out;
  if (src.model) {
    ModelSpec spec = *src.model;
    spec.degree = degree;
    out.model = get_model(spec);
    out.series = out.model->diastasis;
  } else {
    BiSeries s = parse_biseries(src.series_text);
    if (degree > s.degree())
      throw Error(ErrorCode::kOutOfRange, "requested degree " + std::to_string(degree) +
                                              " exceeds series truncation " +
                                              std::to_string(s.degree()));
    out.series = s.truncated(degree);
  }
  return out;
}

Json witness_to_json(const HermMatrix& m, const PsdVerdict& v) {
  auto ord = graded_order(m.arity, m.degree);
  std::vector<std::string> basis, comps;
  for (unsigned i = 0; i < m.size() && i < v.witness.size(); ++i) {
    if (v.witness[i].is_zero()) continue;
    basis.push_back(to_string(ord->index(m.basis[i])));
    comps.push_back(to_string(v.witness[i]));
  }
  Json w;
  w["basis"] = scalar_list(basis);
  w["components"] = scalar_list(comps);
  return w;
}

Json immersion_to_json(const ImmersionMap& map) {
  Json j;
  j["arity"] = map.arity;
  j["degree"] = map.degree;
  j["target"] = {{"kind", to_string(map.target)}, {"b", to_pq(map.b)}};
  Json comps = Json::array();
  for (const auto& c : map.components) {
    comps.push_back({{"sign", c.sign}, {"radicand", to_pq(c.radicand)},
                     {"series", to_text(c.series)}});
  }
  j["components"] = comps;
  return j;
}

ImmersionMap immersion_from_json(const Json& j) {
  ImmersionMap map;
  map.arity = require_unsigned(j, "arity");
  map.degree = require_unsigned(j, "degree");
  const Json& target = require_key(j, "target");
  std::string kind = require_string(target, "kind");
  if (kind == to_string(TargetKind::kFlat)) {
    map.target = TargetKind::kFlat;
  } else if (kind == to_string(TargetKind::kCurved)) {
    map.target = TargetKind::kCurved;
  } else if (kind == to_string(TargetKind::kIndefinite)) {
    map.target = TargetKind::kIndefinite;
  } else {
    throw Error(ErrorCode::kParse, "unknown target kind '" + kind + "'");
  }
  map.b = parse_rational(require_string(target, "b"));
  const Json& comps = require_key(j, "components");
  if (!comps.is_array()) throw Error(ErrorCode::kParse, "'components' must be an array");
  for (const auto& c : comps) {
    ImmersionComponent comp;
    const Json& sign = require_key(c, "sign");
    if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1))
      throw Error(ErrorCode::kParse, "component sign must be 1 or -1");
    comp.sign = sign.get<int>();
    comp.radicand = parse_rational(require_string(c, "radicand"));
    comp.series = parse_holseries(require_string(c, "series"), map.arity, map.degree);
    map.components.push_back(std::move(comp));
  }
  return map;
}

Json analyze(const Source& src, const Rational& b, unsigned degree, int* exit_code) {
  LoadedSource loaded = load_source(src, degree);
  Json out = envelope("analysis", src, loaded, b, degree);
  Verdict v = resolvability(loaded.series, b, degree);
  HermMatrix m = build_matrix(transformed(loaded.series, b, degree), degree);

  std::optional<SpaceFormDecision> closed;
  if (loaded.model && loaded.model->space_form) {
    const auto& sf = *loaded.model->space_form;
    closed = space_form_classification(sf.n, sf.b, sf.scale, b);
    out["closed_form"] = {{"exists", closed->exists},
                          {"rank", closed->exists ? rank_json(closed->rank) : Json(nullptr)},
                          {"reason", closed->reason}};
  }
  if (loaded.model && loaded.model->hartogs_profile && sgn(b) > 0) {
    Rational c = loaded.model->scale / b;
    unsigned jmax = std::min<unsigned>(degree, loaded.model->hartogs_profile->degree());
    out["hartogs"] =
        hartogs_json(hartogs_criterion(*loaded.model->hartogs_profile, c, jmax, jmax), c);
  }

  Json cert;
  if (v.psd.psd) {
    std::vector<std::string> pivots;
    auto ord = graded_order(m.arity, m.degree);
    for (Ordinal p : v.psd.pivots) pivots.push_back(to_string(ord->index(p)));
    cert["pivots"] = scalar_list(pivots);
    cert["truncated_rank"] = v.psd.rank;
    if (closed && closed->exists) {
      out["verdict"] = to_string(VerdictKind::kCertifiedResolvable);
      cert["rank"] = rank_json(closed->rank);
    } else {
      out["verdict"] = to_string(VerdictKind::kResolvableUpTo);
      cert["rank"] = v.psd.rank;
    }
    if (exit_code) *exit_code = 0;
  } else {
    out["verdict"] = to_string(VerdictKind::kCertifiedNotResolvable);
    cert["witness"] = witness_to_json(m, v.psd);
    cert["value"] = to_pq(v.psd.value);
    cert["witness_degree"] = v.witness_degree;
    if (exit_code) *exit_code = 1;
  }
  out["certificate"] = cert;
  return out;
}

Json emit_immersion(const Source& src, const Rational& b, unsigned degree,
                    const EmitOptions& options) {
  LoadedSource loaded = load_source(src, degree);
  Json out = envelope("immersion", src, loaded, b, degree);
  BiSeries target = loaded.series;
  ImmersionMap map;
  std::string method;
  if (options.alpha) {
    if (!loaded.model || loaded.model->spec.name != "cartan_hartogs")
      throw Error(ErrorCode::kInvalidArgument, "alpha applies to cartan_hartogs models only");
    if (b != 1) throw Error(ErrorCode::kInvalidArgument, "alpha maps target b = 1");
    if (sgn(*options.alpha) <= 0) throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
    const Model& model = *loaded.model;
    Rational mu = parse_rational(model.spec.parameters.at("mu"));
    BiSeries base = *model.log_norm * CScalar(Rational(*model.genus));
    map = ch_immersion(base, *model.genus, mu, *options.alpha * model.scale, degree);
    target *= CScalar(*options.alpha);
    out["alpha"] = to_pq(*options.alpha);
    method = "cartan_hartogs";
  } else if (options.indefinite) {
    if (sgn(b) != 0) throw Error(ErrorCode::kInvalidArgument, "indefinite target requires b = 0");
    map = indefinite_immersion(loaded.series, degree);
    method = "indefinite";
  } else if (loaded.model && loaded.model->space_form) {
    const auto& sf = *loaded.model->space_form;
    SpaceFormImmersion sfi = space_form_immersion(sf.n, sf.b, b * sf.scale, degree);
    if (!sfi.map) throw NotResolvableError(resolvability(loaded.series, b, degree));
    map = *sfi.map;
    for (auto& c : map.components) c.radicand *= sf.scale;
    map.b = b;
    map.target = sgn(b) == 0 ? TargetKind::kFlat : TargetKind::kCurved;
    method = "closed_form";
  } else {
    map = factor_immersion(loaded.series, b, degree);
    method = "factorization";
  }
  ImmersionCheck check = verify_immersion(map, target, map.b, degree);
  if (!check.ok) {
    const auto& ord = target.order();
    throw Error(ErrorCode::kNotResolvable,
                "emitted map fails verification at (" + to_string(ord.index(check.j)) + " ; " +
                    to_string(ord.index(check.k)) + "): expected " + to_string(check.expected) +
                    ", got " + to_string(check.got));
  }
  out["method"] = method;
  out["map"] = immersion_to_json(map);
  out["verified"] = true;
  return out;
}

Json hartogs_report(const ModelSpec& spec, const Rational& c, unsigned jmax, unsigned kmax) {
  if (sgn(c) <= 0) throw Error(ErrorCode::kInvalidArgument, "c must be positive");
  Source src;
  src.model = spec;
  LoadedSource loaded = load_source(src, jmax);
  if (!loaded.model->hartogs_profile)
    throw Error(ErrorCode::kInvalidArgument, "model '" + spec.name + "' is not a Hartogs model");
  Json out = envelope("hartogs", src, loaded, Rational(1), jmax);
  HartogsVerdict v = hartogs_criterion(*loaded.model->hartogs_profile, c, jmax, kmax);
  out["hartogs"] = hartogs_json(v, c);
  out["metric"] = hartogs_metric_check(*loaded.model->hartogs_profile);
  return out;
}

Json check_certificate(const Json& certificate) {
  Json report;
  report["schema_version"] = kSchemaVersion;
  std::vector<std::string> checks;
  bool valid = true;
  auto fail = [&](const std::string& why) {
    valid = false;
    checks.push_back("FAIL " + why);
  };

  const Json& version = require_key(certificate, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion)
    throw Error(ErrorCode::kParse, "unsupported schema_version");
  std::string kind = require_string(certificate, "kind");
  report["kind"] = kind;
  Rational b = parse_rational(require_string(certificate, "b"));
  unsigned degree = require_unsigned(certificate, "degree");
  Source src = source_from_json(require_key(certificate, "source"));
  LoadedSource loaded = load_source(src, degree);

  if (kind == "analysis") {
    std::string verdict = require_string(certificate, "verdict");
    const Json& cert = require_key(certificate, "certificate");
    BiSeries t = transformed(loaded.series, b, degree);
    if (verdict == to_string(VerdictKind::kCertifiedNotResolvable)) {
      const Json& w = require_key(cert, "witness");
      const Json& basis = require_key(w, "basis");
      const Json& comps = require_key(w, "components");
      if (!basis.is_array() || !comps.is_array() || basis.size() != comps.size() ||
          basis.empty())
        throw Error(ErrorCode::kParse, "witness basis and components must be equal-length arrays");
      std::vector<Ordinal> ords;
      std::vector<CScalar> ws;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        MultiIndex mi = parse_multi_index(basis[i].get<std::string>());
        if (mi.degree() == 0) throw Error(ErrorCode::kParse, "witness uses the constant monomial");
        ords.push_back(t.order().ordinal(mi));
        ws.push_back(parse_cscalar(comps[i].get<std::string>()));
      }
      CScalar value;
      for (std::size_t i = 0; i < ords.size(); ++i)
        for (std::size_t k = 0; k < ords.size(); ++k)
          value += ws[i].conj() * t.coeff(ords[i], ords[k]) * ws[k];
      Rational stated = parse_rational(require_string(cert, "value"));
      if (!value.is_real()) fail("witness value is not real");
      if (value.re != stated) fail("witness evaluates to " + to_string(value) + ", stated " + to_pq(stated));
      if (sgn(value.re) >= 0) fail("witness value is not negative");
      if (valid) checks.push_back("witness evaluates to " + to_pq(value.re));
    } else if (verdict == to_string(VerdictKind::kResolvableUpTo) ||
               verdict == to_string(VerdictKind::kCertifiedResolvable)) {
      PsdOptions mono{false, false};
      PsdVerdict p = psd_certify(build_matrix(t, degree), mono);
      if (!p.psd) fail("matrix is not positive semidefinite");
      const Json& stated = cert.contains("truncated_rank") ? cert.at("truncated_rank")
                                                           : require_key(cert, "rank");
      if (p.psd && (!stated.is_number_unsigned() || stated.get<unsigned>() != p.rank))
        fail("truncated rank " + std::to_string(p.rank) + " differs from stated " + stated.dump());
      if (verdict == to_string(VerdictKind::kCertifiedResolvable)) {
        if (!loaded.model || !loaded.model->space_form) {
          fail("certified_resolvable requires a closed-form model");
        } else {
          const auto& sf = *loaded.model->space_form;
          SpaceFormDecision d = space_form_classification(sf.n, sf.b, sf.scale, b);
          if (!d.exists) fail("closed form classification denies existence");
          else if (rank_json(d.rank) != require_key(cert, "rank")) fail("closed-form rank differs");
        }
      }
      if (valid) checks.push_back("positive semidefinite of rank " + std::to_string(p.rank));
    } else {
      throw Error(ErrorCode::kParse, "unknown verdict '" + verdict + "'");
    }
    if (certificate.contains("hartogs")) {
      const Json& h = certificate.at("hartogs");
      if (!loaded.model || !loaded.model->hartogs_profile) {
        fail("hartogs block on a model without a profile");
      } else if (!require_key(h, "passed").get<bool>()) {
        Rational c = parse_rational(require_string(h, "c"));
        Rational coef = hartogs_coefficient(*loaded.model->hartogs_profile, c,
                                            require_unsigned(h, "j"), require_unsigned(h, "k"));
        if (coef != parse_rational(require_string(h, "coefficient")) || sgn(coef) >= 0)
          fail("hartogs coefficient re-evaluates to " + to_pq(coef));
        else
          checks.push_back("hartogs coefficient " + to_pq(coef));
      }
    }
  } else if (kind == "immersion") {
    ImmersionMap map = immersion_from_json(require_key(certificate, "map"));
    BiSeries target = loaded.series;
    if (certificate.contains("alpha"))
      target *= CScalar(parse_rational(require_string(certificate, "alpha")));
    if (map.b != b && map.target != TargetKind::kIndefinite) fail("map target b differs from envelope b");
    ImmersionCheck check = verify_immersion(map, target, map.b, degree);
    if (!check.ok) {
      const auto& ord = target.order();
      fail("pullback differs at (" + to_string(ord.index(check.j)) + " ; " +
           to_string(ord.index(check.k)) + ")");
    }
    for (const auto& c : map.components)
      if (sgn(c.radicand) < 0) fail("negative radicand " + to_pq(c.radicand));
    if (valid) checks.push_back("pullback matches through degree " + std::to_string(degree));
  } else if (kind == "hartogs") {
    if (!loaded.model || !loaded.model->hartogs_profile)
      throw Error(ErrorCode::kParse, "hartogs certificate needs a Hartogs model source");
    const Json& h = require_key(certificate, "hartogs");
    Rational c = parse_rational(require_string(h, "c"));
    unsigned jmax = require_unsigned(h, "jmax"), kmax = require_unsigned(h, "kmax");
    const UniSeries& f = *loaded.model->hartogs_profile;
    bool passed = require_key(h, "passed").get<bool>();
    if (passed) {
      for (unsigned j = 0; j <= jmax && valid; ++j)
        for (unsigned k = 0; k <= kmax && valid; ++k)
          if (sgn(hartogs_coefficient(f, c, j, k)) < 0)
            fail("negative coefficient at (" + std::to_string(j) + ", " + std::to_string(k) + ")");
      if (valid) checks.push_back("all coefficients nonnegative");
    } else {
      unsigned jw = require_unsigned(h, "j"), kw = require_unsigned(h, "k");
      Rational coef = hartogs_coefficient(f, c, jw, kw);
      if (coef != parse_rational(require_string(h, "coefficient")) || sgn(coef) >= 0)
        fail("coefficient re-evaluates to " + to_pq(coef));
      else
        checks.push_back("coefficient " + to_pq(coef) + " at (" + std::to_string(jw) + ", " +
                         std::to_string(kw) + ")");
    }
  } else {
    throw Error(ErrorCode::kParse, "unknown certificate kind '" + kind + "'");
  }
  report["valid"] = valid;
  report["checks"] = scalar_list(checks);
  return report;
}

}  // namespace kimm

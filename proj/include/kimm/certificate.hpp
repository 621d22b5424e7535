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

#ifndef KIMM_CERTIFICATE_HPP
#define KIMM_CERTIFICATE_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "kimm/immersion.hpp"
#include "kimm/models.hpp"
#include "kimm/resolvability.hpp"

namespace kimm {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Where a series came from; certificates embed this so they can be
/// re-validated without the original invocation.
struct Source {
  std::optional<ModelSpec> model;
  std::string series_text;
};

/// {"model": name, "parameters": {...}, "degree": d}. Parameter values may be
/// strings or integers; "b" and other extra keys are ignored here.
ModelSpec model_spec_from_json(const Json& j);
Json model_spec_to_json(const ModelSpec& spec);

Json source_to_json(const Source& src);
Source source_from_json(const Json& j);

struct LoadedSource {
  BiSeries series{1, 0};
  std::optional<Model> model;
};

/// Builds the model at `degree`, or parses the embedded series.
LoadedSource load_source(const Source& src, unsigned degree);

Json witness_to_json(const HermMatrix& m, const PsdVerdict& v);
Json immersion_to_json(const ImmersionMap& map);
ImmersionMap immersion_from_json(const Json& j);

/// Full analysis envelope {schema_version, kind, model, parameters, b, degree,
/// verdict, certificate, source, ...}. `exit_code` is 0 for resolvable
/// verdicts and 1 for certified-not.
Json analyze(const Source& src, const Rational& b, unsigned degree, int* exit_code = nullptr);

struct EmitOptions {
  bool indefinite = false;
  /// Cartan-Hartogs models: emit the explicit map for alpha times the metric.
  std::optional<Rational> alpha;
};

/// Verified immersion envelope. Throws NotResolvableError when the input
/// fails the criterion.
Json emit_immersion(const Source& src, const Rational& b, unsigned degree,
                    const EmitOptions& options = {});

/// Hartogs criterion envelope for a rotation invariant Hartogs model; the
/// model is built at degree jmax.
Json hartogs_report(const ModelSpec& spec, const Rational& c, unsigned jmax, unsigned kmax);

/// Re-validates an analysis or immersion envelope independently of the run
/// that produced it. Returns {"valid": bool, "kind": ..., "detail": ...}.
Json check_certificate(const Json& certificate);

}  // namespace kimm

#endif  // KIMM_CERTIFICATE_HPP

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

#ifndef KIMM_MODELS_HPP
#define KIMM_MODELS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kimm/series.hpp"

namespace kimm {

/// b = 0: sum |z_j|^2; otherwise log(1 + b sum |z_j|^2) / b.
BiSeries space_form_diastasis(unsigned n, const Rational& b, unsigned degree);

/// -log(F(|z_0|^2) - sum_{j>=1} |z_j|^2) normalized, in n variables with z_0
/// first. F must be known to at least `degree`. Throws kDomain for F(0) <= 0.
BiSeries hartogs_diastasis(const UniSeries& f, unsigned n, unsigned degree);

/// Profiles of the rotation invariant Hartogs family, as series in x.
UniSeries hartogs_profile_tp(const Rational& p, unsigned degree);      // (1-x)^p
UniSeries hartogs_profile_invpow(const Rational& p, unsigned degree);  // (1+x)^{-p}
UniSeries hartogs_profile_alpha(const Rational& alpha, unsigned degree);  // a/(x+a)
UniSeries hartogs_profile_springer(unsigned degree);                   // exp(-x)
UniSeries hartogs_profile_rhp_cubic(unsigned degree);  // (x-1)(x-11/4)(x+3/4)

enum class CartanType { kOmega1, kOmega2, kOmega3, kOmega4 };

struct CartanDomain {
  CartanType type = CartanType::kOmega1;
  unsigned m = 1;  // rows (Omega1 only)
  unsigned n = 1;
};

/// Parses "omega1:m,n", "omega2:n", "omega3:n", "omega4:n" and "ch:n" (the
/// latter as Omega1[1,n]).
CartanDomain parse_cartan_domain(const std::string& text);
std::string to_string(const CartanDomain& d);
unsigned cartan_dimension(const CartanDomain& d);

struct BergmanDiastasis {
  BiSeries diastasis;
  /// Kernel exponent: D = -genus * log N with N the normalized kernel norm.
  unsigned genus = 0;
  /// -log N.
  BiSeries log_norm;
};

BergmanDiastasis cartan_bergman_diastasis(const CartanDomain& domain, unsigned degree);

/// -log(N^mu - |w|^2) in dim(base) + 1 variables, w last; `log_norm` is
/// -log N on the base.
BiSeries cartan_hartogs_diastasis(const BiSeries& log_norm, const Rational& mu, unsigned degree);

/// nu mu |z|^2 - log(exp(-mu |z|^2) - |w|^2), z in C^n first, w in C^m.
BiSeries fbh_diastasis(unsigned n, unsigned m, const Rational& mu, const Rational& nu,
                       unsigned degree);

/// sum_j (-1)^{j+1} |z|^{2j} / j^2.
BiSeries cigar_diastasis(unsigned degree);

enum class TaubNutMode { kSlice, kFull };

BiSeries taubnut_potential(const Rational& m, TaubNutMode mode, unsigned degree);

struct CalabiTube {
  /// y as a series in r (odd coefficients zero), degree 2 * degree.
  UniSeries y;
  /// y as a series in t = r^2.
  UniSeries y_t;
  BiSeries diastasis;
};

CalabiTube calabi_tube(unsigned n, unsigned degree);

/// (y'/r)^{n-1} y'' - e^y written in t = r^2; zero through t^{deg(Y)-1}.
UniSeries calabi_residual(const UniSeries& y_t, unsigned n);

/// The circular potential -3 log(1 - |z1|^2 - 2|z2|^2 - |z3|^2 + |z1 z3|^2 +
/// |z2|^4 - z1 z3 zbar2^2 - z2^2 zbar1 zbar3).
BiSeries phi_b_diastasis(unsigned degree);

// ------------------------------------------------------------ registry

struct ParamInfo {
  std::string name;
  std::string type;  // "int", "rational", "string"
  std::string default_value;
  std::string constraint;
};

struct ModelInfo {
  std::string name;
  std::string description;
  std::vector<ParamInfo> params;
};

const std::vector<ModelInfo>& model_catalog();

struct ModelSpec {
  std::string name;
  std::map<std::string, std::string> parameters;
  unsigned degree = 4;
};

struct Model {
  ModelSpec spec;
  BiSeries diastasis{1, 0};
  /// Closed-form space form description: c times curvature b in n variables.
  struct SpaceForm {
    unsigned n;
    Rational b;
    Rational scale;
  };
  std::optional<SpaceForm> space_form;
  /// Profile for rotation invariant Hartogs models (scale excluded).
  std::optional<UniSeries> hartogs_profile;
  std::optional<unsigned> genus;
  std::optional<CartanDomain> cartan;
  /// -log N for Bergman and Cartan-Hartogs bases.
  std::optional<BiSeries> log_norm;
  Rational scale = 1;
};

/// Validates parameters against the catalog schema and builds the model.
/// Unknown names and parameters raise kInvalidArgument.
Model get_model(const ModelSpec& spec);

}  // namespace kimm

#endif  // KIMM_MODELS_HPP

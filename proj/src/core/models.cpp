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

#include "kimm/models.hpp"

#include <set>

#include "kimm/diastasis.hpp"

namespace kimm {

namespace {

MultiIndex unit(unsigned arity, unsigned var, unsigned power = 1) {
  MultiIndex m{std::vector<unsigned>(arity, 0)};
  m.exponents[var] = power;
  return m;
}

BiSeries minus_log(const BiSeries& norm) {
  BiSeries u = norm;
  u.add_to(0, 0, CScalar(-1));
  return -log1p_series(u);
}

}  // namespace

BiSeries space_form_diastasis(unsigned n, const Rational& b, unsigned degree) {
  BiSeries rho = BiSeries::norm2(n, degree);
  if (sgn(b) == 0) return rho;
  return log1p_series(rho * CScalar(b)) * CScalar(Rational(1) / b);
}

BiSeries hartogs_diastasis(const UniSeries& f, unsigned n, unsigned degree) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "hartogs_diastasis: n must be positive");
  if (sgn(f[0]) <= 0) throw Error(ErrorCode::kDomain, "hartogs_diastasis: F(0) must be positive");
  if (f.degree() < degree)
    throw Error(ErrorCode::kOutOfRange, "hartogs_diastasis: profile known only to degree " +
                                            std::to_string(f.degree()));
  // F(x0) = F(0) (1 + G); -log(F - rho) = -log F(0) - log(1 + G) - log(1 - rho / F).
  UniSeries g = f.truncated(degree) * (Rational(1) / f[0]);
  g[0] = 0;
  BiSeries gz = radial(g, n, degree, {0});
  BiSeries inv_f = (BiSeries::constant(n, degree, 1) + pow1p_series(gz, -1)) *
                   CScalar(Rational(1) / f[0]);
  BiSeries out = -log1p_series(gz);
  if (n > 1) {
    std::vector<unsigned> rest;
    for (unsigned v = 1; v < n; ++v) rest.push_back(v);
    BiSeries rho = BiSeries::norm2(n, degree, rest);
    out -= log1p_series(-(rho * inv_f));
  }
  return normalize_to_diastasis(out);
}

UniSeries hartogs_profile_tp(const Rational& p, unsigned degree) {
  return pow1p(UniSeries::x(degree) * Rational(-1), p);
}

UniSeries hartogs_profile_invpow(const Rational& p, unsigned degree) {
  return pow1p(UniSeries::x(degree), -p);
}

UniSeries hartogs_profile_alpha(const Rational& alpha, unsigned degree) {
  return pow1p(UniSeries::x(degree) * (Rational(1) / alpha), Rational(-1));
}

UniSeries hartogs_profile_springer(unsigned degree) {
  return exp(UniSeries::x(degree) * Rational(-1));
}

UniSeries hartogs_profile_rhp_cubic(unsigned degree) {
  UniSeries f(std::max(degree, 3u));
  // (x - 1)(x - 11/4)(x + 3/4) = x^3 - 3x^2 - x/16 + 33/16.
  f[0] = make_rational(33, 16);
  f[1] = make_rational(-1, 16);
  f[2] = -3;
  f[3] = 1;
  return f.truncated(std::max(degree, 3u));
}

CartanDomain parse_cartan_domain(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::kInvalidArgument, "domain '" + text + "' must look like omega4:3");
  std::string kind = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  auto parse_uint = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::kInvalidArgument, "domain '" + text + "': bad size '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
  };
  CartanDomain d;
  if (kind == "omega1") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw Error(ErrorCode::kInvalidArgument, "omega1 needs two sizes, e.g. omega1:2,3");
    d.type = CartanType::kOmega1;
    d.m = parse_uint(args.substr(0, comma));
    d.n = parse_uint(args.substr(comma + 1));
  } else if (kind == "ch") {
    d.type = CartanType::kOmega1;
    d.m = 1;
    d.n = parse_uint(args);
  } else if (kind == "omega2") {
    d.type = CartanType::kOmega2;
    d.n = parse_uint(args);
  } else if (kind == "omega3") {
    d.type = CartanType::kOmega3;
    d.n = parse_uint(args);
  } else if (kind == "omega4") {
    d.type = CartanType::kOmega4;
    d.n = parse_uint(args);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown domain type '" + kind + "'");
  }
  return d;
}

std::string to_string(const CartanDomain& d) {
  switch (d.type) {
    case CartanType::kOmega1:
      return "omega1:" + std::to_string(d.m) + "," + std::to_string(d.n);
    case CartanType::kOmega2:
      return "omega2:" + std::to_string(d.n);
    case CartanType::kOmega3:
      return "omega3:" + std::to_string(d.n);
    case CartanType::kOmega4:
      return "omega4:" + std::to_string(d.n);
  }
  return "?";
}

unsigned cartan_dimension(const CartanDomain& d) {
  switch (d.type) {
    case CartanType::kOmega1:
      return d.m * d.n;
    case CartanType::kOmega2:
      return d.n * (d.n + 1) / 2;
    case CartanType::kOmega3:
      return d.n * (d.n - 1) / 2;
    case CartanType::kOmega4:
      return d.n;
  }
  return 0;
}

namespace {

void validate(const CartanDomain& d) {
  switch (d.type) {
    case CartanType::kOmega1:
      if (d.m == 0 || d.n == 0) throw Error(ErrorCode::kInvalidArgument, "Omega1 needs m, n >= 1");
      break;
    case CartanType::kOmega2:
      if (d.n == 0) throw Error(ErrorCode::kInvalidArgument, "Omega2 needs n >= 1");
      break;
    case CartanType::kOmega3:
      if (d.n < 2) throw Error(ErrorCode::kInvalidArgument, "Omega3 needs n >= 2");
      break;
    case CartanType::kOmega4:
      if (d.n == 0) throw Error(ErrorCode::kInvalidArgument, "Omega4 needs n >= 1");
      if (d.n == 2)
        throw Error(ErrorCode::kInvalidArgument,
                    "Omega4[2] is not irreducible (biholomorphic to CH1 x CH1)");
      break;
  }
  if (cartan_dimension(d) > 12)
    throw Error(ErrorCode::kInvalidArgument, "domain dimension above 12 is not supported");
}

/// Entry (i, j) of Z as a signed variable index; sign 0 means the entry is 0.
struct ZEntry {
  unsigned var = 0;
  int sign = 0;
};

std::vector<std::vector<ZEntry>> matrix_variables(const CartanDomain& d, unsigned& rows,
                                                  unsigned& cols) {
  std::vector<std::vector<ZEntry>> z;
  if (d.type == CartanType::kOmega1) {
    rows = d.m;
    cols = d.n;
    z.assign(rows, std::vector<ZEntry>(cols));
    for (unsigned i = 0; i < rows; ++i)
      for (unsigned j = 0; j < cols; ++j) z[i][j] = {i * cols + j, 1};
    return z;
  }
  rows = cols = d.n;
  z.assign(rows, std::vector<ZEntry>(cols));
  unsigned v = 0;
  for (unsigned i = 0; i < d.n; ++i) {
    for (unsigned j = i; j < d.n; ++j) {
      if (d.type == CartanType::kOmega2) {
        z[i][j] = z[j][i] = {v++, 1};
      } else if (i != j) {
        z[i][j] = {v, 1};
        z[j][i] = {v, -1};
        ++v;
      }
    }
  }
  return z;
}

}  // namespace

BergmanDiastasis cartan_bergman_diastasis(const CartanDomain& domain, unsigned degree) {
  validate(domain);
  const unsigned dim = cartan_dimension(domain);
  BergmanDiastasis out{BiSeries(dim, degree), 0, BiSeries(dim, degree)};
  BiSeries norm(dim, degree);
  if (domain.type == CartanType::kOmega4) {
    HolSeries q(dim, degree);
    if (degree >= 2)
      for (unsigned v = 0; v < dim; ++v) q.set(q.order().ordinal(unit(dim, v, 2)), CScalar(1));
    norm = BiSeries::constant(dim, degree, 1) + BiSeries::outer(q, q) -
           BiSeries::norm2(dim, degree) * CScalar(2);
    out.genus = domain.n;
  } else {
    unsigned rows = 0, cols = 0;
    auto z = matrix_variables(domain, rows, cols);
    auto entry = [&](unsigned i, unsigned j) {
      HolSeries h(dim, degree);
      if (z[i][j].sign != 0 && degree >= 1)
        h.set(h.order().ordinal(unit(dim, z[i][j].var)), CScalar(z[i][j].sign));
      return h;
    };
    std::vector<std::vector<BiSeries>> m(rows, std::vector<BiSeries>(rows, BiSeries(dim, degree)));
    for (unsigned i = 0; i < rows; ++i) {
      for (unsigned k = 0; k < rows; ++k) {
        BiSeries e = i == k ? BiSeries::constant(dim, degree, 1) : BiSeries(dim, degree);
        for (unsigned j = 0; j < cols; ++j) e -= BiSeries::outer(entry(i, j), entry(k, j));
        m[i][k] = std::move(e);
      }
    }
    norm = det_series(m);
    switch (domain.type) {
      case CartanType::kOmega1:
        out.genus = domain.m + domain.n;
        break;
      case CartanType::kOmega2:
        out.genus = domain.n + 1;
        break;
      default:
        out.genus = 2 * (domain.n - 1);
        break;
    }
  }
  out.log_norm = minus_log(norm);
  // For skew Z the determinant is the square of the generic norm.
  if (domain.type == CartanType::kOmega3) out.log_norm *= CScalar(Rational(1, 2));
  out.diastasis = out.log_norm * CScalar(Rational(out.genus));
  return out;
}

BiSeries cartan_hartogs_diastasis(const BiSeries& log_norm, const Rational& mu, unsigned degree) {
  if (sgn(mu) <= 0) throw Error(ErrorCode::kDomain, "cartan_hartogs: mu must be positive");
  const unsigned d = log_norm.arity();
  std::vector<unsigned> vars(d);
  for (unsigned i = 0; i < d; ++i) vars[i] = i;
  BiSeries l = log_norm.truncated(degree).embedded(d + 1, vars);
  // -log(N^mu - |w|^2) = mu L - log(1 - |w|^2 exp(mu L)), L = -log N.
  BiSeries w2 = BiSeries::norm2(d + 1, l.degree(), d);
  BiSeries scaled = l * CScalar(mu);
  BiSeries e = BiSeries::constant(d + 1, l.degree(), 1) + exp_series(scaled);
  return normalize_to_diastasis(scaled - log1p_series(-(w2 * e)));
}

BiSeries fbh_diastasis(unsigned n, unsigned m, const Rational& mu, const Rational& nu,
                       unsigned degree) {
  if (sgn(mu) <= 0) throw Error(ErrorCode::kDomain, "fbh: mu must be positive");
  if (nu <= -1) throw Error(ErrorCode::kDomain, "fbh: nu must exceed -1");
  if (n == 0 || m == 0) throw Error(ErrorCode::kInvalidArgument, "fbh: n, m must be positive");
  std::vector<unsigned> zs, ws;
  for (unsigned i = 0; i < n; ++i) zs.push_back(i);
  for (unsigned i = 0; i < m; ++i) ws.push_back(n + i);
  BiSeries rz = BiSeries::norm2(n + m, degree, zs);
  BiSeries rw = BiSeries::norm2(n + m, degree, ws);
  // -log(exp(-mu rz) - rw) = mu rz - log(1 - rw exp(mu rz)).
  BiSeries e = BiSeries::constant(n + m, degree, 1) + exp_series(rz * CScalar(mu));
  BiSeries out = rz * CScalar(nu * mu + mu) - log1p_series(-(rw * e));
  return normalize_to_diastasis(out);
}

BiSeries cigar_diastasis(unsigned degree) {
  BiSeries out(1, degree);
  for (unsigned j = 1; j <= degree; ++j)
    out.set(j, j, CScalar(make_rational(j % 2 ? 1 : -1, long(j) * long(j))));
  return out;
}

BiSeries taubnut_potential(const Rational& m, TaubNutMode mode, unsigned degree) {
  if (sgn(m) < 0) throw Error(ErrorCode::kDomain, "taubnut: m must be nonnegative");
  const CScalar two_m(Rational(2) * m);
  if (mode == TaubNutMode::kSlice) {
    BiSeries x = BiSeries::norm2(1, degree, 0u);
    BiSeries t = solve_graded_fixed_point(
        [&](const BiSeries& cur) { return x + x * exp_series(-(cur * two_m)); },
        BiSeries(1, degree), degree);
    return t + t * t * CScalar(m);
  }
  BiSeries x1 = BiSeries::norm2(2, degree, 0u);
  BiSeries x2 = BiSeries::norm2(2, degree, 1u);
  using Pair = std::pair<BiSeries, BiSeries>;
  Pair ts = solve_graded_fixed_point(
      [&](const Pair& cur) {
        BiSeries diff = (cur.first - cur.second) * two_m;
        return Pair{x1 + x1 * exp_series(-diff), x2 + x2 * exp_series(diff)};
      },
      Pair{BiSeries(2, degree), BiSeries(2, degree)}, degree);
  const BiSeries& t = ts.first;
  const BiSeries& s = ts.second;
  return t + s + (t * t + s * s) * CScalar(m);
}

CalabiTube calabi_tube(unsigned n, unsigned degree) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "calabi_tube: n must be positive");
  // In t = r^2 with e^Y = sum e_k t^k: (y')^n = n int_0^r s^{n-1} e^y ds gives
  // (2Y')^n = G(t) = sum_k e_k n/(n+2k) t^k.
  const Rational inv_n = Rational(1, n);
  UniSeries yt = solve_graded_fixed_point(
      [&](const UniSeries& y) {
        UniSeries e = exp(y);
        UniSeries g(degree);
        for (unsigned k = 0; k <= degree; ++k) g[k] = e[k] * Rational(n) / Rational(n + 2 * k);
        g[0] = 0;
        UniSeries p = pow1p(g, inv_n);
        UniSeries next(degree);
        for (unsigned k = 0; k + 1 <= degree; ++k) next[k + 1] = p[k] / Rational(2 * k + 2);
        return next;
      },
      UniSeries(degree), degree);
  CalabiTube out{UniSeries(2 * degree), yt, BiSeries(n, degree)};
  for (unsigned k = 0; k <= degree; ++k) out.y[2 * k] = yt[k];
  BiSeries s(n, degree);
  for (unsigned j = 0; j < n; ++j) {
    HolSeries z = HolSeries::monomial(n, degree, unit(n, j), 1);
    BiSeries lin = BiSeries::holomorphic(z) + BiSeries::antiholomorphic(z);
    s += lin * lin;
  }
  BiSeries acc(n, degree);
  BiSeries power = BiSeries::constant(n, degree, 1);
  for (unsigned k = 1; k <= degree; ++k) {
    power = power * s;
    acc += power * CScalar(yt[k]);
  }
  out.diastasis = normalize_to_diastasis(acc);
  return out;
}

UniSeries calabi_residual(const UniSeries& y_t, unsigned n) {
  unsigned d = y_t.degree();
  if (d == 0) return UniSeries(0);
  UniSeries p(d - 1), a(d - 1);
  for (unsigned k = 0; k + 1 <= d; ++k) {
    p[k] = Rational(2 * (k + 1)) * y_t[k + 1];
    a[k] = Rational(2 * (k + 1) * (2 * k + 1)) * y_t[k + 1];
  }
  UniSeries lhs = a;
  for (unsigned i = 1; i < n; ++i) lhs = lhs * p;
  return lhs - exp(y_t).truncated(d - 1);
}

BiSeries phi_b_diastasis(unsigned degree) {
  const unsigned n = 3;
  BiSeries norm = BiSeries::constant(n, degree, 1) - BiSeries::norm2(n, degree, 0u) -
                  BiSeries::norm2(n, degree, 1u) * CScalar(2) - BiSeries::norm2(n, degree, 2u);
  if (degree >= 2) {
    MultiIndex z1z3{{1, 0, 1}};
    MultiIndex z2sq{{0, 2, 0}};
    norm += BiSeries::monomial(n, degree, z1z3, z1z3, 1);
    norm += BiSeries::monomial(n, degree, z2sq, z2sq, 1);
    norm -= BiSeries::monomial(n, degree, z1z3, z2sq, 1);
    norm -= BiSeries::monomial(n, degree, z2sq, z1z3, 1);
  }
  return minus_log(norm) * CScalar(3);
}

// ------------------------------------------------------------ registry

namespace {

ParamInfo p_int(std::string name, std::string def, std::string constraint) {
  return {std::move(name), "int", std::move(def), std::move(constraint)};
}
ParamInfo p_rat(std::string name, std::string def, std::string constraint) {
  return {std::move(name), "rational", std::move(def), std::move(constraint)};
}
ParamInfo p_str(std::string name, std::string def, std::string constraint) {
  return {std::move(name), "string", std::move(def), std::move(constraint)};
}

ParamInfo scale_param() { return p_rat("scale", "1", "> 0"); }

}  // namespace

const std::vector<ModelInfo>& model_catalog() {
  static const std::vector<ModelInfo> catalog = {
      {"flat", "Euclidean diastasis sum |z_j|^2", {p_int("n", "1", ">= 1"), scale_param()}},
      {"cp",
       "Fubini-Study diastasis log(1 + b|z|^2)/b",
       {p_int("n", "1", ">= 1"), p_rat("b", "1", "> 0"), scale_param()}},
      {"ch",
       "hyperbolic diastasis log(1 + b|z|^2)/b",
       {p_int("n", "1", ">= 1"), p_rat("b", "-1", "< 0"), scale_param()}},
      {"spaceform",
       "space form diastasis of curvature parameter b",
       {p_int("n", "1", ">= 1"), p_rat("b", "0", "any"), scale_param()}},
      {"springer",
       "Hartogs domain with F(x) = exp(-x)",
       {p_int("n", "2", ">= 1"), scale_param()}},
      {"hartogs_alpha",
       "Hartogs domain with F(x) = alpha/(x + alpha)",
       {p_int("n", "2", ">= 1"), p_rat("alpha", "1", "> 0"), scale_param()}},
      {"hartogs_invsqrt",
       "Hartogs domain with F(x) = (x + 1)^(-1/2)",
       {p_int("n", "2", ">= 1"), scale_param()}},
      {"hartogs_invpow",
       "Hartogs domain with F(x) = (x + 1)^(-p)",
       {p_int("n", "2", ">= 1"), p_rat("p", "1", "> 0"), scale_param()}},
      {"hartogs_tp",
       "Hartogs domain with F(x) = (1 - x)^p",
       {p_int("n", "2", ">= 1"), p_rat("p", "1", "> 0"), scale_param()}},
      {"rhp_cubic",
       "Hartogs domain with F(x) = (x - 1)(x - 11/4)(x + 3/4)",
       {p_int("n", "2", ">= 1"), scale_param()}},
      {"omega1",
       "Bergman diastasis of Omega1[m,n]",
       {p_int("m", "1", ">= 1"), p_int("n", "1", ">= 1"), scale_param()}},
      {"omega2", "Bergman diastasis of Omega2[n]", {p_int("n", "1", ">= 1"), scale_param()}},
      {"omega3", "Bergman diastasis of Omega3[n]", {p_int("n", "2", ">= 2"), scale_param()}},
      {"omega4",
       "Bergman diastasis of Omega4[n]",
       {p_int("n", "3", ">= 1, != 2"), scale_param()}},
      {"cartan_hartogs",
       "-log(N^mu - |w|^2) over a Cartan domain base",
       {p_str("base", "ch:1", "ch:n | omega1:m,n | omega2:n | omega3:n | omega4:n"),
        p_rat("mu", "1", "> 0"), scale_param()}},
      {"fbh",
       "Fock-Bargmann-Hartogs potential nu mu |z|^2 - log(exp(-mu |z|^2) - |w|^2)",
       {p_int("n", "1", ">= 1"), p_int("m", "1", ">= 1"), p_rat("mu", "1", "> 0"),
        p_rat("nu", "0", "> -1"), scale_param()}},
      {"cigar", "cigar soliton diastasis sum (-1)^(j+1) |z|^(2j) / j^2", {scale_param()}},
      {"taubnut",
       "Taub-NUT potential (slice z2 = 0, or full)",
       {p_rat("m", "1", ">= 0"), p_str("mode", "slice", "slice | full"), scale_param()}},
      {"calabi_tube",
       "Calabi's tubular metric (y'/r)^(n-1) y'' = e^y",
       {p_int("n", "2", ">= 1"), scale_param()}},
      {"phiB", "circular potential Phi_B on a domain in C^3", {scale_param()}},
  };
  return catalog;
}

namespace {

class Params {
 public:
  Params(const ModelInfo& info, const std::map<std::string, std::string>& given) {
    for (const auto& p : info.params) values_[p.name] = p.default_value;
    for (const auto& [k, v] : given) {
      if (!values_.count(k))
        throw Error(ErrorCode::kInvalidArgument,
                    "model '" + info.name + "' has no parameter '" + k + "'");
      values_[k] = v;
    }
    name_ = info.name;
  }

  unsigned uint(const std::string& k) const {
    const std::string& s = values_.at(k);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::kInvalidArgument,
                  "model '" + name_ + "': parameter " + k + " must be a nonnegative integer");
    return static_cast<unsigned>(std::stoul(s));
  }

  Rational rational(const std::string& k) const {
    try {
      return parse_rational(values_.at(k));
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidArgument,
                  "model '" + name_ + "': parameter " + k + ": " + e.what());
    }
  }

  const std::string& str(const std::string& k) const { return values_.at(k); }

  const std::map<std::string, std::string>& all() const { return values_; }

 private:
  std::string name_;
  std::map<std::string, std::string> values_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

}  // namespace

Model get_model(const ModelSpec& spec) {
  const ModelInfo* info = nullptr;
  for (const auto& m : model_catalog())
    if (m.name == spec.name) info = &m;
  if (!info) throw Error(ErrorCode::kInvalidArgument, "unknown model '" + spec.name + "'");
  Params p(*info, spec.parameters);
  Model model;
  model.spec = spec;
  model.spec.parameters = p.all();
  const unsigned d = spec.degree;
  model.scale = p.rational("scale");
  require(sgn(model.scale) > 0, "scale must be positive");
  const std::string& name = spec.name;

  auto set_space_form = [&](unsigned n, const Rational& b) {
    require(n >= 1, "n must be at least 1");
    model.diastasis = space_form_diastasis(n, b, d);
    model.space_form = Model::SpaceForm{n, b, model.scale};
  };
  auto set_hartogs = [&](UniSeries f) {
    unsigned n = p.uint("n");
    require(n >= 1, "n must be at least 1");
    model.diastasis = hartogs_diastasis(f, n, d);
    model.hartogs_profile = std::move(f);
  };

  if (name == "flat") {
    set_space_form(p.uint("n"), 0);
  } else if (name == "cp") {
    Rational b = p.rational("b");
    require(sgn(b) > 0, "cp: b must be positive");
    set_space_form(p.uint("n"), b);
  } else if (name == "ch") {
    Rational b = p.rational("b");
    require(sgn(b) < 0, "ch: b must be negative");
    set_space_form(p.uint("n"), b);
  } else if (name == "spaceform") {
    set_space_form(p.uint("n"), p.rational("b"));
  } else if (name == "springer") {
    set_hartogs(hartogs_profile_springer(d));
  } else if (name == "hartogs_alpha") {
    Rational a = p.rational("alpha");
    require(sgn(a) > 0, "hartogs_alpha: alpha must be positive");
    set_hartogs(hartogs_profile_alpha(a, d));
  } else if (name == "hartogs_invsqrt") {
    set_hartogs(hartogs_profile_invpow(make_rational(1, 2), d));
  } else if (name == "hartogs_invpow") {
    Rational q = p.rational("p");
    require(sgn(q) > 0, "hartogs_invpow: p must be positive");
    set_hartogs(hartogs_profile_invpow(q, d));
  } else if (name == "hartogs_tp") {
    Rational q = p.rational("p");
    require(sgn(q) > 0, "hartogs_tp: p must be positive");
    set_hartogs(hartogs_profile_tp(q, d));
  } else if (name == "rhp_cubic") {
    set_hartogs(hartogs_profile_rhp_cubic(d));
  } else if (name == "omega1" || name == "omega2" || name == "omega3" || name == "omega4") {
    CartanDomain dom;
    dom.type = name == "omega1"   ? CartanType::kOmega1
               : name == "omega2" ? CartanType::kOmega2
               : name == "omega3" ? CartanType::kOmega3
                                  : CartanType::kOmega4;
    dom.n = p.uint("n");
    if (name == "omega1") dom.m = p.uint("m");
    BergmanDiastasis bd = cartan_bergman_diastasis(dom, d);
    model.diastasis = bd.diastasis;
    model.genus = bd.genus;
    model.cartan = dom;
    model.log_norm = bd.log_norm;
  } else if (name == "cartan_hartogs") {
    CartanDomain dom = parse_cartan_domain(p.str("base"));
    Rational mu = p.rational("mu");
    require(sgn(mu) > 0, "cartan_hartogs: mu must be positive");
    BergmanDiastasis bd = cartan_bergman_diastasis(dom, d);
    model.diastasis = cartan_hartogs_diastasis(bd.log_norm, mu, d);
    model.genus = bd.genus;
    model.cartan = dom;
    model.log_norm = bd.log_norm;
  } else if (name == "fbh") {
    model.diastasis = fbh_diastasis(p.uint("n"), p.uint("m"), p.rational("mu"), p.rational("nu"), d);
  } else if (name == "cigar") {
    model.diastasis = cigar_diastasis(d);
  } else if (name == "taubnut") {
    const std::string& mode = p.str("mode");
    require(mode == "slice" || mode == "full", "taubnut: mode must be slice or full");
    model.diastasis = taubnut_potential(p.rational("m"),
                                        mode == "slice" ? TaubNutMode::kSlice : TaubNutMode::kFull, d);
  } else if (name == "calabi_tube") {
    model.diastasis = calabi_tube(p.uint("n"), d).diastasis;
  } else if (name == "phiB") {
    model.diastasis = phi_b_diastasis(d);
  }
  if (model.scale != 1) model.diastasis *= CScalar(model.scale);
  return model;
}

}  // namespace kimm

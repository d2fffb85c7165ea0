// Copyright 2026 The ddn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ddn/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace ddn {
namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  Timer() : start_(Clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
};

int leg_dim(int dim) {
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
  if (d * d != dim) {
    throw std::invalid_argument("operator dim " + std::to_string(dim) +
                                " is not a square");
  }
  return d;
}

std::string pair_label(const SamplePair& p) {
  return "x=" + p.x.label + " y=" + p.y.label;
}

VerificationReport start(const std::string& id, double tol) {
  VerificationReport r;
  r.identity = id;
  r.tolerance = tol;
  return r;
}

// x -> x^{new/old}; rational entries are unchanged.
ExactOp reorder(const ExactOp& a, int order) {
  int old = a.zero().order();
  if (order % old) throw std::invalid_argument("reorder needs a multiple");
  int step = order / old;
  return a.map(
      [&](const Cyclo& v) {
        Cyclo out(order);
        for (int k = 0; k < old; ++k) {
          const mpq_class& c = v.coeffs()[k];
          if (c != 0) out += Cyclo::monomial(order, static_cast<long>(k) * step, c);
        }
        return out;
      },
      Cyclo(order));
}

double exact_gap(const ExactOp& a, const ExactOp& b) {
  if (equal(a, b)) return 0.0;
  double m = 0;
  (a - b).for_each([&](int, int, const Cyclo& v) {
    m = std::max(m, std::abs(v.to_cd()));
  });
  // A nonzero exact difference that happens to embed tiny is still a
  // failure; never report it as below tolerance.
  return std::max(m, 1.0);
}

void add_exact(VerificationReport* r, const std::string& label, bool ok) {
  r->points.push_back(label);
  r->residuals.push_back(ok ? 0.0 : 1.0);
}

}  // namespace

double VerificationReport::max_residual() const {
  double m = 0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

void VerificationReport::finalize() {
  pass = !residuals.empty();
  for (double r : residuals) {
    if (!(r < tolerance)) pass = false;
  }
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["params"] = params;
  j["tolerance"] = tolerance;
  j["max_residual"] = max_residual();
  j["residuals"] = residuals;
  j["points"] = points;
  j["verdict"] = pass ? "pass" : "fail";
  j["expected"] = expected_pass ? "pass" : "fail";
  j["as_expected"] = as_expected();
  if (!note.empty()) j["note"] = note;
  return j;
}

double default_tolerance(mpfr_prec_t prec) {
  return prec >= 200 ? 1e-30 : 1e-9;
}

double relative_residual(const FloatOp& a, const FloatOp& b) {
  return max_abs_diff(a, b) / std::max(1.0, max_abs(a));
}

VerificationReport check_ybe(const SpectralOperator& r, const SamplePlan& plan,
                             YbeForm form, mpfr_prec_t prec, double tol) {
  Timer timer;
  static const char* kNames[] = {"ybe-plain", "ybe-braided", "ybe-constant"};
  auto rep = start(kNames[static_cast<int>(form)], tol);
  rep.params["operator"] = r.name;
  int d = leg_dim(r.dim);
  for (const auto& s : plan.pairs(r.poles, prec)) {
    const Complex& x = s.x.z;
    const Complex& y = s.y.z;
    Complex xy = x * y;
    FloatOp lhs(1, Complex(prec)), rhs(1, Complex(prec));
    if (form == YbeForm::kConstant) {
      FloatOp c = r.eval(x);
      auto c12 = embed(c, Slot::k12, d, d, d);
      auto c13 = embed(c, Slot::k13, d, d, d);
      auto c23 = embed(c, Slot::k23, d, d, d);
      lhs = c12 * c13 * c23;
      rhs = c23 * c13 * c12;
    } else {
      FloatOp rx = r.eval(x), rxy = r.eval(xy), ry = r.eval(y);
      if (form == YbeForm::kPlain) {
        lhs = embed(rx, Slot::k12, d, d, d) * embed(rxy, Slot::k13, d, d, d) *
              embed(ry, Slot::k23, d, d, d);
        rhs = embed(ry, Slot::k23, d, d, d) * embed(rxy, Slot::k13, d, d, d) *
              embed(rx, Slot::k12, d, d, d);
      } else {
        lhs = embed(rx, Slot::k12, d, d, d) * embed(rxy, Slot::k23, d, d, d) *
              embed(ry, Slot::k12, d, d, d);
        rhs = embed(ry, Slot::k23, d, d, d) * embed(rxy, Slot::k12, d, d, d) *
              embed(rx, Slot::k23, d, d, d);
      }
    }
    rep.points.push_back(pair_label(s));
    rep.residuals.push_back(relative_residual(lhs, rhs));
  }
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport check_rLL(const SpectralOperator& r,
                             const SpectralOperator& l, const SamplePlan& plan,
                             mpfr_prec_t prec, double tol) {
  Timer timer;
  auto rep = start("rLL", tol);
  rep.params["r"] = r.name;
  rep.params["L"] = l.name;
  int n = l.dim / 2;
  for (const auto& s : plan.pairs(r.poles, prec)) {
    const Complex& x = s.x.z;
    const Complex& y = s.y.z;
    auto r12 = embed(r.eval(x / y), Slot::k12, 2, 2, n);
    auto l13 = embed(l.eval(x), Slot::k13, 2, 2, n);
    auto l23 = embed(l.eval(y), Slot::k23, 2, 2, n);
    rep.points.push_back(pair_label(s));
    rep.residuals.push_back(relative_residual(r12 * l13 * l23, l23 * l13 * r12));
  }
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport check_LLR(const SpectralOperator& l,
                             const SpectralOperator& r, const SamplePlan& plan,
                             LlrForm form, mpfr_prec_t prec, double tol) {
  Timer timer;
  auto rep = start(form == LlrForm::kPlain ? "LLR-plain" : "LLR-braided", tol);
  rep.params["L"] = l.name;
  rep.params["R"] = r.name;
  int n = l.dim / 2;
  for (const auto& s : plan.pairs(r.poles, prec)) {
    const Complex& x = s.x.z;
    const Complex& y = s.y.z;
    auto lx = l.eval(x), ly = l.eval(y);
    FloatOp lhs(1, Complex(prec)), rhs(1, Complex(prec));
    if (form == LlrForm::kPlain) {
      auto l12 = embed(lx, Slot::k12, 2, n, n);
      auto l13 = embed(ly, Slot::k13, 2, n, n);
      auto r23 = embed(r.eval(y / x), Slot::k23, 2, n, n);
      lhs = l12 * l13 * r23;
      rhs = r23 * l13 * l12;
    } else {
      auto r23 = embed(r.eval(x / y), Slot::k23, 2, n, n);
      lhs = r23 * embed(lx, Slot::k13, 2, n, n) * embed(ly, Slot::k12, 2, n, n);
      rhs = embed(ly, Slot::k13, 2, n, n) * embed(lx, Slot::k12, 2, n, n) * r23;
    }
    rep.points.push_back(pair_label(s));
    rep.residuals.push_back(relative_residual(lhs, rhs));
  }
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

double g_identity_residual(const GTable& gx, const GTable& gxy,
                           const GTable& gy) {
  const int d = gx.d;
  const mpfr_prec_t prec = gx.g[0].prec();
  auto idx = [d](long a, long j) { return mod(a, d) * d + mod(j, d); };
  const size_t d2 = static_cast<size_t>(d) * d;
  // lhs[((a*d + b)*d + c)*d + dd]
  std::vector<Complex> lhs(d2 * d2, Complex(prec));
  std::vector<Complex> u(d, Complex(prec));
  Real t1(prec), t2(prec);
  for (long a = 0; a < d; ++a) {
    for (long b = 0; b < d; ++b) {
      for (long dd = 0; dd < d; ++dd) {
        for (long k = 0; k < d; ++k) {
          Complex::mul_into(u[k], gx.g[idx(a, k - dd)], gxy.g[idx(k, a - b)]);
        }
        for (long c = 0; c < d; ++c) {
          Complex& acc = lhs[((a * d + b) * d + c) * d + dd];
          for (long k = 0; k < d; ++k) {
            Complex::add_product(acc, u[k], gy.g[idx(b, c - k)], t1, t2);
          }
        }
      }
    }
  }
  double worst = 0;
  Complex acc(prec);
  Real zero(prec);
  for (long c = 0; c < d; ++c) {
    for (long b = 0; b < d; ++b) {
      for (long dd = 0; dd < d; ++dd) {
        for (long k = 0; k < d; ++k) {
          Complex::mul_into(u[k], gx.g[idx(c, k - b)], gxy.g[idx(k, c - dd)]);
        }
        for (long a = 0; a < d; ++a) {
          acc = lhs[((a * d + b) * d + c) * d + dd];
          // acc = lhs - rhs
          for (long k = 0; k < d; ++k) {
            Complex::add_product(acc, -u[k], gy.g[idx(dd, a - k)], t1, t2);
          }
          worst = std::max(worst, acc.abs_d());
        }
      }
    }
  }
  return worst;
}

VerificationReport check_g_identity(const Descendant& desc,
                                    const SamplePlan& plan, Sign s,
                                    double tol) {
  Timer timer;
  auto rep = start("g-identity", tol);
  rep.params["d"] = desc.dim();
  rep.params["sign"] = s == Sign::kPlus ? "+" : "-";
  rep.params["root"] = {desc.params().w.order, desc.params().w.power};
  for (const auto& p : plan.pairs(desc.poles(), desc.prec())) {
    Complex xy = p.x.z * p.y.z;
    double res = g_identity_residual(desc.g_table(p.x.z, s),
                                     desc.g_table(xy, s),
                                     desc.g_table(p.y.z, s));
    rep.points.push_back(pair_label(p));
    rep.residuals.push_back(res);
  }
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport check_f_constraints(const Descendant& desc,
                                       const std::vector<AlphaPair>& pairs,
                                       const SamplePlan& plan, double tol) {
  Timer timer;
  auto rep = start("f-constraints", tol);
  const auto& p = desc.params();
  int n = p.n;
  long k = p.k, l = p.l;
  rep.params["d"] = n;
  rep.params["k"] = k;
  rep.params["l"] = l;
  rep.params["default_boundary"] = desc.table().is_default();
  const FloatField& f = desc.field();
  auto dl = [n](long x, long y) { return mod(x - y, n) == 0; };
  for (const auto& s : plan.points(desc.poles(), desc.prec())) {
    const Complex& z = s.z;
    double worst = 0;
    for (const auto& ab : pairs) {
      long a = ab.a, b = ab.b;
      Complex fab = desc.f(a, b, z);
      long p1 = (-l - a) * k - b * l;
      long p2 = (-l + a) * k + b * l;
      for (const auto& cd : pairs) {
        long c = cd.a, d = cd.b;
        bool g1 = dl(k + b, d) && dl(a + l, c);
        bool g2 = dl(k - b, d) && dl(c, l - a);
        bool g3 = dl(k + b, -d) && dl(-c, l + a);
        bool g4 = dl(k - b, -d) && dl(c, a - l);
        if (!(g1 || g2 || g3 || g4)) continue;
        Complex fcd = desc.f(c, d, z);
        if (g1 || g3) {
          Complex e = fab * (z * f.w(p1) + f.one()) - fcd * (f.w(p1) + z);
          worst = std::max(worst, e.abs_d());
        }
        if (g2 || g4) {
          Complex e = fab * (z * f.w(p2) + f.one()) - fcd * (f.w(p2) + z);
          worst = std::max(worst, e.abs_d());
        }
      }
    }
    rep.points.push_back("z=" + s.label);
    rep.residuals.push_back(worst);
  }
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

std::string property_name(Property p) {
  switch (p) {
    case Property::kConj: return "conj-symmetry";
    case Property::kTranspose: return "transpose";
    case Property::kInvolution: return "involution";
    case Property::kUnitarity: return "unitarity";
    case Property::kLimit0: return "limit0";
    case Property::kLimit1: return "limit1";
  }
  return "?";
}

Property parse_property(const std::string& s) {
  for (Property p : all_properties()) {
    if (property_name(p) == s) return p;
  }
  throw std::invalid_argument("unknown property '" + s + "'");
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> kAll = {
      Property::kConj,      Property::kTranspose, Property::kInvolution,
      Property::kUnitarity, Property::kLimit0,    Property::kLimit1};
  return kAll;
}

std::vector<VerificationReport> check_properties(
    const Descendant& desc, const std::set<Property>& which,
    const SamplePlan& plan, double tol) {
  std::vector<VerificationReport> out;
  int d = desc.dim();
  mpfr_prec_t prec = desc.prec();
  auto base = [&](Property p) {
    auto r = start("property:" + property_name(p), tol);
    r.params["d"] = d;
    r.params["root"] = {desc.params().w.order, desc.params().w.power};
    return r;
  };
  FloatOp perm = permutation(d, Complex(prec));
  FloatOp id = FloatOp::identity(d * d, Complex(prec));
  for (Property p : all_properties()) {
    if (!which.count(p)) continue;
    Timer timer;
    auto rep = base(p);
    switch (p) {
      case Property::kConj:
        // Real z away from the pole at -1.
        for (const auto& s : plan.reals(0.05, 3.0, prec)) {
          FloatOp r = desc.plain(s.z);
          rep.points.push_back("z=" + s.label);
          rep.residuals.push_back(relative_residual(r, r.conj()));
        }
        break;
      case Property::kTranspose:
        for (const auto& s : plan.points(desc.poles(), prec)) {
          FloatOp r = desc.plain(s.z);
          rep.points.push_back("z=" + s.label);
          rep.residuals.push_back(relative_residual(r, r.transpose()));
        }
        break;
      case Property::kInvolution:
        for (const auto& s : plan.points(desc.poles(), prec)) {
          FloatOp r = desc.plain(s.z);
          rep.points.push_back("z=" + s.label);
          rep.residuals.push_back(relative_residual(r * r, id));
        }
        break;
      case Property::kUnitarity:
        for (const auto& s : plan.points(desc.poles(), prec)) {
          // 1/z of a unit-circle point is its conjugate: also pole-free.
          FloatOp r12 = desc.plain(s.z);
          FloatOp r21 = perm * desc.plain(s.z.conj()) * perm;
          rep.points.push_back("z=" + s.label);
          rep.residuals.push_back(relative_residual(r12 * r21, id));
        }
        break;
      case Property::kLimit0: {
        // Odd d: pi_d^+ of D(D_d). Even d: pi_{d,tau}^{(0,0)} of D(D_{2d}).
        int n = d % 2 ? d : 2 * d;
        IrrepLabel pi = tensor_irrep(n);
        ExactField gf = group_field_exact(n);
        ExactOp canon = canonical_element(gf, pi);
        ExactOp r0 = reorder(desc.exact_plain(0), n);
        rep.params["irrep"] = pi.name();
        rep.points.push_back("z=0 (exact)");
        rep.residuals.push_back(exact_gap(r0, canon));
        break;
      }
      case Property::kLimit1: {
        ExactOp r1 = desc.exact_plain(1);
        ExactOp p1 = exact_permutation(d, r1.zero().order());
        rep.points.push_back("z=1 (exact)");
        rep.residuals.push_back(exact_gap(r1, p1));
        rep.expected_pass = d % 2 == 1;
        if (!rep.expected_pass) rep.note = "expected-fail: R(1) != P for even d";
        break;
      }
    }
    rep.finalize();
    rep.wall_seconds = timer.seconds();
    out.push_back(std::move(rep));
  }
  return out;
}

VerificationReport check_r6_unitarity(const SixVertexParams& p,
                                      const SamplePlan& plan,
                                      mpfr_prec_t prec, double tol) {
  Timer timer;
  auto rep = start("r6v-unitarity", tol);
  rep.params["n"] = p.n;
  rep.params["k"] = p.k;
  rep.params["l"] = p.l;
  FloatField f(p.w, prec);
  const Complex& q = f.w(static_cast<long>(p.k) * p.l);
  const Complex& qi = f.w(-static_cast<long>(p.k) * p.l);
  for (const auto& s : plan.points({{0, 1}}, prec)) {
    const Complex& z = s.z;
    Complex zi = f.one() / z;
    Complex scalar = (q * zi - z * qi) * (q * z - qi * zi);
    FloatOp prod = six_vertex_r(p, z) * six_vertex_r(p, zi);
    FloatOp expect = FloatOp::identity(4, Complex(prec)).scaled(scalar);
    rep.points.push_back("z=" + s.label);
    rep.residuals.push_back(relative_residual(prod, expect));
  }
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

AdjointResult check_adjoint_symmetry(const Descendant& desc,
                                     const SamplePlan& plan, double tol) {
  Timer timer;
  int d = desc.dim();
  mpfr_prec_t prec = desc.prec();
  AdjointResult out{start("adjoint-symmetry:matrix", tol),
                    start("adjoint-symmetry:coefficients", tol)};
  for (auto* r : {&out.matrix_side, &out.coeff_side}) {
    r->params["d"] = d;
    r->params["default_boundary"] = desc.table().is_default();
  }
  FloatOp perm = permutation(d, Complex(prec));
  for (const auto& s : plan.reals(0.05, 3.0, prec)) {
    FloatOp r = desc.braided(s.z);
    FloatOp r21 = perm * r * perm;
    out.matrix_side.points.push_back("z=" + s.label);
    out.matrix_side.residuals.push_back(relative_residual(r, r21.adjoint()));
    double worst = 0;
    for (long a = 0; a < d; ++a) {
      for (long b = 0; b < d; ++b) {
        Complex diff = desc.f(a, b, s.z).conj() - desc.f(a, -b, s.z);
        worst = std::max(worst, diff.abs_d());
      }
    }
    out.coeff_side.points.push_back("z=" + s.label);
    out.coeff_side.residuals.push_back(worst);
  }
  out.matrix_side.finalize();
  out.coeff_side.finalize();
  out.matrix_side.wall_seconds = timer.seconds();
  return out;
}

VerificationReport check_str(const FZModel& fz, const SamplePlan& plan,
                             double tol) {
  Timer timer;
  auto rep = start("star-triangle", tol);
  int n = fz.N();
  mpfr_prec_t prec = fz.prec();
  rep.params["N"] = n;
  rep.params["lambda"] = {fz.weights().lambda.order, fz.weights().lambda.power};
  rep.params["reading"] = "W(xy|d-c)";
  auto table = [&](WeightKind k, const Complex& z) {
    std::vector<Complex> t;
    for (int l = 0; l < n; ++l) t.push_back(fz.weight(k, z, l));
    return t;
  };
  std::string first_ratio;
  for (const auto& s : plan.pairs(fz.poles(), prec)) {
    const Complex& x = s.x.z;
    const Complex& y = s.y.z;
    Complex xy = x * y;
    auto wx = table(WeightKind::kW, x), bx = table(WeightKind::kWbar, x);
    auto wy = table(WeightKind::kW, y), by = table(WeightKind::kWbar, y);
    auto wxy = table(WeightKind::kW, xy), bxy = table(WeightKind::kWbar, xy);
    std::vector<Complex> ratios;
    for (long a = 0; a < n; ++a) {
      for (long b = 0; b < n; ++b) {
        for (long c = 0; c < n; ++c) {
          Complex lhs(prec);
          for (long d = 0; d < n; ++d) {
            lhs += bx[mod(a - d, n)] * wxy[mod(d - c, n)] * by[mod(d - b, n)];
          }
          Complex rhs = wx[mod(b - c, n)] * bxy[mod(a - b, n)] *
                        wy[mod(a - c, n)];
          if (rhs.abs_d() < pole_threshold(prec)) continue;
          ratios.push_back(lhs / rhs);
        }
      }
    }
    double spread = 0;
    if (ratios.empty()) {
      spread = 1;
    } else {
      double scale = ratios[0].abs_d();
      for (const auto& r : ratios) {
        spread = std::max(spread, (r - ratios[0]).abs_d() / scale);
      }
      if (first_ratio.empty()) {
        auto c = ratios[0].to_cd();
        first_ratio = std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") +
                      std::to_string(c.imag()) + "i";
      }
    }
    rep.points.push_back(pair_label(s));
    rep.residuals.push_back(spread);
  }
  rep.note = "ratio LHS/RHS at the first sample: " + first_ratio;
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport check_fz_inverse(const FZModel& fz, const SamplePlan& plan,
                                    double tol) {
  Timer timer;
  auto rep = start("fz-inverse-relation", tol);
  mpfr_prec_t prec = fz.prec();
  rep.params["N"] = fz.N();
  auto xs = plan.pairs(fz.poles(), prec);
  auto ys = plan.derived(1).pairs(fz.poles(), prec);
  FloatOp id = FloatOp::identity(fz.N() * fz.N(), Complex(prec));
  Complex one = Complex(1, 0, prec);
  std::string constant;
  for (size_t i = 0; i < xs.size(); ++i) {
    const Complex& x1 = xs[i].x.z;
    const Complex& x2 = xs[i].y.z;
    const Complex& y1 = ys[i].x.z;
    const Complex& y2 = ys[i].y.z;
    FloatOp a = fz.rmatrix_full(x1, x2, y1, y2);
    FloatOp b = fz.rmatrix_full(one / x2, one / x1, one / y2, one / y1);
    Complex s(prec);
    double res = proportionality_residual(a * b, id, &s);
    if (constant.empty()) {
      auto c = s.to_cd();
      constant = std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") +
                 std::to_string(c.imag()) + "i";
    }
    rep.points.push_back(pair_label(xs[i]) + " " + pair_label(ys[i]));
    rep.residuals.push_back(res);
  }
  rep.note = "proportionality constant at the first sample: " + constant;
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport check_two_param(const Descendant& desc,
                                   const SamplePlan& plan, double tol,
                                   const Complex* fixed) {
  Timer timer;
  auto rep = start("two-parameter-ybe", tol);
  int d = desc.dim();
  mpfr_prec_t prec = desc.prec();
  rep.params["m"] = d;
  auto pairs = plan.pairs(desc.poles(), prec);
  auto ls = plan.derived(11).annulus(0.2, 0.8, prec);
  auto ms = plan.derived(12).annulus(0.2, 0.8, prec);
  auto ns = plan.derived(13).annulus(0.2, 0.8, prec);
  for (size_t i = 0; i < pairs.size(); ++i) {
    const Complex& x = pairs[i].x.z;
    const Complex& y = pairs[i].y.z;
    Complex xy = x * y;
    const Complex& lam = fixed ? *fixed : ls[i].z;
    const Complex& mu = fixed ? *fixed : ms[i].z;
    const Complex& nu = fixed ? *fixed : ns[i].z;
    FloatOp a = desc.two_param(x, lam), b = desc.two_param(xy, mu),
            c = desc.two_param(y, nu);
    auto lhs = embed(a, Slot::k12, d, d, d) * embed(b, Slot::k23, d, d, d) *
               embed(c, Slot::k12, d, d, d);
    auto rhs = embed(c, Slot::k23, d, d, d) * embed(b, Slot::k12, d, d, d) *
               embed(a, Slot::k23, d, d, d);
    std::string lbl = pair_label(pairs[i]);
    if (!fixed) {
      lbl += " lambda=" + ls[i].label + " mu=" + ms[i].label + " nu=" +
             ns[i].label;
    }
    rep.points.push_back(lbl);
    rep.residuals.push_back(relative_residual(lhs, rhs));
  }
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

std::vector<VerificationReport> check_projectors(int n, EvenCase c) {
  ExactField f = group_field_exact(n);
  auto cat = catalog(n);
  int d = descendant_dim(n);
  std::vector<ExactOp> ps;
  for (const auto& al : cat) ps.push_back(projector_closed(f, n, al));
  auto label = [](const AlphaPair& al) {
    return "(" + std::to_string(al.a) + "," + std::to_string(al.b) + ")";
  };
  auto mk = [&](const std::string& id) {
    auto r = start("projectors:" + id, 0.5);
    r.params["n"] = n;
    r.params["case"] = c == EvenCase::kTau ? "tau" : "sigma-tau";
    return r;
  };
  std::vector<VerificationReport> out;
  Timer timer;

  auto idem = mk("idempotent");
  for (size_t i = 0; i < ps.size(); ++i) {
    add_exact(&idem, label(cat[i]), equal(ps[i] * ps[i], ps[i]));
  }
  out.push_back(idem);

  auto orth = mk("orthogonal");
  ExactOp zero(d * d, f.zero());
  bool all_orth = true;
  for (size_t i = 0; i < ps.size(); ++i) {
    for (size_t j = 0; j < ps.size(); ++j) {
      if (i != j && !equal(ps[i] * ps[j], zero)) all_orth = false;
    }
  }
  add_exact(&orth, "all pairs", all_orth);
  out.push_back(orth);

  auto comp = mk("complete");
  ExactOp sum = zero;
  for (const auto& p : ps) sum = sum + p;
  add_exact(&comp, "sum", equal(sum, ExactOp::identity(d * d, f.zero())));
  out.push_back(comp);

  auto alg = mk("closed-equals-character-form");
  for (size_t i = 0; i < ps.size(); ++i) {
    add_exact(&alg, label(cat[i]),
              equal(ps[i], projector_algebraic(f, n, cat[i], c)));
  }
  out.push_back(alg);

  auto tr = mk("trace-equals-dimension");
  for (size_t i = 0; i < ps.size(); ++i) {
    int dim = alpha_irrep(n, cat[i], c).dimension();
    add_exact(&tr, label(cat[i]), ps[i].trace() == f.integer(dim));
  }
  out.push_back(tr);

  auto inter = mk("intertwining");
  IrrepLabel pi = tensor_irrep(n, c);
  for (GroupElement g : {GroupElement{1, 0}, GroupElement{0, 1}}) {
    auto m = irrep_matrix(f, pi, g);
    auto mm = kron(m, m);
    bool ok = true;
    for (const auto& p : ps) {
      if (!equal(p * mm, mm * p)) ok = false;
    }
    add_exact(&inter, g.s ? "tau" : "sigma", ok);
  }
  out.push_back(inter);

  // Irreps outside the catalog have a zero projection.
  auto absent = mk("absent-irreps-vanish");
  std::vector<IrrepLabel> used;
  for (const auto& al : cat) used.push_back(alpha_irrep(n, al, c));
  bool ok = true;
  for (const auto& lab : all_irreps(n)) {
    if (std::find(used.begin(), used.end(), lab) != used.end()) continue;
    if (!equal(projector_from_irrep(f, n, lab, c), zero)) ok = false;
  }
  add_exact(&absent, "all", ok);
  out.push_back(absent);

  for (auto& r : out) {
    r.finalize();
    r.wall_seconds = timer.seconds();
  }
  return out;
}

VerificationReport check_canonical_ybe(const IrrepLabel& label) {
  Timer timer;
  auto rep = start("ybe-constant-canonical", 0.5);
  rep.params["irrep"] = label.name();
  rep.params["n"] = label.n;
  ExactField f = group_field_exact(label.n);
  ExactOp r = canonical_element(f, label);
  int d = label.dimension();
  auto r12 = embed(r, Slot::k12, d, d, d);
  auto r13 = embed(r, Slot::k13, d, d, d);
  auto r23 = embed(r, Slot::k23, d, d, d);
  add_exact(&rep, "exact", equal(r12 * r13 * r23, r23 * r13 * r12));
  rep.finalize();
  rep.wall_seconds = timer.seconds();
  return rep;
}

}  // namespace ddn

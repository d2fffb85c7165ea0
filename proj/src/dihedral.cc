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

#include "ddn/dihedral.h"

#include <set>
#include <stdexcept>
#include <utility>

namespace ddn {
namespace {

void bad(const std::string& msg) { throw std::invalid_argument(msg); }

// A signed permutation matrix: column j has value sign[j] at row target[j].
struct Monomial {
  std::vector<int> target;
  std::vector<int> sign;

  static Monomial identity(int d) {
    Monomial m;
    m.target.resize(d);
    m.sign.assign(d, 1);
    for (int j = 0; j < d; ++j) m.target[j] = j;
    return m;
  }
  // (this * o): apply o first.
  Monomial after(const Monomial& o) const {
    Monomial m;
    int d = static_cast<int>(target.size());
    m.target.resize(d);
    m.sign.resize(d);
    for (int j = 0; j < d; ++j) {
      m.target[j] = target[o.target[j]];
      m.sign[j] = sign[o.target[j]] * o.sign[j];
    }
    return m;
  }
};

// Generators of the n-dim (odd) and m-dim (even) irreps as signed
// permutations, read from the 1-based table sums.
void big_generators(const IrrepLabel& L, Monomial* sigma, Monomial* tau) {
  int d = L.dimension();
  *sigma = Monomial::identity(d);
  *tau = Monomial::identity(d);
  if (L.kind == IrrepKind::kNDimOdd) {
    // sigma = sum e_{i+1,i}; tau = +- sum e_{i,2-i}.
    for (int j = 0; j < d; ++j) {
      sigma->target[j] = static_cast<int>(mod(j + 1, d));
      tau->target[j] = static_cast<int>(mod(2 - j, d));
      tau->sign[j] = L.sign;
    }
    return;
  }
  // sigma = sum_{i=1}^m (-1)^{a [i=1]} e_{i,i-1}: e_j -> e_{j+1}.
  for (int j = 0; j < d; ++j) {
    int i = static_cast<int>(mod(j + 1, d));
    sigma->target[j] = i;
    sigma->sign[j] = (L.a && i == mod(1, d)) ? -1 : 1;
  }
  for (int j = 0; j < d; ++j) {
    int bs = L.b ? -1 : 1;
    if (!L.alt_class) {
      // tau = sum (-1)^{a [i=1] + b} e_{i,2-i}: e_j -> e_{2-j}.
      int i = static_cast<int>(mod(2 - j, d));
      tau->target[j] = i;
      tau->sign[j] = bs * ((L.a && i == mod(1, d)) ? -1 : 1);
    } else {
      // tau = (-1)^b sum e_{i,1-i}: e_j -> e_{1-j}.
      tau->target[j] = static_cast<int>(mod(1 - j, d));
      tau->sign[j] = bs;
    }
  }
}

Monomial big_matrix(const IrrepLabel& L, GroupElement g) {
  Monomial sigma, tau;
  big_generators(L, &sigma, &tau);
  Monomial m = Monomial::identity(L.dimension());
  if (g.s) m = tau;
  for (int r = 0; r < g.r; ++r) m = sigma.after(m);
  return m;
}

template <class Field>
Operator<typename Field::Scalar> from_monomial(const Field& f,
                                               const Monomial& m) {
  int d = static_cast<int>(m.target.size());
  OperatorBuilder<typename Field::Scalar> b(d, f.zero());
  for (int j = 0; j < d; ++j) b.add(m.target[j], j, f.integer(m.sign[j]));
  return b.build();
}

bool in_range(int v, int lo, int hi) { return lo <= v && v <= hi; }

// Catalog rows for odd n with the floor bounds, tagged by which Table row
// produced them.
struct OddRow {
  AlphaPair p;
  bool upper;  // produced by the floor((n+3)/4) row
};

std::vector<OddRow> odd_rows(int n) {
  int lo = (n - 1) / 4, hi = (n + 3) / 4, top = (n - 1) / 2;
  std::vector<OddRow> rows;
  rows.push_back({{0, 0}, false});
  for (int b = 1; b <= lo; ++b) rows.push_back({{0, b}, false});
  for (int b = hi; b <= top; ++b) rows.push_back({{0, b}, true});
  for (int a = 1; a <= lo; ++a) {
    for (int b = 0; b < n; ++b) rows.push_back({{a, b}, false});
  }
  for (int a = hi; a <= top; ++a) {
    for (int b = 0; b < n; ++b) rows.push_back({{a, b}, true});
  }
  std::set<AlphaPair> seen;
  for (const auto& r : rows) {
    if (!seen.insert(r.p).second) bad("catalog rows overlap");
  }
  if (static_cast<int>(rows.size()) != (n * n + 1) / 2) {
    bad("catalog row count mismatch");
  }
  return rows;
}

}  // namespace

DihedralGroup::DihedralGroup(int n) : n_(n) {
  if (n < 1) bad("dihedral group needs n >= 1");
}

GroupElement DihedralGroup::make(long r, int s) const {
  return {static_cast<int>(mod(r, n_)), s & 1};
}

GroupElement DihedralGroup::mul(GroupElement g, GroupElement h) const {
  return make(g.r + (g.s ? -h.r : h.r), g.s ^ h.s);
}

GroupElement DihedralGroup::inv(GroupElement g) const {
  return g.s ? g : make(-g.r, 0);
}

std::vector<GroupElement> DihedralGroup::elements() const {
  std::vector<GroupElement> out;
  for (int s = 0; s < 2; ++s) {
    for (int r = 0; r < n_; ++r) out.push_back({r, s});
  }
  return out;
}

IrrepLabel IrrepLabel::one_dim_odd(int n, int sign) {
  IrrepLabel L;
  L.kind = IrrepKind::kOneDimOdd;
  L.n = n;
  L.sign = sign;
  L.validate();
  return L;
}

IrrepLabel IrrepLabel::two_dim(int n, int l, int k) {
  IrrepLabel L;
  L.kind = IrrepKind::kTwoDim;
  L.n = n;
  L.l = l;
  L.k = k;
  L.validate();
  return L;
}

IrrepLabel IrrepLabel::n_dim_odd(int n, int sign) {
  IrrepLabel L;
  L.kind = IrrepKind::kNDimOdd;
  L.n = n;
  L.sign = sign;
  L.validate();
  return L;
}

IrrepLabel IrrepLabel::one_dim_even(int n, bool sigma_m, int a, int b) {
  IrrepLabel L;
  L.kind = IrrepKind::kOneDimEven;
  L.n = n;
  L.alt_class = sigma_m;
  L.a = a;
  L.b = b;
  L.validate();
  return L;
}

IrrepLabel IrrepLabel::m_dim_even(int n, bool sigma_tau, int a, int b) {
  IrrepLabel L;
  L.kind = IrrepKind::kMDimEven;
  L.n = n;
  L.alt_class = sigma_tau;
  L.a = a;
  L.b = b;
  L.validate();
  return L;
}

int IrrepLabel::dimension() const {
  switch (kind) {
    case IrrepKind::kOneDimOdd:
    case IrrepKind::kOneDimEven: return 1;
    case IrrepKind::kTwoDim: return 2;
    case IrrepKind::kNDimOdd: return n;
    case IrrepKind::kMDimEven: return n / 2;
  }
  return 0;
}

void IrrepLabel::validate() const {
  bool odd = n % 2 == 1;
  if (n < 3) bad("irreps are tabulated for n >= 3");
  auto sign_ok = [&] { return sign == 1 || sign == -1; };
  auto bit = [](int v) { return v == 0 || v == 1; };
  int m = n / 2;
  switch (kind) {
    case IrrepKind::kOneDimOdd:
    case IrrepKind::kNDimOdd:
      if (!odd || !sign_ok()) bad("pi_1/pi_n need odd n and sign +-1");
      return;
    case IrrepKind::kTwoDim:
      if (odd) {
        if (l == 0 && in_range(k, 1, (n - 1) / 2)) return;
        if (in_range(l, 1, (n - 1) / 2) && in_range(k, 0, n - 1)) return;
      } else {
        if ((l == 0 || l == m) && in_range(k, 1, m - 1)) return;
        if (in_range(l, 1, m - 1) && in_range(k, 0, n - 1)) return;
      }
      bad("pi_2^{(" + std::to_string(l) + "," + std::to_string(k) +
          ")} is outside the table range for n = " + std::to_string(n));
      return;
    case IrrepKind::kOneDimEven:
    case IrrepKind::kMDimEven:
      if (odd || !bit(a) || !bit(b)) bad("even-n irrep needs a, b in {0,1}");
      return;
  }
}

std::string IrrepLabel::name() const {
  auto s = [](int v) { return std::to_string(v); };
  switch (kind) {
    case IrrepKind::kOneDimOdd: return sign > 0 ? "pi_1^+" : "pi_1^-";
    case IrrepKind::kNDimOdd: return sign > 0 ? "pi_n^+" : "pi_n^-";
    case IrrepKind::kTwoDim: return "pi_2^(" + s(l) + "," + s(k) + ")";
    case IrrepKind::kOneDimEven:
      return std::string(alt_class ? "pi_1,sigma^m" : "pi_1,e") + "^(" +
             s(a) + "," + s(b) + ")";
    case IrrepKind::kMDimEven:
      return std::string(alt_class ? "pi_m,sigma tau" : "pi_m,tau") + "^(" +
             s(a) + "," + s(b) + ")";
  }
  return "?";
}

std::vector<IrrepLabel> all_irreps(int n) {
  std::vector<IrrepLabel> out;
  if (n % 2) {
    out.push_back(IrrepLabel::one_dim_odd(n, 1));
    out.push_back(IrrepLabel::one_dim_odd(n, -1));
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      out.push_back(IrrepLabel::two_dim(n, 0, k));
    }
    for (int l = 1; l <= (n - 1) / 2; ++l) {
      for (int k = 0; k < n; ++k) out.push_back(IrrepLabel::two_dim(n, l, k));
    }
    out.push_back(IrrepLabel::n_dim_odd(n, 1));
    out.push_back(IrrepLabel::n_dim_odd(n, -1));
    return out;
  }
  int m = n / 2;
  for (bool cls : {false, true}) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        out.push_back(IrrepLabel::one_dim_even(n, cls, a, b));
      }
    }
  }
  for (int l : {0, m}) {
    for (int k = 1; k < m; ++k) out.push_back(IrrepLabel::two_dim(n, l, k));
  }
  for (int l = 1; l < m; ++l) {
    for (int k = 0; k < n; ++k) out.push_back(IrrepLabel::two_dim(n, l, k));
  }
  for (bool cls : {false, true}) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        out.push_back(IrrepLabel::m_dim_even(n, cls, a, b));
      }
    }
  }
  return out;
}

ExactField group_field_exact(int n) {
  return ExactField(RootOfUnity::make(n, 1));
}

FloatField group_field_float(int n, mpfr_prec_t prec) {
  return FloatField(RootOfUnity::make(n, 1), prec);
}

template <class Field>
Operator<typename Field::Scalar> irrep_matrix(const Field& f,
                                              const IrrepLabel& L,
                                              GroupElement g) {
  L.validate();
  using S = typename Field::Scalar;
  if (f.order() != L.n) bad("field root order must equal n");
  g = DihedralGroup(L.n).make(g.r, g.s);
  switch (L.kind) {
    case IrrepKind::kOneDimOdd: {
      OperatorBuilder<S> b(1, f.zero());
      b.add(0, 0, f.integer(g.s ? L.sign : 1));
      return b.build();
    }
    case IrrepKind::kOneDimEven: {
      OperatorBuilder<S> b(1, f.zero());
      int e = L.b * g.r + L.a * g.s;
      b.add(0, 0, f.integer(e % 2 ? -1 : 1));
      return b.build();
    }
    case IrrepKind::kTwoDim: {
      // diag(w^{kr}, w^{-kr}) times the swap when s = 1.
      OperatorBuilder<S> b(2, f.zero());
      b.add(0, g.s ? 1 : 0, f.w(static_cast<long>(L.k) * g.r));
      b.add(1, g.s ? 0 : 1, f.w(-static_cast<long>(L.k) * g.r));
      return b.build();
    }
    case IrrepKind::kNDimOdd:
    case IrrepKind::kMDimEven:
      return from_monomial(f, big_matrix(L, g));
  }
  bad("unknown irrep kind");
  return Operator<S>(1, f.zero());
}

template <class Field>
Operator<typename Field::Scalar> dual_irrep_matrix(const Field& f,
                                                   const IrrepLabel& L,
                                                   GroupElement g) {
  L.validate();
  using S = typename Field::Scalar;
  DihedralGroup grp(L.n);
  g = grp.make(g.r, g.s);
  int d = L.dimension();
  int m = L.n / 2;
  OperatorBuilder<S> b(d, f.zero());
  auto is = [&](long r, int s) { return g == grp.make(r, s); };
  switch (L.kind) {
    case IrrepKind::kOneDimOdd:
      if (is(0, 0)) b.add(0, 0, f.one());
      break;
    case IrrepKind::kOneDimEven:
      if (is(L.alt_class ? m : 0, 0)) b.add(0, 0, f.one());
      break;
    case IrrepKind::kTwoDim:
      if (L.l == 0 || (L.n % 2 == 0 && L.l == m)) {
        if (is(L.l, 0)) {
          b.add(0, 0, f.one());
          b.add(1, 1, f.one());
        }
      } else {
        if (is(L.l, 0)) b.add(0, 0, f.one());
        if (is(-L.l, 0)) b.add(1, 1, f.one());
      }
      break;
    case IrrepKind::kNDimOdd:
      // delta^{sigma^{2j} tau}_g e_{j+1,j+1}.
      if (g.s) {
        long j = mod(static_cast<long>(g.r) * inverse_mod(2, L.n), L.n);
        b.add(j + 1, j + 1, f.one());
      }
      break;
    case IrrepKind::kMDimEven:
      // tau class: g = sigma^{2k} tau; sigma tau class: g = sigma^{2k+1} tau.
      if (g.s && (g.r % 2 == (L.alt_class ? 1 : 0))) {
        long k = g.r / 2;
        b.add(k + 1, k + 1, f.one());
      }
      break;
  }
  return b.build();
}

template <class Field>
Operator<typename Field::Scalar> canonical_element(const Field& f,
                                                   const IrrepLabel& L) {
  int d = L.dimension();
  Operator<typename Field::Scalar> acc(d * d, f.zero());
  for (const auto& g : DihedralGroup(L.n).elements()) {
    auto dual = dual_irrep_matrix(f, L, g);
    if (dual.nnz() == 0) continue;
    acc = acc + kron(irrep_matrix(f, L, g), dual);
  }
  return acc;
}

template <class Field>
typename Field::Scalar character(const Field& f, const IrrepLabel& L,
                                 GroupElement h, GroupElement g) {
  DihedralGroup grp(L.n);
  auto m = dual_irrep_matrix(f, L, h) * irrep_matrix(f, L, grp.inv(g));
  return m.trace();
}

int descendant_dim(int n) { return n % 2 ? n : n / 2; }

std::vector<AlphaPair> catalog(int n) {
  if (n < 3) bad("catalog needs n >= 3");
  std::vector<AlphaPair> out;
  if (n % 2) {
    for (const auto& r : odd_rows(n)) out.push_back(r.p);
    return out;
  }
  int m = n / 2;
  if (m % 2) {
    // Same pair set as the odd case at m; m = 1 never reaches here.
    out.push_back({0, 0});
    for (int b = 1; b <= (m - 1) / 2; ++b) out.push_back({0, b});
    for (int a = 1; a <= (m - 1) / 2; ++a) {
      for (int b = 0; b < m; ++b) out.push_back({a, b});
    }
    return out;
  }
  int h = m / 2;
  for (int a : {0, h}) {
    for (int b : {0, h}) out.push_back({a, b});
  }
  for (int a : {0, h}) {
    for (int b = 1; b < h; ++b) out.push_back({a, b});
  }
  for (int a = 1; a < h; ++a) {
    for (int b = 0; b < m; ++b) out.push_back({a, b});
  }
  return out;
}

bool in_catalog(int n, AlphaPair alpha) {
  for (const auto& p : catalog(n)) {
    if (p == alpha) return true;
  }
  return false;
}

IrrepLabel alpha_irrep(int n, AlphaPair al, EvenCase c) {
  if (!in_catalog(n, al)) {
    bad("(" + std::to_string(al.a) + "," + std::to_string(al.b) +
        ") is not in the catalog for n = " + std::to_string(n));
  }
  if (n % 2) {
    if (al.a == 0 && al.b == 0) return IrrepLabel::one_dim_odd(n, 1);
    for (const auto& r : odd_rows(n)) {
      if (!(r.p == al)) continue;
      if (al.a == 0) {
        return IrrepLabel::two_dim(n, 0, r.upper ? n - 2 * al.b : 2 * al.b);
      }
      if (!r.upper) {
        return IrrepLabel::two_dim(n, 2 * al.a,
                                   static_cast<int>(mod(2 * al.b, n)));
      }
      return IrrepLabel::two_dim(n, n - 2 * al.a,
                                 static_cast<int>(mod(n - 2 * al.b, n)));
    }
  }
  int m = n / 2;
  if (m % 2) {
    if (al.a == 0 && al.b == 0) return IrrepLabel::one_dim_even(n, false, 0, 0);
    return IrrepLabel::two_dim(n, 2 * al.a, 2 * al.b);
  }
  int h = m / 2;
  bool ca = al.a == 0 || al.a == h;
  bool cb = al.b == 0 || al.b == h;
  if (ca && cb) {
    int bb = al.b / h;
    return IrrepLabel::one_dim_even(n, al.a == h,
                                    c == EvenCase::kTau ? 0 : bb, bb);
  }
  return IrrepLabel::two_dim(n, 2 * al.a, 2 * al.b);
}

mpq_class c_alpha(int n, AlphaPair al) {
  int m = n / 2;
  bool half;
  if (n % 2 || m % 2) {
    half = al.a == 0 && al.b == 0;
  } else {
    half = (al.a == 0 || al.a == m / 2) && (al.b == 0 || al.b == m / 2);
  }
  return half ? mpq_class(1, 2) : mpq_class(1);
}

IrrepLabel tensor_irrep(int n, EvenCase c) {
  if (n % 2) return IrrepLabel::n_dim_odd(n, 1);
  return IrrepLabel::m_dim_even(n, c == EvenCase::kSigmaTau, 0, 0);
}

template <class Field>
Operator<typename Field::Scalar> projector_closed(const Field& f, int n,
                                                  AlphaPair al, bool scaled) {
  if (!in_catalog(n, al)) bad("alpha not in catalog");
  if (f.order() != n) bad("field root order must equal n");
  using S = typename Field::Scalar;
  int d = descendant_dim(n);
  OperatorBuilder<S> b(d * d, f.zero());
  auto put = [&](long p, long q, long r, long s, const S& v) {
    b.add(mod(p, d) * d + mod(r, d), mod(q, d) * d + mod(s, d), v);
  };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      long e = 2L * al.b * j;
      put(i + al.a + j, i + al.a, i + j, i, f.w(e));
      put(i - al.a + j, i - al.a, i + j, i, f.w(-e));
    }
  }
  auto op = b.build();
  if (scaled) return op;
  mpq_class s = c_alpha(n, al) / d;
  return op.scaled(f.rational(s.get_num().get_si(), s.get_den().get_si()));
}

template <class Field>
Operator<typename Field::Scalar> projector_from_irrep(const Field& f, int n,
                                                      const IrrepLabel& alpha,
                                                      EvenCase c) {
  using S = typename Field::Scalar;
  if (f.order() != n) bad("field root order must equal n");
  DihedralGroup grp(n);
  IrrepLabel pi = tensor_irrep(n, c);
  int d = pi.dimension();
  OperatorBuilder<S> b(d * d, f.zero());
  for (const auto& g : grp.elements()) {
    auto pg = irrep_matrix(f, pi, g);
    // pi(g) e_{k,k} is the k-th column of pi(g): a single entry here.
    std::vector<int> row_of(d, -1);
    std::vector<S> val(d, f.zero());
    pg.for_each([&](int i, int j, const S& v) {
      row_of[j] = i;
      val[j] = v;
    });
    for (int j = 0; j < d; ++j) {
      S chi = character(f, alpha, grp.make(2L * j, 0), g);
      if (is_zero(chi)) continue;
      for (int i = 0; i < d; ++i) {
        int c1 = static_cast<int>(mod(i - j, d));
        S v = chi * val[c1] * val[i];
        b.add(static_cast<long>(row_of[c1]) * d + row_of[i],
              static_cast<long>(c1) * d + i, v);
      }
    }
  }
  auto op = b.build();
  return op.scaled(f.rational(alpha.dimension(), grp.order()));
}

template <class Field>
Operator<typename Field::Scalar> projector_algebraic(const Field& f, int n,
                                                     AlphaPair alpha,
                                                     EvenCase c) {
  return projector_from_irrep(f, n, alpha_irrep(n, alpha, c), c);
}

#define DDN_INSTANTIATE(F)                                                   \
  template Operator<F::Scalar> irrep_matrix(const F&, const IrrepLabel&,     \
                                            GroupElement);                   \
  template Operator<F::Scalar> dual_irrep_matrix(const F&, const IrrepLabel&, \
                                                 GroupElement);              \
  template Operator<F::Scalar> canonical_element(const F&,                   \
                                                 const IrrepLabel&);         \
  template F::Scalar character(const F&, const IrrepLabel&, GroupElement,    \
                               GroupElement);                                \
  template Operator<F::Scalar> projector_closed(const F&, int, AlphaPair,    \
                                                bool);                       \
  template Operator<F::Scalar> projector_from_irrep(                         \
      const F&, int, const IrrepLabel&, EvenCase);                           \
  template Operator<F::Scalar> projector_algebraic(const F&, int, AlphaPair, \
                                                   EvenCase);

DDN_INSTANTIATE(ExactField)
DDN_INSTANTIATE(FloatField)

#undef DDN_INSTANTIATE

}  // namespace ddn

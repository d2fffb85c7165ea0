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

// The dihedral group D_n, the irreducible representations of its Drinfeld
// double, the canonical element and the projection operators onto the
// isotypic pieces of the tensor square of the n-dimensional (odd n) or
// m-dimensional (n = 2m) irrep.
//
// All matrices here are built over a field whose root is the group root:
// w = exp(2 pi i / n), for odd and even n alike. Table indices are 1-based
// sums over i = 1..n; they are stored as residues mod the dimension, so the
// last label lands at 0.

#ifndef DDN_DIHEDRAL_H_
#define DDN_DIHEDRAL_H_

#include <string>
#include <vector>

#include "ddn/field.h"
#include "ddn/operator.h"

namespace ddn {

// sigma^r tau^s.
struct GroupElement {
  int r = 0;
  int s = 0;
  bool operator==(const GroupElement&) const = default;
};

class DihedralGroup {
 public:
  explicit DihedralGroup(int n);
  int n() const { return n_; }
  int order() const { return 2 * n_; }
  GroupElement mul(GroupElement g, GroupElement h) const;
  GroupElement inv(GroupElement g) const;
  GroupElement make(long r, int s) const;
  // sigma^0..sigma^{n-1}, then sigma^0 tau..sigma^{n-1} tau.
  std::vector<GroupElement> elements() const;

 private:
  int n_;
};

enum class IrrepKind { kOneDimOdd, kTwoDim, kNDimOdd, kOneDimEven, kMDimEven };

struct IrrepLabel {
  IrrepKind kind = IrrepKind::kOneDimOdd;
  int n = 3;
  int sign = 1;       // pi_1^+-, pi_n^+-
  int l = 0, k = 0;   // pi_2^{(l,k)}
  int a = 0, b = 0;   // even-case 1-dim and m-dim parameters
  // OneDimEven: false = class {e}, true = class {sigma^m}.
  // MDimEven: false = tau class, true = sigma tau class.
  bool alt_class = false;

  static IrrepLabel one_dim_odd(int n, int sign);
  static IrrepLabel two_dim(int n, int l, int k);
  static IrrepLabel n_dim_odd(int n, int sign);
  static IrrepLabel one_dim_even(int n, bool sigma_m, int a, int b);
  static IrrepLabel m_dim_even(int n, bool sigma_tau, int a, int b);

  int dimension() const;
  // Throws std::invalid_argument when outside the table ranges.
  void validate() const;
  std::string name() const;
  bool operator==(const IrrepLabel&) const = default;
};

// Every irrep of D(D_n), in table order.
std::vector<IrrepLabel> all_irreps(int n);

ExactField group_field_exact(int n);
FloatField group_field_float(int n, mpfr_prec_t prec);

template <class Field>
Operator<typename Field::Scalar> irrep_matrix(const Field& f,
                                              const IrrepLabel& label,
                                              GroupElement g);
// pi(g*), the dual basis element.
template <class Field>
Operator<typename Field::Scalar> dual_irrep_matrix(const Field& f,
                                                   const IrrepLabel& label,
                                                   GroupElement g);
// sum_g pi(g) (x) pi(g*).
template <class Field>
Operator<typename Field::Scalar> canonical_element(const Field& f,
                                                   const IrrepLabel& label);
// tr(pi(h*) pi(g^{-1})), the character on the double element h* g^{-1}.
template <class Field>
typename Field::Scalar character(const Field& f, const IrrepLabel& label,
                                 GroupElement h, GroupElement g);

// Which m-dimensional irrep an even-n tensor square is taken of.
enum class EvenCase { kTau, kSigmaTau };

struct AlphaPair {
  int a = 0;
  int b = 0;
  bool operator==(const AlphaPair&) const = default;
  auto operator<=>(const AlphaPair&) const = default;
};

// n for odd n, m for n = 2m.
int descendant_dim(int n);

// The ordered pairs labelling the summands of the tensor square. n >= 3.
std::vector<AlphaPair> catalog(int n);
bool in_catalog(int n, AlphaPair alpha);
// The irrep of D(D_n) a catalog pair stands for.
IrrepLabel alpha_irrep(int n, AlphaPair alpha, EvenCase c = EvenCase::kTau);
// The prefactor c^alpha (1/2 or 1).
mpq_class c_alpha(int n, AlphaPair alpha);
// pi_n^+ (odd n) or pi_{m,tau}^{(0,0)} / pi_{m,sigma tau}^{(0,0)}.
IrrepLabel tensor_irrep(int n, EvenCase c = EvenCase::kTau);

// Closed form (c/d) sum_{i,j} [w^{2bj} e_{i+a+j,i+a} (x) e_{i+j,i}
// + w^{-2bj} e_{i-a+j,i-a} (x) e_{i+j,i}]; `scaled` drops c/d.
template <class Field>
Operator<typename Field::Scalar> projector_closed(const Field& f, int n,
                                                  AlphaPair alpha,
                                                  bool scaled = false);
// Character-sum form of the projector for an arbitrary irrep; zero for
// irreps absent from the tensor square.
template <class Field>
Operator<typename Field::Scalar> projector_from_irrep(
    const Field& f, int n, const IrrepLabel& irrep,
    EvenCase c = EvenCase::kTau);
template <class Field>
Operator<typename Field::Scalar> projector_algebraic(
    const Field& f, int n, AlphaPair alpha, EvenCase c = EvenCase::kTau);

}  // namespace ddn

#endif  // DDN_DIHEDRAL_H_

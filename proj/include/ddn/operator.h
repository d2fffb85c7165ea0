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

// Square matrices over either scalar backend, with indices taken mod dim.
//
// An Operator is immutable once built. Storage is picked at construction:
// coordinate rows when at most 10% of entries are nonzero, a dense array
// otherwise. Every algorithm walks rows through for_row(), so the two layouts
// share one implementation.

#ifndef DDN_OPERATOR_H_
#define DDN_OPERATOR_H_

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ddn/field.h"

namespace ddn {

enum class Storage { kDense, kSparse };

template <class S>
class Operator;

// Accumulates entries (summing repeats) and freezes them into an Operator.
template <class S>
class OperatorBuilder {
 public:
  OperatorBuilder(int dim, S zero) : dim_(dim), zero_(std::move(zero)) {
    if (dim < 1) throw std::invalid_argument("operator dim must be >= 1");
  }
  int dim() const { return dim_; }
  void add(long i, long j, const S& v) {
    if (is_zero(v)) return;
    auto key = std::make_pair(static_cast<int>(mod(i, dim_)),
                              static_cast<int>(mod(j, dim_)));
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      entries_.emplace(key, v);
    } else {
      it->second += v;
    }
  }
  Operator<S> build() const;

 private:
  int dim_;
  S zero_;
  std::map<std::pair<int, int>, S> entries_;
};

template <class S>
class Operator {
 public:
  using Row = std::vector<std::pair<int, S>>;

  Operator(int dim, const S& zero) : dim_(dim), zero_(zero_like(zero)) {
    if (dim < 1) throw std::invalid_argument("operator dim must be >= 1");
    rows_.assign(dim, Row());
  }

  static Operator identity(int dim, const S& proto) {
    OperatorBuilder<S> b(dim, zero_like(proto));
    S one = one_like(proto);
    for (int i = 0; i < dim; ++i) b.add(i, i, one);
    return b.build();
  }

  static Operator elementary(int dim, long i, long j, const S& proto) {
    OperatorBuilder<S> b(dim, zero_like(proto));
    b.add(i, j, one_like(proto));
    return b.build();
  }

  // Built from per-row sorted nonzeros; chooses the layout.
  static Operator from_rows(int dim, std::vector<Row> rows, const S& proto) {
    Operator op(dim, proto);
    size_t nnz = 0;
    for (const auto& r : rows) nnz += r.size();
    if (10 * nnz > static_cast<size_t>(dim) * dim) {
      op.dense_.assign(static_cast<size_t>(dim) * dim, op.zero_);
      for (int i = 0; i < dim; ++i) {
        for (auto& [j, v] : rows[i]) {
          op.dense_[static_cast<size_t>(i) * dim + j] = std::move(v);
        }
      }
      op.rows_.clear();
      op.storage_ = Storage::kDense;
    } else {
      op.rows_ = std::move(rows);
      op.storage_ = Storage::kSparse;
    }
    op.nnz_ = nnz;
    return op;
  }

  int dim() const { return dim_; }
  Storage storage() const { return storage_; }
  size_t nnz() const { return nnz_; }
  const S& zero() const { return zero_; }

  const S& at(long i, long j) const {
    int r = static_cast<int>(mod(i, dim_));
    int c = static_cast<int>(mod(j, dim_));
    if (storage_ == Storage::kDense) {
      return dense_[static_cast<size_t>(r) * dim_ + c];
    }
    const Row& row = rows_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const std::pair<int, S>& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return zero_;
  }

  // f(col, value) over structurally nonzero entries of row i, ascending col.
  template <class F>
  void for_row(int i, F&& f) const {
    if (storage_ == Storage::kDense) {
      const S* base = &dense_[static_cast<size_t>(i) * dim_];
      for (int j = 0; j < dim_; ++j) {
        if (!is_zero(base[j])) f(j, base[j]);
      }
    } else {
      for (const auto& [j, v] : rows_[i]) f(j, v);
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < dim_; ++i) {
      for_row(i, [&](int j, const S& v) { f(i, j, v); });
    }
  }

  std::vector<Row> rows() const {
    std::vector<Row> out(dim_);
    for_each([&](int i, int j, const S& v) { out[i].emplace_back(j, v); });
    return out;
  }

  Operator operator*(const Operator& o) const {
    require_dim(o);
    std::vector<Row> out(dim_);
    std::vector<S> acc(dim_, zero_);
    std::vector<char> hit(dim_, 0);
    std::vector<int> cols;
    for (int i = 0; i < dim_; ++i) {
      cols.clear();
      for_row(i, [&](int k, const S& a) {
        o.for_row(k, [&](int j, const S& b) {
          if (!hit[j]) {
            hit[j] = 1;
            cols.push_back(j);
            acc[j] = a * b;
          } else {
            acc[j] += a * b;
          }
        });
      });
      std::sort(cols.begin(), cols.end());
      for (int j : cols) {
        if (!is_zero(acc[j])) out[i].emplace_back(j, std::move(acc[j]));
        acc[j] = zero_;
        hit[j] = 0;
      }
    }
    return from_rows(dim_, std::move(out), zero_);
  }

  Operator operator+(const Operator& o) const { return combine(o, false); }
  Operator operator-(const Operator& o) const { return combine(o, true); }

  Operator scaled(const S& s) const {
    std::vector<Row> out(dim_);
    for_each([&](int i, int j, const S& v) {
      S p = v * s;
      if (!is_zero(p)) out[i].emplace_back(j, std::move(p));
    });
    return from_rows(dim_, std::move(out), zero_);
  }

  Operator transpose() const {
    std::vector<Row> out(dim_);
    for_each([&](int i, int j, const S& v) { out[j].emplace_back(i, v); });
    return from_rows(dim_, std::move(out), zero_);
  }

  Operator conj() const {
    std::vector<Row> out(dim_);
    for_each([&](int i, int j, const S& v) {
      out[i].emplace_back(j, ddn::conj(v));
    });
    return from_rows(dim_, std::move(out), zero_);
  }

  Operator adjoint() const { return transpose().conj(); }

  S trace() const {
    S t = zero_;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  // Entry-wise map into another scalar type.
  template <class T, class F>
  Operator<T> map(F&& f, const T& proto) const {
    std::vector<typename Operator<T>::Row> out(dim_);
    for_each([&](int i, int j, const S& v) {
      T t = f(v);
      if (!is_zero(t)) out[i].emplace_back(j, std::move(t));
    });
    return Operator<T>::from_rows(dim_, std::move(out), proto);
  }

  std::vector<std::complex<double>> to_dense_cd() const {
    std::vector<std::complex<double>> d(static_cast<size_t>(dim_) * dim_);
    for_each([&](int i, int j, const S& v) {
      d[static_cast<size_t>(i) * dim_ + j] = to_cd(v);
    });
    return d;
  }

 private:
  void require_dim(const Operator& o) const {
    if (o.dim_ != dim_) {
      throw std::invalid_argument("dimension mismatch: " +
                                  std::to_string(dim_) + " vs " +
                                  std::to_string(o.dim_));
    }
  }

  Operator combine(const Operator& o, bool subtract) const {
    require_dim(o);
    std::vector<Row> out(dim_);
    for (int i = 0; i < dim_; ++i) {
      Row a, b;
      for_row(i, [&](int j, const S& v) { a.emplace_back(j, v); });
      o.for_row(i, [&](int j, const S& v) { b.emplace_back(j, v); });
      size_t p = 0, q = 0;
      while (p < a.size() || q < b.size()) {
        if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
          out[i].push_back(std::move(a[p++]));
        } else if (p == a.size() || b[q].first < a[p].first) {
          S v = subtract ? -b[q].second : b[q].second;
          out[i].emplace_back(b[q].first, std::move(v));
          ++q;
        } else {
          S v = a[p].second;
          if (subtract) {
            v -= b[q].second;
          } else {
            v += b[q].second;
          }
          if (!is_zero(v)) out[i].emplace_back(a[p].first, std::move(v));
          ++p;
          ++q;
        }
      }
    }
    return from_rows(dim_, std::move(out), zero_);
  }

  int dim_;
  S zero_;
  Storage storage_ = Storage::kSparse;
  size_t nnz_ = 0;
  std::vector<Row> rows_;
  std::vector<S> dense_;
};

template <class S>
Operator<S> OperatorBuilder<S>::build() const {
  std::vector<typename Operator<S>::Row> rows(dim_);
  for (const auto& [key, v] : entries_) {
    if (!is_zero(v)) rows[key.first].emplace_back(key.second, v);
  }
  return Operator<S>::from_rows(dim_, std::move(rows), zero_);
}

using FloatOp = Operator<Complex>;
using ExactOp = Operator<Cyclo>;

// e(i, j) of size dim, indices reduced mod dim.
template <class S>
Operator<S> elementary(int dim, long i, long j, const S& proto) {
  return Operator<S>::elementary(dim, i, j, proto);
}

// Row-major pairing: row (i1, i2) -> i1 * dim(B) + i2.
template <class S>
Operator<S> kron(const Operator<S>& a, const Operator<S>& b) {
  int db = b.dim();
  int d = a.dim() * db;
  std::vector<typename Operator<S>::Row> out(d);
  for (int i1 = 0; i1 < a.dim(); ++i1) {
    for (int i2 = 0; i2 < db; ++i2) {
      auto& row = out[i1 * db + i2];
      a.for_row(i1, [&](int j1, const S& x) {
        b.for_row(i2, [&](int j2, const S& y) {
          row.emplace_back(j1 * db + j2, x * y);
        });
      });
    }
  }
  return Operator<S>::from_rows(d, std::move(out), a.zero());
}

// P = sum_{i,j} e(i,j) (x) e(j,i).
template <class S>
Operator<S> permutation(int d, const S& proto) {
  OperatorBuilder<S> b(d * d, zero_like(proto));
  S one = one_like(proto);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) b.add(i * d + j, j * d + i, one);
  }
  return b.build();
}

enum class Slot { k12, k13, k23 };

// Places a two-leg operator on legs (1,2), (1,3) or (2,3) of a three-leg
// space with leg dimensions (d1, d2, d3); identity on the remaining leg.
template <class S>
Operator<S> embed(const Operator<S>& a, Slot slot, int d1, int d2, int d3) {
  int la = 0, lb = 0, other = 0;
  switch (slot) {
    case Slot::k12: la = d1; lb = d2; other = d3; break;
    case Slot::k13: la = d1; lb = d3; other = d2; break;
    case Slot::k23: la = d2; lb = d3; other = d1; break;
  }
  if (a.dim() != la * lb) {
    throw std::invalid_argument("embed: operator dim " +
                                std::to_string(a.dim()) +
                                " does not match legs " + std::to_string(la) +
                                "x" + std::to_string(lb));
  }
  if (slot == Slot::k12) {
    return kron(a, Operator<S>::identity(other, a.zero()));
  }
  if (slot == Slot::k23) {
    return kron(Operator<S>::identity(other, a.zero()), a);
  }
  int d = d1 * d2 * d3;
  std::vector<typename Operator<S>::Row> out(d);
  for (int i1 = 0; i1 < d1; ++i1) {
    for (int i3 = 0; i3 < d3; ++i3) {
      a.for_row(i1 * d3 + i3, [&](int col, const S& v) {
        int j1 = col / d3, j3 = col % d3;
        for (int i2 = 0; i2 < d2; ++i2) {
          out[(i1 * d2 + i2) * d3 + i3].emplace_back((j1 * d2 + i2) * d3 + j3,
                                                     v);
        }
      });
    }
  }
  for (auto& row : out) {
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return Operator<S>::from_rows(d, std::move(out), a.zero());
}

// Exact entry-wise equality (value equality for the exact backend).
template <class S>
bool equal(const Operator<S>& a, const Operator<S>& b) {
  if (a.dim() != b.dim()) return false;
  bool same = true;
  auto check = [&](const Operator<S>& x, const Operator<S>& y) {
    x.for_each([&](int i, int j, const S& v) {
      if (same && !(v == y.at(i, j))) same = false;
    });
  };
  check(a, b);
  if (same) check(b, a);
  return same;
}

// Largest entry modulus.
double max_abs(const FloatOp& a);
// max |a_ij - b_ij|.
double max_abs_diff(const FloatOp& a, const FloatOp& b);
// Residual of a ~ s * b, minimised over the scalar s, relative to max|a|.
// Returns 0 for a = b = 0 and 1 if exactly one of them vanishes.
double proportionality_residual(const FloatOp& a, const FloatOp& b,
                                Complex* scale = nullptr);

ExactOp exact_scaled(const ExactOp& a, const mpq_class& q);
FloatOp embed_exact(const ExactOp& a, mpfr_prec_t prec);

}  // namespace ddn

#endif  // DDN_OPERATOR_H_

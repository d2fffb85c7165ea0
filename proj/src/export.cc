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


#include "ddn/export.h"

#include <sstream>
#include <stdexcept>

namespace ddn {

void ExportRecord::set_operator(const FloatOp& op) {
  dim = op.dim();
  precision = op.zero().prec();
  entries.clear();
  op.for_each([&](int i, int j, const Complex& v) {
    entries.push_back({i, j, v.re().str(), v.im().str()});
  });
  Complex t = op.trace();
  trace_re = t.re().str();
  trace_im = t.im().str();
}

FloatOp ExportRecord::to_operator() const {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision);
  OperatorBuilder<Complex> b(dim, Complex(prec));
  for (const auto& e : entries) {
    if (e.row < 0 || e.row >= dim || e.col < 0 || e.col >= dim) {
      throw std::invalid_argument("entry outside the matrix");
    }
    b.add(e.row, e.col,
          Complex(Real::parse(e.re, prec), Real::parse(e.im, prec)));
  }
  return b.build();
}

nlohmann::json ExportRecord::to_json() const {
  nlohmann::json meta = {
      {"object", object},
      {"n", n},
      {"parity", parity},
      {"convention", convention},
      {"root", {{"order", root_order}, {"power", root_power}}},
      {"z", z},
      {"dim", dim},
      {"precision", precision},
      {"trace", {{"re", trace_re}, {"im", trace_im}}},
      {"params", params},
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) rows.push_back({e.row, e.col, e.re, e.im});
  return {{"metadata", meta}, {"entries", rows}};
}

ExportRecord ExportRecord::from_json(const nlohmann::json& j) {
  ExportRecord r;
  const auto& m = j.at("metadata");
  r.object = m.at("object").get<std::string>();
  r.n = m.at("n").get<int>();
  r.parity = m.at("parity").get<std::string>();
  r.convention = m.at("convention").get<std::string>();
  r.root_order = m.at("root").at("order").get<long>();
  r.root_power = m.at("root").at("power").get<long>();
  r.z = m.at("z");
  r.dim = m.at("dim").get<int>();
  r.precision = m.at("precision").get<long>();
  r.trace_re = m.at("trace").at("re").get<std::string>();
  r.trace_im = m.at("trace").at("im").get<std::string>();
  r.params = m.value("params", nlohmann::json::object());
  for (const auto& e : j.at("entries")) {
    r.entries.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                         e.at(2).get<std::string>(),
                         e.at(3).get<std::string>()});
  }
  for (size_t i = 1; i < r.entries.size(); ++i) {
    const auto& p = r.entries[i - 1];
    const auto& q = r.entries[i];
    if (std::make_pair(p.row, p.col) >= std::make_pair(q.row, q.col)) {
      throw std::invalid_argument("entries not sorted by (row, col)");
    }
  }
  return r;
}

ExportRecord ExportRecord::parse(const std::string& text) {
  return from_json(nlohmann::json::parse(text));
}

std::string ExportRecord::to_csv() const {
  std::ostringstream os;
  os << "row,col,re,im\n";
  for (const auto& e : entries) {
    os << e.row << ',' << e.col << ',' << e.re << ',' << e.im << '\n';
  }
  return os.str();
}

}  // namespace ddn

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


// The interchange record for a built operator: metadata plus the nonzero
// entries as decimal strings, sorted by (row, col). Rows and columns are
// 0-based. The decimal strings carry enough digits to round-trip at the
// recorded precision.

#ifndef DDN_EXPORT_H_
#define DDN_EXPORT_H_

#include <string>
#include <vector>

#include "ddn/operator.h"
#include "json.hpp"

namespace ddn {

struct ExportEntry {
  int row = 0;
  int col = 0;
  std::string re;
  std::string im;
  bool operator==(const ExportEntry&) const = default;
};

struct ExportRecord {
  std::string object;
  int n = 0;
  std::string parity;      // "odd", "even" or "none"
  std::string convention;  // how the root and indices are read
  long root_order = 1;
  long root_power = 1;
  // Either {"re": ..., "im": ...} or "symbolic-limit-0" / "symbolic-limit-1";
  // null for constant objects.
  nlohmann::json z;
  int dim = 1;
  long precision = 53;
  std::string trace_re = "0";
  std::string trace_im = "0";
  // Object-specific parameters (k, l, alpha, ...).
  nlohmann::json params = nlohmann::json::object();
  std::vector<ExportEntry> entries;

  // Fills dim, precision, entries and trace from `op`.
  void set_operator(const FloatOp& op);
  FloatOp to_operator() const;

  nlohmann::json to_json() const;
  static ExportRecord from_json(const nlohmann::json& j);
  static ExportRecord parse(const std::string& text);
  // "row,col,re,im" lines with a header.
  std::string to_csv() const;

  bool operator==(const ExportRecord&) const = default;
};

}  // namespace ddn

#endif  // DDN_EXPORT_H_

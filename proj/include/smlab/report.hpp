// Copyright 2026 The smlab Authors.
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

#ifndef SMLAB_REPORT_HPP_
#define SMLAB_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace smlab {

// CSV files start with this comment line so readers can detect the schema.
inline constexpr std::string_view kCsvSchemaLine = "# smlab-v1";

// One row of a protocol or equivalence verification report.
struct ReportRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string protocol;
  std::string mode;
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  std::uint64_t max_bits = 0;
  double mean_bits = 0.0;
  std::uint64_t seed = 0;

  double error_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(errors) / trials;
  }
};

enum class Format { kCsv, kJson };

Format parse_format(std::string_view s);

// Columns: n,k,protocol,mode,trials,errors,max_bits,mean_bits,seed.
void write_rows(std::ostream& out, std::span<const ReportRow> rows,
                Format format);

// Fixed-precision decimal used in every emitted file, so identical runs give
// byte-identical output.
std::string format_decimal(double v, int precision = 6);

}  // namespace smlab

#endif  // SMLAB_REPORT_HPP_

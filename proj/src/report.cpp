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

#include "smlab/report.hpp"

#include <cstdio>
#include <string>

#include "json.hpp"

#include "smlab/error.hpp"

namespace smlab {

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  throw InputError("unknown format '" + std::string(s) + "' (csv or json)");
}

std::string format_decimal(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

void write_rows(std::ostream& out, std::span<const ReportRow> rows,
                Format format) {
  if (format == Format::kCsv) {
    out << kCsvSchemaLine << '\n'
        << "n,k,protocol,mode,trials,errors,max_bits,mean_bits,seed\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.k << ',' << r.protocol << ',' << r.mode << ','
          << r.trials << ',' << r.errors << ',' << r.max_bits << ','
          << format_decimal(r.mean_bits) << ',' << r.seed << '\n';
    }
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"k", r.k},
                   {"protocol", r.protocol},
                   {"mode", r.mode},
                   {"trials", r.trials},
                   {"errors", r.errors},
                   {"max_bits", r.max_bits},
                   {"mean_bits", r.mean_bits},
                   {"seed", r.seed}});
  }
  out << arr.dump(2) << '\n';
}

}  // namespace smlab

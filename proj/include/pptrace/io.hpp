/*
 * Copyright 2026 The pptrace authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pptrace/bigint.hpp"
#include "pptrace/complex.hpp"
#include "pptrace/real.hpp"

namespace pptrace {

enum class OutputFormat { csv, json };

/// Where and how command output goes. Big integers always serialize as
/// exact decimal strings; reals in scientific notation with a digit
/// count derived from precision_bits.
struct OutputSpec {
    OutputFormat format = OutputFormat::csv;
    std::string path; // empty = standard output
    unsigned precision_bits = 128;
    long max_n = 0;

    unsigned real_digits() const {
        unsigned d = static_cast<unsigned>(precision_bits * 0.30103);
        return d < 8 ? 8 : d;
    }
};

/// Scientific-notation rendering with a fixed digit count; deterministic
/// for identical inputs.
inline std::string format_real(const Real& v, unsigned digits) {
    return v.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

inline std::string format_bigint(const BigInt& v) { return v.str(); }

/// RFC-4180-style CSV: header row, comma delimiter, LF line ends, no
/// quoting needed for numeric payloads. Lines starting with '#' carry
/// side-channel metadata (model constants) where a command emits any.
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void comment(const std::string& text) { os_ << "# " << text << "\n"; }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os_ << ',';
            os_ << cells[i];
        }
        os_ << '\n';
    }

  private:
    std::ostream& os_;
};

} // namespace pptrace

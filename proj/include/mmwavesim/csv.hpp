// SPDX-License-Identifier: Apache-2.0
//
// mmwavesim - statistical mmWave channel simulation and MU-MIMO evaluation
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MMWAVESIM_CSV_HPP
#define MMWAVESIM_CSV_HPP

#include <string>
#include <vector>

namespace mmwavesim
{

// Minimal CSV support for the parameter tables and result files. No quoting:
// none of the fields we read or write may contain commas.
struct CsvTable
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string &name) const; // -1 when absent
};

CsvTable read_csv(const std::string &path);
CsvTable parse_csv(const std::string &text, const std::string &name);

// Deterministic double formatting ('%.12g', C locale) so identical values
// always serialize to identical bytes.
std::string format_double(double v);

} // namespace mmwavesim

#endif

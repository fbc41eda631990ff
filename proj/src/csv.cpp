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

#include "mmwavesim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mmwavesim
{

namespace
{
std::string trim(const std::string &s)
{
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_fields(const std::string &line)
{
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(trim(field));
    return out;
}
} // namespace

int CsvTable::column(const std::string &name) const
{
    for (std::size_t i = 0; i < header.size(); i++)
        if (header[i] == name)
            return static_cast<int>(i);
    return -1;
}

CsvTable parse_csv(const std::string &text, const std::string &name)
{
    CsvTable t;
    std::stringstream ss(text);
    std::string line;
    bool have_header = false;
    while (std::getline(ss, line))
    {
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        auto fields = split_fields(stripped);
        if (!have_header)
        {
            t.header = fields;
            have_header = true;
        }
        else
        {
            if (fields.size() != t.header.size())
                throw std::runtime_error(name + ": row has " + std::to_string(fields.size()) +
                                         " fields, header has " + std::to_string(t.header.size()));
            t.rows.push_back(std::move(fields));
        }
    }
    if (!have_header)
        throw std::runtime_error(name + ": empty CSV");
    return t;
}

CsvTable read_csv(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open CSV file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), path);
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace mmwavesim

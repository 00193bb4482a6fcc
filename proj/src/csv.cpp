// Copyright 2026 The adiol Authors
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

#include "adiol/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "adiol/errors.hpp"

namespace adiol {

namespace {

constexpr std::size_t kColumns = 1 + 6 + 2 + 2 + 8 + 8 + 2 + 2 + 1 + 2;

std::vector<std::string> build_columns() {
  std::vector<std::string> cols{"t"};
  const auto add = [&cols](const std::string& stem, int n) {
    for (int i = 1; i <= n; ++i) cols.push_back(stem + std::to_string(i));
  };
  add("x", 6);
  add("u", 2);
  add("w", 2);
  add("xi", 8);
  add("xi_d", 8);
  add("v", 2);
  add("theta_hat", 2);
  cols.push_back("theta_err_norm");
  add("pos_err", 2);
  return cols;
}

std::array<double, kColumns> to_row(const TimeSeriesRecord& r) {
  std::array<double, kColumns> row{};
  std::size_t i = 0;
  const auto put = [&](const auto& v) {
    for (Eigen::Index k = 0; k < v.size(); ++k) row[i++] = v(k);
  };
  row[i++] = r.t;
  put(r.x);
  put(r.u);
  put(r.w);
  put(r.xi);
  put(r.xi_d);
  put(r.v);
  put(r.theta_hat);
  row[i++] = r.theta_err_norm;
  put(r.pos_err);
  return row;
}

TimeSeriesRecord from_row(const std::array<double, kColumns>& row) {
  TimeSeriesRecord r;
  std::size_t i = 0;
  const auto get = [&](auto& v) {
    for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = row[i++];
  };
  r.t = row[i++];
  get(r.x);
  get(r.u);
  get(r.w);
  get(r.xi);
  get(r.xi_d);
  get(r.v);
  get(r.theta_hat);
  r.theta_err_norm = row[i++];
  get(r.pos_err);
  return r;
}

}  // namespace

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = build_columns();
  return cols;
}

void write_csv(std::ostream& out, const TimeSeries& ts) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << (i ? "," : "") << cols[i];
  }
  out << '\n';
  std::string line;
  char buf[40];
  for (const TimeSeriesRecord& r : ts) {
    line.clear();
    const auto row = to_row(r);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ',';
      const auto res = std::to_chars(buf, buf + sizeof(buf), row[i]);
      line.append(buf, res.ptr);
    }
    line += '\n';
    out << line;
  }
}

void write_csv_file(const std::string& path, const TimeSeries& ts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_csv(out, ts);
  if (!out) throw Error("failed writing '" + path + "'");
}

TimeSeries read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::string expected;
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
      expected += (i ? "," : "") + cols[i];
    }
    if (line != expected) throw ParseError(1, "unexpected CSV header");
  }
  TimeSeries ts;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::array<double, kColumns> row{};
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (std::size_t i = 0; i < kColumns; ++i) {
      const auto [ptr, ec] = std::from_chars(p, end, row[i]);
      if (ec != std::errc()) {
        throw ParseError(line_no, "bad number in column " + csv_columns()[i]);
      }
      p = ptr;
      if (i + 1 < kColumns) {
        if (p == end || *p != ',') {
          throw ParseError(line_no, "expected " + std::to_string(kColumns) +
                                        " columns");
        }
        ++p;
      }
    }
    if (p != end) throw ParseError(line_no, "trailing data after last column");
    ts.push_back(from_row(row));
  }
  return ts;
}

TimeSeries read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open CSV file '" + path + "': file not found");
  return read_csv(in);
}

}  // namespace adiol

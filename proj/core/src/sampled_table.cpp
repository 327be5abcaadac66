// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "mdgabor/error.hpp"
#include "mdgabor/funcmodel.hpp"
#include "mdgabor/serialize.hpp"

namespace mdg {

namespace {

// Accepts subnormal values, which std::stod rejects as out of range.
bool parse_double(const std::string& text, double& value) {
  if (text.empty()) return false;
  char* end = nullptr;
  errno = 0;
  value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) return false;
  if (!std::isfinite(value)) return false;
  return errno != ERANGE || std::abs(value) < 1.0;
}

}  // namespace

SampledTable::SampledTable(std::vector<double> x, std::vector<complex> values)
    : x_(std::move(x)), values_(std::move(values)) {
  if (x_.size() != values_.size()) {
    throw Error(ErrorCode::OutOfRange, "table abscissae and values differ in length");
  }
  if (x_.size() < 2) throw Error(ErrorCode::OutOfRange, "table needs at least two samples");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(values_[i].real()) ||
        !std::isfinite(values_[i].imag())) {
      throw Error(ErrorCode::NonFinite, "table entry " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(x_[i] > x_[i - 1])) {
      throw Error(ErrorCode::OutOfRange, "table abscissae must be strictly increasing");
    }
  }
}

complex SampledTable::operator()(double x) const {
  if (!(x >= x_.front() && x <= x_.back())) return 0.0;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  if (it == x_.end()) return values_.back();
  const auto i = static_cast<std::size_t>(it - x_.begin());
  const double t = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
  return (1.0 - t) * values_[i - 1] + t * values_[i];
}

void write_table_csv(const SampledTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  out << "x,re,im\n";
  const auto xs = table.abscissae();
  const auto vs = table.values();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << format_double(xs[i]) << ',' << format_double(vs[i].real()) << ','
        << format_double(vs[i].imag()) << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "write to " + path + " failed");
}

SampledTable read_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open table " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::InvalidConfig, path + ": empty table");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,re,im") {
    throw Error(ErrorCode::InvalidConfig, path + ": expected header 'x,re,im'");
  }
  std::vector<double> xs;
  std::vector<complex> vs;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string fields[3];
    for (auto& field : fields) {
      if (!std::getline(row, field, ',')) {
        throw Error(ErrorCode::InvalidConfig, path + ":" + std::to_string(lineno) + ": expected 3 fields");
      }
    }
    std::string extra;
    if (std::getline(row, extra, ',')) {
      throw Error(ErrorCode::InvalidConfig, path + ":" + std::to_string(lineno) + ": too many fields");
    }
    double parsed[3];
    for (int k = 0; k < 3; ++k) {
      if (!parse_double(fields[k], parsed[k])) {
        throw Error(ErrorCode::InvalidConfig, path + ":" + std::to_string(lineno) + ": malformed number");
      }
    }
    xs.push_back(parsed[0]);
    vs.emplace_back(parsed[1], parsed[2]);
  }
  return SampledTable(std::move(xs), std::move(vs));
}

}  // namespace mdg

#pragma once

// Conversions between library types and the oracle's machine integers.

#include "oracles.hpp"

#include "conelab/matrix.hpp"

#include <string>

namespace support {

inline oracle::Mat to_oracle(const conelab::IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<oracle::i64>(m(i, j));
  return out;
}

inline oracle::Vec to_oracle(const conelab::IntVector& v) {
  oracle::Vec out;
  for (const auto& x : v) out.push_back(static_cast<oracle::i64>(x));
  return out;
}

inline conelab::IntVector from_oracle(const oracle::Vec& v) { return conelab::IntVector(v.begin(), v.end()); }

inline conelab::IntMatrix from_oracle(const oracle::Mat& m) {
  conelab::IntMatrix out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline std::string data_path(const std::string& name) { return std::string(CONELAB_DATA_DIR) + "/" + name; }

}  // namespace support

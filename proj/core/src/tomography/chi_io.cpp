// Copyright 2026 The qce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qce/tomography/chi_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qce/error.hpp"
#include "qce/tomography/pauli.hpp"

namespace qce::tomography {

using nlohmann::json;

json chi_to_json(const ChiMatrix& chi) {
  const std::size_t n = chi.n_qubits();
  const std::size_t dim = pauli_basis_size(n);
  json basis = json::array();
  for (std::size_t m = 0; m < dim; ++m) {
    basis.push_back(pauli_label(n, m));
  }
  json rows = json::array();
  for (std::size_t m = 0; m < dim; ++m) {
    json row = json::array();
    for (std::size_t k = 0; k < dim; ++k) {
      const sim::Complex z = chi.matrix()(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
      row.push_back(json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return json{{"n_qubits", n}, {"basis", std::move(basis)}, {"chi", std::move(rows)}};
}

ChiMatrix chi_from_json(const json& doc) {
  try {
    const std::size_t n = doc.at("n_qubits").get<std::size_t>();
    if (n != 1 && n != 2) {
      throw ParseError("chi document: n_qubits must be 1 or 2");
    }
    const std::size_t dim = pauli_basis_size(n);
    const json& rows = doc.at("chi");
    if (!rows.is_array() || rows.size() != dim) {
      throw ParseError("chi document: expected " + std::to_string(dim) + " rows");
    }
    sim::Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dim) {
        throw ParseError("chi document: row " + std::to_string(r) + " has the wrong length");
      }
      for (std::size_t c = 0; c < dim; ++c) {
        const json& z = rows[r][c];
        if (!z.is_array() || z.size() != 2) {
          throw ParseError("chi document: entry (" + std::to_string(r) + ", " +
                           std::to_string(c) + ") is not a [re, im] pair");
        }
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            sim::Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    return ChiMatrix::from_matrix(n, std::move(m));
  } catch (const json::exception& e) {
    throw ParseError(std::string("chi document: ") + e.what());
  } catch (const UsageError& e) {
    throw ParseError(std::string("chi document: ") + e.what());
  }
}

namespace {

void render_part(std::ostringstream& out, const ChiMatrix& chi, bool imaginary, double threshold,
                 int width) {
  const std::size_t n = chi.n_qubits();
  const std::size_t dim = pauli_basis_size(n);
  out << (imaginary ? "Im(chi)" : "Re(chi)") << '\n';
  std::size_t shown = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const sim::Complex z = chi.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      const double v = imaginary ? z.imag() : z.real();
      if (std::abs(v) <= threshold) {
        continue;
      }
      ++shown;
      const int len = static_cast<int>(std::lround(std::min(1.0, std::abs(v)) * width));
      char value[32];
      std::snprintf(value, sizeof(value), "%+.4f", v);
      const std::string label = pauli_label(n, r) + "," + pauli_label(n, c);
      out << "  " << label << std::string(2 * n + 3 - label.size(), ' ') << value << ' '
          << (v < 0 ? '-' : '|') << std::string(static_cast<std::size_t>(len), '#') << '\n';
    }
  }
  if (shown == 0) {
    out << "  (all entries within " << threshold << " of zero)\n";
  }
}

}  // namespace

std::string render_bars(const ChiMatrix& chi, double threshold, int width) {
  std::ostringstream out;
  render_part(out, chi, false, threshold, width);
  render_part(out, chi, true, threshold, width);
  return out.str();
}

}  // namespace qce::tomography

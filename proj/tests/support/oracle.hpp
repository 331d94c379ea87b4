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

// Reference implementations for tests. Built only from Eigen and textbook
// definitions so they do not share code paths with the library.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline const double kPi = std::acos(-1.0);

inline Mat m2(C a, C b, C c, C d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Mat I2() { return Mat::Identity(2, 2); }
inline Mat X() { return m2(0, 1, 1, 0); }
inline Mat Y() { return m2(0, C(0, -1), C(0, 1), 0); }
inline Mat Z() { return m2(1, 0, 0, -1); }
inline Mat H() { return m2(1, 1, 1, -1) / std::sqrt(2.0); }
inline Mat P() { return m2(1, 0, 0, C(0, 1)); }
inline Mat R() { return m2(1, 0, 0, std::polar(1.0, kPi / 4)); }

inline Mat by_name(const std::string& name) {
  if (name == "X") return X();
  if (name == "Z") return Z();
  if (name == "H") return H();
  if (name == "P") return P();
  if (name == "R") return R();
  return I2();
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// u on qubit q of an n-qubit register (qubit 0 = least significant bit),
/// written as I (x) ... (x) u (x) ... (x) I with qubit n-1 leftmost.
inline Mat embed(const Mat& u, std::size_t q, std::size_t n) {
  Mat out = Mat::Identity(1, 1);
  for (std::size_t k = n; k-- > 0;) {
    out = kron(out, k == q ? u : I2());
  }
  return out;
}

/// CNOT as a permutation of basis indices.
inline Mat cnot(std::size_t control, std::size_t target, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Mat out = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t j = ((i >> control) & 1U) ? (i ^ (std::size_t{1} << target)) : i;
    out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return out;
}

/// X^a Z^b on one qubit.
inline Mat pad(bool a, bool b) {
  Mat m = I2();
  if (b) m = Z() * m;
  if (a) m = X() * m;
  return m;
}

inline double fidelity(const Vec& a, const Vec& b) { return std::norm(a.dot(b)); }

/// Largest entry of |a - e^{i phi} b| with phi fitted on b's largest entry;
/// 0 when the operators agree up to a global phase.
inline double ray_distance(const Mat& a, const Mat& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const C phase = a(r, c) / b(r, c);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

/// n-qubit Pauli basis: letter of qubit 0 leads the label; matrix is
/// sigma_{q_{n-1}} (x) ... (x) sigma_{q_0}.
inline std::vector<Mat> paulis(std::size_t n) {
  const Mat singles[4] = {I2(), X(), Y(), Z()};
  std::vector<Mat> out;
  if (n == 1) {
    for (const auto& s : singles) out.push_back(s);
    return out;
  }
  for (int i0 = 0; i0 < 4; ++i0) {
    for (int i1 = 0; i1 < 4; ++i1) {
      out.push_back(kron(singles[i1], singles[i0]));
    }
  }
  return out;
}

/// chi of a Kraus set: chi_mn = sum_k c_km conj(c_kn), c_km = Tr(P_m K_k) / d
/// (Paulis are Hermitian). Unit trace when sum_k K_k^dagger K_k = I.
inline Mat chi_of_kraus(const std::vector<Mat>& kraus, std::size_t n) {
  const auto basis = paulis(n);
  const double d = static_cast<double>(std::size_t{1} << n);
  Mat chi = Mat::Zero(static_cast<Eigen::Index>(basis.size()),
                      static_cast<Eigen::Index>(basis.size()));
  for (const auto& k : kraus) {
    Vec c(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t m = 0; m < basis.size(); ++m) {
      c(static_cast<Eigen::Index>(m)) = (basis[m] * k).trace() / d;
    }
    chi += c * c.adjoint();
  }
  return chi;
}

/// E(rho) = sum_mn chi_mn P_m rho P_n.
inline Mat apply_chi(const Mat& chi, const Mat& rho, std::size_t n) {
  const auto basis = paulis(n);
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      out += chi(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) * basis[m] * rho *
             basis[k];
    }
  }
  return out;
}

}  // namespace oracle

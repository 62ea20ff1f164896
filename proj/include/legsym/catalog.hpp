#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "legsym/lie_algebra.hpp"

namespace legsym {

/// Anti-Hermitian matrix basis of su(2): e_k = -i sigma_k / 2, so that
/// [e_1, e_2] = e_3 cyclically.
inline std::vector<MatrixXcd> su2_matrix_basis() {
  const Complex i(0.0, 1.0);
  std::vector<MatrixXcd> sigma(3, MatrixXcd::Zero(2, 2));
  sigma[0] << 0, 1, 1, 0;
  sigma[1] << 0, -i, i, 0;
  sigma[2] << 1, 0, 0, -1;
  for (auto& s : sigma) s *= -i * 0.5;
  return sigma;
}

/// Anti-Hermitian matrix basis of su(3): e_a = -i lambda_a / 2 over the
/// Gell-Mann matrices.
inline std::vector<MatrixXcd> su3_matrix_basis() {
  const Complex i(0.0, 1.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  std::vector<MatrixXcd> lam(8, MatrixXcd::Zero(3, 3));
  lam[0] << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  lam[1] << 0, -i, 0, i, 0, 0, 0, 0, 0;
  lam[2] << 1, 0, 0, 0, -1, 0, 0, 0, 0;
  lam[3] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
  lam[4] << 0, 0, -i, 0, 0, 0, i, 0, 0;
  lam[5] << 0, 0, 0, 0, 0, 1, 0, 1, 0;
  lam[6] << 0, 0, 0, 0, 0, -i, 0, i, 0;
  lam[7] << r3, 0, 0, 0, r3, 0, 0, 0, -2 * r3;
  for (auto& l : lam) l *= -i * 0.5;
  return lam;
}

/// Structure constants of an anti-Hermitian matrix basis, read off from
/// commutators via the trace pairing <a, b> = Re tr(a b^*).
inline LieAlgebra algebra_from_matrix_basis(
    const std::vector<MatrixXcd>& basis, const std::string& prefix) {
  const int n = static_cast<int>(basis.size());
  MatrixXd gram(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      gram(a, b) = (basis[a] * basis[b].adjoint()).trace().real();
  const MatrixXd gram_inv = gram.inverse();
  std::vector<MatrixXd> c(n, MatrixXd::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const MatrixXcd comm = basis[a] * basis[b] - basis[b] * basis[a];
      VectorXd proj(n);
      for (int d = 0; d < n; ++d)
        proj(d) = (comm * basis[d].adjoint()).trace().real();
      const VectorXd coeff = gram_inv * proj;
      for (int d = 0; d < n; ++d) {
        c[d](a, b) = coeff(d);
        c[d](b, a) = -coeff(d);
      }
    }
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) labels.push_back(prefix + std::to_string(a + 1));
  return LieAlgebra::from_structure(std::move(c), std::move(labels));
}

inline LieAlgebra make_su2() {
  return algebra_from_matrix_basis(su2_matrix_basis(), "su2:e");
}

/// so(3) is su(2) in disguise: same epsilon-tensor structure constants.
inline LieAlgebra make_so3() {
  return algebra_from_matrix_basis(su2_matrix_basis(), "so3:e");
}

inline LieAlgebra make_su3() {
  return algebra_from_matrix_basis(su3_matrix_basis(), "su3:e");
}

inline LieAlgebra make_abelian(int n) {
  if (n < 1) throw std::invalid_argument("make_abelian: need n >= 1");
  std::vector<MatrixXd> c(n, MatrixXd::Zero(n, n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back("r" + std::to_string(n) + ":e" + std::to_string(i + 1));
  return LieAlgebra::from_structure(std::move(c), std::move(labels));
}

inline LieAlgebra make_su2su2() { return direct_sum(make_su2(), make_su2()); }

/// Resolves catalog names: su2, so3, su3, su2su2, r<n>.
inline LieAlgebra builtin_algebra(const std::string& name) {
  if (name == "su2") return make_su2();
  if (name == "so3") return make_so3();
  if (name == "su3") return make_su3();
  if (name == "su2su2") return make_su2su2();
  if (name.size() > 1 && name[0] == 'r' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos)
    return make_abelian(std::stoi(name.substr(1)));
  throw std::invalid_argument("unknown builtin algebra: " + name);
}

/// Matrix basis backing a builtin algebra, where one exists.
inline std::vector<MatrixXcd> builtin_matrix_basis(const std::string& name) {
  if (name == "su2" || name == "so3") return su2_matrix_basis();
  if (name == "su3") return su3_matrix_basis();
  throw std::invalid_argument("no matrix basis for builtin: " + name);
}

} // namespace legsym

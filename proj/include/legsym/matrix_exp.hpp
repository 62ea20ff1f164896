#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace legsym {

/// Matrix exponential by scaling and squaring with a [13/13] Pade core.
/// Works for real and complex square matrices of the small sizes used here.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> expm(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& arg) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = arg.rows();

  // l1-induced norm controls the Pade truncation error.
  const double norm = arg.cwiseAbs().colwise().sum().maxCoeff();
  // Theta_13 from Higham's analysis; above it the argument is halved.
  int squarings = 0;
  if (norm > 5.371920351148152) {
    squarings =
        static_cast<int>(std::ceil(std::log2(norm / 5.371920351148152)));
  }
  const Matrix a = arg / std::pow(2.0, squarings);

  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
           b[5] * a4 + b[3] * a2 + b[1] * id);
  const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                   b[4] * a4 + b[2] * a2 + b[0] * id;

  Matrix result = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

} // namespace legsym

#pragma once

#include <Eigen/Dense>

namespace pao {

/// Matrix exponential by scaling and squaring with a degree-13 Padé
/// approximant (Higham 2005). Input must be square.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m);

}  // namespace pao

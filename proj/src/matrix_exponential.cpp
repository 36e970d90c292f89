#include "pao/matrix_exponential.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace pao {
namespace {

using Eigen::MatrixXd;

// Padé coefficients and 1-norm thresholds from Higham, "The scaling and
// squaring method for the matrix exponential revisited" (2005), Table 2.1.
constexpr std::array<double, 4> kPade3{120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7{17297280.0, 8648640.0, 1995840.0, 277200.0,
                                       25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9{17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                        30270240.0,    2162160.0,    110880.0,     3960.0,
                                        90.0,          1.0};
constexpr std::array<double, 14> kPade13{
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const MatrixXd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

MatrixXd solve_pade(const MatrixXd& u, const MatrixXd& v) {
    return (v - u).partialPivLu().solve(v + u);
}

// Low-degree approximant: U = A Σ b[2j+1] A^{2j}, V = Σ b[2j] A^{2j}.
template <std::size_t N>
MatrixXd pade_low(const MatrixXd& a, const std::array<double, N>& b) {
    const auto n = a.rows();
    const MatrixXd ident = MatrixXd::Identity(n, n);
    const MatrixXd a2 = a * a;
    MatrixXd power = ident;
    MatrixXd u_inner = MatrixXd::Zero(n, n);
    MatrixXd v = MatrixXd::Zero(n, n);
    for (std::size_t j = 0; 2 * j + 1 < N; ++j) {
        v += b[2 * j] * power;
        u_inner += b[2 * j + 1] * power;
        power = power * a2;
    }
    return solve_pade(a * u_inner, v);
}

MatrixXd pade13(const MatrixXd& a) {
    const auto& b = kPade13;
    const auto n = a.rows();
    const MatrixXd ident = MatrixXd::Identity(n, n);
    const MatrixXd a2 = a * a;
    const MatrixXd a4 = a2 * a2;
    const MatrixXd a6 = a4 * a2;
    const MatrixXd u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
             b[1] * ident);
    const MatrixXd v =
        a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
        b[0] * ident;
    return solve_pade(u, v);
}

}  // namespace

MatrixXd matrix_exponential(const MatrixXd& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("matrix_exponential: matrix must be square");
    }
    if (m.size() == 0) return m;

    const double norm = one_norm(m);
    if (norm <= kTheta3) return pade_low(m, kPade3);
    if (norm <= kTheta5) return pade_low(m, kPade5);
    if (norm <= kTheta7) return pade_low(m, kPade7);
    if (norm <= kTheta9) return pade_low(m, kPade9);

    int squarings = 0;
    if (norm > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
    }
    MatrixXd result = pade13(m / std::ldexp(1.0, squarings));
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace pao

#pragma once

// Matrix exponential for small fixed-size matrices: scaling and squaring with
// a diagonal Padé approximant (Higham 2005 degrees 3..13).

#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "gqfi/errors.hpp"

namespace gqfi::linalg {

namespace detail {

template <typename Derived>
double norm1(const Eigen::MatrixBase<Derived>& a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

// Padé coefficients b_0..b_m for degrees 3, 5, 7, 9, 13.
inline constexpr std::array<double, 4> kPade3{120.0, 60.0, 12.0, 1.0};
inline constexpr std::array<double, 6> kPade5{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
inline constexpr std::array<double, 8> kPade7{17297280.0, 8648640.0, 1995840.0, 277200.0,
                                              25200.0,    1512.0,    56.0,      1.0};
inline constexpr std::array<double, 10> kPade9{17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                               30270240.0,    2162160.0,    110880.0,     3960.0,
                                               90.0,          1.0};
inline constexpr std::array<double, 14> kPade13{
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// θ_m bounds on ‖A‖₁ for which degree m achieves unit roundoff.
inline constexpr std::array<double, 4> kTheta{1.495585217958292e-2, 2.539398330063230e-1,
                                              9.504178996162932e-1, 2.097847961257068e0};
inline constexpr double kTheta13 = 5.371920351148152e0;

template <typename Mat, std::size_t K>
Mat pade_low(const Mat& a, const std::array<double, K>& b) {
    const Mat ident = Mat::Identity(a.rows(), a.cols());
    const Mat a2 = a * a;
    Mat power = ident;
    Mat u_even = Mat::Zero(a.rows(), a.cols());
    Mat v_even = Mat::Zero(a.rows(), a.cols());
    for (std::size_t k = 0; k < K; k += 2) {
        u_even += b[k + 1] * power;
        v_even += b[k] * power;
        power = power * a2;
    }
    const Mat u = a * u_even;
    return (v_even - u).partialPivLu().solve(v_even + u);
}

template <typename Mat>
Mat pade13(const Mat& a) {
    const auto& b = kPade13;
    const Mat ident = Mat::Identity(a.rows(), a.cols());
    const Mat a2 = a * a;
    const Mat a4 = a2 * a2;
    const Mat a6 = a4 * a2;
    const Mat u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
    const Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
    return (v - u).partialPivLu().solve(v + u);
}

}  // namespace detail

/// exp(A) for a real square matrix.
template <typename Scalar, int N>
Eigen::Matrix<Scalar, N, N> expm(const Eigen::Matrix<Scalar, N, N>& a) {
    using Mat = Eigen::Matrix<Scalar, N, N>;
    if (!a.allFinite()) throw NumericError("expm: non-finite input");
    const double norm = detail::norm1(a);
    if (norm <= detail::kTheta[0]) return detail::pade_low<Mat>(a, detail::kPade3);
    if (norm <= detail::kTheta[1]) return detail::pade_low<Mat>(a, detail::kPade5);
    if (norm <= detail::kTheta[2]) return detail::pade_low<Mat>(a, detail::kPade7);
    if (norm <= detail::kTheta[3]) return detail::pade_low<Mat>(a, detail::kPade9);

    int squarings = 0;
    if (norm > detail::kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm / detail::kTheta13)));
    Mat result = detail::pade13<Mat>(a / std::ldexp(1.0, squarings));
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace gqfi::linalg

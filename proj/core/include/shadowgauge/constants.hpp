#pragma once

namespace shadowgauge {

/// Volume of the Euclidean unit ball in R^n, pi^{n/2} / Gamma(n/2 + 1),
/// evaluated through log-gamma. n >= 1.
double unit_ball_volume(int n);

/// |B^n|^{(n-1)/n} / |B^{n-1}|, the sharp constant of the shadow
/// inequalities. n >= 2.
double cn(int n);

struct Constants {
    int n;
    double ball_volume;
    double cn;
};

Constants constants(int n);

/// 1/sqrt(e), the dimension-free lower bound for cn.
inline constexpr double inv_sqrt_e = 0.60653065971263342360;

} // namespace shadowgauge

#include "polyalg/rng.hpp"

#include <cmath>

namespace polyalg {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on two uniforms; reject u1 == 0.
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

CVec Rng::complex_normal_vec(int n) {
    CVec v(n);
    for (int i = 0; i < n; ++i) v[i] = complex_normal();
    return v;
}

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace polyalg

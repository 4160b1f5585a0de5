#include "sebmcr/rng.hpp"

#include <cmath>

namespace sebmcr {

double Rng::next_gaussian(double mean, double std) {
    require_arg(std >= 0.0, "Rng::next_gaussian: negative std");
    // Box-Muller, two counter slots per draw; the sine half is discarded so
    // each draw has a fixed counter footprint.
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + std * (r * std::cos(2.0 * M_PI * u2));
}

double Rng::next_gumbel() { return -std::log(-std::log(next_uniform())); }

void Rng::fill_gaussian(Matrix& m, double mean, double std) {
    for (auto& x : m.v) x = next_gaussian(mean, std);
}

void Rng::fill_gumbel(Matrix& m) {
    for (auto& x : m.v) x = next_gumbel();
}

Matrix gaussian(Rng& rng, double mean, double std, std::size_t rows, std::size_t cols) {
    require_arg(std >= 0.0, "gaussian: negative std");
    Matrix m(rows, cols);
    rng.fill_gaussian(m, mean, std);
    return m;
}

}  // namespace sebmcr

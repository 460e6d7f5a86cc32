#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "lgbound/quadrature.hpp"

namespace lgbound {

/// Gaussian wavepacket with <x> = q and width sigma.
struct GaussianState {
    double q = 0.0;
    double sigma = 1.0;

    GaussianState(double q_in, double sigma_in) : q(q_in), sigma(sigma_in) {
        if (!(sigma > 0.0)) throw std::invalid_argument("GaussianState: sigma must be positive");
    }
};

/// LG2 left-hand side for the sign of x followed by parity on a gaussian
/// state: 1 - erf(q / (sqrt2 sigma)) - exp(-q^2 / (2 sigma^2)). The two
/// operators anticommute, so their correlator vanishes and only the
/// single-time averages enter. Negative means violated.
inline double parity_lg2(double q, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("parity_lg2: sigma must be positive");
    const double u = q / sigma;
    return 1.0 - std::erf(u / std::sqrt(2.0)) - std::exp(-0.5 * u * u);
}

inline double parity_lg2(const GaussianState& s) { return parity_lg2(s.q, s.sigma); }

struct ParityMinimum {
    double ratio = 0.0;  // q / sigma at the minimum
    double value = 0.0;
};

/// Golden-section minimum of parity_lg2 over q / sigma in [0, 5].
inline ParityMinimum parity_min(double tol = 1e-10) {
    const auto [x, v] = golden_section_min([](double u) { return parity_lg2(u, 1.0); }, 0.0, 5.0, tol);
    return {x, v};
}

}  // namespace lgbound

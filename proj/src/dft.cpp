#include "c2r/dft.hpp"

#include <cmath>
#include <stdexcept>

namespace c2r {

Dft::Dft(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("Dft: n must be >= 2");
    const int nb = bins();
    cos_.resize(static_cast<std::size_t>(nb) * n);
    sin_.resize(static_cast<std::size_t>(nb) * n);
    for (int k = 0; k < nb; ++k) {
        for (int j = 0; j < n; ++j) {
            // Reduce j*k mod n before the trig call to keep angles small.
            const long long jk = (static_cast<long long>(j) * k) % n;
            const double th = 2.0 * M_PI * static_cast<double>(jk) / n;
            cos_[static_cast<std::size_t>(k) * n + j] = std::cos(th);
            sin_[static_cast<std::size_t>(k) * n + j] = std::sin(th);
        }
    }
}

std::vector<std::complex<double>> Dft::rfft(const double* x) const {
    const int nb = bins();
    std::vector<std::complex<double>> out(nb);
    for (int k = 0; k < nb; ++k) {
        const double* ck = cos_.data() + static_cast<std::size_t>(k) * n_;
        const double* sk = sin_.data() + static_cast<std::size_t>(k) * n_;
        double re = 0.0, im = 0.0;
        for (int j = 0; j < n_; ++j) {
            re += x[j] * ck[j];
            im -= x[j] * sk[j];
        }
        out[k] = {re, im};
    }
    return out;
}

std::vector<double> Dft::irfft(const std::vector<std::complex<double>>& b) const {
    std::vector<double> out(n_, 0.0);
    const int nb = bins();
    const bool even = (n_ % 2 == 0);
    const double inv_n = 1.0 / n_;
    for (int j = 0; j < n_; ++j) {
        double acc = b[0].real();
        for (int k = 1; k < nb; ++k) {
            const double c = cos_[static_cast<std::size_t>(k) * n_ + j];
            const double s = sin_[static_cast<std::size_t>(k) * n_ + j];
            const double term = b[k].real() * c - b[k].imag() * s;
            // Interior bins appear twice in the full spectrum; Nyquist once.
            acc += (even && k == nb - 1) ? term : 2.0 * term;
        }
        out[j] = acc * inv_n;
    }
    return out;
}

std::vector<double> Dft::lowpass(const double* x, int k_c) const {
    auto b = rfft(x);
    const int nb = bins();
    for (int k = k_c + 1; k < nb; ++k) b[k] = {0.0, 0.0};
    return irfft(b);
}

std::vector<double> Dft::derivative(const double* x, int order, double L) const {
    auto b = rfft(x);
    const int nb = bins();
    const bool even = (n_ % 2 == 0);
    for (int k = 0; k < nb; ++k) {
        const double kappa = 2.0 * M_PI * k / L;
        std::complex<double> factor;
        if (order == 1) {
            factor = {0.0, kappa};
            if (even && k == nb - 1) factor = 0.0;  // Nyquist has no defined slope
        } else if (order == 2) {
            factor = {-kappa * kappa, 0.0};
        } else {
            throw std::invalid_argument("Dft::derivative: order must be 1 or 2");
        }
        b[k] *= factor;
    }
    return irfft(b);
}

std::vector<double> Dft::rfft_adjoint(const std::vector<double>& d_re,
                                      const std::vector<double>& d_im) const {
    const int nb = bins();
    std::vector<double> out(n_, 0.0);
    for (int k = 0; k < nb; ++k) {
        const double* ck = cos_.data() + static_cast<std::size_t>(k) * n_;
        const double* sk = sin_.data() + static_cast<std::size_t>(k) * n_;
        const double gr = d_re[k];
        const double gi = d_im[k];
        for (int j = 0; j < n_; ++j) out[j] += gr * ck[j] - gi * sk[j];
    }
    return out;
}

} // namespace c2r

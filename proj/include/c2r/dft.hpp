#pragma once

#include <complex>
#include <vector>

namespace c2r {

/// Real DFT of a fixed size n with precomputed twiddle tables.
/// Sizes in this project are ~100 points, so the direct transform is
/// plenty fast and keeps every spectral operation bit-reproducible.
///
/// Convention: u_hat[k] = sum_j u[j] * exp(-2*pi*i*j*k/n), k = 0..n/2.
class Dft {
public:
    explicit Dft(int n);

    int n() const { return n_; }
    int bins() const { return n_ / 2 + 1; }

    /// Forward real DFT; returns n/2+1 complex bins.
    std::vector<std::complex<double>> rfft(const double* x) const;
    std::vector<std::complex<double>> rfft(const std::vector<double>& x) const {
        return rfft(x.data());
    }

    /// Inverse of rfft (assumes conjugate-symmetric extension).
    std::vector<double> irfft(const std::vector<std::complex<double>>& bins) const;

    /// Zero all bins with wavenumber k > k_c and transform back.
    /// As a matrix this projector is real and symmetric, so it is its own
    /// adjoint (used by the training backward pass).
    std::vector<double> lowpass(const double* x, int k_c) const;
    std::vector<double> lowpass(const std::vector<double>& x, int k_c) const {
        return lowpass(x.data(), k_c);
    }

    /// d^order/dx^order via multiplication by (i*k*2*pi/L)^order.
    /// The Nyquist bin is zeroed for odd orders.
    std::vector<double> derivative(const double* x, int order, double domain_length) const;
    std::vector<double> derivative(const std::vector<double>& x, int order, double L) const {
        return derivative(x.data(), order, L);
    }

    /// Adjoint of rfft: given dL/d(re_k), dL/d(im_k), returns dL/dx.
    std::vector<double> rfft_adjoint(const std::vector<double>& d_re,
                                     const std::vector<double>& d_im) const;

private:
    int n_;
    std::vector<double> cos_;  ///< (n/2+1) x n, cos(2*pi*j*k/n)
    std::vector<double> sin_;  ///< (n/2+1) x n
};

} // namespace c2r

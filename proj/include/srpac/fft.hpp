// Mixed-radix FFT (factors 2, 3, 5, 7) and the project-wide DFT convention:
// unnormalized forward transform, 1/M^2-normalized inverse.
//
// Sides are rN with N a power of two and r in {2..8}, so every size is
// {2,3,5,7}-smooth.
#ifndef SRPAC_FFT_HPP
#define SRPAC_FFT_HPP

#include <stdexcept>
#include <vector>

#include "srpac/common.hpp"

namespace srpac {

inline bool is_smooth_size(int n) {
    if (n <= 0) return false;
    for (int p : {2, 3, 5, 7})
        while (n % p == 0) n /= p;
    return n == 1;
}

namespace detail {

// Recursive decimation-in-time Cooley-Tukey for smooth lengths.
inline void fft_rec(cplx* data, int n, bool inverse, std::vector<cplx>& scratch) {
    if (n == 1) return;
    int p = n;
    for (int f : {2, 3, 5, 7})
        if (n % f == 0) {
            p = f;
            break;
        }
    const int m = n / p;
    // Gather the p decimated subsequences contiguously.
    scratch.resize(static_cast<size_t>(n));
    cplx* sub = scratch.data();
    for (int j = 0; j < p; ++j)
        for (int t = 0; t < m; ++t) sub[static_cast<size_t>(j) * m + t] = data[t * p + j];
    for (int j = 0; j < p; ++j) {
        std::vector<cplx> inner;
        fft_rec(sub + static_cast<size_t>(j) * m, m, inverse, inner);
    }
    // Combine: X[k] = sum_j w_n^{j k} Sub_j[k mod m].
    const double sgn = inverse ? 1.0 : -1.0;
    for (int k = 0; k < n; ++k) {
        cplx acc(0.0, 0.0);
        for (int j = 0; j < p; ++j) {
            const double ang = sgn * 2.0 * kPi * (static_cast<double>(j) * k) / n;
            acc += cplx(std::cos(ang), std::sin(ang)) * sub[static_cast<size_t>(j) * m + k % m];
        }
        data[k] = acc;
    }
}

inline void fft_line(cplx* data, int n, int stride, bool inverse) {
    std::vector<cplx> line(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) line[i] = data[static_cast<size_t>(i) * stride];
    std::vector<cplx> scratch;
    fft_rec(line.data(), n, inverse, scratch);
    for (int i = 0; i < n; ++i) data[static_cast<size_t>(i) * stride] = line[i];
}

}  // namespace detail

inline void require_square_smooth(const ComplexImage& img) {
    if (img.rows() != img.cols() || !is_smooth_size(img.rows()))
        throw std::domain_error("fft: image must be square with a {2,3,5,7}-smooth side");
}

// Unnormalized forward 2-D DFT: S(k) = sum_x s(x) exp(-2*pi*i*k.x/M).
inline ComplexImage dft_forward(const ComplexImage& img) {
    require_square_smooth(img);
    ComplexImage out = img;
    const int m = out.rows();
    for (int row = 0; row < m; ++row) detail::fft_line(&out(row, 0), m, 1, false);
    for (int col = 0; col < m; ++col) detail::fft_line(&out(0, col), m, m, false);
    return out;
}

inline ComplexImage dft_forward(const RealImage& img) {
    ComplexImage c(img.rows(), img.cols());
    for (int row = 0; row < img.rows(); ++row)
        for (int col = 0; col < img.cols(); ++col) c(row, col) = img(row, col);
    return dft_forward(c);
}

// Inverse 2-D DFT with 1/M^2 normalization.
inline ComplexImage dft_inverse(const ComplexImage& spec) {
    require_square_smooth(spec);
    ComplexImage out = spec;
    const int m = out.rows();
    for (int row = 0; row < m; ++row) detail::fft_line(&out(row, 0), m, 1, true);
    for (int col = 0; col < m; ++col) detail::fft_line(&out(0, col), m, m, true);
    const double norm = 1.0 / (static_cast<double>(m) * m);
    for (auto& v : out.raw()) v *= norm;
    return out;
}

inline RealImage real_part(const ComplexImage& img) {
    RealImage out(img.rows(), img.cols());
    for (int row = 0; row < img.rows(); ++row)
        for (int col = 0; col < img.cols(); ++col) out(row, col) = img(row, col).real();
    return out;
}

}  // namespace srpac

#endif  // SRPAC_FFT_HPP

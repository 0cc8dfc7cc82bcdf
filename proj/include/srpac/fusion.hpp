// Fast fusion estimator (interlace-average) and the exact Fourier-domain
// error decomposition X~(k') = Z~(k') G_gamma(k') + B(k').
#ifndef SRPAC_FUSION_HPP
#define SRPAC_FUSION_HPP

#include <limits>

#include "srpac/acquisition.hpp"

namespace srpac {

struct FusedImage {
    RealImage pixels;      // rN x rN estimate X
    ComplexImage spectrum; // X~
};

// X = sum_d (1/n_d) sum_j (F^d)^t D^t Y^{d_e(j)}: each HR site x' receives the
// average of the n_d frames whose *targeted* displacement d satisfies
// x' = r*m - d (mod rN); the realized displacements are deliberately not used.
inline FusedImage fuse(const AcquisitionStack& stack) {
    const int r = stack.r, n = stack.N, m = r * n;
    if (static_cast<int>(stack.frames.size()) != r * r * stack.n_d)
        throw std::invalid_argument("fuse: incomplete stack");
    FusedImage out;
    out.pixels = RealImage(m, m, 0.0);
    const double inv_nd = 1.0 / stack.n_d;
    for (int dy = 0; dy < r; ++dy)
        for (int dx = 0; dx < r; ++dx) {
            // Average the group, then scatter onto its interlacing phase.
            RealImage avg(n, n, 0.0);
            for (int j = 0; j < stack.n_d; ++j) {
                const auto& f = stack.frame({dx, dy}, j);
                for (size_t p = 0; p < avg.size(); ++p)
                    avg.raw()[p] += f.pixels.raw()[p] * inv_nd;
            }
            for (int my = 0; my < n; ++my)
                for (int mx = 0; mx < n; ++mx) {
                    const int xy = ((my * r - dy) % m + m) % m;
                    const int xx = ((mx * r - dx) % m + m) % m;
                    out.pixels(xy, xx) = avg(my, mx);
                }
        }
    out.spectrum = dft_forward(out.pixels);
    return out;
}

// G_alpha(k') = (1/(r^2 n_d)) sum_{d,j} exp(i (q_gamma - q_alpha) . d)
//                                       exp(-i q_alpha . b_dj),
// the exact finite sum over the recorded position errors. The sign of the
// b-exponential matches the translation convention used in acquisition.
inline cplx g_coefficient(const Vec2i& alpha, const Vec2i& kp, const AcquisitionStack& stack) {
    const FrequencyGrid g(stack.N, stack.r);
    if (g.is_excluded(kp)) throw std::domain_error("g_coefficient: excluded Nyquist frequency");
    const auto [k, gamma] = alias_decompose(kp, g);
    const Vec2d q_gamma = g.q_of(kp);
    const Vec2d q_alpha = g.q_of({k.x + alpha.x * g.N, k.y + alpha.y * g.N});
    cplx acc(0.0, 0.0);
    for (const auto& f : stack.frames) {
        const Vec2d b{f.realized_d.x - f.target_d.x, f.realized_d.y - f.target_d.y};
        const double phase = (q_gamma.x - q_alpha.x) * f.target_d.x +
                             (q_gamma.y - q_alpha.y) * f.target_d.y -
                             (q_alpha.x * b.x + q_alpha.y * b.y);
        acc += std::polar(1.0, phase);
    }
    return acc / static_cast<double>(stack.frames.size());
}

// Full spectral prediction sum_alpha Z~(k+alpha N) G_alpha(k') for every k';
// equals the fused spectrum exactly. O(M^2 r^2 . r^2 n_d): a debug/test oracle.
inline ComplexImage spectral_prediction(const AcquisitionStack& stack, const HrScene& target) {
    const FrequencyGrid g(stack.N, stack.r);
    const int m = g.hr_side();
    ComplexImage out(m, m, cplx(0.0, 0.0));
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix) {
            const Vec2i kp{FrequencyGrid::freq_of(ix, m), FrequencyGrid::freq_of(iy, m)};
            if (g.is_excluded(kp)) continue;
            const auto [k, gamma] = alias_decompose(kp, g);
            cplx acc(0.0, 0.0);
            for (const Vec2i& alpha : alias_set(k, g)) {
                const Vec2i ka{k.x + alpha.x * g.N, k.y + alpha.y * g.N};
                acc += target.at(ka) * g_coefficient(alpha, kp, stack);
            }
            out(iy, ix) = acc;
        }
    return out;
}

struct ErrorDecomposition {
    int side = 0;
    ComplexImage g_gamma;   // G_gamma(k') (filled when with_coefficients)
    ComplexImage b_alias;   // B(k') = X~ - Z~ G_gamma (when with_coefficients)
    RealImage rel_error;    // |X~ - Z~| / |Z~| where defined
    Array2D<uint8_t> mask;  // 1 = excluded Nyquist or |Z~| below threshold
};

// Relative-error threshold below which Z~(k') counts as zero.
inline constexpr double kZeroSpectrumRel = 1e-9;

inline ErrorDecomposition decompose(const FusedImage& fused, const HrScene& target,
                                    const AcquisitionStack& stack,
                                    bool with_coefficients = false) {
    const FrequencyGrid g(stack.N, stack.r);
    const int m = g.hr_side();
    if (target.side != m || fused.spectrum.rows() != m)
        throw std::invalid_argument("decompose: size mismatch");
    ErrorDecomposition out;
    out.side = m;
    out.rel_error = RealImage(m, m, 0.0);
    out.mask = Array2D<uint8_t>(m, m, 0);
    if (with_coefficients) {
        out.g_gamma = ComplexImage(m, m, cplx(0.0, 0.0));
        out.b_alias = ComplexImage(m, m, cplx(0.0, 0.0));
    }
    double max_amp = 0.0;
    for (const auto& v : target.spectrum.raw()) max_amp = std::max(max_amp, std::abs(v));
    const double zero_thresh = kZeroSpectrumRel * max_amp;
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix) {
            const Vec2i kp{FrequencyGrid::freq_of(ix, m), FrequencyGrid::freq_of(iy, m)};
            const cplx z = target.spectrum(iy, ix);
            if (g.is_excluded(kp) || std::abs(z) < zero_thresh) {
                out.mask(iy, ix) = 1;
                continue;
            }
            const cplx x = fused.spectrum(iy, ix);
            out.rel_error(iy, ix) = std::abs(x - z) / std::abs(z);
            if (with_coefficients) {
                const auto [k, gamma] = alias_decompose(kp, g);
                const cplx gg = g_coefficient(gamma, kp, stack);
                out.g_gamma(iy, ix) = gg;
                out.b_alias(iy, ix) = x - z * gg;
            }
        }
    return out;
}

enum class SnrBand { hf_only, full };

// 10 log10(||Z~_band||^2 / ||X~_band - Z~_band||^2); the hf band is
// D_HR \ D_LR (outside the central LR square), Nyquist rows excluded.
inline double hf_snr(const ComplexImage& x_spec, const ComplexImage& z_spec, int N, int r,
                     SnrBand band = SnrBand::hf_only) {
    const FrequencyGrid g(N, r);
    const int m = g.hr_side();
    if (x_spec.rows() != m || z_spec.rows() != m)
        throw std::invalid_argument("hf_snr: size mismatch");
    double sig = 0.0, err = 0.0;
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix) {
            const Vec2i kp{FrequencyGrid::freq_of(ix, m), FrequencyGrid::freq_of(iy, m)};
            if (g.is_excluded(kp)) continue;
            if (band == SnrBand::hf_only && g.in_lr(kp)) continue;
            const cplx z = z_spec(iy, ix);
            const cplx d = x_spec(iy, ix) - z;
            sig += std::norm(z);
            err += std::norm(d);
        }
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(sig / err);
}

}  // namespace srpac

#endif  // SRPAC_FUSION_HPP

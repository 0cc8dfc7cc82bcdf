// Ground-truth HR scenes (synthetic power-law spectra and loaded images) and
// PSF models; produces the blurred fusion target Z = H * Y_HR.
#ifndef SRPAC_SCENE_HPP
#define SRPAC_SCENE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "srpac/fft.hpp"
#include "srpac/grid.hpp"
#include "srpac/image_io.hpp"
#include "srpac/rng.hpp"

namespace srpac {

struct HrScene {
    int side = 0;               // rN
    RealImage pixels;           // real pixel grid
    ComplexImage spectrum;      // cached unnormalized DFT of pixels
    std::optional<double> eta;  // spectral exponent, synthetic scenes only

    // Spectral value at signed frequency k' in (-side/2 : side/2-1)^2.
    const cplx& at(const Vec2i& kp) const {
        return spectrum(FrequencyGrid::index_of(kp.y, side), FrequencyGrid::index_of(kp.x, side));
    }
};

// Synthetic scene whose amplitude spectrum is exactly ||k'||_2^-(1+eta) for
// k' != 0 (DC set to the ||k'||=1 amplitude), with Hermitian-paired random
// phases so the pixel grid is real. Deterministic per seed.
inline HrScene synth_power_law(int side, double eta, uint64_t seed) {
    if (!is_smooth_size(side) || side < 64)
        throw std::domain_error("synth_power_law: side must be a {2,3,5,7}-smooth size >= 64");
    if (std::abs(eta) > 0.5) throw std::domain_error("synth_power_law: |eta| must be <= 0.5");
    HrScene scene;
    scene.side = side;
    scene.eta = eta;
    scene.spectrum = ComplexImage(side, side);
    const int m = side;
    for (int iy = 0; iy < m; ++iy) {
        for (int ix = 0; ix < m; ++ix) {
            const int ky = FrequencyGrid::freq_of(iy, m);
            const int kx = FrequencyGrid::freq_of(ix, m);
            const double amp =
                (kx == 0 && ky == 0)
                    ? 1.0
                    : std::pow(std::hypot(static_cast<double>(kx), static_cast<double>(ky)),
                               -(1.0 + eta));
            // Hermitian partner of (iy, ix) is (-ky, -kx); draw the phase from a
            // stream keyed by the lexicographically smaller member of the pair so
            // the pairing is exact regardless of traversal order.
            const int jy = FrequencyGrid::index_of(-ky, m);
            const int jx = FrequencyGrid::index_of(-kx, m);
            const long lin = static_cast<long>(iy) * m + ix;
            const long lin_conj = static_cast<long>(jy) * m + jx;
            if (lin == lin_conj) {
                // Self-conjugate frequency: must be real; random sign keeps the
                // scene generic while preserving the amplitude law.
                Rng rng(derive_seed(seed, static_cast<uint64_t>(lin)));
                scene.spectrum(iy, ix) = (rng.uniform01() < 0.5 ? amp : -amp);
            } else {
                const long canon = std::min(lin, lin_conj);
                Rng rng(derive_seed(seed, static_cast<uint64_t>(canon)));
                const double phase = 2.0 * kPi * rng.uniform01();
                const cplx v = std::polar(amp, phase);
                scene.spectrum(iy, ix) = (lin == canon) ? v : std::conj(v);
            }
        }
    }
    scene.pixels = real_part(dft_inverse(scene.spectrum));
    return scene;
}

// Loads an 8-bit grayscale PGM/PNG with square power-of-two side.
inline HrScene load_scene(const std::string& path) {
    GrayImage img;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".png")
        img = read_png(path);
    else
        img = read_pgm(path);
    if (img.maxval != 255 && img.maxval != 65535)
        throw std::runtime_error("load_scene: bit depth must be 8 or 16");
    if (img.width != img.height || !is_smooth_size(img.width))
        throw std::runtime_error("load_scene: image must be square with a smooth side");
    HrScene scene;
    scene.side = img.width;
    scene.pixels = RealImage(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) scene.pixels(y, x) = static_cast<double>(img.at(y, x));
    scene.spectrum = dft_forward(scene.pixels);
    return scene;
}

inline HrScene scene_from_pixels(const RealImage& pixels) {
    if (pixels.rows() != pixels.cols() || !is_smooth_size(pixels.rows()))
        throw std::domain_error("scene_from_pixels: square smooth side required");
    HrScene scene;
    scene.side = pixels.rows();
    scene.pixels = pixels;
    scene.spectrum = dft_forward(pixels);
    return scene;
}

// Point-spread function: identity (dirac) or periodized Gaussian of standard
// deviation `sigma` HR pixels. The grid transfer function is real and positive.
struct Psf {
    enum class Kind { dirac, gaussian };
    Kind kind = Kind::dirac;
    double sigma = 0.0;  // HR pixels, gaussian only

    static Psf dirac() { return {}; }
    static Psf gaussian(double sigma) {
        if (sigma <= 0.0) throw std::domain_error("Psf: sigma must be positive");
        return {Kind::gaussian, sigma};
    }

    // Transfer function sampled on a side-M grid (array-indexed like a spectrum).
    RealImage transfer(int m) const {
        RealImage h(m, m, 1.0);
        if (kind == Kind::dirac) return h;
        // Periodized spatial kernel, normalized to unit sum, then transformed.
        RealImage kernel(m, m);
        double sum = 0.0;
        for (int y = 0; y < m; ++y)
            for (int x = 0; x < m; ++x) {
                const int dy = y < m / 2 ? y : y - m;
                const int dx = x < m / 2 ? x : x - m;
                const double v = std::exp(-(static_cast<double>(dx) * dx + static_cast<double>(dy) * dy) /
                                          (2.0 * sigma * sigma));
                kernel(y, x) = v;
                sum += v;
            }
        for (auto& v : kernel.raw()) v /= sum;
        ComplexImage spec = dft_forward(kernel);
        for (int y = 0; y < m; ++y)
            for (int x = 0; x < m; ++x) h(y, x) = spec(y, x).real();
        return h;
    }

    // Continuous-frequency transfer model used by the analytic bound formulas.
    double analytic(const Vec2d& q) const {
        if (kind == Kind::dirac) return 1.0;
        return std::exp(-0.5 * sigma * sigma * (q.x * q.x + q.y * q.y));
    }
};

// Z = H * Y_HR via the spectral product Z~ = H~ . Y~.
inline HrScene apply_blur(const HrScene& scene, const Psf& psf) {
    if (psf.kind == Psf::Kind::dirac) return scene;
    HrScene out;
    out.side = scene.side;
    out.eta = scene.eta;
    const RealImage h = psf.transfer(scene.side);
    out.spectrum = ComplexImage(scene.side, scene.side);
    for (int y = 0; y < scene.side; ++y)
        for (int x = 0; x < scene.side; ++x) out.spectrum(y, x) = scene.spectrum(y, x) * h(y, x);
    out.pixels = real_part(dft_inverse(out.spectrum));
    return out;
}

}  // namespace srpac

#endif  // SRPAC_SCENE_HPP

// Camera/stage simulator: samples noisy realized displacements
// d_e(j) = d + b_dj, translates, blurs, and decimates the HR scene into LR
// frames.
//
// Translation is an exact Fourier phase ramp (the scene is treated as a
// periodic band-limited image). Scenes are band-limited for simulation by
// zeroing the unrepresentable -M/2 Nyquist row/column, which keeps every
// fractional translation exactly real-valued; those frequencies are excluded
// from all diagnostics anyway.
#ifndef SRPAC_ACQUISITION_HPP
#define SRPAC_ACQUISITION_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "srpac/scene.hpp"

namespace srpac {

// Stage-error law. epsilon is in LR pixel units; eps_r = epsilon * r is the
// componentwise hard bound in HR pixels. bias is in HR pixels.
struct PositioningModel {
    enum class Law { uniform, truncated_gaussian };
    double epsilon = 0.0;
    Law law = Law::uniform;
    double sigma = 0.0;  // truncated_gaussian only, HR pixels
    Vec2d bias{0.0, 0.0};

    double eps_r(int r) const { return epsilon * r; }
};

// One position error draw b_dj (HR pixels), componentwise clamped to the hard
// bound, so |b| <= eps_r always holds.
inline Vec2d sample_position_error(const PositioningModel& model, int r, Rng& rng) {
    const double er = model.eps_r(r);
    if (er == 0.0) return {0.0, 0.0};
    auto draw = [&](double bias_c) {
        double noise = model.law == PositioningModel::Law::uniform
                           ? rng.uniform(-er, er)
                           : model.sigma * rng.gaussian();
        return std::clamp(bias_c + noise, -er, er);
    };
    return {draw(model.bias.x), draw(model.bias.y)};
}

// Realized displacement for target d.
inline Vec2d sample_displacement(const Vec2i& d, const PositioningModel& model, int r, Rng& rng) {
    const Vec2d b = sample_position_error(model, r, rng);
    return {d.x + b.x, d.y + b.y};
}

struct LrFrame {
    Vec2i target_d;     // targeted displacement in (0:r-1)^2, HR pixels
    Vec2d realized_d;   // d_e(j) = d + b_dj, HR pixels
    int j = 0;          // frame index within its target group
    RealImage pixels;   // N x N observation
};

struct AcquisitionStack {
    int N = 0, r = 0, n_d = 0;
    PositioningModel model;
    Psf psf;
    uint64_t seed = 0;  // stream seed actually used for the position errors
    // Frames ordered d-major (linear index d.y*r + d.x), j-minor.
    std::vector<LrFrame> frames;

    const LrFrame& frame(const Vec2i& d, int j) const {
        return frames[static_cast<size_t>(d.y * r + d.x) * n_d + j];
    }
};

// Blurred scene spectrum with the -M/2 Nyquist row/column zeroed: the
// simulation target Z that the fusion estimator tries to reconstruct.
inline HrScene simulation_target(const HrScene& scene, const Psf& psf) {
    HrScene z = apply_blur(scene, psf);
    HrScene out;
    out.side = z.side;
    out.eta = z.eta;
    out.spectrum = z.spectrum;
    const int m = z.side;
    for (int i = 0; i < m; ++i) {
        out.spectrum(m / 2, i) = 0.0;  // ky = -M/2 row
        out.spectrum(i, m / 2) = 0.0;  // kx = -M/2 column
    }
    out.pixels = real_part(dft_inverse(out.spectrum));
    return out;
}

// Production path: the LR spectrum of the decimated translated scene is the
// alias sum Y~(k) = (1/r^2) sum_alpha Z~(k+alpha*N) exp(-i q_alpha . d_e),
// followed by one N x N inverse transform.
inline LrFrame acquire_frame(const ComplexImage& target_spectrum, const FrequencyGrid& g,
                             const Vec2i& target_d, const Vec2d& d_e, int j = 0) {
    const int m = g.hr_side();
    const int n = g.N;
    if (target_spectrum.rows() != m) throw std::domain_error("acquire_frame: size mismatch");
    // Per-axis phase table over all HR indices: exp(-i * q * d_e_component).
    std::vector<cplx> px(m), py(m);
    for (int i = 0; i < m; ++i) {
        const double q = 2.0 * kPi * FrequencyGrid::freq_of(i, m) / m;
        px[i] = std::polar(1.0, -q * d_e.x);
        py[i] = std::polar(1.0, -q * d_e.y);
    }
    ComplexImage lr(n, n);
    const double inv_r2 = 1.0 / (static_cast<double>(g.r) * g.r);
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            cplx acc(0.0, 0.0);
            for (int ty = 0; ty < g.r; ++ty) {
                const int hy = (iy + ty * n) % m;
                cplx row_acc(0.0, 0.0);
                for (int tx = 0; tx < g.r; ++tx) {
                    const int hx = (ix + tx * n) % m;
                    row_acc += target_spectrum(hy, hx) * px[hx];
                }
                acc += row_acc * py[hy];
            }
            lr(iy, ix) = acc * inv_r2;
        }
    }
    LrFrame frame;
    frame.target_d = target_d;
    frame.realized_d = d_e;
    frame.j = j;
    frame.pixels = real_part(dft_inverse(lr));
    return frame;
}

// Reference path used as a test oracle: phase-ramp the full HR spectrum,
// inverse transform, and keep every r-th sample starting at (0,0).
inline LrFrame acquire_frame_reference(const ComplexImage& target_spectrum, const FrequencyGrid& g,
                                       const Vec2i& target_d, const Vec2d& d_e, int j = 0) {
    const int m = g.hr_side();
    ComplexImage shifted(m, m);
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix) {
            const double qx = 2.0 * kPi * FrequencyGrid::freq_of(ix, m) / m;
            const double qy = 2.0 * kPi * FrequencyGrid::freq_of(iy, m) / m;
            shifted(iy, ix) =
                target_spectrum(iy, ix) * std::polar(1.0, -(qx * d_e.x + qy * d_e.y));
        }
    const RealImage hr = real_part(dft_inverse(shifted));
    LrFrame frame;
    frame.target_d = target_d;
    frame.realized_d = d_e;
    frame.j = j;
    frame.pixels = RealImage(g.N, g.N);
    for (int y = 0; y < g.N; ++y)
        for (int x = 0; x < g.N; ++x) frame.pixels(y, x) = hr(y * g.r, x * g.r);
    return frame;
}

// Full stack: r^2 targets x n_d frames. The position-error stream of frame
// (d, j) in trial t is seeded by derive_seed(base_seed, t, d.y*r+d.x, j), so
// the stack is reproducible for any thread count or generation order.
inline AcquisitionStack acquire_stack(const HrScene& scene, const Psf& psf,
                                      const FrequencyGrid& g, int n_d,
                                      const PositioningModel& model, uint64_t base_seed,
                                      uint64_t trial = 0, int threads = 1) {
    if (n_d < 1) throw std::domain_error("acquire_stack: n_d must be >= 1");
    const HrScene target = simulation_target(scene, psf);
    AcquisitionStack stack;
    stack.N = g.N;
    stack.r = g.r;
    stack.n_d = n_d;
    stack.model = model;
    stack.psf = psf;
    stack.seed = derive_seed(base_seed, trial);
    stack.frames.resize(static_cast<size_t>(g.r) * g.r * n_d);
    const int total = static_cast<int>(stack.frames.size());
    parallel_for(total, threads, [&](int idx) {
        const int dlin = idx / n_d;
        const int j = idx % n_d;
        const Vec2i d{dlin % g.r, dlin / g.r};
        Rng rng(derive_seed(base_seed, trial, static_cast<uint64_t>(d.y * g.r + d.x),
                            static_cast<uint64_t>(j)));
        const Vec2d d_e = sample_displacement(d, model, g.r, rng);
        stack.frames[static_cast<size_t>(d.y * g.r + d.x) * n_d + j] =
            acquire_frame(target.spectrum, g, d, d_e, j);
    });
    return stack;
}

// Optional additive white Gaussian sensor noise (gray levels).
inline void add_noise(AcquisitionStack& stack, double sigma, uint64_t seed) {
    if (sigma < 0.0) throw std::domain_error("add_noise: sigma must be >= 0");
    if (sigma == 0.0) return;
    for (size_t f = 0; f < stack.frames.size(); ++f) {
        Rng rng(derive_seed(seed, 0xAD0153, f));
        for (auto& p : stack.frames[f].pixels.raw()) p += sigma * rng.gaussian();
    }
}

// ---- Stack serialization: PGM frames + JSON manifest ------------------------

inline nlohmann::json stack_manifest(const AcquisitionStack& stack, uint64_t base_seed,
                                     uint64_t trial, const std::string& scene_desc) {
    nlohmann::json j;
    j["format_version"] = 1;
    j["scene"] = scene_desc;
    j["N"] = stack.N;
    j["r"] = stack.r;
    j["n_d"] = stack.n_d;
    j["epsilon_lr_px"] = stack.model.epsilon;
    j["law"] = stack.model.law == PositioningModel::Law::uniform ? "uniform" : "truncated_gaussian";
    j["sigma_hr_px"] = stack.model.sigma;
    j["bias_hr_px"] = {stack.model.bias.x, stack.model.bias.y};
    j["psf"] = stack.psf.kind == Psf::Kind::dirac ? "dirac" : "gaussian";
    j["psf_sigma_hr_px"] = stack.psf.sigma;
    j["base_seed"] = base_seed;
    j["trial"] = trial;
    nlohmann::json frames = nlohmann::json::array();
    for (const auto& f : stack.frames) {
        frames.push_back({{"target_d", {f.target_d.x, f.target_d.y}},
                          {"realized_d", {f.realized_d.x, f.realized_d.y}},
                          {"j", f.j}});
    }
    j["frames"] = std::move(frames);
    return j;
}

inline void save_stack(const AcquisitionStack& stack, const std::string& dir, uint64_t base_seed,
                       uint64_t trial, const std::string& scene_desc) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::ofstream mf(dir + "/manifest.json");
    mf << stack_manifest(stack, base_seed, trial, scene_desc).dump(2) << "\n";
    // Frames quantized to 16-bit PGM for inspection; replay regenerates the
    // exact float data from the manifest seed.
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& f : stack.frames)
        for (double v : f.pixels.raw()) {
            if (first) lo = hi = v, first = false;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    const double span = hi > lo ? hi - lo : 1.0;
    for (size_t i = 0; i < stack.frames.size(); ++i) {
        GrayImage g;
        g.width = g.height = stack.N;
        g.maxval = 65535;
        g.pixels.resize(static_cast<size_t>(stack.N) * stack.N);
        for (size_t p = 0; p < g.pixels.size(); ++p)
            g.pixels[p] = static_cast<uint16_t>(
                std::lround(65535.0 * (stack.frames[i].pixels.raw()[p] - lo) / span));
        char name[64];
        std::snprintf(name, sizeof(name), "/frame_%04zu.pgm", i);
        write_pgm(dir + name, g);
    }
}

}  // namespace srpac

#endif  // SRPAC_ACQUISITION_HPP

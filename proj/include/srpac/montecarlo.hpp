// Seeded Monte-Carlo experiment engine: validates the analytical bounds
// empirically and produces exceedance maps, SNR sweeps, coefficient
// statistics, and spatial localization of unreliable frequencies.
#ifndef SRPAC_MONTECARLO_HPP
#define SRPAC_MONTECARLO_HPP

#include <map>

#include "srpac/bounds.hpp"
#include "srpac/fusion.hpp"

namespace srpac {

struct McExperiment {
    const HrScene* scene = nullptr;  // unblurred HR scene
    Psf psf = Psf::dirac();
    int r = 2;
    PositioningModel model;
    int n_d = 1;
    int trials = 100;
    uint64_t base_seed = 0;
    int threads = 1;

    int N() const { return scene->side / r; }
};

struct McResult {
    int trials = 0, side = 0, N = 0, r = 0;
    Array2D<uint8_t> mask;               // 1 = excluded/undefined frequency
    std::vector<RealImage> rel_errors;   // per-trial |X~-Z~|/|Z~| fields
    std::vector<double> max_rel_error;   // per-trial max over unmasked k'
    std::vector<double> hf_snr_db;       // per-trial hf-band SNR
};

// Runs the experiment: trial t derives every frame stream from
// seed(base, t, d, j), so results are bit-identical for any thread count.
inline McResult run(const McExperiment& exp) {
    if (!exp.scene) throw std::invalid_argument("mc: scene required");
    if (exp.trials < 1) throw std::invalid_argument("mc: trials must be >= 1");
    const FrequencyGrid g(exp.N(), exp.r);
    const HrScene target = simulation_target(*exp.scene, exp.psf);
    const int m = g.hr_side();

    McResult res;
    res.trials = exp.trials;
    res.side = m;
    res.N = g.N;
    res.r = g.r;
    res.mask = Array2D<uint8_t>(m, m, 0);
    double max_amp = 0.0;
    for (const auto& v : target.spectrum.raw()) max_amp = std::max(max_amp, std::abs(v));
    const double zero_thresh = kZeroSpectrumRel * max_amp;
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix) {
            const Vec2i kp{FrequencyGrid::freq_of(ix, m), FrequencyGrid::freq_of(iy, m)};
            if (g.is_excluded(kp) || std::abs(target.spectrum(iy, ix)) < zero_thresh)
                res.mask(iy, ix) = 1;
        }

    res.rel_errors.assign(exp.trials, RealImage());
    res.max_rel_error.assign(exp.trials, 0.0);
    res.hf_snr_db.assign(exp.trials, 0.0);
    parallel_for(exp.trials, exp.threads, [&](int t) {
        AcquisitionStack stack;
        stack.N = g.N;
        stack.r = g.r;
        stack.n_d = exp.n_d;
        stack.model = exp.model;
        stack.psf = exp.psf;
        stack.seed = derive_seed(exp.base_seed, t);
        stack.frames.resize(static_cast<size_t>(g.r) * g.r * exp.n_d);
        for (int dy = 0; dy < g.r; ++dy)
            for (int dx = 0; dx < g.r; ++dx)
                for (int j = 0; j < exp.n_d; ++j) {
                    Rng rng(derive_seed(exp.base_seed, t, static_cast<uint64_t>(dy * g.r + dx),
                                        static_cast<uint64_t>(j)));
                    const Vec2d d_e = sample_displacement({dx, dy}, exp.model, g.r, rng);
                    stack.frames[static_cast<size_t>(dy * g.r + dx) * exp.n_d + j] =
                        acquire_frame(target.spectrum, g, {dx, dy}, d_e, j);
                }
        const FusedImage fused = fuse(stack);
        RealImage rel(m, m, 0.0);
        double worst = 0.0;
        for (int iy = 0; iy < m; ++iy)
            for (int ix = 0; ix < m; ++ix) {
                if (res.mask(iy, ix)) continue;
                const cplx z = target.spectrum(iy, ix);
                rel(iy, ix) = std::abs(fused.spectrum(iy, ix) - z) / std::abs(z);
                worst = std::max(worst, rel(iy, ix));
            }
        res.rel_errors[t] = std::move(rel);
        res.max_rel_error[t] = worst;
        res.hf_snr_db[t] = hf_snr(fused.spectrum, target.spectrum, g.N, g.r);
    });
    return res;
}

// Per-frequency empirical probability that rel_error >= p.
inline RealImage exceedance_map(const McResult& res, double p) {
    RealImage out(res.side, res.side, 0.0);
    for (const auto& rel : res.rel_errors)
        for (int iy = 0; iy < res.side; ++iy)
            for (int ix = 0; ix < res.side; ++ix)
                if (!res.mask(iy, ix) && rel(iy, ix) >= p) out(iy, ix) += 1.0;
    for (auto& v : out.raw()) v /= res.trials;
    return out;
}

// Binomial MC standard error for an empirical probability.
inline double mc_sigma(double p_hat, int trials) {
    return std::sqrt(std::max(0.0, p_hat * (1.0 - p_hat)) / trials);
}

struct P2LowerBoundMap {
    RealImage p0_map;             // analytic per-frequency floor on p2
    Array2D<uint8_t> exceed;      // 1 where p0 > threshold ("not guaranteeable")
    double exceed_fraction = 0.0; // over non-excluded frequencies
};

// Analytic p0(k') from the (blurred) scene spectrum; the MC asymptote at large
// n_d converges to the same floor.
inline P2LowerBoundMap p2_lower_bound_map(const HrScene& scene, const Psf& psf, double epsilon,
                                          int r, double threshold) {
    const HrScene target = simulation_target(scene, psf);
    const FrequencyGrid g(scene.side / r, r);
    const AmplitudeFn amp = measured_amplitude(target);
    const AliasScan scan = alias_scan(g, amp, epsilon, /*p2=*/threshold, /*want_maps=*/true);
    P2LowerBoundMap out;
    out.p0_map = scan.p0_map;
    const int m = g.hr_side();
    out.exceed = Array2D<uint8_t>(m, m, 0);
    long total = 0, over = 0;
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix) {
            const Vec2i kp{FrequencyGrid::freq_of(ix, m), FrequencyGrid::freq_of(iy, m)};
            if (g.is_excluded(kp)) continue;
            ++total;
            if (scan.p0_map(iy, ix) > threshold) {
                out.exceed(iy, ix) = 1;
                ++over;
            }
        }
    out.exceed_fraction = total > 0 ? static_cast<double>(over) / total : 0.0;
    return out;
}

struct SnrSweep {
    std::vector<int> n_d;
    std::vector<std::vector<double>> snr_samples;  // per n_d, per trial
    std::vector<double> snr_mean;
    double slope = 0.0;  // dB per decade of n_d
    double offset = 0.0; // fitted K
};

inline SnrSweep snr_sweep(const HrScene& scene, const Psf& psf, int r,
                          const PositioningModel& model, const std::vector<int>& nd_list,
                          int trials, uint64_t seed, int threads = 1) {
    SnrSweep sweep;
    sweep.n_d = nd_list;
    std::vector<double> xs, ys;
    for (size_t i = 0; i < nd_list.size(); ++i) {
        McExperiment exp;
        exp.scene = &scene;
        exp.psf = psf;
        exp.r = r;
        exp.model = model;
        exp.n_d = nd_list[i];
        exp.trials = trials;
        exp.base_seed = derive_seed(seed, 0x5352, static_cast<uint64_t>(nd_list[i]));
        exp.threads = threads;
        const McResult res = run(exp);
        sweep.snr_samples.push_back(res.hf_snr_db);
        double mean = 0.0;
        for (double v : res.hf_snr_db) mean += v;
        mean /= res.hf_snr_db.size();
        sweep.snr_mean.push_back(mean);
        xs.push_back(static_cast<double>(nd_list[i]));
        ys.push_back(mean);
    }
    const auto [slope, offset] = fit_snr_line(xs, ys);
    sweep.slope = slope;
    sweep.offset = offset;
    return sweep;
}

enum class UnreliableMode { theory, mc };

struct UnreliableBand {
    Array2D<uint8_t> mask;   // selected (unreliable) frequencies
    RealImage band_image;    // inverse transform of the masked band of Z~
    double weight_db = 0.0;  // band energy relative to the superresolved band
};

// Selects the frequencies whose aliasing guarantee fails at the given n_d
// (theory mode) or whose empirical exceedance of p is >= prob_threshold (MC
// mode), inverse-transforms that band, and reports its energy weight in dB
// relative to the hf (superresolved) band.
inline UnreliableBand unreliable_spatial(const HrScene& scene, const Psf& psf, int r,
                                         const PositioningModel& model, int n_d, double p,
                                         double prob_threshold, UnreliableMode mode,
                                         int trials = 100, uint64_t seed = 0, int threads = 1,
                                         double confidence = 0.95) {
    const FrequencyGrid g(scene.side / r, r);
    const HrScene target = simulation_target(scene, psf);
    const int m = g.hr_side();
    UnreliableBand out;
    out.mask = Array2D<uint8_t>(m, m, 0);
    if (mode == UnreliableMode::theory) {
        const AmplitudeFn amp = measured_amplitude(target);
        const AliasScan scan = alias_scan(g, amp, model.epsilon, p, /*want_maps=*/true);
        const double target_p = (r == 2 ? std::sqrt(2.0) : 1.0) * p;
        for (int iy = 0; iy < m; ++iy)
            for (int ix = 0; ix < m; ++ix) {
                const Vec2i kp{FrequencyGrid::freq_of(ix, m), FrequencyGrid::freq_of(iy, m)};
                if (g.is_excluded(kp)) continue;
                if (scan.nr_map(iy, ix)) {
                    out.mask(iy, ix) = 1;
                    continue;
                }
                const double a = scan.a_map(iy, ix);
                if (a <= 0.0) continue;
                const NdBound nd = nd_from_c2((target_p - scan.p0_map(iy, ix)) / a, r, confidence);
                if (!nd.reachable || nd.value > n_d) out.mask(iy, ix) = 1;
            }
    } else {
        McExperiment exp;
        exp.scene = &scene;
        exp.psf = psf;
        exp.r = r;
        exp.model = model;
        exp.n_d = n_d;
        exp.trials = trials;
        exp.base_seed = seed;
        exp.threads = threads;
        const McResult res = run(exp);
        const RealImage ex = exceedance_map(res, p);
        for (int iy = 0; iy < m; ++iy)
            for (int ix = 0; ix < m; ++ix)
                if (!res.mask(iy, ix) && ex(iy, ix) >= prob_threshold) out.mask(iy, ix) = 1;
    }
    // Band energy relative to the superresolved (hf) band.
    ComplexImage band(m, m, cplx(0.0, 0.0));
    double band_energy = 0.0, hf_energy = 0.0;
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix) {
            const Vec2i kp{FrequencyGrid::freq_of(ix, m), FrequencyGrid::freq_of(iy, m)};
            if (g.is_excluded(kp)) continue;
            const double e = std::norm(target.spectrum(iy, ix));
            if (!g.in_lr(kp)) hf_energy += e;
            if (out.mask(iy, ix)) {
                band(iy, ix) = target.spectrum(iy, ix);
                band_energy += e;
            }
        }
    out.band_image = real_part(dft_inverse(band));
    out.weight_db = (band_energy == 0.0 || hf_energy == 0.0)
                        ? -std::numeric_limits<double>::infinity()
                        : 10.0 * std::log10(band_energy / hf_energy);
    return out;
}

// ---- G_alpha statistics (direct evaluation from position-error draws) -------

struct GAlphaStats {
    // Keyed by (k' index pair, alpha): empirical mean, analytic mean,
    // empirical second central moment, analytic variance, and MC errors.
    struct Entry {
        Vec2i kp, alpha;
        cplx mean_emp, mean_ana;
        double var_emp = 0.0, var_ana = 0.0;
        double mean_se = 0.0, var_se = 0.0;  // MC standard errors
    };
    std::vector<Entry> entries;
    // Cross-moments E[G_a1 conj(G_a2)] for alpha1 != alpha2 at each sampled k'.
    struct Cross {
        Vec2i kp, alpha1, alpha2;
        cplx moment_emp;
        double se = 0.0;
    };
    std::vector<Cross> cross;
};

// Characteristic function of the uniform law on (-eps_r, eps_r)^2.
inline double chi_uniform(const Vec2d& q, double eps_r) {
    auto sinc = [](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; };
    return sinc(q.x * eps_r) * sinc(q.y * eps_r);
}

// Empirical moments of G_alpha over `trials` independent stacks, evaluated
// directly from the position-error draws (no images involved). Analytic
// targets: E[G_alpha] = delta_{gamma alpha} chi(q_gamma) and
// Var[G_alpha] = (1 - |chi(q_alpha)|^2) / (r^2 n_d).
inline GAlphaStats g_alpha_statistics(int N, int r, const PositioningModel& model, int n_d,
                                      int trials, uint64_t seed,
                                      const std::vector<Vec2i>& sample_kp) {
    if (model.law != PositioningModel::Law::uniform)
        throw std::invalid_argument("g_alpha_statistics: analytic chi implemented for the uniform law");
    const FrequencyGrid g(N, r);
    const double eps_r = model.eps_r(r);
    GAlphaStats stats;
    // Pre-list (k', alpha) pairs and their phases.
    struct Slot {
        Vec2i kp, alpha, gamma;
        Vec2d q_alpha, q_gamma;
    };
    std::vector<Slot> slots;
    for (const Vec2i& kp : sample_kp) {
        if (g.is_excluded(kp)) throw std::domain_error("g_alpha_statistics: excluded frequency");
        const auto [k, gamma] = alias_decompose(kp, g);
        for (const Vec2i& alpha : alias_set(k, g)) {
            Slot s;
            s.kp = kp;
            s.alpha = alpha;
            s.gamma = gamma;
            s.q_alpha = g.q_of({k.x + alpha.x * N, k.y + alpha.y * N});
            s.q_gamma = g.q_of(kp);
            slots.push_back(s);
        }
    }
    // Accumulators.
    const size_t ns = slots.size();
    std::vector<cplx> sum_g(ns, cplx(0, 0));
    std::vector<double> sum_dev2(ns, 0.0), sum_dev4(ns, 0.0);
    std::vector<std::vector<cplx>> g_per_trial(trials, std::vector<cplx>(ns));
    for (int t = 0; t < trials; ++t) {
        // Draw the stack's position errors (same stream layout as acquisition).
        std::vector<Vec2d> b(static_cast<size_t>(r) * r * n_d);
        std::vector<Vec2i> d_of(b.size());
        for (int dy = 0; dy < r; ++dy)
            for (int dx = 0; dx < r; ++dx)
                for (int j = 0; j < n_d; ++j) {
                    Rng rng(derive_seed(seed, t, static_cast<uint64_t>(dy * r + dx),
                                        static_cast<uint64_t>(j)));
                    const size_t idx = static_cast<size_t>(dy * r + dx) * n_d + j;
                    b[idx] = sample_position_error(model, r, rng);
                    d_of[idx] = {dx, dy};
                }
        for (size_t s = 0; s < ns; ++s) {
            const Slot& sl = slots[s];
            cplx acc(0, 0);
            for (size_t i = 0; i < b.size(); ++i) {
                const double phase = (sl.q_gamma.x - sl.q_alpha.x) * d_of[i].x +
                                     (sl.q_gamma.y - sl.q_alpha.y) * d_of[i].y -
                                     (sl.q_alpha.x * b[i].x + sl.q_alpha.y * b[i].y);
                acc += std::polar(1.0, phase);
            }
            g_per_trial[t][s] = acc / static_cast<double>(b.size());
        }
    }
    for (int t = 0; t < trials; ++t)
        for (size_t s = 0; s < ns; ++s) sum_g[s] += g_per_trial[t][s];
    for (size_t s = 0; s < ns; ++s) {
        const Slot& sl = slots[s];
        const bool diag = sl.alpha == sl.gamma;
        const cplx mean_ana = diag ? cplx(chi_uniform(sl.q_gamma, eps_r), 0.0) : cplx(0.0, 0.0);
        for (int t = 0; t < trials; ++t) {
            const double dev2 = std::norm(g_per_trial[t][s] - mean_ana);
            sum_dev2[s] += dev2;
            sum_dev4[s] += dev2 * dev2;
        }
        GAlphaStats::Entry e;
        e.kp = sl.kp;
        e.alpha = sl.alpha;
        e.mean_emp = sum_g[s] / static_cast<double>(trials);
        e.mean_ana = mean_ana;
        e.var_emp = sum_dev2[s] / trials;
        const double chi_a = chi_uniform(sl.q_alpha, eps_r);
        e.var_ana = (1.0 - chi_a * chi_a) / (static_cast<double>(r) * r * n_d);
        // MC standard errors: complex-mean scatter and variance-of-variance.
        e.mean_se = std::sqrt(e.var_emp / trials);
        const double m2 = e.var_emp;
        const double m4 = sum_dev4[s] / trials;
        e.var_se = std::sqrt(std::max(0.0, m4 - m2 * m2) / trials);
        stats.entries.push_back(e);
    }
    // Cross moments per k' for all alpha pairs.
    size_t base = 0;
    for (const Vec2i& kp : sample_kp) {
        const auto [k, gamma] = alias_decompose(kp, g);
        const size_t na = alias_set(k, g).size();
        for (size_t i = 0; i < na; ++i)
            for (size_t j2 = i + 1; j2 < na; ++j2) {
                GAlphaStats::Cross c;
                c.kp = kp;
                c.alpha1 = slots[base + i].alpha;
                c.alpha2 = slots[base + j2].alpha;
                cplx acc(0, 0);
                double acc2 = 0.0;
                for (int t = 0; t < trials; ++t) {
                    const cplx m1 = slots[base + i].alpha == gamma
                                        ? g_per_trial[t][base + i] -
                                              chi_uniform(slots[base + i].q_gamma, eps_r)
                                        : g_per_trial[t][base + i];
                    const cplx m2c = slots[base + j2].alpha == gamma
                                         ? g_per_trial[t][base + j2] -
                                               chi_uniform(slots[base + j2].q_gamma, eps_r)
                                         : g_per_trial[t][base + j2];
                    const cplx v = m1 * std::conj(m2c);
                    acc += v;
                    acc2 += std::norm(v);
                }
                c.moment_emp = acc / static_cast<double>(trials);
                const double mean_abs2 = std::norm(c.moment_emp);
                c.se = std::sqrt(std::max(0.0, acc2 / trials - mean_abs2) / trials);
                stats.cross.push_back(c);
            }
        base += na;
    }
    return stats;
}

}  // namespace srpac

#endif  // SRPAC_MONTECARLO_HPP

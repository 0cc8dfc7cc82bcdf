// srpac: planning, simulation, and validation front end.
//
// Subcommands: plan, table1, simulate, verify, maps, snr, localize.
// Conventions: epsilon in LR pixels; bias and displacements in HR pixels.
// Default seed comes from the SRPAC_SEED environment variable (0 otherwise).
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "srpac/montecarlo.hpp"

using namespace srpac;
using nlohmann::json;

namespace {

uint64_t env_seed() {
    const char* s = std::getenv("SRPAC_SEED");
    if (!s || !*s) return 0;
    return std::strtoull(s, nullptr, 10);
}

Psf make_psf(const std::string& kind, double sigma) {
    if (kind == "dirac") return Psf::dirac();
    if (kind == "gaussian") return Psf::gaussian(sigma);
    throw CLI::ValidationError("--psf", "must be 'dirac' or 'gaussian'");
}

// Shared scene options: either --scene <image> or a synthetic power-law scene.
struct SceneOpts {
    std::string path;
    int synth_side = 64;
    double synth_eta = 0.0;
    uint64_t synth_seed = 1;

    void add(CLI::App* cmd) {
        cmd->add_option("--scene", path, "Scene image (PGM or PNG, square, smooth side)");
        cmd->add_option("--synth-side", synth_side, "Synthetic power-law scene side")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--synth-eta", synth_eta, "Synthetic power-law exponent eta");
        cmd->add_option("--synth-seed", synth_seed, "Synthetic scene seed");
    }
    HrScene load() const {
        if (!path.empty()) return load_scene(path);
        return synth_power_law(synth_side, synth_eta, synth_seed);
    }
    std::string describe() const {
        if (!path.empty()) return "image:" + path;
        return "synth:side=" + std::to_string(synth_side) + ",eta=" + std::to_string(synth_eta) +
               ",seed=" + std::to_string(synth_seed);
    }
};

void write_map(const RealImage& img, const std::string& prefix) {
    double lo = img.raw()[0], hi = img.raw()[0];
    for (double v : img.raw()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi > lo ? hi - lo : 1.0;
    GrayImage g;
    g.width = img.cols();
    g.height = img.rows();
    g.maxval = 65535;
    g.pixels.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i)
        g.pixels[i] = static_cast<uint16_t>(std::lround(65535.0 * (img.raw()[i] - lo) / span));
    write_pgm(prefix + ".pgm", g);
    write_png(prefix + ".png", to_gray8(img));
}

void write_csv_map(const RealImage& img, const std::string& path, const char* value_name) {
    std::ofstream out(path);
    out << "kx,ky," << value_name << "\n";
    const int m = img.rows();
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix)
            out << FrequencyGrid::freq_of(ix, m) << "," << FrequencyGrid::freq_of(iy, m) << ","
                << img(iy, ix) << "\n";
}

// ---------------------------------------------------------------------------
int cmd_plan(const BoundsConfig& cfg, const SceneOpts& scene_opts, double sec_per_frame,
             const std::string& out) {
    std::optional<AmplitudeFn> amp;
    HrScene scene;
    if (!scene_opts.path.empty()) {
        scene = simulation_target(scene_opts.load(), cfg.psf);
        amp = measured_amplitude(scene);
    }
    const BoundsReport rep =
        plan(cfg, amp ? &*amp : nullptr,
             sec_per_frame > 0 ? std::optional<double>(sec_per_frame) : std::nullopt);
    const json j = rep.to_json();
    if (!out.empty()) {
        std::ofstream f(out);
        f << j.dump(2) << "\n";
    }
    std::cout << "plan: r=" << cfg.r << " epsilon=" << cfg.epsilon << " (LR px)\n"
              << "  p_best=" << rep.p_best_value << "  c1=" << rep.c1_value << "  p0=" << rep.p0
              << "\n"
              << "  nd_approx=" << rep.nd_approx.str() << "  nd_alias=" << rep.nd_alias.str()
              << "  nd_total=" << rep.nd_total.str() << "  verdict=" << rep.verdict() << "\n"
              << "  guarantee: relative error <= " << rep.total_error
              << " with probability >= " << rep.total_confidence << "\n";
    if (rep.acquisition_seconds)
        std::cout << "  estimated acquisition time: " << *rep.acquisition_seconds << " s\n";
    if (out.empty()) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_table1(bool with_psf, int N, const std::string& out) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        os = &file;
    }
    *os << "r,psf,epsilon,nd_approx,nd_alias,nd_total,verdict\n";
    for (int r = 2; r <= 8; ++r)
        for (int pi = 0; pi < (with_psf ? 2 : 1); ++pi)
            for (double eps : {0.01, 0.001, 0.0001}) {
                BoundsConfig cfg;
                cfg.r = r;
                cfg.epsilon = eps;
                cfg.N = N;
                cfg.psf = pi == 0 ? Psf::dirac() : Psf::gaussian(0.5);
                const BoundsReport rep = plan(cfg);
                *os << r << "," << (pi == 0 ? "dirac" : "gaussian0.5") << "," << eps << ","
                    << rep.nd_approx.str() << "," << rep.nd_alias.str() << ","
                    << rep.nd_total.str() << "," << rep.verdict() << "\n";
            }
    if (!out.empty()) std::cout << "table written to " << out << "\n";
    return 0;
}

int cmd_simulate(const SceneOpts& scene_opts, int r, const PositioningModel& model, const Psf& psf,
                 int nd, uint64_t seed, const std::string& out_dir, int threads,
                 const std::string& replay_manifest) {
    HrScene scene = scene_opts.load();
    int use_r = r, use_nd = nd;
    uint64_t use_seed = seed, trial = 0;
    PositioningModel use_model = model;
    Psf use_psf = psf;
    if (!replay_manifest.empty()) {
        std::ifstream mf(replay_manifest);
        if (!mf) throw std::runtime_error("cannot open manifest: " + replay_manifest);
        const json man = json::parse(mf);
        use_r = man["r"];
        use_nd = man["n_d"];
        use_seed = man["base_seed"];
        trial = man["trial"];
        use_model.epsilon = man["epsilon_lr_px"];
        use_model.law = man["law"] == "uniform" ? PositioningModel::Law::uniform
                                                : PositioningModel::Law::truncated_gaussian;
        use_model.sigma = man["sigma_hr_px"];
        use_model.bias = {man["bias_hr_px"][0], man["bias_hr_px"][1]};
        use_psf = man["psf"] == "dirac" ? Psf::dirac() : Psf::gaussian(man["psf_sigma_hr_px"]);
    }
    if (scene.side % use_r != 0) throw std::runtime_error("scene side must be divisible by r");
    const FrequencyGrid g(scene.side / use_r, use_r);
    const HrScene target = simulation_target(scene, use_psf);
    const AcquisitionStack stack =
        acquire_stack(scene, use_psf, g, use_nd, use_model, use_seed, trial, threads);
    const FusedImage fused = fuse(stack);
    const ErrorDecomposition dec = decompose(fused, target, stack, false);

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    save_stack(stack, out_dir + "/stack", use_seed, trial, scene_opts.describe());
    write_map(fused.pixels, out_dir + "/fused");
    write_map(target.pixels, out_dir + "/target");
    write_csv_map(dec.rel_error, out_dir + "/rel_error.csv", "rel_error");
    write_map(dec.rel_error, out_dir + "/rel_error");

    double max_rel = 0.0;
    const int m = g.hr_side();
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix)
            if (!dec.mask(iy, ix)) max_rel = std::max(max_rel, dec.rel_error(iy, ix));
    const double snr = hf_snr(fused.spectrum, target.spectrum, g.N, g.r);

    json summary;
    summary["scene"] = scene_opts.describe();
    summary["r"] = use_r;
    summary["n_d"] = use_nd;
    summary["epsilon_lr_px"] = use_model.epsilon;
    summary["seed"] = use_seed;
    summary["trial"] = trial;
    summary["threads_note"] = "results are independent of --threads";
    summary["max_relative_spectral_error"] = max_rel;
    summary["hf_snr_db"] = snr;
    std::ofstream sf(out_dir + "/summary.json");
    sf << summary.dump(2) << "\n";
    std::cout << "simulate: wrote " << out_dir << " (max rel error " << max_rel << ", hf SNR "
              << snr << " dB)\n";
    return 0;
}

int cmd_verify(const std::string& spec_path, int threads) {
    std::ifstream sf(spec_path);
    if (!sf) throw std::runtime_error("cannot open experiment spec: " + spec_path);
    const json spec = json::parse(sf);
    const int trials = spec.value("trials", 100);
    if (trials < 1) throw std::runtime_error("trials must be >= 1");
    const uint64_t seed = spec.value("seed", env_seed());
    bool all_ok = true;
    json cells_out = json::array();
    int idx = 0;
    for (const json& cell : spec.at("cells")) {
        BoundsConfig cfg;
        cfg.r = cell.at("r");
        cfg.epsilon = cell.at("epsilon");
        cfg.p1 = cell.value("p1", 0.05);
        cfg.P1 = cell.value("P1", 0.95);
        cfg.p2 = cell.value("p2", 0.05);
        cfg.P2 = cell.value("P2", 0.95);
        const BoundsReport rep = plan(cfg);
        json c;
        c["config"] = {{"r", cfg.r}, {"epsilon", cfg.epsilon}, {"p1", cfg.p1},
                       {"P1", cfg.P1}, {"p2", cfg.p2},         {"P2", cfg.P2}};
        if (!rep.nd_total.reachable && !cell.contains("nd")) {
            c["status"] = "NR";
            cells_out.push_back(c);
            std::cout << "cell " << idx++ << ": NR (skipped)\n";
            continue;
        }
        const int nd = cell.value("nd", static_cast<int>(rep.nd_total.reachable
                                                             ? rep.nd_total.value
                                                             : 1));
        const int N = cell.value("N", 32);
        const HrScene scene =
            synth_power_law(N * cfg.r, cell.value("eta", 0.0), seed + 17 * idx);
        McExperiment exp;
        exp.scene = &scene;
        exp.r = cfg.r;
        exp.model.epsilon = cfg.epsilon;
        exp.n_d = nd;
        exp.trials = trials;
        exp.base_seed = derive_seed(seed, 0xCE11, idx);
        exp.threads = threads;
        const McResult res = run(exp);
        int good = 0;
        for (double e : res.max_rel_error)
            if (e <= cfg.p1 + cfg.p2) ++good;
        const double emp = static_cast<double>(good) / trials;
        const double stated = cfg.P2 - (1.0 - cfg.P1);
        const double sigma = mc_sigma(stated, trials);
        const bool ok = emp >= stated - 3.0 * sigma;
        all_ok = all_ok && ok;
        c["nd"] = nd;
        c["empirical_confidence"] = emp;
        c["stated_confidence"] = stated;
        c["mc_sigma"] = sigma;
        c["status"] = ok ? "pass" : "fail";
        cells_out.push_back(c);
        std::cout << "cell " << idx++ << ": r=" << cfg.r << " eps=" << cfg.epsilon
                  << " nd=" << nd << " empirical=" << emp << " stated=" << stated << " +-"
                  << sigma << " -> " << (ok ? "pass" : "FAIL") << "\n";
    }
    json out;
    out["cells"] = cells_out;
    out["all_pass"] = all_ok;
    const std::string out_path = spec.value("out", std::string("verify_report.json"));
    std::ofstream of(out_path);
    of << out.dump(2) << "\n";
    std::cout << (all_ok ? "verify: all cells pass" : "verify: some cells fail (see report)")
              << " -> " << out_path << "\n";
    return 0;
}

int cmd_maps(const SceneOpts& scene_opts, int r, double epsilon, double threshold, const Psf& psf,
             const std::string& prefix) {
    const HrScene scene = scene_opts.load();
    if (scene.side % r != 0) throw std::runtime_error("scene side must be divisible by r");
    const P2LowerBoundMap map = p2_lower_bound_map(scene, psf, epsilon, r, threshold);
    write_map(map.p0_map, prefix + "_p0");
    write_csv_map(map.p0_map, prefix + "_p0.csv", "p0");
    RealImage exceed(map.exceed.rows(), map.exceed.cols());
    for (size_t i = 0; i < exceed.size(); ++i) exceed.raw()[i] = map.exceed.raw()[i];
    write_map(exceed, prefix + "_exceed");
    json j;
    j["epsilon_lr_px"] = epsilon;
    j["r"] = r;
    j["threshold"] = threshold;
    j["exceed_fraction"] = map.exceed_fraction;
    std::ofstream f(prefix + "_maps.json");
    f << j.dump(2) << "\n";
    std::cout << "maps: " << 100.0 * map.exceed_fraction << "% of frequencies exceed p0 > "
              << threshold << "; wrote " << prefix << "_*.{pgm,png,csv,json}\n";
    return 0;
}

int cmd_snr(const SceneOpts& scene_opts, int r, double epsilon, std::vector<int> nd_list,
            int trials, uint64_t seed, int threads, const std::string& out) {
    if (nd_list.empty()) nd_list = {1, 2, 4, 8, 16, 32, 64, 128, 256};
    if (trials < 1) throw std::runtime_error("trials must be >= 1");
    const HrScene scene = scene_opts.load();
    if (scene.side % r != 0) throw std::runtime_error("scene side must be divisible by r");
    PositioningModel model;
    model.epsilon = epsilon;
    const SnrSweep sweep =
        snr_sweep(scene, Psf::dirac(), r, model, nd_list, trials, seed, threads);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        os = &file;
    }
    *os << "n_d,trial,hf_snr_db\n";
    for (size_t i = 0; i < sweep.n_d.size(); ++i)
        for (size_t t = 0; t < sweep.snr_samples[i].size(); ++t)
            *os << sweep.n_d[i] << "," << t << "," << sweep.snr_samples[i][t] << "\n";
    std::cout << "snr: fitted slope " << sweep.slope << " dB/decade (offset " << sweep.offset
              << " dB)";
    if (!out.empty()) std::cout << "; samples -> " << out;
    std::cout << "\n";
    return 0;
}

int cmd_localize(const SceneOpts& scene_opts, int r, double epsilon, int nd, double p,
                 double prob, const std::string& mode, int trials, uint64_t seed, int threads,
                 const std::string& prefix) {
    const HrScene scene = scene_opts.load();
    if (scene.side % r != 0) throw std::runtime_error("scene side must be divisible by r");
    PositioningModel model;
    model.epsilon = epsilon;
    const UnreliableMode m =
        mode == "theory" ? UnreliableMode::theory
                         : (mode == "mc" ? UnreliableMode::mc
                                         : throw std::runtime_error("--mode must be theory|mc"));
    const UnreliableBand band =
        unreliable_spatial(scene, Psf::dirac(), r, model, nd, p, prob, m, trials, seed, threads);
    write_map(band.band_image, prefix + "_band");
    RealImage mask(band.mask.rows(), band.mask.cols());
    for (size_t i = 0; i < mask.size(); ++i) mask.raw()[i] = band.mask.raw()[i];
    write_map(mask, prefix + "_mask");
    json j;
    j["mode"] = mode;
    j["n_d"] = nd;
    j["p"] = p;
    j["prob_threshold"] = prob;
    j["weight_db"] = band.weight_db;
    std::ofstream f(prefix + "_localize.json");
    f << j.dump(2) << "\n";
    std::cout << "localize: unreliable-band weight " << band.weight_db
              << " dB relative to the superresolved band; wrote " << prefix
              << "_*.{pgm,png,json}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"srpac: PAC planning and Monte-Carlo validation for multi-frame "
                 "super-resolution with noisy known translations"};
    app.require_subcommand(1);

    // ---- plan ----
    BoundsConfig plan_cfg;
    SceneOpts plan_scene;
    std::string plan_psf = "dirac", plan_out;
    double plan_sigma = 0.5, plan_spf = 0.0;
    auto* plan_cmd = app.add_subcommand("plan", "Compute PAC sample-size bounds");
    plan_cmd->add_option("--r", plan_cfg.r, "SR factor")->check(CLI::Range(2, 64));
    plan_cmd->add_option("--epsilon", plan_cfg.epsilon, "Positioning error bound (LR px)");
    plan_cmd->add_option("--bias", plan_cfg.bias_norm, "Mean bias norm (HR px)");
    plan_cmd->add_option("--p1", plan_cfg.p1, "Approximation error budget");
    plan_cmd->add_option("--P1", plan_cfg.P1, "Approximation confidence");
    plan_cmd->add_option("--p2", plan_cfg.p2, "Aliasing error budget");
    plan_cmd->add_option("--P2", plan_cfg.P2, "Aliasing confidence");
    plan_cmd->add_option("--eta", plan_cfg.eta, "Power-law exponent");
    plan_cmd->add_option("--N", plan_cfg.N, "Evaluation grid (LR side)");
    plan_cmd->add_option("--psf", plan_psf, "PSF: dirac|gaussian");
    plan_cmd->add_option("--psf-sigma", plan_sigma, "Gaussian PSF sigma (HR px)");
    plan_cmd->add_option("--sec-per-frame", plan_spf, "Acquisition time per frame (s)");
    plan_cmd->add_option("--out", plan_out, "Write the JSON report here");
    plan_scene.add(plan_cmd);

    // ---- table1 ----
    bool t1_psf = true;
    int t1_N = 32;
    std::string t1_out;
    auto* t1_cmd = app.add_subcommand("table1", "Reference nd grid over r and epsilon");
    t1_cmd->add_flag("--psf,!--no-psf", t1_psf, "Include gaussian(0.5) rows");
    t1_cmd->add_option("--N", t1_N, "Evaluation grid (LR side)");
    t1_cmd->add_option("--out", t1_out, "CSV output path");

    // ---- simulate ----
    SceneOpts sim_scene;
    int sim_r = 2, sim_nd = 1, sim_threads = default_threads();
    double sim_eps = 0.0, sim_sigma = 0.5;
    std::string sim_psf = "dirac", sim_out = "sim_out", sim_replay;
    uint64_t sim_seed = env_seed();
    auto* sim_cmd = app.add_subcommand("simulate", "Acquire, fuse, and decompose one stack");
    sim_scene.add(sim_cmd);
    sim_cmd->add_option("--r", sim_r, "SR factor")->check(CLI::Range(2, 64));
    sim_cmd->add_option("--epsilon", sim_eps, "Positioning error bound (LR px)");
    sim_cmd->add_option("--nd", sim_nd, "Frames per position")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--psf", sim_psf, "PSF: dirac|gaussian");
    sim_cmd->add_option("--psf-sigma", sim_sigma, "Gaussian PSF sigma (HR px)");
    sim_cmd->add_option("--seed", sim_seed, "Base seed (default SRPAC_SEED)");
    sim_cmd->add_option("--out-dir", sim_out, "Output directory");
    sim_cmd->add_option("--threads", sim_threads, "Worker cap (does not change results)");
    sim_cmd->add_option("--replay", sim_replay, "Replay from a stack manifest.json");

    // ---- verify ----
    std::string ver_spec;
    int ver_threads = default_threads();
    auto* ver_cmd = app.add_subcommand("verify", "Empirically validate bound cells via MC");
    ver_cmd->add_option("--spec", ver_spec, "Experiment spec JSON")->required();
    ver_cmd->add_option("--threads", ver_threads, "Worker cap (does not change results)");

    // ---- maps ----
    SceneOpts map_scene;
    int map_r = 2;
    double map_eps = 0.01, map_thr = 0.1, map_sigma = 0.5;
    std::string map_psf = "dirac", map_prefix = "maps";
    auto* map_cmd = app.add_subcommand("maps", "Aliasing lower-bound maps for a scene");
    map_scene.add(map_cmd);
    map_cmd->add_option("--r", map_r, "SR factor")->check(CLI::Range(2, 64));
    map_cmd->add_option("--epsilon", map_eps, "Positioning error bound (LR px)");
    map_cmd->add_option("--threshold", map_thr, "p0 exceedance threshold");
    map_cmd->add_option("--psf", map_psf, "PSF: dirac|gaussian");
    map_cmd->add_option("--psf-sigma", map_sigma, "Gaussian PSF sigma (HR px)");
    map_cmd->add_option("--out-prefix", map_prefix, "Output path prefix");

    // ---- snr ----
    SceneOpts snr_scene;
    int snr_r = 2, snr_trials = 50, snr_threads = default_threads();
    double snr_eps = 0.01;
    std::vector<int> snr_nd;
    uint64_t snr_seed = env_seed();
    std::string snr_out;
    auto* snr_cmd = app.add_subcommand("snr", "hf-SNR sweep over n_d with slope fit");
    snr_scene.add(snr_cmd);
    snr_cmd->add_option("--r", snr_r, "SR factor")->check(CLI::Range(2, 64));
    snr_cmd->add_option("--epsilon", snr_eps, "Positioning error bound (LR px)");
    snr_cmd->add_option("--nd", snr_nd, "n_d list (default 1,2,4,...,256)")->delimiter(',');
    snr_cmd->add_option("--trials", snr_trials, "MC trials per n_d");
    snr_cmd->add_option("--seed", snr_seed, "Base seed (default SRPAC_SEED)");
    snr_cmd->add_option("--threads", snr_threads, "Worker cap (does not change results)");
    snr_cmd->add_option("--out", snr_out, "CSV output path");

    // ---- localize ----
    SceneOpts loc_scene;
    int loc_r = 2, loc_nd = 256, loc_trials = 100, loc_threads = default_threads();
    double loc_eps = 0.01, loc_p = 0.1, loc_prob = 0.1;
    std::string loc_mode = "theory", loc_prefix = "localize";
    uint64_t loc_seed = env_seed();
    auto* loc_cmd = app.add_subcommand("localize", "Spatial image of the unreliable band");
    loc_scene.add(loc_cmd);
    loc_cmd->add_option("--r", loc_r, "SR factor")->check(CLI::Range(2, 64));
    loc_cmd->add_option("--epsilon", loc_eps, "Positioning error bound (LR px)");
    loc_cmd->add_option("--nd", loc_nd, "Frames per position")->check(CLI::PositiveNumber);
    loc_cmd->add_option("--p", loc_p, "Relative-error level");
    loc_cmd->add_option("--prob", loc_prob, "Exceedance probability threshold");
    loc_cmd->add_option("--mode", loc_mode, "theory|mc");
    loc_cmd->add_option("--trials", loc_trials, "MC trials (mc mode)");
    loc_cmd->add_option("--seed", loc_seed, "Base seed (default SRPAC_SEED)");
    loc_cmd->add_option("--threads", loc_threads, "Worker cap (does not change results)");
    loc_cmd->add_option("--out-prefix", loc_prefix, "Output path prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (plan_cmd->parsed()) {
            plan_cfg.psf = make_psf(plan_psf, plan_sigma);
            return cmd_plan(plan_cfg, plan_scene, plan_spf, plan_out);
        }
        if (t1_cmd->parsed()) return cmd_table1(t1_psf, t1_N, t1_out);
        if (sim_cmd->parsed()) {
            PositioningModel model;
            model.epsilon = sim_eps;
            return cmd_simulate(sim_scene, sim_r, model, make_psf(sim_psf, sim_sigma), sim_nd,
                                sim_seed, sim_out, sim_threads, sim_replay);
        }
        if (ver_cmd->parsed()) return cmd_verify(ver_spec, ver_threads);
        if (map_cmd->parsed())
            return cmd_maps(map_scene, map_r, map_eps, map_thr, make_psf(map_psf, map_sigma),
                            map_prefix);
        if (snr_cmd->parsed())
            return cmd_snr(snr_scene, snr_r, snr_eps, snr_nd, snr_trials, snr_seed, snr_threads,
                           snr_out);
        if (loc_cmd->parsed())
            return cmd_localize(loc_scene, loc_r, loc_eps, loc_nd, loc_p, loc_prob, loc_mode,
                                loc_trials, loc_seed, loc_threads, loc_prefix);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}

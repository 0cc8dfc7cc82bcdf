// Frequency-grid indexing and the LR<->HR aliasing algebra:
// decomposition k' = k + gamma*N, alias sets, normalized angular frequencies,
// and exact roots-of-unity sums.
#ifndef SRPAC_GRID_HPP
#define SRPAC_GRID_HPP

#include <stdexcept>
#include <vector>

#include "srpac/common.hpp"

namespace srpac {

// Square frequency grids D_LR = (-N/2 : N/2-1)^2 and D_HR = (-rN/2 : rN/2-1)^2.
struct FrequencyGrid {
    int N = 0;  // LR side length (power of two, >= 32 in production use)
    int r = 0;  // integer super-resolution factor >= 2

    FrequencyGrid(int N_, int r_) : N(N_), r(r_) {
        if (r < 2) throw std::domain_error("FrequencyGrid: r must be >= 2");
        if (!is_power_of_two(N)) throw std::domain_error("FrequencyGrid: N must be a power of two");
    }

    int hr_side() const { return r * N; }

    bool in_lr(const Vec2i& k) const {
        return k.x >= -N / 2 && k.x < N / 2 && k.y >= -N / 2 && k.y < N / 2;
    }
    bool in_hr(const Vec2i& kp) const {
        const int m = hr_side();
        return kp.x >= -m / 2 && kp.x < m / 2 && kp.y >= -m / 2 && kp.y < m / 2;
    }

    // Nyquist row/column (a component equal to -rN/2) is excluded from all
    // per-frequency bound evaluations and error maps.
    bool is_excluded(const Vec2i& kp) const {
        const int m = hr_side();
        return kp.x == -m / 2 || kp.y == -m / 2;
    }

    // Array index (0..M-1) of a signed frequency component on a side-M grid.
    static int index_of(int freq, int side) { return ((freq % side) + side) % side; }
    // Signed frequency of an array index on a side-M grid, in [-M/2, M/2).
    static int freq_of(int index, int side) { return index < side / 2 ? index : index - side; }

    // Normalized angular frequency q = 2*pi*k'/(rN), componentwise in [-pi, pi).
    Vec2d q_of(const Vec2i& kp) const {
        const double s = 2.0 * kPi / hr_side();
        return {s * kp.x, s * kp.y};
    }
};

// Unique decomposition k' = k + gamma*N with k in D_LR.
inline std::pair<Vec2i, Vec2i> alias_decompose(const Vec2i& kp, const FrequencyGrid& g) {
    if (!g.in_hr(kp)) throw std::domain_error("alias_decompose: k' outside D_HR");
    auto split = [&](int c) {
        // Smallest representative of c mod N inside [-N/2, N/2).
        int k = ((c + g.N / 2) % g.N + g.N) % g.N - g.N / 2;
        return std::pair<int, int>{k, (c - k) / g.N};
    };
    auto [kx, gx] = split(kp.x);
    auto [ky, gy] = split(kp.y);
    return {{kx, ky}, {gx, gy}};
}

// All r^2 integer pairs alpha with k + alpha*N in D_HR.
inline std::vector<Vec2i> alias_set(const Vec2i& k, const FrequencyGrid& g) {
    if (!g.in_lr(k)) throw std::domain_error("alias_set: k outside D_LR");
    auto axis = [&](int kc) {
        std::vector<int> alphas;
        for (int a = -g.r; a <= g.r; ++a) {
            const int c = kc + a * g.N;
            if (c >= -g.hr_side() / 2 && c < g.hr_side() / 2) alphas.push_back(a);
        }
        return alphas;
    };
    std::vector<Vec2i> out;
    out.reserve(static_cast<size_t>(g.r) * g.r);
    for (int ax : axis(k.x))
        for (int ay : axis(k.y)) out.push_back({ax, ay});
    return out;
}

struct TrigSums {
    double sum_cos = 0, sum_sin = 0, sum_cos2 = 0, sum_sin2 = 0;
};

// Closed-form roots-of-unity sums over d in (0:r-1)^2 of theta = (2*pi/r) delta.d.
inline TrigSums trig_sums(const Vec2i& delta, int r) {
    if (r < 2) throw std::domain_error("trig_sums: r must be >= 2");
    auto mod_r = [&](int v) { return ((v % r) + r) % r; };
    const int dx = mod_r(delta.x), dy = mod_r(delta.y);
    const bool zero = (dx == 0 && dy == 0);
    const bool half_set = (dx == 0 || 2 * dx == r) && (dy == 0 || 2 * dy == r);
    TrigSums s;
    const double r2 = static_cast<double>(r) * r;
    s.sum_cos = zero ? r2 : 0.0;
    s.sum_sin = 0.0;
    s.sum_cos2 = half_set ? r2 : r2 / 2.0;
    s.sum_sin2 = half_set ? 0.0 : r2 / 2.0;
    return s;
}

// Brute-force counterpart, used as the test oracle.
inline TrigSums trig_sums_bruteforce(const Vec2i& delta, int r) {
    TrigSums s;
    for (int dx = 0; dx < r; ++dx)
        for (int dy = 0; dy < r; ++dy) {
            const double theta = 2.0 * kPi / r * (delta.x * dx + delta.y * dy);
            const double c = std::cos(theta), n = std::sin(theta);
            s.sum_cos += c;
            s.sum_sin += n;
            s.sum_cos2 += c * c;
            s.sum_sin2 += n * n;
        }
    return s;
}

}  // namespace srpac

#endif  // SRPAC_GRID_HPP

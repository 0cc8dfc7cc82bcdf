// Basic shared types for the srpac library: small vectors, a row-major 2-D
// array, and a deterministic parallel-for helper with fixed reduction order.
#ifndef SRPAC_COMMON_HPP
#define SRPAC_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace srpac {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2i {
    int x = 0, y = 0;
    friend bool operator==(const Vec2i&, const Vec2i&) = default;
};

struct Vec2d {
    double x = 0.0, y = 0.0;
    friend bool operator==(const Vec2d&, const Vec2d&) = default;
};

inline double l1(const Vec2d& v) { return std::abs(v.x) + std::abs(v.y); }
inline double l2(const Vec2d& v) { return std::hypot(v.x, v.y); }
inline double dot(const Vec2d& a, const Vec2d& b) { return a.x * b.x + a.y * b.y; }

// Row-major 2-D array addressed as (row, col) = (y, x).
template <typename T>
class Array2D {
public:
    Array2D() = default;
    Array2D(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t size() const { return data_.size(); }

    T& operator()(int row, int col) { return data_[static_cast<size_t>(row) * cols_ + col]; }
    const T& operator()(int row, int col) const {
        return data_[static_cast<size_t>(row) * cols_ + col];
    }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::vector<T>& raw() { return data_; }
    const std::vector<T>& raw() const { return data_; }

    friend bool operator==(const Array2D&, const Array2D&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using RealImage = Array2D<double>;
using ComplexImage = Array2D<cplx>;

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Runs fn(i) for i in [0, n) on `threads` workers. Each index writes only its
// own output slot, so results are identical for any thread count.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    threads = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += threads) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

inline int default_threads() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : static_cast<int>(h);
}

}  // namespace srpac

#endif  // SRPAC_COMMON_HPP

#include "kdv/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace kdv {

namespace {

int g_threads = 0;

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

struct ChunkMoments {
    KahanSum sum;
    KahanSum sum_sq;
};

constexpr std::int64_t kChunk = 1024;

/// Runs fn(chunk_index) over all chunks on the worker pool; chunk results are
/// stored by index, so the reduction order never depends on scheduling.
void run_chunks(std::int64_t chunks, const std::function<void(std::int64_t)>& fn) {
    const int workers =
        static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(mc_threads(), chunks)));
    if (workers == 1) {
        for (std::int64_t c = 0; c < chunks; ++c) fn(c);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::int64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
                fn(c);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

void set_mc_threads(int threads) { g_threads = threads; }

int mc_threads() {
    if (g_threads > 0) return g_threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

McEstimate mc_run(std::int64_t samples, const std::function<double(std::int64_t)>& sample) {
    if (samples < 1) throw std::invalid_argument("mc_run: need at least one sample");

    const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<ChunkMoments> moments(chunks);
    run_chunks(chunks, [&](std::int64_t c) {
        const std::int64_t lo = c * kChunk;
        const std::int64_t hi = std::min(samples, lo + kChunk);
        for (std::int64_t i = lo; i < hi; ++i) {
            const double v = sample(i);
            moments[c].sum.add(v);
            moments[c].sum_sq.add(v * v);
        }
    });

    KahanSum total;
    KahanSum total_sq;
    for (const auto& m : moments) {
        total.add(m.sum.sum);
        total_sq.add(m.sum_sq.sum);
    }
    const double n = static_cast<double>(samples);
    const double mean = total.sum / n;
    double variance = 0.0;
    if (samples > 1) {
        variance = std::max(0.0, (total_sq.sum - n * mean * mean) / (n - 1.0));
    }
    return {mean, std::sqrt(variance / n), samples};
}

ComplexMcEstimate mc_run_complex(
    std::int64_t samples, const std::function<std::complex<double>(std::int64_t)>& sample) {
    if (samples < 1) throw std::invalid_argument("mc_run_complex: need at least one sample");

    struct ComplexMoments {
        KahanSum re, im, re_sq, im_sq;
    };
    const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<ComplexMoments> moments(chunks);
    run_chunks(chunks, [&](std::int64_t c) {
        const std::int64_t lo = c * kChunk;
        const std::int64_t hi = std::min(samples, lo + kChunk);
        for (std::int64_t i = lo; i < hi; ++i) {
            const std::complex<double> v = sample(i);
            moments[c].re.add(v.real());
            moments[c].im.add(v.imag());
            moments[c].re_sq.add(v.real() * v.real());
            moments[c].im_sq.add(v.imag() * v.imag());
        }
    });

    KahanSum re, im, re_sq, im_sq;
    for (const auto& m : moments) {
        re.add(m.re.sum);
        im.add(m.im.sum);
        re_sq.add(m.re_sq.sum);
        im_sq.add(m.im_sq.sum);
    }
    const double n = static_cast<double>(samples);
    const double mean_re = re.sum / n;
    const double mean_im = im.sum / n;
    double var_re = 0.0;
    double var_im = 0.0;
    if (samples > 1) {
        var_re = std::max(0.0, (re_sq.sum - n * mean_re * mean_re) / (n - 1.0));
        var_im = std::max(0.0, (im_sq.sum - n * mean_im * mean_im) / (n - 1.0));
    }
    return {{mean_re, mean_im}, std::sqrt(var_re / n), std::sqrt(var_im / n), samples};
}

}  // namespace kdv

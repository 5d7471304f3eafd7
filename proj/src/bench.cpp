#include "bstir/bench.hpp"

#include "bstir/bell.hpp"
#include "bstir/fps.hpp"
#include "bstir/hessenberg.hpp"
#include "bstir/rational.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace bstir {

namespace {

// Small deterministic generator for benchmark inputs; reproducible runs matter
// more here than statistical quality.
class SplitMix {
  public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // nonzero value in [-9, 9]
    long small_nonzero() {
        const long v = static_cast<long>(next() % 18) - 9;
        return v >= 0 ? v + 1 : v;
    }

  private:
    std::uint64_t state_;
};

template <typename F>
double time_ms(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    return buf;
}

OutputRecord bench_record(const std::string& task, const std::string& algorithm,
                          std::vector<std::pair<std::string, std::string>> inputs,
                          unsigned long ops, const char* ops_key, double ms) {
    OutputRecord rec;
    rec.kind = "bench";
    rec.inputs = std::move(inputs);
    rec.inputs.insert(rec.inputs.begin(), {"task", task});
    rec.values = {{ops_key, std::to_string(ops)}, {"milliseconds", format_ms(ms)}};
    rec.provenance = algorithm;
    return rec;
}

}  // namespace

std::vector<OutputRecord> bench_hessenberg(int size) {
    if (size < 1 || size > 200)
        throw std::domain_error("bench_hessenberg: size must be in [1, 200]");
    SplitMix rng(42);
    HessenbergMatrix m(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j <= i + 1 && j < size; ++j)
            m.set(i, j, Rational(rng.small_nonzero()));

    std::vector<OutputRecord> out;
    const auto inputs = std::vector<std::pair<std::string, std::string>>{{"size", std::to_string(size)}};

    Rational det_e, det_r;
    DetStats stats_e, stats_r;
    const double ms_e = time_ms([&] { det_e = det_elimination(m, &stats_e); });
    const double ms_r = time_ms([&] { det_r = det_recursive(m, &stats_r); });
    if (det_e != det_r)
        throw std::logic_error("bench_hessenberg: determinant algorithms disagree");

    out.push_back(bench_record("hessenberg_det", "gaussian-elimination", inputs,
                               stats_e.multiplications, "multiplications", ms_e));
    out.push_back(bench_record("hessenberg_det", "hessenberg-recursion", inputs,
                               stats_r.multiplications, "multiplications", ms_r));
    return out;
}

std::vector<OutputRecord> bench_fps(int order) {
    if (order < 1 || order > 512)
        throw std::domain_error("bench_fps: order must be in [1, 512]");
    SplitMix rng(7);
    PowerSeries f = PowerSeries::one(order);
    PowerSeries g = PowerSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        f[n] = Rational(rng.small_nonzero(), 8);
        g[n] = Rational(rng.small_nonzero(), 8);
    }
    PowerSeries h = f;
    h[0] = Rational(0);  // exp needs zero constant term

    const auto inputs = std::vector<std::pair<std::string, std::string>>{{"order", std::to_string(order)}};
    const unsigned long n = static_cast<unsigned long>(order);
    // closed-form counts of coefficient multiplications per algorithm
    const unsigned long convolution = (n + 1) * (n + 2) / 2;

    std::vector<OutputRecord> out;
    PowerSeries result = PowerSeries::zero(order);
    out.push_back(bench_record("fps", "mul", inputs, convolution, "coeff_ops",
                               time_ms([&] { result = fps_mul(f, g); })));
    out.push_back(bench_record("fps", "div", inputs, convolution, "coeff_ops",
                               time_ms([&] { result = fps_div(f, g); })));
    out.push_back(bench_record("fps", "log1p", inputs, n * (n + 1) / 2 + n, "coeff_ops",
                               time_ms([&] { result = fps_log1p(h); })));
    out.push_back(bench_record("fps", "exp", inputs, n * (n + 1) / 2 + n, "coeff_ops",
                               time_ms([&] { result = fps_exp(h); })));
    out.push_back(bench_record("fps", "pow", inputs, n * (n + 1) + 3 * n, "coeff_ops",
                               time_ms([&] { result = fps_pow(f, Rational(3, 2)); })));
    return out;
}

std::vector<OutputRecord> bench_bell(int n) {
    if (n < 1 || n > 40) throw std::domain_error("bench_bell: n must be in [1, 40]");
    const int k = (n + 1) / 2;
    const BellArgs xs = bell_family_args(BellFamily::halves, n, k);

    Rational value;
    BellStats stats;
    const double ms = time_ms([&] { value = bell_partial(n, k, xs, &stats); });
    if (value != bell_special(n, k, BellFamily::halves))
        throw std::logic_error("bench_bell: partition enumeration disagrees with closed form");

    return {bench_record("bell_partial", "partition-enumeration",
                         {{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                         stats.partitions, "partitions", ms)};
}

}  // namespace bstir

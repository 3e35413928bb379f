// Timing comparison of the serial reference kernels against the
// OpenMP-parallel variants. Informational only; correctness equivalence
// is covered by the test suite.
#include <chrono>
#include <cstdio>
#include <string>

#include "salcheck/kernels.hpp"
#include "salcheck/rng.hpp"
#include "salcheck/tensor.hpp"

using namespace salcheck;

namespace {

Tensor random_tensor(std::vector<int> shape, std::uint64_t seed) {
    Tensor t = Tensor::zeros(std::move(shape));
    rng::Stream s(seed, "bench");
    for (auto& v : t.data) v = s.normal(0.0, 1.0);
    return t;
}

template <typename F>
double time_ms(F&& f, int reps) {
    // one warm-up rep, then best of `reps`
    f();
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n", name.c_str(),
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    std::printf("kernel benchmark (best of 5)\n\n");

    {
        const int in = 2048, out = 2048;
        Tensor x = random_tensor({in}, 1);
        Tensor w = random_tensor({out, in}, 2);
        Tensor g = random_tensor({out}, 3);
        Tensor y = Tensor::zeros({out});
        Tensor dw = Tensor::zeros({out, in});
        double s = time_ms([&] { kernels::parallel() = false;
                                 kernels::vecmat(x.data.data(), w.data.data(), y.data.data(), in, out); }, 5);
        double p = time_ms([&] { kernels::parallel() = true;
                                 kernels::vecmat(x.data.data(), w.data.data(), y.data.data(), in, out); }, 5);
        report("vecmat 2048x2048", s, p);
        s = time_ms([&] { kernels::parallel() = false;
                          kernels::vecmat_bwd_w(g.data.data(), x.data.data(), dw.data.data(), in, out); }, 5);
        p = time_ms([&] { kernels::parallel() = true;
                          kernels::vecmat_bwd_w(g.data.data(), x.data.data(), dw.data.data(), in, out); }, 5);
        report("vecmat_bwd_w 2048x2048", s, p);
    }

    {
        const int H = 128, W = 128, C = 8, K = 16, kh = 5, kw = 5;
        Tensor x = random_tensor({C, H, W}, 4);
        Tensor w = random_tensor({K, C, kh, kw}, 5);
        Tensor g = random_tensor({K, H, W}, 6);
        Tensor y = Tensor::zeros({K, H, W});
        Tensor dx = Tensor::zeros({C, H, W});
        Tensor dw = Tensor::zeros({K, C, kh, kw});
        double s = time_ms([&] { kernels::parallel() = false;
                                 kernels::conv2d(x.data.data(), w.data.data(), y.data.data(),
                                                 C, H, W, K, kh, kw, true); }, 5);
        double p = time_ms([&] { kernels::parallel() = true;
                                 kernels::conv2d(x.data.data(), w.data.data(), y.data.data(),
                                                 C, H, W, K, kh, kw, true); }, 5);
        report("conv2d 8->16 @128x128", s, p);
        s = time_ms([&] { kernels::parallel() = false;
                          kernels::conv2d_bwd_input(g.data.data(), w.data.data(), dx.data.data(),
                                                    C, H, W, K, kh, kw, true); }, 5);
        p = time_ms([&] { kernels::parallel() = true;
                          kernels::conv2d_bwd_input(g.data.data(), w.data.data(), dx.data.data(),
                                                    C, H, W, K, kh, kw, true); }, 5);
        report("conv2d_bwd_input", s, p);
        s = time_ms([&] { kernels::parallel() = false;
                          kernels::conv2d_bwd_weights(g.data.data(), x.data.data(), dw.data.data(),
                                                      C, H, W, K, kh, kw, true); }, 5);
        p = time_ms([&] { kernels::parallel() = true;
                          kernels::conv2d_bwd_weights(g.data.data(), x.data.data(), dw.data.data(),
                                                      C, H, W, K, kh, kw, true); }, 5);
        report("conv2d_bwd_weights", s, p);
    }

    kernels::parallel() = true;
    return 0;
}

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "kernels.hpp"

using namespace rm;

// Compares the serial reference kernels against the OpenMP versions on
// random inputs and reports timings side by side.
int main() {
    std::mt19937_64 gen(12345);
    auto rnd = [&]() { return Rat((long)(gen() % 2001) - 1000, 1 + (long)(gen() % 50)); };
    std::printf("%10s %14s %14s %8s\n", "size", "serial(ms)", "parallel(ms)", "equal");
    for (std::size_t n : {256u, 512u, 1024u, 2048u}) {
        std::vector<Rat> a(n), b(n), out1(2 * n - 1), out2(2 * n - 1);
        for (auto& x : a) { x = rnd(); x.canonicalize(); }
        for (auto& x : b) { x = rnd(); x.canonicalize(); }
        auto t0 = std::chrono::steady_clock::now();
        kernels::conv_serial(a.data(), n, b.data(), n, out1.data());
        auto t1 = std::chrono::steady_clock::now();
        kernels::conv_parallel(a.data(), n, b.data(), n, out2.data());
        auto t2 = std::chrono::steady_clock::now();
        bool eq = out1 == out2;
        std::printf("%10zu %14.2f %14.2f %8s\n", n,
                    std::chrono::duration<double, std::milli>(t1 - t0).count(),
                    std::chrono::duration<double, std::milli>(t2 - t1).count(),
                    eq ? "yes" : "NO");
        if (!eq) return 1;
    }
    return 0;
}

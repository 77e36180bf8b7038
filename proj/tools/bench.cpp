#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qfock/exec.hpp"
#include "qfock/heis.hpp"
#include "qfock/tensor.hpp"
#include "qfock/uq.hpp"

using namespace qfock;

namespace {

// One timed kernel; the checksum guards against dead-code elimination and
// lets the two execution paths be compared for exact agreement.
struct Kernel {
    std::string name;
    std::function<std::size_t()> run;
};

double run_ms(const Kernel& k, std::size_t& checksum) {
    auto t0 = std::chrono::steady_clock::now();
    checksum = k.run();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

FockVec dense_vector(int n, long charge, long max_size) {
    FockVec v = fock_zero(n, charge);
    for (long s = 0; s <= max_size; ++s)
        for (const auto& head : enumerate_basis(charge, s)) v.add(head, Laurent::qpow(s % 3));
    return v;
}

}  // namespace

int main() {
    const FockVec fat2 = dense_vector(2, 0, 9);

    Rng rng(1);
    TensorVec t5 = random_tensor(rng, 2, 5, 4);

    std::vector<Kernel> kernels;
    kernels.push_back({"act: alternating F word, length 6", [&] {
                           std::vector<Gen> word;
                           for (int k = 0; k < 6; ++k) word.push_back({GenKind::F, k % 2});
                           return act_word(word, fat2).terms.size();
                       }});
    kernels.push_back({"bop: B_2 B_-2 round trip", [&] {
                           return bop(2, bop(-2, fat2)).terms.size();
                       }});
    kernels.push_back({"antisymmetrize: N=5 on 4 terms", [&] {
                           return antisymmetrize(t5).terms.size();
                       }});
    kernels.push_back({"singular: n=2 charge 0 degree 5", [&] {
                           std::size_t c = 0;
                           for (const auto& v : singular_vectors(2, 0, 5)) c += v.terms.size();
                           return c;
                       }});

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads available: %d%s\n\n", threads,
                threads == 1 ? " (expect speedup near 1x)" : "");
    std::printf("%-36s %12s %12s %9s %6s\n", "kernel", "serial (ms)", "openmp (ms)", "speedup",
                "same");

    for (const auto& k : kernels) {
        std::size_t cs, cp;
        set_exec(Exec::serial);
        run_ms(k, cs);  // warmup, so neither path is timed cold
        double ts = run_ms(k, cs);
        set_exec(Exec::openmp);
        double tp = run_ms(k, cp);
        std::printf("%-36s %12.1f %12.1f %8.2fx %6s\n", k.name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, cs == cp ? "yes" : "NO");
    }
    return 0;
}

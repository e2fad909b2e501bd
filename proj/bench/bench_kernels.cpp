// Serial vs OpenMP kernels on a few table-sized inputs.
// Usage: bench_kernels [repeats]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include "kronstab/characters.hpp"
#include "kronstab/kronecker.hpp"

using namespace kronstab;

namespace {

template <class F> double seconds(F &&f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}

int main(int argc, char **argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    std::cout << "threads: " << omp_get_max_threads() << "\n";

    const Partition shapes[][3] = {
        {Partition{13, 5, 2}, Partition{11, 5, 2, 2}, Partition{9, 4, 3, 3, 1}},
        {Partition{10, 5, 5, 5}, Partition{9, 4, 4, 4, 4}, Partition{7, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {Partition{13, 6, 6, 2, 1}, Partition{19, 5, 4}, Partition{10, 5, 5, 5, 3}},
    };

    std::cout << std::left << std::setw(44) << "kernel" << std::setw(12) << "serial s" << std::setw(12) << "omp s"
              << "speedup\n";
    for (const auto &t : shapes) {
        const int n = t[0].size();
        const auto classes = partitions_of(n);
        double serial = 0, parallel = 0;
        for (int r = 0; r < repeats; ++r) {
            CharacterCache a(n), b(n);
            serial += seconds([&] { character_vector_serial(t[2], classes, a); });
            parallel += seconds([&] { character_vector(t[2], classes, b); });
        }
        std::cout << std::setw(44) << ("character vector n=" + std::to_string(n)) << std::setw(12) << serial / repeats
                  << std::setw(12) << parallel / repeats << serial / parallel << "\n";

        mpz_class gs, gp;
        serial = parallel = 0;
        for (int r = 0; r < repeats; ++r) {
            serial += seconds([&] { gs = kron_serial(t[0], t[1], t[2]); });
            evict_character_caches();
            parallel += seconds([&] { gp = kron(t[0], t[1], t[2]); });
            evict_character_caches();
        }
        std::cout << std::setw(44) << ("kron n=" + std::to_string(n) + " (g=" + gs.get_str() + ")") << std::setw(12)
                  << serial / repeats << std::setw(12) << parallel / repeats << serial / parallel
                  << (gs == gp ? "" : "  VALUE MISMATCH") << "\n";
    }
}

// Compares the serial reference search against the OpenMP-parallel one on a
// few shapes and reports timings.
#include <cstdio>
#include <string>
#include <vector>

#include "kummer/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace kummer;

int main(int argc, char** argv) {
    std::vector<std::pair<int, int>> shapes = {{2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}};
    if (argc > 1 && std::string(argv[1]) == "--full") shapes.push_back({4, 2});

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both runs are serial\n");
#endif
    std::printf("%-8s %8s %14s %14s %10s\n", "shape", "max", "serial [s]",
                "parallel [s]", "speedup");
    for (auto [d, n] : shapes) {
        AlgebraShape shape(d, n);
        SearchConfig serial;
        serial.deterministic = true;
        const auto ref = max_kummer_dimension(shape, serial);

        SearchConfig parallel;
        const auto par = max_kummer_dimension(shape, parallel);

        if (ref.max_size != par.max_size) {
            std::printf("MISMATCH on d=%d n=%d: serial %d vs parallel %d\n", d, n,
                        ref.max_size, par.max_size);
            return 1;
        }
        std::printf("d=%d n=%d %8d %14.4f %14.4f %9.2fx\n", d, n, ref.max_size,
                    ref.elapsed_seconds, par.elapsed_seconds,
                    ref.elapsed_seconds / (par.elapsed_seconds > 0
                                               ? par.elapsed_seconds
                                               : 1e-9));
    }
    return 0;
}

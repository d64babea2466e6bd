// Timing harness: streams each generated family through the engine, the
// task-parallel driver, and (when small enough) the subset-closure reference,
// and prints a comparison table. Build with -DCMAKE_BUILD_TYPE=Release for
// meaningful numbers.

#include "facelatt/analysis.hpp"
#include "facelatt/generators.hpp"
#include "facelatt/iterator.hpp"
#include "facelatt/lattice_input.hpp"
#include "facelatt/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

using namespace facelatt;
using clk = std::chrono::steady_clock;

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

struct Case {
    std::string name;
    LatticeInput input;
    bool reference; // subset closure is exponential in n; only run it when sane
};

void run_case(const Case& c, int tasks) {
    const auto t0 = clk::now();
    const FVector serial = f_vector(c.input);
    const double serial_ms = ms_since(t0);

    const auto t1 = clk::now();
    const FVector parallel = f_vector_parallel(c.input, tasks);
    const double parallel_ms = ms_since(t1);

    double reference_ms = -1.0;
    if (c.reference) {
        const auto t2 = clk::now();
        (void)brute_force_faces(c.input);
        reference_ms = ms_since(t2);
    }

    std::printf("%-22s %10lld %12.2f %12.2f", c.name.c_str(), serial.total(), serial_ms,
                parallel_ms);
    if (c.reference)
        std::printf(" %12.2f", reference_ms);
    else
        std::printf(" %12s", "-");
    std::printf("%s\n", serial == parallel ? "" : "  ** MISMATCH **");
}

} // namespace

int main(int argc, char** argv) {
    const int tasks = argc > 1 ? std::atoi(argv[1]) : 8;
    std::vector<Case> cases;
    cases.push_back({"simplex d=10", generate("simplex", {10}).front(), true});
    cases.push_back({"hypercube d=5", generate("hypercube", {5}).front(), false});
    cases.push_back({"hypercube d=7", generate("hypercube", {7}).front(), false});
    cases.push_back({"cross_polytope d=12", generate("cross_polytope", {12}).front(), false});
    cases.push_back({"cyclic d=6 n=14", generate("cyclic", {6, 14}).front(), true});
    cases.push_back({"cyclic d=8 n=18", generate("cyclic", {8, 18}).front(), true});
    cases.push_back({"uniform_matroid 5 11", generate("uniform_matroid", {5, 11}).front(), true});
    cases.push_back({"rp2", generate("rp2", {}).front(), true});

    std::printf("%-22s %10s %12s %12s %12s   (tasks=%d)\n", "case", "faces", "serial ms",
                "parallel ms", "closure ms", tasks);
    for (const Case& c : cases) run_case(c, tasks);
    return 0;
}

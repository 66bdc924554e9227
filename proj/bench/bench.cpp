// Wall-clock comparison of the serial reference implementations against the
// OpenMP kernels. Results are checked for equality as they are timed; a
// speedup table goes to stdout.

#include "necklaces/constructors.hpp"
#include "necklaces/counting.hpp"
#include "necklaces/stat_tests.hpp"
#include "necklaces/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace necklaces;

namespace {

double timed(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool equal) {
    std::printf("%-38s %9.3f s %9.3f s   x%.2f   %s\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "results equal" : "RESULTS DIFFER");
}

} // namespace

int main() {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads available: %d\n", threads);
    std::printf("%-38s %11s %11s\n", "kernel", "serial", "parallel");

    {
        CountReport serial_rep, par_rep;
        const double s = timed([&] { serial_rep = brute_force_count_serial(2, 3, 3); });
        const double p = timed([&] { par_rep = brute_force_count(2, 3, 3); });
        row("brute-force count (2,3,3), 2^24", s, p,
            serial_rep.total == par_rep.total && serial_rep.irreducible == par_rep.irreducible);
    }

    {
        const Word w = ordered_necklace(2, 11);
        PerfectionReport serial_rep, par_rep;
        const double s = timed([&] { serial_rep = is_kn_perfect(w, 2, 11, 11); });
        const double p = timed([&] { par_rep = is_kn_perfect_parallel(w, 2, 11, 11); });
        row("verification sweep, ordered(2,11)", s, p,
            serial_rep.is_perfect == par_rep.is_perfect && serial_rep.is_perfect);
    }

    {
        const PeriodicSequence x(ordered_necklace(2, 7));
        PropositionReport serial_rep, par_rep;
        const double s = timed([&] { serial_rep = demonstrate_proposition(x, 2, 7, 7, 1); });
        const double p = timed([&] { par_rep = demonstrate_proposition(x, 2, 7, 7, 0); });
        row("indicator sweep, ordered(2,7)", s, p,
            serial_rep.ok == par_rep.ok && serial_rep.ok &&
                serial_rep.rejector == par_rep.rejector);
    }

    return 0;
}

// Compares the serial and OpenMP verification sweeps on identical work and
// checks that the reports agree byte for byte.

#include <chrono>
#include <iostream>

#include "wxz/sweep.hpp"

using namespace wxz;

namespace {

double timed(VerificationReport& out, const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    out = run_verification(Catalog::builtin(), opts);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    VerifyOptions opts;
    opts.scope = argc > 1 ? argv[1] : "wxz";
    opts.samples = argc > 2 ? std::atoi(argv[2]) : 10;
    opts.seed = 42;

    std::cout << "scope=" << opts.scope << " samples=" << opts.samples << "\n";

    VerificationReport serial_rep, parallel_rep;
    opts.parallel = false;
    double ts = timed(serial_rep, opts);
    std::cout << "serial:   " << ts << " s (" << serial_rep.entries.size() << " entries, "
              << serial_rep.total_checks << " checks)\n";

    opts.parallel = true;
    double tp = timed(parallel_rep, opts);
    std::cout << "parallel: " << tp << " s\n";
    std::cout << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n";

    if (serial_rep.to_json_text() != parallel_rep.to_json_text()) {
        std::cout << "MISMATCH: serial and parallel reports differ\n";
        return 1;
    }
    std::cout << "reports identical\n";
    return serial_rep.all_passed() && parallel_rep.all_passed() ? 0 : 1;
}

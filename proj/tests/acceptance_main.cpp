// Acceptance suite runner: executes all eleven criteria in order and prints
// one PASS/FAIL line per criterion, with supporting notes indented below.
// Exit status 0 iff every criterion passes.

#include "dcs/acceptance.hpp"

#include <cstdio>

int main() {
    const unsigned threads = dcs::resolve_thread_count(0);
    std::printf("acceptance suite: %u threads, seed %llu\n\n", threads,
                static_cast<unsigned long long>(dcs::acceptance::kDefaultSeed));

    bool all = true;
    double total = 0.0;
    for (int k = 1; k <= 11; ++k) {
        const auto run = dcs::acceptance::run_criterion(k, threads, dcs::acceptance::kDefaultSeed);
        all = all && run.pass;
        total += run.seconds;
        std::printf("criterion %2d/11  %-30s  %s  (%.1f s)\n", run.index, run.name.c_str(),
                    run.pass ? "PASS" : "FAIL", run.seconds);
        for (const auto& note : run.notes) std::printf("    - %s\n", note.c_str());
        std::fflush(stdout);
    }
    std::printf("\n%s: 11 criteria, %.1f s total\n", all ? "ALL PASS" : "FAILURES PRESENT", total);
    return all ? 0 : 1;
}

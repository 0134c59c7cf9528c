// Benchmark comparing the OpenMP kernels against the serial reference
// implementations. Every workload runs under both execution policies; the two
// results are compared for exact equality before any timing is reported, so
// the benchmark doubles as a parallelism soundness check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "weylstat/cores.hpp"
#include "weylstat/parallel.hpp"
#include "weylstat/rep.hpp"
#include "weylstat/root_system.hpp"
#include "weylstat/typea.hpp"
#include "weylstat/verifier.hpp"

using namespace weylstat;

namespace {

struct Row {
    std::string name;
    double serial_ms = 0;
    double parallel_ms = 0;
    bool equal = false;
};

/// Run body(exec), return (elapsed ms, digest). The digest is any
/// equality-comparable summary of the full result.
template <typename Body>
std::pair<double, std::string> timed(Body&& body, Exec exec) {
    const auto start = std::chrono::steady_clock::now();
    std::string digest = body(exec);
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return {ms, std::move(digest)};
}

template <typename Body>
Row bench(const std::string& name, Body&& body) {
    Row row;
    row.name = name;
    auto [serial_ms, serial_digest] = timed(body, Exec::serial);
    auto [parallel_ms, parallel_digest] = timed(body, Exec::parallel);
    row.serial_ms = serial_ms;
    row.parallel_ms = parallel_ms;
    row.equal = serial_digest == parallel_digest;
    return row;
}

std::string digest_cores(const std::vector<cores::CorePartition>& cores) {
    std::string d;
    for (const auto& c : cores) {
        d += partition_str(c.partition);
        d += '|';
    }
    return d;
}

}  // namespace

int main() {
    std::printf("weylstat benchmark: serial reference vs OpenMP kernels (%d thread%s)\n\n",
                thread_count(), thread_count() == 1 ? "" : "s");

    std::vector<Row> rows;

    rows.push_back(bench("simultaneous cores (11,12)", [](Exec exec) {
        return digest_cores(cores::simultaneous_cores(11, 12, 12, exec));
    }));

    rows.push_back(bench("ssyt enumeration (5,3,2,1) n=7", [](Exec exec) {
        const auto table = typea::enumerate_ssyt(Partition{5, 3, 2, 1}, 7, exec);
        Integer total(0);
        for (const auto& entry : table) total += entry.second;
        return total.get_str() + "/" + std::to_string(table.size());
    }));

    rows.push_back(bench("tableaux expected norm (4,3,2) n=6", [](Exec exec) {
        return typea::expected_norm_tableaux(Partition{4, 3, 2}, 6, exec).str();
    }));

    const auto b4 = RootSystem::build("B4");
    const auto b4_ws = weight_multiplicities(b4, Weight{0, 2, 0, 3}, 3000000);
    rows.push_back(bench("weight expansion B4 (0,2,0,3)", [&](Exec exec) {
        const auto expanded = b4_ws.expanded(b4, exec);
        Integer total(0);
        for (const auto& entry : expanded) total += entry.second;
        return total.get_str() + "/" + std::to_string(expanded.size());
    }));

    rows.push_back(bench("verify sweep: expected norm", [](Exec exec) {
        verifier::Options opts;
        opts.exec = exec;
        return verifier::to_jsonl(
            verifier::sweep_main_theorem(verifier::default_main_types(), 2, 20000, opts));
    }));

    rows.push_back(bench("verify sweep: cumulants, order 6", [](Exec exec) {
        verifier::Options opts;
        opts.exec = exec;
        return verifier::to_jsonl(verifier::sweep_cumulants(6, opts));
    }));

    std::printf("%-36s %12s %12s %9s %7s\n", "workload", "serial (ms)", "parallel (ms)",
                "speedup", "equal");
    bool all_equal = true;
    for (const auto& row : rows) {
        const double speedup = row.parallel_ms > 0 ? row.serial_ms / row.parallel_ms : 0.0;
        std::printf("%-36s %12.1f %12.1f %8.2fx %7s\n", row.name.c_str(), row.serial_ms,
                    row.parallel_ms, speedup, row.equal ? "yes" : "NO");
        all_equal = all_equal && row.equal;
    }
    std::printf("\nresults are exact and compared byte-for-byte between policies.\n");
    if (thread_count() == 1)
        std::printf("note: single hardware thread available, so speedup ~1.0x is expected.\n");
    if (!all_equal) {
        std::printf("error: serial and parallel results differ\n");
        return 1;
    }
    return 0;
}

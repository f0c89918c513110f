// Serial reference vs OpenMP for the two sweep kernels.
// usage: bench_sweep [dmax] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "kscroll/registry.hpp"
#include "kscroll/sweep.hpp"

using namespace kscroll;

template <class F>
double best_ms(int repeats, F&& f)
{
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

int main(int argc, char** argv)
{
    const int dmax = argc > 1 ? std::atoi(argv[1]) : 10;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    const auto triples = triples_up_to(dmax);

    bool agree = closed_form_sweep(triples, Execution::Serial) == closed_form_sweep(triples, Execution::Parallel);
    const double cs = best_ms(repeats, [&] { closed_form_sweep(triples, Execution::Serial); });
    const double cp = best_ms(repeats, [&] { closed_form_sweep(triples, Execution::Parallel); });
    std::printf("closed-form sweep, %zu triples x 5 rays: serial %.1f ms, parallel %.1f ms, speedup %.2fx\n",
                triples.size(), cs, cp, cs / cp);

    // registry padded with every triple as a user record without branch data
    Registry reg = default_registry();
    for (const auto& t : triples) {
        FamilyRecord r;
        r.id = "T" + std::to_string(t.d1) + "_" + std::to_string(t.d2) + "_" + std::to_string(t.d3);
        r.triple = t;
        r.provenance["triple"] = {"user", "benchmark padding"};
        add_record(reg, std::move(r));
    }
    const auto bs_rows = batch_verdict(reg, Execution::Serial);
    const auto bp_rows = batch_verdict(reg, Execution::Parallel);
    for (std::size_t i = 0; i < bs_rows.size(); ++i)
        agree = agree && bs_rows[i].id == bp_rows[i].id && bs_rows[i].verdict.has_value() == bp_rows[i].verdict.has_value() &&
                (!bs_rows[i].verdict || bs_rows[i].verdict->status == bp_rows[i].verdict->status);
    const double bs = best_ms(repeats, [&] { batch_verdict(reg, Execution::Serial); });
    const double bp = best_ms(repeats, [&] { batch_verdict(reg, Execution::Parallel); });
    std::printf("batch verdict, %zu records: serial %.1f ms, parallel %.1f ms, speedup %.2fx\n", reg.records.size(),
                bs, bp, bs / bp);
    std::printf("serial and parallel results %s\n", agree ? "agree" : "DIFFER");
    return agree ? 0 : 1;
}

#include "kscroll/sweep.hpp"

#include <exception>

namespace kscroll {

std::vector<ScrollTriple> triples_up_to(int dmax)
{
    std::vector<ScrollTriple> out;
    for (int d1 = 1; d1 <= dmax; ++d1)
        for (int d2 = 0; d2 <= d1; ++d2)
            for (int d3 = 0; d3 <= d2; ++d3)
                out.push_back(ScrollTriple{d1, d2, d3});
    return out;
}

namespace {

ClosedFormRow closed_form_row(const ScrollTriple& t, RayName r)
{
    return {t, r, s_toric_valuation(t, tautological(), ToricValuation::of_ray(t, r)), s_closed_form(t, r)};
}

BatchRow batch_row(const FamilyRecord& record)
{
    BatchRow row{record.id, std::nullopt, {}};
    try {
        row.verdict = full_verdict(record);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<ClosedFormRow> closed_form_sweep(const std::vector<ScrollTriple>& triples, Execution exec)
{
    const long n = static_cast<long>(triples.size()) * 5;
    std::vector<ClosedFormRow> rows(static_cast<std::size_t>(n));
    if (exec == Execution::Serial) {
        for (long k = 0; k < n; ++k)
            rows[k] = closed_form_row(triples[k / 5], kAllRays[k % 5]);
        return rows;
    }

    // Exceptions may not cross the parallel region; keep the first and rethrow.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
        try {
            rows[k] = closed_form_row(triples[k / 5], kAllRays[k % 5]);
        } catch (...) {
#pragma omp critical(kscroll_sweep_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

std::vector<BatchRow> batch_verdict(const Registry& reg, Execution exec)
{
    std::vector<const FamilyRecord*> records;
    for (const auto& [id, r] : reg.records)
        records.push_back(&r);
    const long n = static_cast<long>(records.size());
    std::vector<BatchRow> rows(records.size());
    if (exec == Execution::Serial) {
        for (long k = 0; k < n; ++k)
            rows[k] = batch_row(*records[k]);
        return rows;
    }
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k)
        rows[k] = batch_row(*records[k]);
    return rows;
}

}  // namespace kscroll

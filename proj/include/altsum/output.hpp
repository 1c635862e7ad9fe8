#ifndef ALTSUM_OUTPUT_HPP
#define ALTSUM_OUTPUT_HPP

#include <functional>
#include <string>
#include <vector>

#include "altsum/alt_engine.hpp"
#include "altsum/bounds.hpp"

namespace altsum {

/// One result row: decimal value strings with exactly d fractional digits
/// (truncated, which together with the certified bound makes the printed
/// digits correct), the plan, and run metadata.
struct OutputRecord {
    std::vector<std::pair<std::string, std::string>> values; // (re, im)
    long digits = 0;
    long m = 0;
    long c = 0;
    long d1 = 0;
    std::string bound;
    std::string engine; // "alt" | "em"
    long workers = 1;
    long elapsed_ms = 0;
    long peak_memory_bytes = 0;
};

/// Runs the computation at d1 and at d1 + 10 and requires the results to
/// agree to 10^(-d); otherwise retries once with doubled guard digits, then
/// raises accuracy_error. `run_at` must honor the working precision it is
/// given.
SumResult run_validated(const SummationPlan& plan,
                        const std::function<SumResult(long d1)>& run_at);

OutputRecord make_record(const SumResult& result, Engine engine, long workers);

std::string to_json_string(const OutputRecord& record);
std::string to_text(const OutputRecord& record);

/// Best-effort peak RSS of this process, in bytes.
long peak_memory_bytes();

} // namespace altsum

#endif

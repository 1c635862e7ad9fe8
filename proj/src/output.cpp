#include "altsum/output.hpp"

#include <cmath>
#include <sstream>

#include <sys/resource.h>

#include <json.hpp>

namespace altsum {

SumResult run_validated(const SummationPlan& plan,
                        const std::function<SumResult(long d1)>& run_at) {
    long g = plan.d1 - plan.d;
    for (int attempt = 0; attempt < 2; ++attempt) {
        long d1 = plan.d + g;
        SumResult first = run_at(d1);
        SumResult second = run_at(d1 + 10);
        BigReal gap = max_abs_diff(first.value, second.value);
        if (gap <= pow10(-plan.d, 30)) {
            first.elapsed_ms += second.elapsed_ms;
            return first;
        }
        g *= 2;
    }
    throw accuracy_error("results at d1 and d1+10 disagree past 10^-d even with doubled guard");
}

long peak_memory_bytes() {
    rusage usage{};
    if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
    return usage.ru_maxrss * 1024L; // ru_maxrss is in KiB on Linux
}

OutputRecord make_record(const SumResult& result, Engine engine, long workers) {
    OutputRecord rec;
    rec.digits = result.d;
    rec.m = result.m;
    rec.c = result.n_or_c;
    rec.d1 = result.d1;
    rec.engine = engine == Engine::alt ? "alt" : "em";
    rec.workers = workers;
    rec.elapsed_ms = static_cast<long>(std::llround(result.elapsed_ms));
    rec.peak_memory_bytes = peak_memory_bytes();
    rec.bound = result.bound ? result.bound->to_sci_string(3) : "";
    rec.values.reserve(result.value.size());
    for (const auto& z : result.value)
        rec.values.emplace_back(z.re.to_fixed_string(result.d), z.im.to_fixed_string(result.d));
    return rec;
}

std::string to_json_string(const OutputRecord& record) {
    nlohmann::json j;
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [re, im] : record.values)
        values.push_back({{"re", re}, {"im", im}});
    j["values"] = values;
    j["digits"] = record.digits;
    j["m"] = record.m;
    j["c"] = record.c;
    j["d1"] = record.d1;
    j["bound"] = record.bound;
    j["engine"] = record.engine;
    j["workers"] = record.workers;
    j["elapsed_ms"] = record.elapsed_ms;
    j["peak_memory_bytes"] = record.peak_memory_bytes;
    return j.dump();
}

std::string to_text(const OutputRecord& record) {
    std::ostringstream out;
    for (size_t i = 0; i < record.values.size(); ++i) {
        const auto& [re, im] = record.values[i];
        if (record.values.size() > 1)
            out << "value[" << i << "] = ";
        else
            out << "value = ";
        out << re;
        bool nonzero_im = im.find_first_not_of("-+0.") != std::string::npos;
        if (nonzero_im) {
            if (im[0] == '-')
                out << " - " << im.substr(1) << "i";
            else
                out << " + " << im << "i";
        }
        out << "\n";
    }
    out << "digits = " << record.digits << "  m = " << record.m << "  c = " << record.c
        << "  d1 = " << record.d1 << "\n";
    if (!record.bound.empty()) out << "bound = " << record.bound << "\n";
    out << "engine = " << record.engine << "  workers = " << record.workers
        << "  elapsed_ms = " << record.elapsed_ms
        << "  peak_memory_bytes = " << record.peak_memory_bytes << "\n";
    return out.str();
}

} // namespace altsum

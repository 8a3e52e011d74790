#include "wilsonx/scan.hpp"

#include <array>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "wilsonx/errors.hpp"
#include "wilsonx/kernels.hpp"

namespace wilsonx {

namespace {

constexpr uint64_t kChunk = 4096;

// One chunk of consecutive n, four moduli per batched kernel call.
std::vector<ScanRecord> compute_block(uint64_t c, uint64_t lo, uint64_t hi) {
    std::vector<ScanRecord> records;
    records.reserve(hi - lo + 1);
    const uint64_t width = c + 1;
    std::array<uint64_t, 4> ns{};
    std::vector<uint64_t> coeffs(4 * width);
    uint64_t n = lo;
    while (n <= hi) {
        const std::size_t lanes =
            static_cast<std::size_t>(std::min<uint64_t>(4, hi - n + 1));
        for (std::size_t l = 0; l < lanes; ++l) ns[l] = n + l;
        kernels::product_batch(ns.data(), lanes, c, coeffs.data());
        for (std::size_t l = 0; l < lanes; ++l)
            records.push_back(record_from_s(ns[l], c, coeffs[l * width + c]));
        n += lanes;
    }
    return records;
}

bool is_violation(const ScanRecord& rec) {
    return rec.agrees_with_theory.has_value() && !*rec.agrees_with_theory;
}

uint64_t parse_u64_strict(const std::string& field, const char* what) {
    if (field.empty())
        throw usage_error(std::string(what) + ": empty numeric field");
    uint64_t value = 0;
    for (char ch : field) {
        if (ch < '0' || ch > '9')
            throw usage_error(std::string(what) + ": not a decimal integer: '" +
                              field + "'");
        const uint64_t digit = static_cast<uint64_t>(ch - '0');
        if (value > (UINT64_MAX - digit) / 10)
            throw usage_error(std::string(what) + ": out of range: '" + field +
                              "'");
        value = value * 10 + digit;
    }
    return value;
}

bool parse_bool_strict(const std::string& field, const char* what) {
    if (field == "true") return true;
    if (field == "false") return false;
    throw usage_error(std::string(what) + ": expected true/false, got '" +
                      field + "'");
}

const char* form_name(const Classification& cls) {
    return cls.kind == FormKind::c_plus_one_times_prime ? "(c+1)p" : "other";
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json-lines") return OutputFormat::json_lines;
    throw usage_error("unknown output format '" + name +
                      "' (expected table, csv or json-lines)");
}

void accumulate(ScanSummary& summary, const ScanRecord& record) {
    ++summary.rows;
    if (record.criterion_passes)
        ++summary.hits;
    else
        ++summary.misses;
    if (!record.classification.applicable) ++summary.not_applicable;
    if (is_violation(record)) ++summary.violations;
}

ScanSummary scan_range(const ScanConfig& config,
                       const std::function<void(const ScanRecord&)>& sink) {
    checked_modulus(config.n_lo);
    checked_modulus(config.n_hi);
    if (config.n_lo > config.n_hi)
        throw usage_error("scan: require n_lo <= n_hi");
    if (config.c > config.n_lo - 2)
        throw usage_error("scan: require c <= n_lo - 2");

    const uint64_t total = config.n_hi - config.n_lo + 1;
    const uint64_t num_chunks = (total + kChunk - 1) / kChunk;
    const unsigned jobs =
        static_cast<unsigned>(std::min<uint64_t>(std::max(1u, config.jobs),
                                                 num_chunks));
    auto chunk_lo = [&](uint64_t chunk) { return config.n_lo + chunk * kChunk; };
    auto chunk_hi = [&](uint64_t chunk) {
        return std::min(config.n_hi, chunk_lo(chunk) + kChunk - 1);
    };

    ScanSummary summary;
    // Returns true when emission must stop (fail-fast hit a violation).
    auto emit = [&](const ScanRecord& rec) {
        sink(rec);
        accumulate(summary, rec);
        return config.fail_fast && is_violation(rec);
    };

    if (jobs <= 1) {
        for (uint64_t chunk = 0; chunk < num_chunks; ++chunk)
            for (const ScanRecord& rec :
                 compute_block(config.c, chunk_lo(chunk), chunk_hi(chunk)))
                if (emit(rec)) return summary;
        return summary;
    }

    // Chunk w, w+jobs, w+2*jobs, ... belongs to worker w; the main thread
    // emits chunks in index order, so output never depends on scheduling.
    std::map<uint64_t, std::vector<ScanRecord>> ready;
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<bool> stop{false};

    auto worker = [&](unsigned w) {
        for (uint64_t chunk = w; chunk < num_chunks; chunk += jobs) {
            if (stop.load(std::memory_order_relaxed)) return;
            auto records = compute_block(config.c, chunk_lo(chunk), chunk_hi(chunk));
            {
                std::lock_guard lock(mu);
                ready.emplace(chunk, std::move(records));
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);

    bool stopped = false;
    for (uint64_t chunk = 0; chunk < num_chunks && !stopped; ++chunk) {
        std::vector<ScanRecord> records;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return ready.count(chunk) != 0; });
            records = std::move(ready.at(chunk));
            ready.erase(chunk);
        }
        for (const ScanRecord& rec : records)
            if (emit(rec)) {
                stopped = true;
                break;
            }
    }
    stop.store(true);
    for (auto& t : threads) t.join();
    return summary;
}

std::string csv_header() {
    return "n,c,s_mod_n,criterion_mod_n,form,p,applicable,passes,agrees";
}

std::string format_record_csv(const ScanRecord& rec) {
    std::ostringstream out;
    out << rec.n << ',' << rec.c << ',' << rec.s_mod_n << ','
        << rec.criterion_mod_n << ',' << form_name(rec.classification) << ',';
    if (rec.classification.kind == FormKind::c_plus_one_times_prime)
        out << rec.classification.p;
    out << ',' << (rec.classification.applicable ? "true" : "false") << ','
        << (rec.criterion_passes ? "true" : "false") << ',';
    if (rec.agrees_with_theory.has_value())
        out << (*rec.agrees_with_theory ? "true" : "false");
    return out.str();
}

std::string format_record_json(const ScanRecord& rec) {
    nlohmann::ordered_json row;
    row["n"] = rec.n;
    row["c"] = rec.c;
    row["s_mod_n"] = rec.s_mod_n;
    row["criterion_mod_n"] = rec.criterion_mod_n;
    row["form"] = form_name(rec.classification);
    if (rec.classification.kind == FormKind::c_plus_one_times_prime)
        row["p"] = rec.classification.p;
    else
        row["p"] = nullptr;
    row["applicable"] = rec.classification.applicable;
    row["passes"] = rec.criterion_passes;
    if (rec.agrees_with_theory.has_value())
        row["agrees"] = *rec.agrees_with_theory;
    else
        row["agrees"] = nullptr;
    return row.dump();
}

namespace {

constexpr int kWidthN = 10;
constexpr int kWidthC = 4;
constexpr int kWidthRes = 16;
constexpr int kWidthForm = 8;
constexpr int kWidthP = 10;
constexpr int kWidthFlag = 11;

}  // namespace

std::string table_header() {
    std::ostringstream out;
    out << std::setw(kWidthN) << "n" << std::setw(kWidthC) << "c"
        << std::setw(kWidthRes) << "s_mod_n" << std::setw(kWidthRes)
        << "criterion_mod_n" << std::setw(kWidthForm) << "form"
        << std::setw(kWidthP) << "p" << std::setw(kWidthFlag) << "applicable"
        << std::setw(kWidthFlag) << "passes" << std::setw(kWidthFlag)
        << "agrees";
    return out.str();
}

std::string format_record_table(const ScanRecord& rec) {
    std::ostringstream out;
    out << std::setw(kWidthN) << rec.n << std::setw(kWidthC) << rec.c
        << std::setw(kWidthRes) << rec.s_mod_n << std::setw(kWidthRes)
        << rec.criterion_mod_n << std::setw(kWidthForm)
        << form_name(rec.classification) << std::setw(kWidthP);
    if (rec.classification.kind == FormKind::c_plus_one_times_prime)
        out << rec.classification.p;
    else
        out << "-";
    out << std::setw(kWidthFlag)
        << (rec.classification.applicable ? "true" : "false")
        << std::setw(kWidthFlag) << (rec.criterion_passes ? "true" : "false")
        << std::setw(kWidthFlag);
    if (rec.agrees_with_theory.has_value())
        out << (*rec.agrees_with_theory ? "true" : "false");
    else
        out << "-";
    return out.str();
}

std::string format_summary(const ScanSummary& summary) {
    std::ostringstream out;
    out << "rows=" << summary.rows << " hits=" << summary.hits
        << " misses=" << summary.misses
        << " not_applicable=" << summary.not_applicable
        << " violations=" << summary.violations;
    return out.str();
}

ScanRecord parse_record_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(current);
    if (fields.size() != 9)
        throw usage_error("csv record: expected 9 fields, got " +
                          std::to_string(fields.size()));

    ScanRecord rec;
    rec.n = parse_u64_strict(fields[0], "csv n");
    rec.c = parse_u64_strict(fields[1], "csv c");
    rec.s_mod_n = parse_u64_strict(fields[2], "csv s_mod_n");
    rec.criterion_mod_n = parse_u64_strict(fields[3], "csv criterion_mod_n");
    if (fields[4] == "(c+1)p")
        rec.classification.kind = FormKind::c_plus_one_times_prime;
    else if (fields[4] == "other")
        rec.classification.kind = FormKind::other;
    else
        throw usage_error("csv form: unknown value '" + fields[4] + "'");
    rec.classification.p =
        fields[5].empty() ? 0 : parse_u64_strict(fields[5], "csv p");
    rec.classification.applicable = parse_bool_strict(fields[6], "csv applicable");
    rec.criterion_passes = parse_bool_strict(fields[7], "csv passes");
    if (!fields[8].empty())
        rec.agrees_with_theory = parse_bool_strict(fields[8], "csv agrees");
    return rec;
}

ScanRecord parse_record_json(const std::string& line) {
    nlohmann::json row;
    try {
        row = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw usage_error(std::string("json record: ") + e.what());
    }
    ScanRecord rec;
    rec.n = row.at("n").get<uint64_t>();
    rec.c = row.at("c").get<uint64_t>();
    rec.s_mod_n = row.at("s_mod_n").get<uint64_t>();
    rec.criterion_mod_n = row.at("criterion_mod_n").get<uint64_t>();
    const std::string form = row.at("form").get<std::string>();
    if (form == "(c+1)p")
        rec.classification.kind = FormKind::c_plus_one_times_prime;
    else if (form == "other")
        rec.classification.kind = FormKind::other;
    else
        throw usage_error("json form: unknown value '" + form + "'");
    rec.classification.p =
        row.at("p").is_null() ? 0 : row.at("p").get<uint64_t>();
    rec.classification.applicable = row.at("applicable").get<bool>();
    rec.criterion_passes = row.at("passes").get<bool>();
    if (!row.at("agrees").is_null())
        rec.agrees_with_theory = row.at("agrees").get<bool>();
    return rec;
}

}  // namespace wilsonx

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wilsonx/core.hpp"
#include "wilsonx/errors.hpp"
#include "wilsonx/kernels.hpp"
#include "wilsonx/numtheory.hpp"
#include "wilsonx/scan.hpp"

#include <chrono>

namespace {

using namespace wilsonx;

// Decimal nonnegative integers only — no 2^62, no 1e6, no hex. Keeps runs
// bit-for-bit reproducible from shell history.
uint64_t parse_u64(const std::string& text, const std::string& flag) {
    if (text.empty()) throw usage_error(flag + ": empty value");
    uint64_t value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw usage_error(flag + ": expected a decimal nonnegative integer, got '" +
                              text + "'");
        const uint64_t digit = static_cast<uint64_t>(ch - '0');
        if (value > (UINT64_MAX - digit) / 10)
            throw usage_error(flag + ": value out of 64-bit range: '" + text + "'");
        value = value * 10 + digit;
    }
    return value;
}

unsigned resolve_jobs(const std::string& jobs_flag) {
    std::string text = jobs_flag;
    if (text.empty()) {
        const char* env = std::getenv("WILSONX_JOBS");
        if (env != nullptr && *env != '\0') text = env;
    }
    if (text.empty()) return 1;
    const uint64_t jobs = parse_u64(text, "--jobs");
    if (jobs == 0 || jobs > 1024) throw usage_error("--jobs: need 1..1024");
    return static_cast<unsigned>(jobs);
}

void print_record(const ScanRecord& rec, OutputFormat format, bool with_header) {
    switch (format) {
        case OutputFormat::table:
            if (with_header) std::cout << table_header() << '\n';
            std::cout << format_record_table(rec) << '\n';
            break;
        case OutputFormat::csv:
            if (with_header) std::cout << csv_header() << '\n';
            std::cout << format_record_csv(rec) << '\n';
            break;
        case OutputFormat::json_lines:
            std::cout << format_record_json(rec) << '\n';
            break;
    }
}

int cmd_check(uint64_t n, uint64_t c, OutputFormat format) {
    const ScanRecord rec = criterion_verdict(n, c);  // throws on violation
    print_record(rec, format, true);
    return 0;
}

int cmd_scan(const ScanConfig& config) {
    if (config.format == OutputFormat::table)
        std::cout << table_header() << '\n';
    else if (config.format == OutputFormat::csv)
        std::cout << csv_header() << '\n';
    const ScanSummary summary = scan_range(config, [&](const ScanRecord& rec) {
        print_record(rec, config.format, false);
    });
    std::cerr << format_summary(summary) << '\n';
    return summary.violations > 0 ? 2 : 0;
}

int cmd_oracle(uint64_t n_max) {
    if (n_max > kEnumerationBound)
        throw refusal_error("oracle: --max exceeds enumeration bound " +
                            std::to_string(kEnumerationBound));
    if (n_max < 2) throw usage_error("oracle: --max must be at least 2");

    uint64_t checks = 0;
    for (uint64_t n = 2; n <= n_max; ++n) {
        for (uint64_t k = 0; k < n; ++k) {
            const Residue fast = elem_sym_sum_mod(n, k);
            const Residue slow = brute_force_sum(n, k);
            ++checks;
            if (fast != slow) {
                std::cerr << "oracle disagreement at n=" << n << " k=" << k
                          << ": fast=" << fast.value()
                          << " enumerated=" << slow.value() << '\n';
                return 2;
            }
        }
        for (uint64_t c = 0; c < n; ++c) {
            ++checks;
            if (!complement_identity_check(n, c)) {
                std::cerr << "complement identity failed at n=" << n
                          << " c=" << c << '\n';
                return 2;
            }
            for (const PrimePower& pp : prime_power_decompose(n)) {
                ++checks;
                if (!eq3_congruence_check(n, c, pp.p)) {
                    std::cerr << "restricted congruence failed at n=" << n
                              << " c=" << c << " p=" << pp.p << '\n';
                    return 2;
                }
            }
        }
    }
    std::cout << "oracle: all " << checks << " checks agree for n <= " << n_max
              << '\n';
    return 0;
}

int cmd_lemmas(uint64_t n_max, uint64_t p_max) {
    uint64_t violations = 0;

    uint64_t lemma1_count = 0;
    for (uint64_t n = 25; n <= n_max; ++n) {
        ++lemma1_count;
        const LemmaCheck chk = lemma1_holds(n);
        if (!chk.holds) {
            std::cerr << "lemma1 violated at n=" << n << " (lhs=" << chk.lhs
                      << " rhs=" << chk.rhs << ")\n";
            ++violations;
        }
    }
    std::cout << "lemma1: " << lemma1_count << " values of n in [25, "
              << n_max << "] checked\n";

    uint64_t lemma2_count = 0;
    for (uint64_t n = 9; n <= n_max; ++n) {
        for (uint64_t p = 3; p * p <= n; p += 2) {
            if (!is_prime(p)) continue;
            ++lemma2_count;
            const LemmaCheck chk = lemma2_holds(n, p);
            if (!chk.holds) {
                std::cerr << "lemma2 violated at n=" << n << " p=" << p
                          << " (lhs=" << chk.lhs << " rhs=" << chk.rhs << ")\n";
                ++violations;
            }
        }
    }
    std::cout << "lemma2: " << lemma2_count << " pairs (n, p) with n <= "
              << n_max << ", 3 <= p <= sqrt(n) checked\n";

    uint64_t ff_count = 0;
    for (uint64_t p : primes_up_to(p_max)) {
        ++ff_count;
        if (!falling_factorial_congruence_check(p)) {
            std::cerr << "falling-factorial congruence violated at p=" << p
                      << '\n';
            ++violations;
        }
    }
    std::cout << "falling-factorial congruence: " << ff_count
              << " primes p <= " << p_max << " checked\n";

    if (violations > 0) {
        std::cerr << violations << " checker violation(s)\n";
        return 2;
    }
    return 0;
}

int cmd_bench(uint64_t n, uint64_t c, uint64_t reps) {
    if (reps == 0) throw usage_error("--reps: need at least 1");
    if (c > n - 1) throw usage_error("bench: require c <= n-1");

    const char* backend = kernels::backend_name(n, c);
    uint64_t ops = 0;
    uint64_t s_mod_n = 0;
    double best = 0.0, total = 0.0;
    for (uint64_t r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const TruncatedPoly poly = truncated_shifted_product(n, c, &ops);
        const auto end = std::chrono::steady_clock::now();
        const double secs = std::chrono::duration<double>(end - start).count();
        total += secs;
        if (r == 0 || secs < best) best = secs;
        s_mod_n = poly.coeff(c).value();
    }
    const double mean = total / static_cast<double>(reps);
    std::cout << "n=" << n << " c=" << c << " backend=" << backend
              << " reps=" << reps << " s_mod_n=" << s_mod_n << '\n';
    std::cout << "multiply_adds=" << ops << " per run\n";
    std::cout << "best=" << best << "s mean=" << mean << "s ("
              << (best > 0 ? static_cast<double>(ops) / best / 1e6 : 0.0)
              << " M ops/s)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended Wilson criterion toolkit"};
    app.require_subcommand(1);

    std::string n_str, c_str = "0", from_str, to_str, max_str;
    std::string n_max_str = "10000", p_max_str = "97", reps_str = "3";
    std::string format_str = "table", jobs_str;
    bool fail_fast = false;

    CLI::App* check = app.add_subcommand(
        "check", "evaluate the criterion for a single (n, c)");
    check->add_option("--n", n_str, "modulus n >= 2")->required();
    check->add_option("--c", c_str, "co-size parameter c (default 0)");
    check->add_option("--format", format_str, "table, csv or json-lines");

    CLI::App* scan = app.add_subcommand(
        "scan", "evaluate the criterion for every n in a range");
    scan->add_option("--c", c_str, "co-size parameter c (default 0)");
    scan->add_option("--from", from_str, "first n (inclusive)")->required();
    scan->add_option("--to", to_str, "last n (inclusive)")->required();
    scan->add_option("--format", format_str, "table, csv or json-lines");
    scan->add_option("--jobs", jobs_str,
                     "worker threads (default WILSONX_JOBS or 1)");
    scan->add_flag("--fail-fast", fail_fast,
                   "stop at the first theory violation");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "cross-check fast sums against subset enumeration");
    oracle->add_option("--max", max_str, "largest n to enumerate (<= 16)")
        ->required();

    CLI::App* lemmas = app.add_subcommand(
        "lemmas", "sweep the inequality and congruence checkers");
    lemmas->add_option("--n-max", n_max_str, "inequality sweep bound (default 10000)");
    lemmas->add_option("--p-max", p_max_str, "congruence prime bound (default 97)");

    CLI::App* bench = app.add_subcommand(
        "bench", "time the truncated-product kernel");
    bench->add_option("--n", n_str, "modulus n >= 2")->required();
    bench->add_option("--c", c_str, "co-size parameter c (default 0)");
    bench->add_option("--reps", reps_str, "repetitions (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(check))
            return cmd_check(parse_u64(n_str, "--n"), parse_u64(c_str, "--c"),
                             parse_output_format(format_str));
        if (app.got_subcommand(scan)) {
            ScanConfig config;
            config.c = parse_u64(c_str, "--c");
            config.n_lo = parse_u64(from_str, "--from");
            config.n_hi = parse_u64(to_str, "--to");
            config.format = parse_output_format(format_str);
            config.jobs = resolve_jobs(jobs_str);
            config.fail_fast = fail_fast;
            return cmd_scan(config);
        }
        if (app.got_subcommand(oracle))
            return cmd_oracle(parse_u64(max_str, "--max"));
        if (app.got_subcommand(lemmas))
            return cmd_lemmas(parse_u64(n_max_str, "--n-max"),
                              parse_u64(p_max_str, "--p-max"));
        if (app.got_subcommand(bench))
            return cmd_bench(parse_u64(n_str, "--n"), parse_u64(c_str, "--c"),
                             parse_u64(reps_str, "--reps"));
    } catch (const theory_violation& e) {
        std::cerr << "theory violation: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

// sgt: symmetry of numerical semigroups generated by Fibonacci and Lucas
// triples. Subcommands: analyze (one triple), sweep (all triples up to an
// index ceiling), verify (sweep + formula/oracle discrepancy report).
//
// Exit codes: 0 success, 1 verified discrepancies, 2 usage error,
// 3 internal inconsistency (formula and sieve disagree).

#include "sgt/sgt.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace sgt;

constexpr std::uint64_t kDefaultCeiling = 1'000'000;
constexpr std::uint64_t kMinCeiling = 1'000;

std::uint64_t default_ceiling() {
    if (const char* env = std::getenv("SGT_CONDUCTOR_CEILING")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("SGT_CONDUCTOR_CEILING",
                                       "not a valid integer: " + std::string(env));
        }
    }
    return kDefaultCeiling;
}

void emit(const std::string& doc, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << doc;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot open output file: " + output_path);
    out << doc;
}

unsigned default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 8u);
}

struct CommonOpts {
    std::string family = "fibonacci";
    std::string format = "text";
    std::string output_path;
    std::uint64_t conductor_ceiling = kDefaultCeiling;
    bool no_oracle = false;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_family_raw) {
    auto families = with_family_raw ? std::vector<std::string>{"fibonacci", "lucas", "raw"}
                                    : std::vector<std::string>{"fibonacci", "lucas"};
    cmd->add_option("--family", opt.family, "generator family")
        ->check(CLI::IsMember(families));
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("-o,--output", opt.output_path, "write the document to a file");
    cmd->add_option("--conductor-ceiling", opt.conductor_ceiling,
                    "largest conductor the sieve will attempt")
        ->default_val(default_ceiling());
    cmd->add_flag("--no-oracle", opt.no_oracle, "skip the brute-force cross-check");
}

json sweep_summary(const std::vector<AnalyzedTriple>& rows) {
    std::map<std::string, int> by_status, by_oracle;
    for (const auto& row : rows) {
        ++by_status[to_string(row.verdict.status)];
        ++by_oracle[to_string(row.oracle.outcome)];
    }
    return json{{"rows", rows.size()}, {"status", by_status}, {"oracle", by_oracle}};
}

std::string triple_label(const Verdict& v) {
    std::ostringstream os;
    os << to_string(v.family) << "(" << v.indices[0] << "," << v.indices[1] << ","
       << v.indices[2] << ")";
    return os.str();
}

BigNat parse_bignat(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw invalid_generators("not a nonnegative integer: " + s);
    return BigNat(s);
}

int run_analyze(const CommonOpts& opt, const std::vector<std::string>& args, bool raw_flag) {
    SweepOptions sopt{opt.conductor_ceiling, !opt.no_oracle, 1};
    AnalyzedTriple row;
    if (raw_flag || opt.family == "raw") {
        std::array<BigNat, 3> vals;
        for (int i = 0; i < 3; ++i) vals[i] = parse_bignat(args[i]);
        row = analyze_raw(vals, sopt);
    } else {
        std::array<SeqIndex, 3> idx{};
        for (int i = 0; i < 3; ++i) {
            BigNat v = parse_bignat(args[i]);
            if (v == 0 || v > 100'000) throw invalid_generators("index out of range: " + args[i]);
            idx[i] = static_cast<SeqIndex>(to_u64(v));
        }
        auto t = IndexTriple::make(family_from_string(opt.family), idx[0], idx[1], idx[2]);
        row = analyze_triple(t, sopt);
    }

    std::string doc;
    if (opt.format == "json")
        doc = to_json(row).dump(2) + "\n";
    else if (opt.format == "csv")
        doc = csv_header() + "\n" + to_csv_row(row) + "\n";
    else
        doc = render_text(row);
    emit(doc, opt.output_path);

    if (row.oracle.outcome == OracleOutcome::mismatch) {
        std::cerr << "internal inconsistency: formula and sieve disagree: " << row.oracle.note
                  << "\n";
        return 3;
    }
    return 0;
}

int run_sweep(const CommonOpts& opt, SeqIndex max_index) {
    SweepOptions sopt{opt.conductor_ceiling, !opt.no_oracle, opt.jobs};
    auto rows = sweep(family_from_string(opt.family), max_index, sopt);

    std::string doc;
    if (opt.format == "json") {
        json j;
        j["family"] = opt.family;
        j["max_index"] = max_index;
        j["rows"] = json::array();
        for (const auto& row : rows) j["rows"].push_back(to_json(row));
        j["summary"] = sweep_summary(rows);
        doc = j.dump(2) + "\n";
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << csv_header() << "\n";
        for (const auto& row : rows) os << to_csv_row(row) << "\n";
        doc = os.str();
    } else {
        std::ostringstream os;
        os << csv_header() << "\n";
        for (const auto& row : rows) os << to_csv_row(row) << "\n";
        os << "# " << sweep_summary(rows).dump() << "\n";
        doc = os.str();
    }
    emit(doc, opt.output_path);

    for (const auto& row : rows) {
        if (row.oracle.outcome == OracleOutcome::mismatch) {
            std::cerr << "internal inconsistency at " << triple_label(row.verdict) << ": "
                      << row.oracle.note << "\n";
            return 3;
        }
    }
    return 0;
}

int run_verify(const CommonOpts& opt, SeqIndex max_index) {
    SweepOptions sopt{opt.conductor_ceiling, true, opt.jobs};
    auto rows = sweep(family_from_string(opt.family), max_index, sopt);

    std::vector<const AnalyzedTriple*> discrepancies;
    std::size_t confirmed = 0, infeasible = 0, skipped = 0;
    for (const auto& row : rows) {
        switch (row.oracle.outcome) {
            case OracleOutcome::mismatch: discrepancies.push_back(&row); break;
            case OracleOutcome::confirmed: ++confirmed; break;
            case OracleOutcome::infeasible: ++infeasible; break;
            default: ++skipped; break;
        }
    }

    std::string doc;
    if (opt.format == "json") {
        json j;
        j["family"] = opt.family;
        j["max_index"] = max_index;
        j["confirmed"] = confirmed;
        j["infeasible_skipped"] = infeasible;
        j["not_applicable"] = skipped;
        j["discrepancies"] = json::array();
        for (const auto* d : discrepancies) j["discrepancies"].push_back(to_json(*d));
        doc = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& row : rows) {
            if (row.oracle.outcome == OracleOutcome::infeasible)
                os << triple_label(row.verdict) << ": skipped (" << row.oracle.note << ")\n";
        }
        for (const auto* d : discrepancies)
            os << "DISCREPANCY " << triple_label(d->verdict) << ": " << d->oracle.note << "\n";
        os << "verified " << confirmed << " triple(s) against the sieve, " << infeasible
           << " infeasible, " << skipped << " not applicable, " << discrepancies.size()
           << " discrepancies\n";
        doc = os.str();
    }
    emit(doc, opt.output_path);
    return discrepancies.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric numerical semigroups from Fibonacci and Lucas triples"};
    app.require_subcommand(1);

    CommonOpts aopt, sopt_, vopt;
    std::vector<std::string> analyze_args;
    bool raw_flag = false;
    SeqIndex sweep_max = 0, verify_max = 0;

    auto* analyze = app.add_subcommand("analyze", "classify a single triple");
    add_common(analyze, aopt, true);
    analyze->add_flag("--raw", raw_flag, "treat the arguments as raw generator values");
    analyze->add_option("values", analyze_args, "three indices (or raw generators)")
        ->expected(3)
        ->required();

    auto* sw = app.add_subcommand("sweep", "classify every triple up to an index ceiling");
    add_common(sw, sopt_, false);
    sw->add_option("--max-index", sweep_max, "largest sequence index")
        ->check(CLI::Range(3, 64))
        ->required();
    sw->add_option("--jobs", sopt_.jobs, "worker threads")->default_val(default_jobs());

    auto* verify = app.add_subcommand("verify", "sweep and report formula/oracle discrepancies");
    add_common(verify, vopt, false);
    verify->add_option("--max-index", verify_max, "largest sequence index")
        ->check(CLI::Range(3, 64))
        ->required();
    verify->add_option("--jobs", vopt.jobs, "worker threads")->default_val(default_jobs());

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const CommonOpts& opt = analyze->parsed() ? aopt : sw->parsed() ? sopt_ : vopt;
        if (opt.conductor_ceiling < kMinCeiling) {
            std::cerr << "conductor ceiling must be at least " << kMinCeiling << "\n";
            return 2;
        }
        if (analyze->parsed()) return run_analyze(aopt, analyze_args, raw_flag);
        if (sw->parsed()) return run_sweep(sopt_, sweep_max);
        return run_verify(vopt, verify_max);
    } catch (const invalid_generators& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

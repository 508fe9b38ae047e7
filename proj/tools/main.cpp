#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "balcube/construction.hpp"
#include "balcube/oracle.hpp"
#include "balcube/serialize.hpp"

namespace {

using namespace balcube;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Writes the data stream to stdout and, when --out is given, the identical
// bytes to a file. Construct at n near 30 emits gigabytes, so output is
// streamed, never accumulated.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
        }
    }

    Sink& operator<<(const std::string& s) { return write(s.data(), s.size()); }
    Sink& operator<<(const char* s) { return write(s, std::char_traits<char>::length(s)); }
    Sink& operator<<(char c) { return write(&c, 1); }
    Sink& operator<<(std::uint64_t v) { return *this << std::to_string(v); }
    Sink& operator<<(int v) { return *this << std::to_string(v); }

private:
    Sink& write(const char* data, std::size_t size) {
        std::cout.write(data, static_cast<std::streamsize>(size));
        if (file_.is_open()) file_.write(data, static_cast<std::streamsize>(size));
        return *this;
    }

    std::ofstream file_;
};

// "7" or "4..7" (inclusive)
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("range is empty");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "': expected N or LO..HI");
    }
}

void emit_set_text(Sink& sink, VertexSet x) { sink << ' ' << to_string(x); }

void emit_set_json(Sink& sink, VertexSet x, bool hex, bool& first) {
    if (!first) sink << ',';
    first = false;
    if (hex) {
        sink << '"' << to_hex(x) << '"';
        return;
    }
    sink << '[';
    bool first_element = true;
    for (std::uint64_t b = x.bits; b != 0; b &= b - 1) {
        if (!first_element) sink << ',';
        first_element = false;
        sink << std::to_string(std::countr_zero(b) + 1);
    }
    sink << ']';
}

int run_construct(Sink& sink, int n, const std::string& format) {
    const PairStream pair(n);
    const Count size = checked_add(pair.even_count(), pair.odd_count());
    if (format == "text") {
        sink << "n=" << pair.n() << " case=" << pair.residue() << " size=" << size
             << " |A|=" << pair.even_count() << " |B|=" << pair.odd_count() << '\n';
        sink << "A:";
        pair.each_even([&](VertexSet x) { emit_set_text(sink, x); });
        sink << "\nB:";
        pair.each_odd([&](VertexSet x) { emit_set_text(sink, x); });
        sink << '\n';
    } else {
        // same bytes nlohmann would produce for this document, but streamed
        const bool hex = format == "hex";
        sink << "{\"n\":" << pair.n() << ",\"case\":" << pair.residue() << ",\"A\":[";
        bool first = true;
        pair.each_even([&](VertexSet x) { emit_set_json(sink, x, hex, first); });
        sink << "],\"B\":[";
        first = true;
        pair.each_odd([&](VertexSet x) { emit_set_json(sink, x, hex, first); });
        sink << "],\"size\":" << size << "}\n";
    }
    return kExitPass;
}

int run_verify(Sink& sink, const std::string& range, const std::string& format) {
    const auto [lo, hi] = parse_range(range);
    int exit_code = kExitPass;
    Json reports = Json::array();
    for (int n = lo; n <= hi; ++n) {
        const VerificationReport report = verify_pair(n);
        if (!report.all_pass()) exit_code = kExitCheckFailed;
        if (format == "json")
            reports.push_back(report_to_json(report));
        else
            sink << render_text(report);
    }
    if (format == "json") sink << reports.dump() << '\n';
    return exit_code;
}

int run_oracle(Sink& sink, int n, const std::string& method, int jobs, bool witness, const std::string& format) {
    std::vector<SearchResult> results;
    if (method == "exhaustive" || method == "both") results.push_back(max_balanced_exhaustive(n, jobs));
    if (method == "segment" || method == "both") results.push_back(max_balanced_segment(n));
    const Count formula = extremal_size(n);

    int exit_code = kExitPass;
    Json lines = Json::array();
    for (const SearchResult& r : results) {
        const bool match = r.optimum == formula;
        if (!match) exit_code = kExitCheckFailed;
        if (format == "json") {
            Json j = search_to_json(r, false);
            j["formula"] = formula;
            j["match"] = match;
            if (witness) j["witness"] = family_members_json(r.witness);
            lines.push_back(std::move(j));
        } else {
            sink << "oracle n=" << r.n << " method=" << r.method << " optimum=" << r.optimum
                 << " formula=" << formula << (match ? " : match" : " : MISMATCH") << '\n';
            if (witness) {
                sink << "witness:";
                for (VertexSet x : r.witness) emit_set_text(sink, x);
                sink << '\n';
            }
        }
    }
    if (format == "json") sink << lines.dump() << '\n';
    return exit_code;
}

int run_isocheck(Sink& sink, int n, const std::string& m_text, bool terminal, Count samples, bool have_samples,
                 std::uint64_t seed, bool have_seed, int jobs, const std::string& format) {
    VerificationReport report;
    if (terminal) {
        report = check_terminal_property(n);
    } else if (m_text.empty()) {
        throw std::invalid_argument("isocheck: give --m (or --terminal)");
    } else if (have_samples) {
        if (!have_seed) throw std::invalid_argument("isocheck: --samples needs --seed for a reproducible stream");
        if (m_text == "all") throw std::invalid_argument("isocheck: sampled runs need a concrete --m");
        report = check_isoperimetry_sampled(n, std::stoull(m_text), samples, seed, jobs);
    } else if (m_text == "all") {
        report.subject = "isoperimetry_exhaustive n=" + std::to_string(n) + " (all m)";
        for (Count m = 0; m <= parity_class_size(n); ++m) {
            VerificationReport one = check_isoperimetry_exhaustive(n, m, jobs);
            for (auto& check : one.checks) report.checks.push_back(std::move(check));
        }
    } else {
        report = check_isoperimetry_exhaustive(n, std::stoull(m_text), jobs);
    }

    if (format == "json")
        sink << report_to_json(report).dump() << '\n';
    else
        sink << render_text(report);
    return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_table(Sink& sink, int max_n) {
    if (max_n < 1 || max_n > 63) throw std::out_of_range("table: --max-n outside [1,63]");
    sink << "n\tcase\tsize\thalf\n";
    for (int n = 1; n <= max_n; ++n) {
        const PairCounts counts = pair_counts(n);
        sink << n << '\t' << (n % 4) << '\t' << extremal_size(n) << '\t' << counts.even_half << '\n';
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"maximum balanced independent sets in the discrete cube Q_n: construction, verification, oracles"};
    app.require_subcommand(1);

    int construct_n = 0;
    std::string construct_format = "text";
    std::string construct_out;
    auto* construct = app.add_subcommand("construct", "emit the extremal pair for one n");
    construct->add_option("--n", construct_n, "ground size, 1..30")->required();
    construct->add_option("--format", construct_format, "text | json | hex")
        ->check(CLI::IsMember({"text", "json", "hex"}));
    construct->add_option("--out", construct_out, "also write the output bytes to FILE");

    std::string verify_range;
    std::string verify_format = "text";
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "check every claim about the constructed pair");
    verify->add_option("--n", verify_range, "ground size or inclusive range, e.g. 7 or 4..7")->required();
    verify->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", verify_out, "also write the output bytes to FILE");

    int oracle_n = 0;
    std::string oracle_method;
    int oracle_jobs = 0;
    bool oracle_witness = false;
    std::string oracle_format = "text";
    std::string oracle_out;
    auto* oracle = app.add_subcommand("oracle", "search for the optimum independently and compare to the formula");
    oracle->add_option("--n", oracle_n, "ground size")->required();
    oracle->add_option("--method", oracle_method, "exhaustive (n<=5) | segment (n<=24) | both")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "segment", "both"}));
    oracle->add_option("--jobs", oracle_jobs, "worker threads; 0 = hardware default");
    oracle->add_flag("--witness", oracle_witness, "also print the witness family");
    oracle->add_option("--format", oracle_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    oracle->add_option("--out", oracle_out, "also write the output bytes to FILE");

    int iso_n = 0;
    std::string iso_m;
    bool iso_terminal = false;
    Count iso_samples = 0;
    std::uint64_t iso_seed = 0;
    int iso_jobs = 0;
    std::string iso_format = "text";
    std::string iso_out;
    auto* isocheck = app.add_subcommand("isocheck", "isoperimetry and terminal-segment checks");
    isocheck->add_option("--n", iso_n, "ground size")->required();
    auto* iso_m_opt = isocheck->add_option("--m", iso_m, "slice size, or 'all' (exhaustive path, n<=5)");
    auto* iso_terminal_opt =
        isocheck->add_flag("--terminal", iso_terminal, "check the terminal-segment property for every m (n<=16)");
    auto* iso_samples_opt =
        isocheck->add_option("--samples", iso_samples, "sampled path (6<=n<=16): number of random m-subsets");
    auto* iso_seed_opt = isocheck->add_option("--seed", iso_seed, "seed for the sampled path");
    isocheck->add_option("--jobs", iso_jobs, "worker threads; 0 = hardware default");
    isocheck->add_option("--format", iso_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    isocheck->add_option("--out", iso_out, "also write the output bytes to FILE");
    iso_terminal_opt->excludes(iso_m_opt)->excludes(iso_samples_opt)->excludes(iso_seed_opt);

    int table_max_n = 0;
    std::string table_out;
    auto* table = app.add_subcommand("table", "sizes for n = 1..max-n by pure binomial arithmetic");
    table->add_option("--max-n", table_max_n, "last row, 1..63")->required();
    table->add_option("--out", table_out, "also write the output bytes to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints help to stdout or the error to stderr
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (app.got_subcommand(construct)) {
            Sink sink(construct_out);
            return run_construct(sink, construct_n, construct_format);
        }
        if (app.got_subcommand(verify)) {
            Sink sink(verify_out);
            return run_verify(sink, verify_range, verify_format);
        }
        if (app.got_subcommand(oracle)) {
            Sink sink(oracle_out);
            return run_oracle(sink, oracle_n, oracle_method, oracle_jobs, oracle_witness, oracle_format);
        }
        if (app.got_subcommand(isocheck)) {
            Sink sink(iso_out);
            return run_isocheck(sink, iso_n, iso_m, iso_terminal, iso_samples, iso_samples_opt->count() > 0,
                                iso_seed, iso_seed_opt->count() > 0, iso_jobs, iso_format);
        }
        Sink sink(table_out);
        return run_table(sink, table_max_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

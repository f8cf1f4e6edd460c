// cdu — batch front end for the c-differential uniformity library.
//
// Exactly one mode per invocation:
//   --table {1,2,3}            reproduce a labelled-count table
//   --suite NAME               run a verification suite (exit 1 on any FAIL)
//   --gamma/--coeffs/--sbox    per-multiplier uniformity reports
// Exit codes: 0 success / all pass, 1 verification failure, 2 usage or
// input error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdu/carlitz.hpp"
#include "cdu/cdiff.hpp"
#include "cdu/field.hpp"
#include "cdu/scan.hpp"

namespace {

using cdu::elem;

std::vector<int> parse_degrees(const std::string& spec) {
    auto parse_one = [](const std::string& s) {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument("bad degree '" + s + "'");
        return v;
    };
    const std::size_t dots = spec.find("..");
    if (dots == std::string::npos) return {parse_one(spec)};
    const int lo = parse_one(spec.substr(0, dots));
    const int hi = parse_one(spec.substr(dots + 2));
    if (lo > hi)
        throw std::invalid_argument("bad degree range '" + spec + "'");
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

std::vector<elem> parse_multipliers(const cdu::FieldSpec& F,
                                    const std::string& spec) {
    if (spec == "all") return cdu::elems_outside_f2(F);
    std::vector<elem> cs;
    for (const std::string& part : split_commas(spec)) {
        const elem c = cdu::parse_hex(part);
        if (c >= F.size())
            throw std::invalid_argument("multiplier " + cdu::elem_hex(c) +
                                        " is out of range for n=" +
                                        std::to_string(F.n()));
        cs.push_back(c);
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

std::string default_degrees(const std::string& suite) {
    if (suite == "car2") return "2..8";
    if (suite == "cf4") return "4..12";
    if (suite == "af4") return "4..10";
    if (suite == "symmetry" || suite == "affine") return "4..6";
    return "4..8";
}

void warn_if_slow(int table, const cdu::FieldSpec& F) {
    if (F.n() <= 10) return;
    const double size = static_cast<double>(F.size());
    const double pairs = table == 3 ? 2.0 * (size - 4.0)
                                    : (size - 2.0) * (size - 2.0);
    const double secs = pairs * size * size / 5e8; // rough single-thread rate
    std::ostringstream est;
    if (secs < 120) est << secs << " s";
    else if (secs < 7200) est << secs / 60 << " min";
    else est << secs / 3600 << " h";
    std::cerr << "note: table " << table << " at n=" << F.n() << " scans "
              << static_cast<std::uint64_t>(pairs)
              << " parameter pairs (very roughly " << est.str()
              << " per worker thread)\n";
}

int infer_degree_from_sbox(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::uint64_t values = 0;
    while (std::getline(in, line)) {
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        ++values;
    }
    for (int n = 2; n <= 16; ++n)
        if (values == (1ull << n)) return n;
    throw std::invalid_argument(
        "cannot infer the degree: the file has " + std::to_string(values) +
        " value lines, not 2^n for any supported n (pass --n)");
}

int run_verify_mode(const std::string& suite, const std::string& n_spec,
                    int jobs, const std::string& format) {
    const std::vector<int> ns =
        parse_degrees(n_spec.empty() ? default_degrees(suite) : n_spec);
    const std::vector<cdu::Verdict> verdicts = cdu::run_verify(suite, ns, jobs);
    bool all_pass = true;
    if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& v : verdicts) {
            nlohmann::ordered_json e;
            e["claim"] = v.claim;
            for (const auto& [k, val] : v.params) e[k] = val;
            e["predicted_lo"] = v.predicted_lo;
            e["predicted_hi"] = v.predicted_hi;
            e["observed"] = v.observed;
            e["pass"] = v.pass;
            j.push_back(std::move(e));
            all_pass = all_pass && v.pass;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& v : verdicts) {
            std::cout << v.line() << "\n";
            all_pass = all_pass && v.pass;
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "c-differential uniformity of permutations over GF(2^n):\n"
        "labelled-count tables, closed-form verification suites, and\n"
        "per-multiplier spectrum reports."};
    app.name("cdu");

    std::string n_spec, modulus_hex, gamma_hex, coeffs_spec, sbox_path;
    std::string c_spec = "all", format = "csv", suite;
    int table = 0, jobs = 1, early_exit = 0;
    bool force = false;

    app.add_option("--n", n_spec,
                   "extension degree (2..16); --suite also accepts a range "
                   "like 4..8");
    app.add_option("--modulus", modulus_hex,
                   "irreducible modulus as a hex bit-vector (default: the "
                   "smallest for n)");
    app.add_option("--table", table, "emit table 1, 2 or 3")
        ->check(CLI::Range(1, 3));
    app.add_option("--suite", suite, "run one verification suite")
        ->check(CLI::IsMember(cdu::verify_suite_names()));
    app.add_option("--gamma", gamma_hex,
                   "report on the gamma-family member for this hex parameter");
    app.add_option("--coeffs", coeffs_spec,
                   "report on the nested-inverse form with these "
                   "comma-separated hex coefficients a0,..,a_(m+1)");
    app.add_option("--sbox", sbox_path,
                   "report on a permutation file (one hex value per line, # "
                   "comments allowed)");
    app.add_option("--c", c_spec,
                   "multipliers for reports: hex value, comma list, or 'all' "
                   "(every c outside F_2)");
    app.add_option("--format", format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--early-exit", early_exit,
                   "table scans: stop a pair's scan once a count reaches this "
                   "threshold (0 = full scan; must be >= 4 otherwise)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--force", force, "lift the n <= 12 cap on table scans");
    app.footer("exit codes: 0 success/all-pass, 1 verification failure, 2 "
               "usage or input error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const int sources = (gamma_hex.empty() ? 0 : 1) +
                            (coeffs_spec.empty() ? 0 : 1) +
                            (sbox_path.empty() ? 0 : 1);
        const int modes = (table != 0 ? 1 : 0) + (suite.empty() ? 0 : 1) +
                          (sources != 0 ? 1 : 0);
        if (modes != 1 || sources > 1) {
            std::cerr << "error: pick exactly one of --table, --suite, or one "
                         "report source (--gamma | --coeffs | --sbox)\n";
            return 2;
        }

        if (!suite.empty()) {
            if (!modulus_hex.empty())
                std::cerr << "note: --modulus is ignored by suite runs (the "
                             "default modulus is used at every degree)\n";
            return run_verify_mode(suite, n_spec, jobs, format);
        }

        const std::uint32_t modulus =
            modulus_hex.empty() ? 0 : cdu::parse_hex(modulus_hex);

        if (table != 0) {
            if (n_spec.empty()) {
                std::cerr << "error: --table needs --n\n";
                return 2;
            }
            const std::vector<int> ns = parse_degrees(n_spec);
            if (ns.size() != 1) {
                std::cerr << "error: --table takes a single degree, not a "
                             "range\n";
                return 2;
            }
            if (ns[0] > 12 && !force) {
                std::cerr << "error: table scans are capped at n = 12; pass "
                             "--force to override\n";
                return 2;
            }
            const cdu::FieldSpec F(ns[0], modulus);
            warn_if_slow(table, F);
            cdu::ScanConfig cfg;
            cfg.jobs = jobs;
            cfg.early_exit_threshold = early_exit;
            const cdu::TableResult result = cdu::run_table(F, table, cfg);
            std::cout << (format == "json" ? result.json() : result.csv());
            return 0;
        }

        // report mode
        std::string sbox_text;
        int n = 0;
        if (!sbox_path.empty()) {
            std::ifstream in(sbox_path);
            if (!in) {
                std::cerr << "error: cannot open " << sbox_path << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            sbox_text = buf.str();
            n = n_spec.empty() ? infer_degree_from_sbox(sbox_text)
                               : parse_degrees(n_spec).at(0);
        } else {
            if (n_spec.empty()) {
                std::cerr << "error: --gamma/--coeffs need --n\n";
                return 2;
            }
            n = parse_degrees(n_spec).at(0);
        }

        const cdu::FieldSpec F(n, modulus);
        std::istringstream sbox_in(sbox_text);
        const cdu::Permutation f =
            !sbox_path.empty() ? cdu::read_permutation(F, sbox_in)
            : !gamma_hex.empty()
                ? cdu::car3_family(F, cdu::parse_hex(gamma_hex))
                : [&] {
                      std::vector<elem> coeffs;
                      for (const std::string& part : split_commas(coeffs_spec))
                          coeffs.push_back(cdu::parse_hex(part));
                      return cdu::from_carlitz(cdu::CarlitzForm(F, coeffs));
                  }();

        const std::vector<elem> cs = parse_multipliers(F, c_spec);
        const std::vector<cdu::CDiffReport> reports =
            cdu::compute_reports(f, cs, jobs);
        std::cout << (format == "json" ? cdu::reports_json(f, reports)
                                       : cdu::reports_csv(reports));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

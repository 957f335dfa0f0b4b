#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "compcount/alphabet_spec.hpp"
#include "compcount/errors.hpp"
#include "compcount/hessenberg.hpp"
#include "compcount/oracle.hpp"
#include "compcount/recurrence.hpp"
#include "compcount/verify.hpp"
#include "compcount/weak.hpp"

namespace compcount::cli {

namespace {

constexpr const char* kAlphabetHelp =
    "part alphabet: all | upto:K | atleast:K | m1[xq1],m2[xq2],... (e.g. 1x2,3 = two colors of 1, one of 3)";

struct CountArgs {
    std::int64_t n = 0;
    std::string alphabet = "all";
    std::string method = "recurrence";
};

struct WeakArgs {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::string alphabet = "all";
    std::string method = "conv";
};

struct MatrixArgs {
    std::int64_t n = 0;
    std::string alphabet = "all";
    std::string grid_file;
    bool print = false;
    bool det = false;
    bool charpoly = false;
    std::int64_t minorsum = -1;
};

struct VerifyArgs {
    std::string identity = "all";
    std::int64_t max_n = -1;
    std::int64_t max_k = -1;
    bool json = false;
};

struct TableArgs {
    std::string alphabet = "all";
    std::int64_t n_max = 10;
    std::int64_t k = -1;
    bool bfile = false;
};

struct BenchArgs {
    std::string suite = "recurrence";
    std::int64_t n = 1000;
    std::int64_t k = 3;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
    const PartAlphabet alphabet = parse_alphabet_spec(a.alphabet);
    if (a.n < 0) throw DomainError("n must be >= 0");
    Count c;
    if (a.method == "recurrence")
        c = count_compositions(a.n, alphabet);
    else if (a.method == "det")
        c = a.n == 0 ? Count(1) : det_hessenberg(build_matrix(alphabet, a.n));
    else
        c = oracle::count_compositions_brute(a.n, alphabet);
    out << c.get_str() << '\n';
    return kOk;
}

int cmd_weak(const WeakArgs& a, std::ostream& out) {
    const PartAlphabet alphabet = parse_alphabet_spec(a.alphabet);
    Count c;
    if (a.method == "conv") {
        c = ccw_convolution(a.n, a.k, alphabet);
    } else if (a.method == "minors") {
        c = cw_via_minors(a.n, a.k, alphabet);
    } else if (a.method == "brute") {
        c = oracle::count_weak_brute(a.n, a.k, alphabet);
    } else if (alphabet == PartAlphabet::unrestricted()) {
        c = cw_unrestricted_closed(a.n, a.k);
    } else if (alphabet == PartAlphabet::of_values({1, 2})) {
        c = cw_parts12_closed(a.n, a.k);
    } else {
        throw UnsupportedClosedForm("no closed form for alphabet '" + alphabet.describe() +
                                    "' (available: all, upto:2)");
    }
    out << c.get_str() << '\n';
    return kOk;
}

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
    const int actions = int(a.print) + int(a.det) + int(a.charpoly) + int(a.minorsum >= 0);
    if (actions > 1) throw DomainError("choose one of --print, --det, --charpoly, --minorsum");

    if (!a.grid_file.empty()) {
        std::ifstream in(a.grid_file);
        if (!in) throw ParseError("cannot read grid file '" + a.grid_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        const DenseMatrix m = parse_grid(buf.str());
        if (a.charpoly) throw DomainError("--charpoly needs a Hessenberg-Toeplitz matrix (omit --grid)");
        if (a.det)
            out << det_bareiss(m).get_str() << '\n';
        else if (a.minorsum >= 0)
            out << minor_sum_subsets(m, a.minorsum).get_str() << '\n';
        else
            out << format_grid(m);
        return kOk;
    }

    if (a.n < 1) throw DomainError("matrix order must be >= 1");
    const HessMatrix m = build_matrix(parse_alphabet_spec(a.alphabet), a.n);
    if (a.det)
        out << det_hessenberg(m).get_str() << '\n';
    else if (a.charpoly)
        out << charpoly(m).to_string() << '\n';
    else if (a.minorsum >= 0)
        out << minor_sum_subsets(m, a.minorsum).get_str() << '\n';
    else
        out << format_grid(m.dense());
    return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<Identity> ids;
    if (a.identity == "all") {
        ids = all_identities();
    } else if (auto id = parse_identity(a.identity)) {
        ids.push_back(*id);
    } else {
        throw ParseError("unknown identity '" + a.identity + "'");
    }

    std::vector<VerificationReport> reports;
    for (Identity id : ids) {
        GridBounds grid = default_grid(id);
        if (a.max_n >= 0) grid.max_n = a.max_n;
        if (a.max_k >= 0) grid.max_k = a.max_k;
        reports.push_back(run_identity(id, grid));
    }

    bool all_agree = true;
    nlohmann::json doc{{"reports", nlohmann::json::array()}};
    for (const auto& r : reports) {
        all_agree = all_agree && r.verdict() == Verdict::agree;
        if (a.json)
            doc["reports"].push_back(to_json(r));
        else
            out << to_text(r);
        err << r.identity << ": " << to_string(r.verdict()) << " (" << r.points.size() << " points, "
            << r.disagreements().size() << " disagreements)\n";
    }
    if (a.json) {
        doc["verdict"] = all_agree ? "agree" : "disagree";
        out << doc.dump(2) << '\n';
    }
    return all_agree ? kOk : kDisagreement;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
    const PartAlphabet alphabet = parse_alphabet_spec(a.alphabet);
    if (a.n_max < 1) throw DomainError("--n-max must be >= 1");
    if (a.k >= 0) {
        // Weak counts share the zero-free table; one convolution per row.
        if (!a.bfile) out << "n,k,count\n";
        for (std::int64_t n = 1; n <= a.n_max; ++n) {
            const Count c = ccw_convolution(n, a.k, alphabet);
            if (a.bfile)
                out << n << ' ' << c.get_str() << '\n';
            else
                out << n << ',' << a.k << ',' << c.get_str() << '\n';
        }
        return kOk;
    }
    const std::vector<Count> counts = CompositionCounter(alphabet).counts_up_to(a.n_max);
    if (!a.bfile) out << "n,count\n";
    for (std::int64_t n = 1; n <= a.n_max; ++n)
        out << n << (a.bfile ? ' ' : ',') << counts[static_cast<std::size_t>(n)].get_str() << '\n';
    return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    if (a.n < 1) throw DomainError("--n must be >= 1");
    const PartAlphabet all = PartAlphabet::unrestricted();
    const auto start = std::chrono::steady_clock::now();
    Count result;
    if (a.suite == "recurrence") {
        result = count_compositions(a.n, all);
    } else if (a.suite == "det") {
        result = det_hessenberg(build_matrix(all, a.n));
    } else {
        const std::int64_t k = std::min(a.k, a.n);
        result = minor_sum_convolution(all, a.n, k);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    out << "suite=" << a.suite << " n=" << a.n << " seconds=" << elapsed.count() << '\n';
    out << "digits=" << decimal_digits(result) << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting of restricted, colored and weak integer compositions", "compcount"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "c(n, alphabet): compositions of n");
    count->add_option("n", count_args.n, "target")->required();
    count->add_option("--alphabet,-a", count_args.alphabet, kAlphabetHelp);
    count->add_option("--method,-m", count_args.method, "recurrence | det | brute")
        ->check(CLI::IsMember({"recurrence", "det", "brute"}));

    WeakArgs weak_args;
    auto* weak = app.add_subcommand("weak", "cw(n, k, alphabet): weak compositions of n with exactly k zeros");
    weak->add_option("n", weak_args.n, "target")->required();
    weak->add_option("k", weak_args.k, "number of zero parts")->required();
    weak->add_option("--alphabet,-a", weak_args.alphabet, kAlphabetHelp);
    weak->add_option("--method,-m", weak_args.method, "conv | minors | closed | brute")
        ->check(CLI::IsMember({"conv", "minors", "closed", "brute"}));

    MatrixArgs matrix_args;
    auto* matrix = app.add_subcommand("matrix", "Hessenberg-Toeplitz matrix P_n of an alphabet");
    matrix->add_option("n", matrix_args.n, "matrix order");
    matrix->add_option("--alphabet,-a", matrix_args.alphabet, kAlphabetHelp);
    matrix->add_option("--grid", matrix_args.grid_file, "read a dense integer grid from this file instead");
    matrix->add_flag("--print", matrix_args.print, "print the matrix (default)");
    matrix->add_flag("--det", matrix_args.det, "determinant");
    matrix->add_flag("--charpoly", matrix_args.charpoly, "det(lambda I - P), ascending coefficients");
    matrix->add_option("--minorsum", matrix_args.minorsum, "sum of principal minors of order R");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "cross-check identities against brute-force enumeration");
    verify->add_option("--identity", verify_args.identity, "eq1 | thm8 | thm9 | thm10 | thm11 | thm12 | all")
        ->check(CLI::IsMember({"eq1", "thm8", "thm9", "thm10", "thm11", "thm12", "all"}));
    verify->add_option("--max-n", verify_args.max_n, "largest n in the grid");
    verify->add_option("--max-k", verify_args.max_k, "largest k in the grid");
    verify->add_flag("--json", verify_args.json, "machine-readable report");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "sequence table (CSV, or b-file with --bfile)");
    table->add_option("--alphabet,-a", table_args.alphabet, kAlphabetHelp);
    table->add_option("--n-max", table_args.n_max, "last row")->required();
    table->add_option("--k", table_args.k, "tabulate weak compositions with k zeros");
    table->add_flag("--bfile", table_args.bfile, "'index value' lines instead of CSV");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "time one fast path on the unrestricted alphabet");
    bench->add_option("--suite", bench_args.suite, "recurrence | det | conv")
        ->check(CLI::IsMember({"recurrence", "det", "conv"}));
    bench->add_option("--n", bench_args.n, "problem size");
    bench->add_option("--k", bench_args.k, "zeros for the conv suite");

    std::vector<const char*> argv{"compcount"};
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*count) return cmd_count(count_args, out);
        if (*weak) return cmd_weak(weak_args, out);
        if (*matrix) return cmd_matrix(matrix_args, out);
        if (*verify) return cmd_verify(verify_args, out, err);
        if (*table) return cmd_table(table_args, out);
        if (*bench) return cmd_bench(bench_args, out);
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kGuard;
    } catch (const UnsupportedClosedForm& e) {
        err << "error: " << e.what() << '\n';
        return kNoClosedForm;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace compcount::cli

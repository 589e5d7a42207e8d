#include "nearmiss/cli.hpp"

#include "nearmiss/format.hpp"
#include "nearmiss/identities.hpp"
#include "nearmiss/search.hpp"
#include "nearmiss/sequences.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace nearmiss {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats{
    {"tsv", OutputFormat::tsv},
    {"jsonl", OutputFormat::jsonl},
};

const std::map<std::string, SearchArithmetic> kArithmetic{
    {"auto", SearchArithmetic::automatic},
    {"fixed", SearchArithmetic::fixed_width},
    {"big", SearchArithmetic::arbitrary},
};

Integer parse_integer_flag(const std::string& flag, const std::string& text) {
    try {
        return Integer::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": expected a decimal integer, got '" + text + "'");
    }
}

std::size_t require_count(std::size_t count) {
    if (count == 0) throw UsageError("--count must be at least 1");
    return count;
}

int cmd_gen(std::size_t count, OutputFormat format, std::ostream& out) {
    for (const Triplet& t : gen_recurrence(require_count(count))) write_triplet(out, t, format);
    return kExitOk;
}

int cmd_verify(std::size_t count, OutputFormat format, const std::string& override_z0,
               std::ostream& out, std::ostream& err) {
    Seeds seeds = Seeds::standard();
    if (!override_z0.empty()) seeds.first.z = parse_integer_flag("--override-z0", override_z0);

    const auto rows = verify_family(require_count(count), seeds);
    std::size_t failures = 0;
    for (const VerifyRow& row : rows) {
        const char* status = row.ok() ? "ok" : "FAIL";
        if (!row.ok()) ++failures;
        if (format == OutputFormat::tsv) {
            out << row.n << '\t' << row.residual << '\t' << (row.closed_form_ok ? "match" : "mismatch")
                << '\t' << status << '\n';
        } else {
            nlohmann::ordered_json j;
            j["n"] = std::to_string(row.n);
            j["residual"] = row.residual.to_string();
            j["closed_form"] = row.closed_form_ok ? "match" : "mismatch";
            j["status"] = status;
            if (!row.closed_form_error.empty()) j["error"] = row.closed_form_error;
            out << j.dump() << '\n';
        }
        if (!row.ok()) {
            err << "verify: n=" << row.n << " failed (residual " << row.residual << ", closed form "
                << (row.closed_form_ok ? "match" : "mismatch");
            if (!row.closed_form_error.empty()) err << ": " << row.closed_form_error;
            err << ")\n";
        }
    }
    err << "verify: " << (rows.size() - failures) << " of " << rows.size() << " indices passed\n";
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_closed_form(std::size_t n, OutputFormat format, std::ostream& out) {
    const ClosedFormTrace t = closed_form_trace(n);
    const std::vector<std::pair<const char*, std::string>> fields{
        {"n", std::to_string(t.n)},
        {"lambda1^n", t.lambda1_pow.to_string()},
        {"lambda2^n", t.lambda2_pow.to_string()},
        {"a*lambda1^n", t.a_term.to_string()},
        {"b*lambda2^n", t.b_term.to_string()},
        {"x_exact", t.x_exact.to_string()},
        {"c*lambda1^n", t.c_term.to_string()},
        {"d*lambda2^n", t.d_term.to_string()},
        {"y_exact", t.y_exact.to_string()},
        {"mu1^n", t.mu1_pow.to_string()},
        {"mu2^n", t.mu2_pow.to_string()},
        {"e*mu1^n", t.e_term.to_string()},
        {"f*mu2^n", t.f_term.to_string()},
        {"(-1)^n*g", t.g_term.to_string()},
        {"z_exact", t.z_exact.to_string()},
        {"x", t.x.to_string()},
        {"y", t.y.to_string()},
        {"z", t.z.to_string()},
    };
    if (format == OutputFormat::tsv) {
        for (const auto& [name, value] : fields) out << name << '\t' << value << '\n';
    } else {
        nlohmann::ordered_json j;
        for (const auto& [name, value] : fields) j[name] = value;
        out << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_identities(const std::string& perturb_g, std::ostream& out, std::ostream& err) {
    ClosedFormConstants k = ClosedFormConstants::standard();
    if (!perturb_g.empty()) {
        try {
            k.g += Rational::parse(perturb_g);
        } catch (const std::invalid_argument&) {
            throw UsageError("--perturb-g: expected a rational, got '" + perturb_g + "'");
        }
    }
    const IdentityReport report = run_identity_suite(k);
    out << to_json(report).dump(2) << '\n';
    if (!report.all_passed()) {
        err << "identities: at least one check failed\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

struct SearchFlags {
    std::string min_x = "1";
    std::string max_x;
    std::string threshold;
    std::string exact_residual;
    std::size_t workers = 1;
    SearchArithmetic arithmetic = SearchArithmetic::automatic;
    bool progress = false;
};

int cmd_search(const SearchFlags& flags, OutputFormat format, std::ostream& out,
               std::ostream& err) {
    SearchConfig cfg;
    cfg.min_x = parse_integer_flag("--min-x", flags.min_x);
    cfg.max_x = parse_integer_flag("--max-x", flags.max_x);
    if (!flags.threshold.empty()) cfg.threshold = parse_integer_flag("--threshold", flags.threshold);
    if (!flags.exact_residual.empty()) {
        cfg.exact_residual = parse_integer_flag("--exact-residual", flags.exact_residual);
    }
    cfg.workers = flags.workers;
    cfg.arithmetic = flags.arithmetic;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    SearchProgress progress;
    if (flags.progress) {
        progress = [&err](std::uint64_t done, std::uint64_t total) {
            err << "search: " << done << "/" << total << " rows\n";
        };
    }
    const auto start = std::chrono::steady_clock::now();
    const std::vector<SearchHit> hits = scan(cfg, progress);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    for (const SearchHit& hit : hits) write_hit(out, hit, format);
    const bool fixed = cfg.arithmetic == SearchArithmetic::fixed_width ||
                       (cfg.arithmetic == SearchArithmetic::automatic && cfg.fixed_width_eligible());
    err << "search: " << hits.size() << " hits, x in [" << cfg.min_x << ", " << cfg.max_x << "], "
        << (fixed ? "fixed-width" : "arbitrary-precision") << ", " << elapsed.count() << " s\n";
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Near-solutions of x^4 + y^4 = z^2: generate, verify, search"};
    app.name("nearmiss");
    app.require_subcommand(1);

    OutputFormat format = OutputFormat::tsv;
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: tsv or jsonl")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    };

    std::size_t count = 0;
    auto* gen = app.add_subcommand("gen", "Emit the family by recurrence");
    gen->add_option("--count", count, "Number of triplets (n = 0 .. count-1)")->required();
    add_format(gen);

    std::string override_z0;
    auto* verify = app.add_subcommand("verify", "Check the residual and closed forms for n < count");
    verify->add_option("--count", count, "Number of indices to check")->required();
    verify->add_option("--override-z0", override_z0, "Replace z at n = 0 (test hook)")->group("");
    add_format(verify);

    std::size_t index = 0;
    auto* closed = app.add_subcommand("closed-form", "Show the exact closed-form evaluation at n");
    closed->add_option("--n", index, "Index")->required();
    add_format(closed);

    std::string perturb_g;
    auto* identities = app.add_subcommand("identities", "Verify the coefficient identities (JSON)");
    identities->add_option("--perturb-g", perturb_g, "Add a rational to g (test hook)")->group("");

    SearchFlags sf;
    auto* search = app.add_subcommand("search", "Scan for near-miss triplets");
    search->add_option("--min-x", sf.min_x, "Smallest x (default 1)");
    search->add_option("--max-x", sf.max_x, "Largest x and y")->required();
    search->add_option("--threshold", sf.threshold, "Keep hits with |x^4 + y^4 - z^2| <= threshold");
    search->add_option("--exact-residual", sf.exact_residual, "Keep hits with x^4 + y^4 - z^2 = value");
    search->add_option("--workers", sf.workers, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--arithmetic", sf.arithmetic, "auto, fixed or big")
        ->transform(CLI::CheckedTransformer(kArithmetic, CLI::ignore_case));
    search->add_flag("--progress", sf.progress, "Report progress on stderr");
    add_format(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(count, format, out);
        if (*verify) return cmd_verify(count, format, override_z0, out, err);
        if (*closed) return cmd_closed_form(index, format, out);
        if (*identities) return cmd_identities(perturb_g, out, err);
        if (*search) return cmd_search(sf, format, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace nearmiss

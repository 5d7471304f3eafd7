#include "bstir/cli.hpp"

#include "bstir/bench.hpp"
#include "bstir/bernoulli.hpp"
#include "bstir/expansions.hpp"
#include "bstir/rational.hpp"
#include "bstir/records.hpp"
#include "bstir/stirling.hpp"
#include "bstir/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace bstir {

namespace {

long parse_strict_long(const std::string& text) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    return value;
}

// "N" or "A..B", optionally prefixed "n=". A single N means the range [N, N]
// unless single_from_zero is set (then [0, N]).
std::pair<long, long> parse_range(std::string text, bool single_from_zero) {
    if (text.rfind("n=", 0) == 0) text = text.substr(2);
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const long n = parse_strict_long(text);
        return {single_from_zero ? 0 : n, n};
    }
    const long a = parse_strict_long(text.substr(0, dots));
    const long b = parse_strict_long(text.substr(dots + 2));
    if (a > b) throw std::invalid_argument("empty range: " + text);
    return {a, b};
}

std::vector<Rational> parse_r_set(const std::string& text) {
    std::vector<Rational> rs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) rs.push_back(Rational::parse(item));
    }
    if (rs.empty()) throw std::invalid_argument("empty r-set");
    return rs;
}

BernoulliRoute parse_bernoulli_route(const std::string& text) {
    static constexpr BernoulliRoute all[] = {
        BernoulliRoute::baseline,     BernoulliRoute::det_tanh,
        BernoulliRoute::det_tan,      BernoulliRoute::det_logistic,
        BernoulliRoute::det_integral, BernoulliRoute::rec_tanh,
        BernoulliRoute::rec_logistic, BernoulliRoute::rec_integral,
        BernoulliRoute::closed_eta,   BernoulliRoute::closed_zeta_bell,
        BernoulliRoute::closed_s2,
    };
    for (BernoulliRoute route : all)
        if (text == bernoulli_route_name(route)) return route;
    throw std::invalid_argument("unknown bernoulli route: " + text);
}

Bernoulli2ndRoute parse_bernoulli2nd_route(const std::string& text) {
    static constexpr Bernoulli2ndRoute all[] = {
        Bernoulli2ndRoute::fps_baseline,
        Bernoulli2ndRoute::stirling_sum,
        Bernoulli2ndRoute::alt_sum,
        Bernoulli2ndRoute::integral,
    };
    for (Bernoulli2ndRoute route : all)
        if (text == bernoulli2nd_route_name(route)) return route;
    throw std::invalid_argument("unknown bernoulli2nd route: " + text);
}

struct CommonOptions {
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* sub, CommonOptions& common) {
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", common.out_path, "write output to a file instead of stdout");
}

int emit(const std::vector<OutputRecord>& records, const CommonOptions& common) {
    const OutputFormat format = parse_format(common.format);
    if (common.out_path.empty()) {
        write_records(std::cout, records, format);
        return 0;
    }
    std::ofstream file(common.out_path);
    if (!file) {
        std::cerr << "error: cannot open output file: " << common.out_path << '\n';
        return 2;
    }
    write_records(file, records, format);
    return 0;
}

std::string stirling_row(int n, bool first_kind) {
    std::string row;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) row += ',';
        row += (first_kind ? stirling1(n, k) : stirling2(n, k)).get_str();
    }
    return row;
}

struct TabArgs {
    std::string sequence;
    std::string range;
    std::string route = "";
    std::string r_text;
    bool r_given = false;
};

int cmd_tab(const TabArgs& args, const CommonOptions& common) {
    const auto [lo, hi] = parse_range(args.range, /*single_from_zero=*/false);
    std::vector<OutputRecord> records;

    if (args.sequence == "bernoulli") {
        const BernoulliRoute route =
            args.route.empty() ? BernoulliRoute::baseline : parse_bernoulli_route(args.route);
        for (long n = lo; n <= hi; ++n) {
            if (n < 0) throw std::domain_error("bernoulli: n must be >= 0");
            OutputRecord rec;
            rec.kind = "bernoulli";
            rec.inputs = {{"n", std::to_string(n)}, {"route", bernoulli_route_name(route)}};
            rec.values = {{"value", bernoulli_route_value(route, static_cast<int>(n)).str()}};
            rec.provenance = bernoulli_route_label(route);
            records.push_back(std::move(rec));
        }
    } else if (args.sequence == "bernoulli2nd") {
        const Bernoulli2ndRoute route = args.route.empty() ? Bernoulli2ndRoute::fps_baseline
                                                           : parse_bernoulli2nd_route(args.route);
        for (long n = lo; n <= hi; ++n) {
            if (n < 0) throw std::domain_error("bernoulli2nd: n must be >= 0");
            OutputRecord rec;
            rec.kind = "bernoulli2nd";
            rec.inputs = {{"n", std::to_string(n)}, {"route", bernoulli2nd_route_name(route)}};
            rec.values = {{"value", bernoulli2nd(static_cast<int>(n), route).str()}};
            rec.provenance = bernoulli2nd_route_label(route);
            records.push_back(std::move(rec));
        }
    } else if (args.sequence == "gen_bernoulli") {
        if (!args.r_given) throw std::invalid_argument("gen_bernoulli requires --r");
        const Rational r = Rational::parse(args.r_text);
        for (long n = lo; n <= hi; ++n) {
            if (n < 0) throw std::domain_error("gen_bernoulli: n must be >= 0");
            OutputRecord rec;
            rec.kind = "gen_bernoulli";
            rec.inputs = {{"n", std::to_string(n)}, {"r", r.str()}};
            rec.values = {{"value", generalized_bernoulli(static_cast<int>(n), r).str()}};
            rec.provenance = "Bern-Exp-Ser-Gen-Eq";
            records.push_back(std::move(rec));
        }
    } else if (args.sequence == "stirling1" || args.sequence == "stirling2") {
        const bool first = (args.sequence == "stirling1");
        for (long n = lo; n <= hi; ++n) {
            if (n < 0) throw std::domain_error("stirling: n must be >= 0");
            OutputRecord rec;
            rec.kind = args.sequence;
            rec.inputs = {{"n", std::to_string(n)}};
            rec.values = {{"row", stirling_row(static_cast<int>(n), first)}};
            rec.provenance = first ? "stirling-first-triangle" : "stirling-second-triangle";
            records.push_back(std::move(rec));
        }
    } else if (args.sequence == "zeta_neg" || args.sequence == "eta_neg") {
        const bool zeta = (args.sequence == "zeta_neg");
        for (long k = lo; k <= hi; ++k) {
            if (k < 1) throw std::domain_error(args.sequence + ": k must be >= 1");
            OutputRecord rec;
            rec.kind = args.sequence;
            rec.inputs = {{"k", std::to_string(k)}, {"s", std::to_string(1 - 2 * k)}};
            const Rational v = zeta ? zeta_neg(static_cast<int>(k)) : eta_neg(static_cast<int>(k));
            rec.values = {{"value", v.str()}};
            rec.provenance = zeta ? "zeta-negative-odd" : "eta-negative-odd";
            records.push_back(std::move(rec));
        }
    } else {
        throw std::invalid_argument("unknown sequence: " + args.sequence);
    }
    return emit(records, common);
}

struct ExpandArgs {
    std::string expansion;
    std::string range;
    std::string variant;
    std::string r_text;
    bool r_given = false;
    long order = -1;
};

int cmd_expand(const ExpandArgs& args, const CommonOptions& common) {
    const auto [lo, hi] = parse_range(args.range, /*single_from_zero=*/true);
    if (lo < 0) throw std::domain_error("expand: n must be >= 0");
    const ExpansionId id = parse_expansion(args.expansion);
    const FormulaVariant variant =
        args.variant.empty() ? variants_of(id).front() : parse_variant(args.variant);
    {
        const auto& allowed = variants_of(id);
        if (std::find(allowed.begin(), allowed.end(), variant) == allowed.end())
            throw std::invalid_argument(std::string("variant '") + variant_name(variant) +
                                        "' not available for " + expansion_name(id));
    }
    std::optional<Rational> r;
    if (requires_r(id)) {
        if (!args.r_given)
            throw std::invalid_argument(std::string(expansion_name(id)) + " requires --r");
        r = Rational::parse(args.r_text);
    } else if (args.r_given) {
        throw std::invalid_argument(std::string(expansion_name(id)) + " does not take --r");
    }
    const int order = static_cast<int>(std::max(args.order, hi));

    std::vector<OutputRecord> records;
    bool all_pass = true;
    for (long n = lo; n <= hi; ++n) {
        const Rational value = coeff(id, variant, static_cast<int>(n), r);
        const Rational oracle = oracle_coeff(id, static_cast<int>(n), r, order);
        const bool pass = (value == oracle);
        all_pass = all_pass && pass;
        OutputRecord rec;
        rec.kind = "expansion";
        rec.inputs = {{"expansion", expansion_name(id)},
                      {"variant", variant_name(variant)},
                      {"n", std::to_string(n)}};
        if (r) rec.inputs.emplace_back("r", r->str());
        rec.values = {{"value", value.str()},
                      {"oracle", oracle.str()},
                      {"pass", pass ? "true" : "false"}};
        rec.provenance = formula_label(id, variant);
        records.push_back(std::move(rec));
    }
    const int emit_rc = emit(records, common);
    if (emit_rc != 0) return emit_rc;
    return all_pass ? 0 : 1;
}

struct VerifyArgs {
    long max_n = 10;
    std::string r_set_text = "-1,-1/2,1/2,2";
    std::string corrupt_route;
};

int cmd_verify(const VerifyArgs& args, const CommonOptions& common) {
    if (args.max_n < 1) throw std::domain_error("verify: --max-n must be >= 1");
    VerifyOptions options;
    options.max_n = static_cast<int>(args.max_n);
    options.r_set = parse_r_set(args.r_set_text);
    options.corrupt_route = args.corrupt_route;
    const VerifyResult result = run_verify(options);
    const int emit_rc = emit(result.records, common);
    if (emit_rc != 0) return emit_rc;
    return result.all_pass ? 0 : 1;
}

struct BenchArgs {
    std::string task;
    long size = 0;
};

int cmd_bench(const BenchArgs& args, const CommonOptions& common) {
    std::vector<OutputRecord> records;
    const int size = static_cast<int>(args.size);
    if (args.task == "hessenberg")
        records = bench_hessenberg(size);
    else if (args.task == "fps")
        records = bench_fps(size);
    else if (args.task == "bell")
        records = bench_bell(size);
    else
        throw std::invalid_argument("unknown bench task: " + args.task);
    return emit(records, common);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact Bernoulli/Stirling tables, series expansions, and self-verification"};
    app.require_subcommand(1);

    CommonOptions common;

    TabArgs tab_args;
    CLI::App* tab = app.add_subcommand("tab", "tabulate a sequence over an index range");
    tab->add_option("sequence", tab_args.sequence,
                    "bernoulli|bernoulli2nd|gen_bernoulli|stirling1|stirling2|zeta_neg|eta_neg")
        ->required();
    tab->add_option("range", tab_args.range, "index N or range A..B")->required();
    tab->add_option("--route", tab_args.route, "computation route (bernoulli families)");
    tab->add_option("--r", tab_args.r_text, "order r as integer or p/q (gen_bernoulli)");
    add_common(tab, common);

    ExpandArgs expand_args;
    CLI::App* expand = app.add_subcommand("expand", "Maclaurin coefficients with oracle check");
    expand->add_option("expansion", expand_args.expansion, "expansion name")->required();
    expand->add_option("range", expand_args.range, "max index N or range A..B")->required();
    expand->add_option("--variant", expand_args.variant, "formula variant");
    expand->add_option("--r", expand_args.r_text, "exponent r as integer or p/q");
    expand->add_option("--order", expand_args.order, "oracle truncation order (default: range max)");
    add_common(expand, common);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the full cross-validation report");
    verify->add_option("--max-n", verify_args.max_n, "audit bound")->capture_default_str();
    verify->add_option("--r-set", verify_args.r_set_text, "comma-separated r values")
        ->capture_default_str();
    verify->add_option("--corrupt-route", verify_args.corrupt_route,
                       "perturb a named route (harness self-test)")
        ->group("");  // hidden from help
    add_common(verify, common);

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "micro-benchmarks with exact op counts");
    bench->add_option("task", bench_args.task, "hessenberg|fps|bell")->required();
    bench->add_option("size", bench_args.size, "matrix size / series order / n")->required();
    add_common(bench, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        tab_args.r_given = tab->count("--r") > 0;
        expand_args.r_given = expand->count("--r") > 0;
        if (tab->parsed()) return cmd_tab(tab_args, common);
        if (expand->parsed()) return cmd_expand(expand_args, common);
        if (verify->parsed()) return cmd_verify(verify_args, common);
        if (bench->parsed()) return cmd_bench(bench_args, common);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace bstir

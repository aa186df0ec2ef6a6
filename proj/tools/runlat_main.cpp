#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

#include "runlat/measures.hpp"
#include "runlat/report.hpp"
#include "runlat/selftest.hpp"
#include "runlat/valuation.hpp"

namespace {

using namespace runlat;

struct CommonOptions {
    int n = 4;
    int c = 2;
    std::string gains;
    std::string kind;
    std::string ordering;
    std::string format;
    unsigned long long seed = 42;
    std::size_t budget = kDefaultBudget;
    int workers = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--n", opt.n, "run length N")->check(CLI::PositiveNumber);
    cmd->add_option("--c", opt.c, "number of non-zero relevance degrees (degrees 0..c)")
        ->check(CLI::Range(1, 9));
    cmd->add_option("--gains", opt.gains,
                    "comma-separated rational gains for degrees 0..c, e.g. 0,1/2,1");
    cmd->add_option("--seed", opt.seed, "seed for randomized sweeps");
    cmd->add_option("--budget", opt.budget, "largest run space that will be materialized");
    cmd->add_option("--workers", opt.workers, "worker threads for exhaustive sweeps")
        ->check(CLI::PositiveNumber);
}

RelevanceScale scale_from(const CommonOptions& opt) {
    if (opt.gains.empty()) return RelevanceScale::indicator(opt.c);
    std::vector<Rational> gains;
    std::stringstream stream(opt.gains);
    std::string item;
    while (std::getline(stream, item, ',')) gains.push_back(parse_rational(item));
    return make_scale(static_cast<int>(gains.size()) - 1, gains);
}

Ordering ordering_from(const CommonOptions& opt) {
    const auto ordering = ordering_from_name(opt.ordering);
    if (!ordering)
        throw UsageError("unknown ordering '" + opt.ordering +
                         "' (proj-repl-set, repl-set, proj-repl-rank, repl-rank, swap-repl-rank)");
    return *ordering;
}

int cmd_enumerate(const CommonOptions& opt) {
    const RelevanceScale scale = scale_from(opt);
    RunKind kind = RunKind::RankBased;
    if (!opt.kind.empty()) {
        const auto parsed = run_kind_from_name(opt.kind);
        if (!parsed) throw UsageError("unknown run kind '" + opt.kind + "' (set or rank)");
        kind = *parsed;
        if (!opt.ordering.empty() && run_kind(ordering_from(opt)) != kind)
            throw UsageError("--kind disagrees with --ordering " + opt.ordering);
    } else if (!opt.ordering.empty()) {
        kind = run_kind(ordering_from(opt));
    }
    const Int expected = RunSpace::count(scale.c(), opt.n, kind);
    if (expected > opt.budget)
        throw BudgetError("space has " + expected.str() + " elements, budget is " +
                          std::to_string(opt.budget));
    const RunSpace space(scale, opt.n, kind);
    for (const JudgedRun& run : space.elements()) std::cout << run_literal(run) << "\n";
    return 0;
}

int cmd_analyze(const CommonOptions& opt) {
    const SpaceAnalysis analysis =
        analyze_space(scale_from(opt), opt.n, ordering_from(opt), opt.budget, opt.workers);
    std::cout << verdict_to_json(analysis).dump(2) << "\n";
    return 0;
}

struct MeasureOptions {
    std::string measure;
    std::string rb;
    std::string p;
    int b = 2;
};

MeasureSpec measure_from(const MeasureOptions& mopt, const RelevanceScale& scale, int n) {
    const auto kind = measure_kind_from_name(mopt.measure);
    if (!kind)
        throw UsageError("unknown measure '" + mopt.measure + "' (gp, gr, grbp, dcg)");
    switch (*kind) {
        case MeasureKind::GP: return MeasureSpec::gp(scale);
        case MeasureKind::GR:
            return MeasureSpec::gr(scale, mopt.rb.empty() ? Rational(n) : parse_rational(mopt.rb));
        case MeasureKind::GRBP:
            if (mopt.p.empty()) throw UsageError("grbp needs --p (rational in (0,1))");
            return MeasureSpec::grbp(scale, parse_rational(mopt.p));
        case MeasureKind::DCG: return MeasureSpec::dcg(scale, mopt.b);
    }
    throw std::logic_error("unreachable");
}

int cmd_classify(const CommonOptions& opt, const MeasureOptions& mopt) {
    const RelevanceScale scale = scale_from(opt);
    const MeasureSpec spec = measure_from(mopt, scale, opt.n);
    const ClassificationReport report =
        classify(spec, ordering_from(opt), opt.n, opt.budget, opt.workers);
    if (opt.format == "csv")
        std::cout << classification_to_csv(report);
    else if (opt.format == "text")
        std::cout << classification_to_text(report);
    else
        std::cout << classification_to_json(report).dump(2) << "\n";
    return 0;
}

int cmd_distance(const CommonOptions& opt, const MeasureOptions& mopt, const std::string& k,
                 const std::vector<std::string>& runs) {
    const RelevanceScale scale = scale_from(opt);
    const Ordering ordering = ordering_from(opt);
    if (runs.size() != 2) throw UsageError("distance needs exactly two run literals");
    const SpaceAnalysis analysis =
        analyze_space(scale, opt.n, ordering, opt.budget, opt.workers);
    const JudgedRun r = parse_run_literal(runs[0], scale, run_kind(ordering));
    const JudgedRun s = parse_run_literal(runs[1], scale, run_kind(ordering));
    if (r.length() != opt.n || s.length() != opt.n)
        throw UsageError("run literals must have length N = " + std::to_string(opt.n));
    const int x = analysis.space->index_of(r);
    const int y = analysis.space->index_of(s);

    if (mopt.measure.empty()) {
        if (!analysis.verdict.is_distributive)
            throw UsageError("no positive valuation on " + ordering_name(ordering) +
                             " for c=" + std::to_string(scale.c()) +
                             "; use --measure for pseudo-distance");
        const Valuation val = valuation_from_weights(
            *analysis.tables, analysis.verdict,
            WeightAssignment::constant(k.empty() ? Rational(1) : parse_rational(k)));
        std::cout << format_rational(val.distance(x, y)) << "\n";
        return 0;
    }

    const MeasureSpec spec = measure_from(mopt, scale, opt.n);
    const int m = analysis.tables->meet(x, y);
    const int j = analysis.tables->join(x, y);
    if (m == LatticeTables::kMissing || j == LatticeTables::kMissing)
        throw UsageError("pair has no meet/join under " + ordering_name(ordering));
    if (spec.exact()) {
        const Rational d = eval_exact(spec, analysis.space->at(j)) -
                           eval_exact(spec, analysis.space->at(m));
        std::cout << format_rational(d) << "\n";
    } else {
        std::cout << eval_float(spec, analysis.space->at(j)) -
                         eval_float(spec, analysis.space->at(m))
                  << "\n";
    }
    return 0;
}

int cmd_hasse(const CommonOptions& opt) {
    const SpaceAnalysis analysis =
        analyze_space(scale_from(opt), opt.n, ordering_from(opt), opt.budget, opt.workers);
    std::cout << export_hasse(*analysis.poset);
    return 0;
}

int cmd_selftest(const CommonOptions& opt, const std::vector<int>& criteria) {
    if (!opt.gains.empty()) {
        scale_from(opt);  // validate; the criteria pin their own scales
        std::cerr << "note: acceptance criteria run with their pinned scales; --gains was only "
                     "validated\n";
    }
    SelftestConfig config;
    config.seed = opt.seed;
    config.budget = opt.budget;
    config.workers = opt.workers;
    const auto results = run_acceptance(config, std::cout, criteria);
    return acceptance_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order and metric structure of judged IR runs"};
    app.require_subcommand(1);

    CommonOptions opt;
    MeasureOptions mopt;
    std::string k_flag;
    std::vector<std::string> run_literals;
    std::vector<int> criteria;

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all runs in canonical order");
    add_common(enumerate, opt);
    enumerate->add_option("--kind", opt.kind, "run kind: set or rank");
    enumerate->add_option("--ordering", opt.ordering, "infer the run kind from an ordering");

    CLI::App* analyze = app.add_subcommand("analyze", "order/lattice structure of a space");
    add_common(analyze, opt);
    analyze->add_option("--ordering", opt.ordering, "ordering name")->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "valuation/isotone/positive verdicts");
    add_common(classify_cmd, opt);
    classify_cmd->add_option("--ordering", opt.ordering, "ordering name")->required();
    classify_cmd->add_option("--measure", mopt.measure, "gp, gr, grbp or dcg")->required();
    classify_cmd->add_option("--rb", mopt.rb, "recall base for gr (default N)");
    classify_cmd->add_option("--p", mopt.p, "persistence for grbp, rational in (0,1)");
    classify_cmd->add_option("--b", mopt.b, "log base for dcg")->check(CLI::Range(2, 64));
    classify_cmd->add_option("--format", opt.format, "json (default), csv or text");

    CLI::App* distance = app.add_subcommand("distance", "distance between two runs");
    add_common(distance, opt);
    distance->add_option("--ordering", opt.ordering, "ordering name")->required();
    distance->add_option("--k", k_flag, "constant join-irreducible weight (natural distance)");
    distance->add_option("--measure", mopt.measure, "measure-induced pseudo-distance");
    distance->add_option("--rb", mopt.rb, "recall base for gr");
    distance->add_option("--p", mopt.p, "persistence for grbp");
    distance->add_option("--b", mopt.b, "log base for dcg");
    distance->add_option("runs", run_literals, "two run literals, e.g. 01 10");

    CLI::App* hasse = app.add_subcommand("hasse", "DOT export of the Hasse diagram");
    add_common(hasse, opt);
    hasse->add_option("--ordering", opt.ordering, "ordering name")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    add_common(selftest, opt);
    selftest->add_option("--criteria", criteria, "criterion ids to run (default: all)")
        ->check(CLI::Range(1, 9));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (analyze->parsed()) return cmd_analyze(opt);
        if (classify_cmd->parsed()) return cmd_classify(opt, mopt);
        if (distance->parsed()) return cmd_distance(opt, mopt, k_flag, run_literals);
        if (hasse->parsed()) return cmd_hasse(opt);
        if (selftest->parsed()) return cmd_selftest(opt, criteria);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

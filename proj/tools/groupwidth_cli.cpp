// groupwidth: generate complexes, analyze labelings, search for minimal
// width and run the built-in verification cases.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupwidth/error.hpp"
#include "groupwidth/generators.hpp"
#include "groupwidth/homology.hpp"
#include "groupwidth/morse.hpp"
#include "groupwidth/scx.hpp"
#include "groupwidth/search.hpp"
#include "groupwidth/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenerateArgs {
    std::string kind;
    int m = 0;
    int dim = 0;
    int res = 0;
    std::vector<std::string> inputs;
    std::vector<int> at{0, 0};
    std::optional<int> arc_len;
    int gens = 0;
    std::vector<std::string> relators;
    std::string out;
};

struct AnalyzeArgs {
    std::string input;
    std::string field = "Q";
    std::string labels = "file";
    std::string out;
};

struct SearchArgs {
    std::string input;
    std::string field = "Q";
    std::string mode = "exhaustive";
    std::uint64_t seed = gw::AnnealParams{}.seed;
    std::uint64_t steps = gw::AnnealParams{}.steps;
    std::uint32_t restarts = gw::AnnealParams{}.restarts;
    std::optional<double> budget_seconds;
    std::string out;
};

struct VerifyArgs {
    std::string case_filter;
    double budget_seconds = 600;
    std::string out;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

std::chrono::milliseconds to_budget(double seconds)
{
    if (seconds < 0) throw UsageError("--budget-seconds must be non-negative");
    return std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text << '\n';
}

gw::FieldSpec parse_field(const std::string& text) { return gw::FieldSpec::parse(text); }

/// Labels stored in the document, or the family tent when the file has none.
gw::LabeledComplex labeled_input(const gw::ScxDocument& doc)
{
    if (doc.labels) return {doc.complex, doc.labels};
    return {doc.complex, gw::family_tent(doc.family)};
}

json summary(const gw::SimplicialComplex& k)
{
    json counts = json::array();
    for (int d = 0; d <= k.dim(); ++d) counts.push_back(k.count(d));
    return {{"vertices", k.vertex_count()},
            {"simplices", counts},
            {"euler_characteristic", gw::euler_characteristic(k)},
            {"betti1_Q", gw::betti1(k, gw::FieldSpec::rationals())}};
}

std::vector<gw::ScxDocument> read_inputs(const GenerateArgs& args)
{
    if (args.inputs.size() != 2) throw UsageError(args.kind + " needs exactly two --inputs");
    return {gw::read_scx(args.inputs[0]), gw::read_scx(args.inputs[1])};
}

int cmd_generate(const GenerateArgs& args)
{
    gw::ScxDocument doc;
    if (args.kind == "circle") {
        doc.complex = gw::generate_circle(args.m);
        doc.family = {{"kind", "circle"}, {"m", args.m}};
    } else if (args.kind == "torus") {
        doc.complex = gw::generate_torus(args.dim, args.res).complex;
        doc.family = {{"kind", "torus"}, {"dim", args.dim}, {"res", args.res}};
    } else if (args.kind == "wedge") {
        const auto in = read_inputs(args);
        doc.complex = gw::wedge(in[0].complex, args.at[0], in[1].complex, args.at[1]);
    } else if (args.kind == "spread-wedge") {
        const auto in = read_inputs(args);
        const auto l1 = labeled_input(in[0]);
        const auto l2 = labeled_input(in[1]);
        const int arc = args.arc_len.value_or(gw::min_arc_length(l1, args.at[0], l2, args.at[1]));
        auto joined = gw::spread_wedge(l1, args.at[0], l2, args.at[1], arc);
        doc.complex = std::move(joined.complex);
        doc.labels = std::move(joined.labeling);
    } else if (args.kind == "product") {
        const auto in = read_inputs(args);
        const auto p = gw::product_complex(in[0].complex, in[1].complex);
        doc.complex = p.complex;
        if (in[0].labels) doc.labels = gw::pullback_labeling(p, *in[0].labels);
        if (!in[0].family.is_null()) {
            doc.family = {{"kind", "product"}, {"first", in[0].family}, {"second_count", p.second_count}};
        }
    } else if (args.kind == "presentation") {
        std::vector<gw::Word> relators;
        for (const auto& r : args.relators) relators.push_back(gw::parse_word(r, args.gens));
        doc.complex = gw::presentation_complex(args.gens, relators);
    } else {
        throw UsageError("unknown kind '" + args.kind + "'");
    }

    const json info = summary(doc.complex);
    if (args.out.empty()) {
        std::cout << gw::dump_scx(doc) << '\n';
        std::cerr << info.dump() << '\n';
    } else {
        gw::write_scx(args.out, doc);
        std::cout << info.dump() << '\n';
    }
    return kExitOk;
}

int cmd_analyze(const AnalyzeArgs& args)
{
    const auto field = parse_field(args.field);
    const auto doc = gw::read_scx(args.input);
    gw::MorseLabeling labeling;
    if (args.labels == "file") {
        if (!doc.labels) throw gw::Error(gw::ErrorCode::MissingLabels, args.input + " has no labels");
        labeling = *doc.labels;
    } else if (args.labels == "constant") {
        labeling = gw::MorseLabeling::constant(doc.complex.vertex_count());
    } else {
        auto tent = gw::family_tent(doc.family);
        if (!tent) throw gw::Error(gw::ErrorCode::MissingLabels, args.input + " does not record a family with a tent labeling");
        labeling = std::move(*tent);
    }
    const auto violations = gw::validate_labeling(doc.complex, labeling);
    if (!violations.empty()) throw gw::Error(gw::ErrorCode::InvalidLabeling, gw::describe_violations(violations));
    emit(gw::report_json(gw::hcwr_value(doc.complex, labeling, field)).dump(2), args.out);
    return kExitOk;
}

int cmd_search(const SearchArgs& args)
{
    const auto field = parse_field(args.field);
    const auto doc = gw::read_scx(args.input);
    gw::SearchResult result;
    if (args.mode == "exhaustive") {
        gw::SearchOptions options;
        options.workers = worker_count();
        if (args.budget_seconds) options.budget = to_budget(*args.budget_seconds);
        result = gw::exhaustive_min(doc.complex, field, options);
    } else {
        gw::AnnealParams params;
        params.seed = args.seed;
        params.steps = args.steps;
        params.restarts = args.restarts;
        params.check();
        result = gw::anneal_min(doc.complex, field, params, worker_count());
    }
    emit(gw::search_json(result, field, args.mode).dump(2), args.out);
    return kExitOk;
}

int cmd_verify(const VerifyArgs& args)
{
    const auto cases = gw::run_verification(args.case_filter, to_budget(args.budget_seconds), worker_count());
    if (cases.empty()) throw UsageError("no case matches '" + args.case_filter + "'");
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto& c : cases) {
        failed += c.status == gw::CaseStatus::Fail;
        skipped += c.status == gw::CaseStatus::SkippedBudget;
        std::cerr << gw::to_string(c.status) << "  " << c.name << "  (" << c.seconds << " s)";
        if (!c.note.empty()) std::cerr << "  " << c.note;
        std::cerr << '\n';
    }
    const json report = {{"cases", gw::verification_json(cases)},
                         {"passed", cases.size() - failed - skipped},
                         {"failed", failed},
                         {"skipped", skipped}};
    emit(report.dump(2), args.out);
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homological connected width of simplicial complexes"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Build a complex and write it as SCX");
    generate->add_option("kind", gen.kind, "circle | torus | wedge | spread-wedge | product | presentation")
        ->required()
        ->check(CLI::IsMember({"circle", "torus", "wedge", "spread-wedge", "product", "presentation"}));
    generate->add_option("--m", gen.m, "circle length");
    generate->add_option("--dim", gen.dim, "torus dimension");
    generate->add_option("--res", gen.res, "torus grid resolution");
    generate->add_option("--inputs", gen.inputs, "two SCX files (wedge, spread-wedge, product)")->expected(2);
    generate->add_option("--at", gen.at, "wedge vertices in the two inputs")->expected(2);
    generate->add_option("--arc-len", gen.arc_len, "spread-wedge arc length (default: the smallest allowed)");
    generate->add_option("--gens", gen.gens, "number of generators");
    generate->add_option("--relator", gen.relators, "relator word, e.g. aaa or abAB (repeatable)");
    generate->add_option("--out", gen.out, "output path (default: SCX on stdout, summary on stderr)");

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Width report for a labeled complex");
    analyze->add_option("input", an.input, "SCX file")->required();
    analyze->add_option("--field", an.field, "Q or Fp with p prime, e.g. F3");
    analyze->add_option("--labels", an.labels, "file | tent | constant")->check(CLI::IsMember({"file", "tent", "constant"}));
    analyze->add_option("--out", an.out, "write the report here instead of stdout");

    SearchArgs se;
    auto* search = app.add_subcommand("search", "Search for a width-minimizing labeling");
    search->add_option("input", se.input, "SCX file")->required();
    search->add_option("--field", se.field, "Q or Fp with p prime, e.g. F3");
    search->add_option("--mode", se.mode, "exhaustive | anneal")->check(CLI::IsMember({"exhaustive", "anneal"}));
    search->add_option("--seed", se.seed, "annealing seed");
    search->add_option("--steps", se.steps, "annealing steps per restart");
    search->add_option("--restarts", se.restarts, "annealing restarts");
    search->add_option("--budget-seconds", se.budget_seconds, "exhaustive time budget (default: none)");
    search->add_option("--out", se.out, "write the result here instead of stdout");

    VerifyArgs ve;
    auto* verify = app.add_subcommand("verify", "Run the built-in verification cases");
    verify->add_option("--case", ve.case_filter, "case name or substring");
    verify->add_option("--budget-seconds", ve.budget_seconds, "time budget per exhaustive search");
    verify->add_option("--out", ve.out, "write the summary here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) return cmd_generate(gen);
        if (*analyze) return cmd_analyze(an);
        if (*search) return cmd_search(se);
        return cmd_verify(ve);
    } catch (const gw::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

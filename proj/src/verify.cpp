#include "groupwidth/verify.hpp"

#include <algorithm>
#include <functional>

#include "groupwidth/generators.hpp"
#include "groupwidth/homology.hpp"
#include "groupwidth/morse.hpp"
#include "groupwidth/search.hpp"

namespace gw {

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
    std::chrono::milliseconds budget;
    unsigned workers;
};

// Builder for one case; exhaustive searches that do not finish mark it skipped.
class CaseBuilder {
public:
    CaseBuilder(VerificationCase& c) : case_(c) {}

    void expect(std::string what, long long expected, long long actual, Basis basis)
    {
        case_.checks.push_back({std::move(what), expected, actual, Comparison::Equal, basis});
    }

    void expect_at_least(std::string what, long long expected, long long actual, Basis basis)
    {
        case_.checks.push_back({std::move(what), expected, actual, Comparison::AtLeast, basis});
    }

    /// False (and the case marked skipped) when the search ran out of budget.
    bool finished(const SearchResult& r, const std::string& what)
    {
        if (r.exhaustive) return true;
        skipped_ = true;
        case_.note += (case_.note.empty() ? "" : "; ") + what + " did not finish within the budget (best so far " +
                      std::to_string(r.best_value) + ")";
        return false;
    }

    bool skipped() const { return skipped_; }

private:
    VerificationCase& case_;
    bool skipped_ = false;
};

long long value(const WidthReport& r) { return static_cast<long long>(r.max_rank); }

LabeledComplex tent_torus(int k, int n)
{
    const auto t = generate_torus(k, n);
    return {t.complex, tent_labeling(t, 0)};
}

LabeledComplex tent_circle(int m) { return {generate_circle(m), circle_tent_labeling(m)}; }

struct CaseDef {
    const char* name;
    const char* claim;
    std::function<void(CaseBuilder&, const Context&)> body;
};

const std::vector<CaseDef>& cases()
{
    static const std::vector<CaseDef> defs = {
        {"torus-k2", "w(Z^2) = 1: the tent labeling of a triangulated 2-torus has width 1 and Q_f a circle",
         [](CaseBuilder& b, const Context&) {
             const auto t = tent_torus(2, 4);
             const auto r = hcwr_value(t.complex, *t.labeling, FieldSpec::rationals());
             b.expect("betti1(T^2; Q)", 2, static_cast<long long>(betti1(t.complex, FieldSpec::rationals())), Basis::Derived);
             b.expect("tent width over Q", 1, value(r), Basis::Theorem);
             b.expect("betti1(Q_f)", 1, r.qf_betti1, Basis::Theorem);
         }},
        {"torus-k3", "w(Z^3) = 2: the tent labeling of a triangulated 3-torus has width 2",
         [](CaseBuilder& b, const Context&) {
             const auto t = tent_torus(3, 4);
             const auto r = hcwr_value(t.complex, *t.labeling, FieldSpec::rationals());
             b.expect("betti1(T^3; Q)", 3, static_cast<long long>(betti1(t.complex, FieldSpec::rationals())), Basis::Derived);
             b.expect("tent width over Q", 2, value(r), Basis::Theorem);
             b.expect("betti1(Q_f)", 1, r.qf_betti1, Basis::Theorem);
         }},
        {"torus-lower-bound", "no labeling of a triangulated 2-torus reaches width 0",
         [](CaseBuilder& b, const Context& ctx) {
             const auto coarse = generate_torus(2, 3);
             const auto r3 = exhaustive_min(coarse.complex, FieldSpec::rationals(), {ctx.budget, ctx.workers});
             if (b.finished(r3, "exhaustive search on torus(2,3)")) {
                 b.expect_at_least("min width of torus(2,3)", 1, static_cast<long long>(r3.best_value), Basis::Theorem);
                 // too coarse for a tent: every labeling of the 9-vertex torus keeps a slab with both cycles
                 b.expect("min width of torus(2,3)", 2, static_cast<long long>(r3.best_value), Basis::Derived);
             }
             const auto fine = generate_torus(2, 4);
             const auto r4 = exhaustive_min(fine.complex, FieldSpec::rationals(), {ctx.budget, ctx.workers});
             if (b.finished(r4, "exhaustive search on torus(2,4)")) {
                 b.expect("min width of torus(2,4)", 1, static_cast<long long>(r4.best_value), Basis::Theorem);
             }
         }},
        {"free-width-zero", "free groups have width 0 (upper bound on subdivided circles and spread wedges)",
         [](CaseBuilder& b, const Context& ctx) {
             const auto r = exhaustive_min(generate_circle(6), FieldSpec::rationals(), {ctx.budget, ctx.workers});
             if (b.finished(r, "exhaustive search on circle(6)")) b.expect("min width of circle(6)", 0, static_cast<long long>(r.best_value), Basis::Theorem);
             const auto h = tent_circle(6);
             const auto joined = spread_wedge(h, 0, h, 0, min_arc_length(h, 0, h, 0));
             b.expect("spread wedge of two tent hexagons", 0, value(hcwr_value(joined.complex, *joined.labeling, FieldSpec::rationals())),
                      Basis::Theorem);
         }},
        {"circle3-width-one", "the 3-vertex circle cannot be sliced: every labeling has width 1",
         [](CaseBuilder& b, const Context& ctx) {
             const auto r = exhaustive_min(generate_circle(3), FieldSpec::rationals(), {ctx.budget, ctx.workers});
             if (b.finished(r, "exhaustive search on circle(3)")) b.expect("min width of circle(3)", 1, static_cast<long long>(r.best_value), Basis::Derived);
         }},
        {"moore-f3", "w(Z/3) = 1, computed with coefficients in F_3",
         [](CaseBuilder& b, const Context& ctx) {
             const auto f3 = FieldSpec::prime(3);
             const auto k = presentation_complex(1, {Word{1, 1, 1}});
             b.expect("betti1(<a|a^3>; F_3)", 1, static_cast<long long>(betti1(k, f3)), Basis::Derived);
             b.expect("betti1(<a|a^3>; Q)", 0, static_cast<long long>(betti1(k, FieldSpec::rationals())), Basis::Derived);
             b.expect("constant labeling width over F_3", 1, value(hcwr_value(k, MorseLabeling::constant(k.vertex_count()), f3)),
                      Basis::Trivial);
             const auto r = exhaustive_min(k, f3, {ctx.budget, ctx.workers});
             if (b.finished(r, "exhaustive search over F_3")) b.expect_at_least("min width over F_3", 1, static_cast<long long>(r.best_value), Basis::Theorem);
         }},
        {"free-product", "w(G1 * G2) = max(w(G1), w(G2)), upper bound via spread wedges",
         [](CaseBuilder& b, const Context&) {
             const auto t = tent_torus(2, 4);
             const auto tt = spread_wedge(t, 0, t, 0, min_arc_length(t, 0, t, 0));
             b.expect("torus(2,4) spread-wedge torus(2,4)", 1, value(hcwr_value(tt.complex, *tt.labeling, FieldSpec::rationals())),
                      Basis::Theorem);
             b.expect("betti1 of the spread wedge", 4, static_cast<long long>(betti1(tt.complex, FieldSpec::rationals())), Basis::Derived);
             const auto h = tent_circle(6);
             const auto th = spread_wedge(t, 0, h, 0, min_arc_length(t, 0, h, 0));
             b.expect("torus(2,4) spread-wedge hexagon", 1, value(hcwr_value(th.complex, *th.labeling, FieldSpec::rationals())),
                      Basis::Theorem);
         }},
        {"product-bound", "w(G1 x G2) <= w(G1) + rank(G2): circle x circle with a pulled-back tent",
         [](CaseBuilder& b, const Context&) {
             const auto c = generate_circle(4);
             const auto p = product_complex(c, c);
             b.expect("euler characteristic", 0, euler_characteristic(p.complex), Basis::Trivial);
             b.expect("betti1(S^1 x S^1; Q)", 2, static_cast<long long>(betti1(p.complex, FieldSpec::rationals())), Basis::Derived);
             const auto f = pullback_labeling(p, circle_tent_labeling(4));
             b.expect("pulled-back tent width", 1, value(hcwr_value(p.complex, f, FieldSpec::rationals())), Basis::Theorem);
         }},
        {"z-times-z3", "w(Z x Z/3) = rank - 1 = 1 over F_3: circle x Moore space with a pulled-back tent",
         [](CaseBuilder& b, const Context&) {
             const auto f3 = FieldSpec::prime(3);
             const auto p = product_complex(generate_circle(4), presentation_complex(1, {Word{1, 1, 1}}));
             b.expect("betti1(F_3)", 2, static_cast<long long>(betti1(p.complex, f3)), Basis::Derived);
             const auto f = pullback_labeling(p, circle_tent_labeling(4));
             b.expect("pulled-back tent width over F_3", 1, value(hcwr_value(p.complex, f, f3)), Basis::Theorem);
         }},
        {"anneal-optima", "annealing reaches the known optima with the pinned seed",
         [](CaseBuilder& b, const Context& ctx) {
             AnnealParams params;
             params.seed = 7;
             const auto t = generate_torus(2, 4);
             b.expect("anneal torus(2,4)", 1, static_cast<long long>(anneal_min(t.complex, FieldSpec::rationals(), params, ctx.workers).best_value),
                      Basis::Theorem);
             b.expect("anneal circle(6)", 0,
                      static_cast<long long>(anneal_min(generate_circle(6), FieldSpec::rationals(), params, ctx.workers).best_value),
                      Basis::Derived);
         }},
    };
    return defs;
}

}  // namespace

const char* to_string(Basis basis)
{
    switch (basis) {
    case Basis::Theorem: return "theorem";
    case Basis::Derived: return "derived";
    case Basis::Trivial: return "trivial";
    }
    return "derived";
}

const char* to_string(CaseStatus status)
{
    switch (status) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::SkippedBudget: return "skipped(budget)";
    }
    return "fail";
}

std::vector<std::string> verification_case_names()
{
    std::vector<std::string> names;
    for (const auto& c : cases()) names.emplace_back(c.name);
    return names;
}

std::vector<VerificationCase> run_verification(std::string_view filter, std::chrono::milliseconds budget, unsigned workers)
{
    const auto& defs = cases();
    const bool exact = std::any_of(defs.begin(), defs.end(), [&](const CaseDef& d) { return filter == d.name; });
    std::vector<VerificationCase> out;
    for (const auto& def : defs) {
        const std::string_view name = def.name;
        if (exact ? name != filter : name.find(filter) == std::string_view::npos) continue;
        VerificationCase c;
        c.name = def.name;
        c.claim = def.claim;
        CaseBuilder builder(c);
        const auto start = Clock::now();
        try {
            def.body(builder, Context{budget, workers});
            const bool all_ok = std::all_of(c.checks.begin(), c.checks.end(), [](const Check& k) { return k.ok(); });
            if (!all_ok) {
                c.status = CaseStatus::Fail;
            } else if (builder.skipped()) {
                c.status = CaseStatus::SkippedBudget;
            }
        } catch (const std::exception& e) {
            c.status = CaseStatus::Fail;
            c.note = e.what();
        }
        c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        out.push_back(std::move(c));
    }
    return out;
}

nlohmann::json verification_json(const std::vector<VerificationCase>& cases)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& k : c.checks) {
            checks.push_back({{"what", k.what},
                              {"expected", k.expected},
                              {"actual", k.actual},
                              {"comparison", k.comparison == Comparison::Equal ? "==" : ">="},
                              {"basis", to_string(k.basis)},
                              {"ok", k.ok()}});
        }
        out.push_back({{"name", c.name},
                       {"claim", c.claim},
                       {"status", to_string(c.status)},
                       {"seconds", c.seconds},
                       {"note", c.note},
                       {"checks", std::move(checks)}});
    }
    return out;
}

}  // namespace gw

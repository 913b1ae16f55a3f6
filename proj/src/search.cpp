#include "groupwidth/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <thread>

#include "groupwidth/error.hpp"

namespace gw {

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn(0..count-1) on up to `workers` threads; fn must only touch its own slot.
template <class Fn>
void run_tasks(std::size_t count, unsigned workers, Fn&& fn)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

std::vector<int> bfs_distances(const SimplicialComplex& complex, Vertex source)
{
    std::vector<int> dist(complex.vertex_count(), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : complex.neighbors()[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// Vertex order and per-position constraints of the enumeration.
struct Plan {
    std::vector<Vertex> order;
    std::vector<int> cap;                         // by position: eccentricity of the vertex
    std::vector<std::vector<Vertex>> earlier;     // by position: neighbours placed before it
};

Plan make_plan(const SimplicialComplex& complex)
{
    if (complex.vertex_count() == 0 || !is_connected(complex)) {
        throw Error(ErrorCode::NotConnected, "labeling search needs a nonempty connected complex");
    }
    const std::size_t n = complex.vertex_count();
    Plan plan;
    const auto from_root = bfs_distances(complex, 0);
    plan.order.resize(n);
    for (std::size_t v = 0; v < n; ++v) plan.order[v] = static_cast<Vertex>(v);
    // breadth-first from vertex 0, ties by id (stable sort on distance)
    std::stable_sort(plan.order.begin(), plan.order.end(),
                     [&](Vertex a, Vertex b) { return from_root[static_cast<std::size_t>(a)] < from_root[static_cast<std::size_t>(b)]; });

    std::vector<std::size_t> position(n);
    for (std::size_t t = 0; t < n; ++t) position[static_cast<std::size_t>(plan.order[t])] = t;
    plan.cap.resize(n);
    plan.earlier.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        const Vertex v = plan.order[t];
        const auto dist = bfs_distances(complex, v);
        plan.cap[t] = *std::max_element(dist.begin(), dist.end());
        for (Vertex w : complex.neighbors()[static_cast<std::size_t>(v)]) {
            if (position[static_cast<std::size_t>(w)] < t) plan.earlier[t].push_back(w);
        }
    }
    return plan;
}

/// Admissible label range for position t given the labels placed so far.
std::pair<int, int> label_range(const Plan& plan, std::size_t t, const std::vector<int>& labels)
{
    int lo = 0;
    int hi = plan.cap[t];
    for (Vertex w : plan.earlier[t]) {
        const int l = labels[static_cast<std::size_t>(w)];
        lo = std::max(lo, l - 1);
        hi = std::min(hi, l + 1);
    }
    return {lo, hi};
}

bool has_zero(const std::vector<int>& labels) { return std::find(labels.begin(), labels.end(), 0) != labels.end(); }

// Plain enumeration (no width pruning) from position t; `leaf` sees complete assignments.
template <class Leaf>
void enumerate_from(const Plan& plan, std::size_t t, std::vector<int>& labels, std::size_t stop_depth, Leaf&& leaf)
{
    if (t == stop_depth) {
        leaf(labels);
        return;
    }
    const Vertex v = plan.order[t];
    const auto [lo, hi] = label_range(plan, t, labels);
    for (int l = lo; l <= hi; ++l) {
        labels[static_cast<std::size_t>(v)] = l;
        enumerate_from(plan, t + 1, labels, stop_depth, leaf);
    }
    labels[static_cast<std::size_t>(v)] = kUnassigned;
}

struct TaskResult {
    std::size_t best;
    std::vector<int> certificate;  // empty when nothing beat the initial bound
    std::uint64_t visited = 0;
};

class BranchAndBound {
public:
    BranchAndBound(const Plan& plan, const WidthEvaluator& evaluator, std::optional<Clock::time_point> deadline,
                   std::atomic<bool>& out_of_time)
        : plan_(plan), evaluator_(evaluator), deadline_(deadline), out_of_time_(out_of_time)
    {
    }

    TaskResult run(std::vector<int> labels, std::size_t start, std::size_t initial_bound)
    {
        result_ = TaskResult{initial_bound, {}, 0};
        labels_ = std::move(labels);
        const std::size_t bound = evaluator_.max_rank(labels_, result_.best);
        if (bound < result_.best) {
            last_value_ = bound;
            descend(start);
        }
        return std::move(result_);
    }

private:
    void descend(std::size_t t)
    {
        if (result_.best == 0 || out_of_time_.load(std::memory_order_relaxed)) return;
        if (deadline_ && (++ticks_ & 255u) == 0 && Clock::now() > *deadline_) {
            out_of_time_ = true;
            return;
        }
        if (t == plan_.order.size()) {
            if (!has_zero(labels_)) return;
            ++result_.visited;
            // the bound computed on the last assignment is already the full value
            result_.best = last_value_;
            result_.certificate = labels_;
            return;
        }
        const Vertex v = plan_.order[t];
        const auto [lo, hi] = label_range(plan_, t, labels_);
        for (int l = lo; l <= hi && result_.best > 0; ++l) {
            labels_[static_cast<std::size_t>(v)] = l;
            const std::size_t bound = evaluator_.max_rank(labels_, result_.best);
            if (bound < result_.best) {
                last_value_ = bound;
                descend(t + 1);
            }
        }
        labels_[static_cast<std::size_t>(v)] = kUnassigned;
    }

    const Plan& plan_;
    const WidthEvaluator& evaluator_;
    std::optional<Clock::time_point> deadline_;
    std::atomic<bool>& out_of_time_;
    std::vector<int> labels_;
    TaskResult result_{};
    std::size_t last_value_ = 0;
    std::uint64_t ticks_ = 0;
};

double energy(const WidthEvaluator::Score& s, std::size_t n, std::size_t betti)
{
    // lexicographic (max, count, sum) folded into one number: count <= 2n, sum <= 2n * betti
    const double count_scale = 2.0 * static_cast<double>(n) + 1.0;
    const double sum_scale = count_scale * (2.0 * static_cast<double>(n) * static_cast<double>(betti) + 1.0);
    return static_cast<double>(s.max_rank) + static_cast<double>(s.count_at_max) / count_scale +
           static_cast<double>(s.rank_sum) / sum_scale;
}

SearchResult anneal_once(const WidthEvaluator& evaluator, const AnnealParams& params, std::uint64_t seed)
{
    const auto& complex = evaluator.complex();
    const std::size_t n = complex.vertex_count();
    const auto& nbrs = complex.neighbors();
    Lcg64 rng(seed);

    std::vector<int> labels(n, 0);
    auto current = evaluator.score(labels);
    double current_energy = energy(current, n, evaluator.betti1());
    auto best = current;
    std::vector<int> best_labels = labels;
    std::uint64_t visited = 1;
    double temperature = params.initial_temperature.value();
    const double cooling = params.cooling_rate.value();

    for (std::uint64_t step = 0; step < params.steps && best.max_rank > 0; ++step, temperature *= cooling) {
        const auto v = static_cast<std::size_t>(rng.below(static_cast<std::uint32_t>(n)));
        const int proposal = labels[v] + ((rng.next() >> 63) ? 1 : -1);
        const bool valid = std::all_of(nbrs[v].begin(), nbrs[v].end(),
                                       [&](Vertex w) { return std::abs(labels[static_cast<std::size_t>(w)] - proposal) <= 1; });
        if (!valid) continue;
        const int previous = labels[v];
        labels[v] = proposal;
        const auto candidate = evaluator.score(labels);
        ++visited;
        const double candidate_energy = energy(candidate, n, evaluator.betti1());
        const double delta = candidate_energy - current_energy;
        if (delta <= 0.0 || rng.unit() < std::exp(-delta / temperature)) {
            current = candidate;
            current_energy = candidate_energy;
            if (candidate < best) {
                best = candidate;
                best_labels = labels;
            }
        } else {
            labels[v] = previous;
        }
    }

    SearchResult out;
    out.certificate = MorseLabeling(std::move(best_labels)).normalized();
    out.best_value = evaluator.max_rank(out.certificate.values());
    out.exhaustive = false;
    out.labelings_visited = visited;
    out.seed = seed;
    return out;
}

}  // namespace

void AnnealParams::check() const
{
    if (steps == 0) throw std::invalid_argument("annealing needs at least one step");
    if (initial_temperature.num <= 0 || initial_temperature.den <= 0) throw std::invalid_argument("initial temperature must be positive");
    if (cooling_rate.num <= 0 || cooling_rate.den <= 0 || cooling_rate.num >= cooling_rate.den) {
        throw std::invalid_argument("cooling rate must lie strictly between 0 and 1");
    }
}

void enumerate_normalized_labelings(const SimplicialComplex& complex, const std::function<void(const MorseLabeling&)>& visit)
{
    const Plan plan = make_plan(complex);
    std::vector<int> labels(complex.vertex_count(), kUnassigned);
    enumerate_from(plan, 0, labels, plan.order.size(), [&](const std::vector<int>& full) {
        if (has_zero(full)) visit(MorseLabeling(full));
    });
}

SearchResult exhaustive_min(const SimplicialComplex& complex, const FieldSpec& field, const SearchOptions& options)
{
    const Plan plan = make_plan(complex);
    const WidthEvaluator evaluator(complex, field);
    const std::size_t n = complex.vertex_count();

    SearchResult result;
    result.certificate = MorseLabeling::constant(n, 0);
    result.best_value = evaluator.betti1();
    result.labelings_visited = 1;
    result.exhaustive = true;
    if (result.best_value == 0) return result;

    // fixed task split: every valid assignment of the first few positions
    const std::size_t prefix_depth = std::min<std::size_t>(n, 4);
    std::vector<std::vector<int>> prefixes;
    {
        std::vector<int> labels(n, kUnassigned);
        enumerate_from(plan, 0, labels, prefix_depth, [&](const std::vector<int>& p) { prefixes.push_back(p); });
    }

    std::optional<Clock::time_point> deadline;
    if (options.budget) deadline = Clock::now() + *options.budget;
    std::atomic<bool> out_of_time{false};
    std::vector<TaskResult> outcomes(prefixes.size());
    run_tasks(prefixes.size(), options.workers, [&](std::size_t i) {
        BranchAndBound search(plan, evaluator, deadline, out_of_time);
        outcomes[i] = search.run(prefixes[i], prefix_depth, result.best_value);
    });

    for (const auto& o : outcomes) {
        result.labelings_visited += o.visited;
        if (!o.certificate.empty() && o.best < result.best_value) {
            result.best_value = o.best;
            result.certificate = MorseLabeling(o.certificate);
        }
    }
    result.exhaustive = !out_of_time.load();
    return result;
}

SearchResult anneal_min(const SimplicialComplex& complex, const FieldSpec& field, const AnnealParams& params, unsigned workers)
{
    params.check();
    make_plan(complex);  // connectivity check
    const WidthEvaluator evaluator(complex, field);

    Lcg64 seeder(params.seed);
    std::vector<std::uint64_t> seeds(std::max<std::uint32_t>(params.restarts, 1));
    for (auto& s : seeds) s = seeder.next();

    std::vector<SearchResult> runs(seeds.size());
    run_tasks(seeds.size(), workers, [&](std::size_t i) { runs[i] = anneal_once(evaluator, params, seeds[i]); });

    SearchResult best = runs.front();
    std::uint64_t visited = 0;
    for (const auto& r : runs) {
        visited += r.labelings_visited;
        if (r.best_value < best.best_value || (r.best_value == best.best_value && r.certificate < best.certificate)) best = r;
    }
    best.labelings_visited = visited;
    best.seed = params.seed;
    best.exhaustive = false;
    return best;
}

Bounds certified_bounds(const SimplicialComplex& complex, const FieldSpec& field, const SearchOptions& options,
                        const AnnealParams& params)
{
    Bounds b;
    b.exhaustive = exhaustive_min(complex, field, options);
    if (b.exhaustive.exhaustive) {
        b.lower = b.upper = b.exhaustive.best_value;
        return b;
    }
    b.anneal = anneal_min(complex, field, params, options.workers);
    b.lower = 0;
    b.upper = std::min(b.exhaustive.best_value, b.anneal->best_value);
    return b;
}

}  // namespace gw

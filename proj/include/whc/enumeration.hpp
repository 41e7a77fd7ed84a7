// enumeration.hpp — exhaustive and seeded-random generation of balanced
// bipartite graphs, and the sweep harness that runs a condition checker over
// the generated graphs and confirms every certificate against the oracle.
//
// Exhaustive mode walks every biadjacency bit-code once (row-major, bit
// i*n+j is edge (i,j)); it refuses n > 4 unless forced, since the space is
// 2^(n^2). Random mode draws uniform independent edge indicators; sample i
// is generated from a sub-seed derived from (seed, i), so the stream does
// not depend on how samples are partitioned across workers. Filters are
// applied by rejection inside a sample's own stream.
#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "whc/bipartite_graph.hpp"
#include "whc/closure.hpp"
#include "whc/conditions.hpp"
#include "whc/graph_io.hpp"
#include "whc/oracle.hpp"
#include "whc/prng.hpp"

namespace whc {

struct ExhaustiveMode {
    bool force = false;
};

struct RandomMode {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

using EnumMode = std::variant<ExhaustiveMode, RandomMode>;

using GraphPredicate = std::function<bool(const BipartiteGraph&)>;
// visit(graph, index): exhaustive index is the biadjacency code, random
// index is the sample number.
using GraphVisitor = std::function<void(const BipartiteGraph&, std::uint64_t)>;

namespace detail {

inline BipartiteGraph random_graph(int n, SplitMix64& rng) {
    std::vector<BipartiteGraph::Row> rows(static_cast<std::size_t>(n));
    const BipartiteGraph::Row mask = (BipartiteGraph::Row{1} << n) - 1;
    for (auto& r : rows) r = rng.next() & mask;
    return BipartiteGraph(n, n, std::move(rows));
}

inline BipartiteGraph nth_random_graph(int n, std::uint64_t seed, std::uint64_t index,
                                       const GraphPredicate& filter) {
    SplitMix64 rng = SplitMix64::for_index(seed, index);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        BipartiteGraph g = random_graph(n, rng);
        if (!filter || filter(g)) return g;
    }
    throw std::runtime_error("random graph filter rejected 100000 consecutive samples");
}

} // namespace detail

// Returns the number of graphs visited.
inline std::uint64_t enumerate_graphs(int n, const EnumMode& mode, const GraphPredicate& filter,
                                      const GraphVisitor& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: n must be >= 1");
    std::uint64_t visited = 0;
    if (const auto* ex = std::get_if<ExhaustiveMode>(&mode)) {
        if (n > 4 && !ex->force)
            throw std::invalid_argument(
                "exhaustive enumeration beyond n=4 walks 2^(n^2) graphs; pass force to override");
        if (n > 5) throw std::invalid_argument("exhaustive enumeration capped at n=5 even when forced");
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        for (std::uint64_t code = 0; code < total; ++code) {
            BipartiteGraph g = BipartiteGraph::from_code(n, n, code);
            if (filter && !filter(g)) continue;
            visit(g, code);
            ++visited;
        }
        return visited;
    }
    const auto& rnd = std::get<RandomMode>(mode);
    if (n > 12) throw std::invalid_argument("random enumeration capped at n=12");
    for (std::uint64_t i = 0; i < rnd.samples; ++i) {
        visit(detail::nth_random_graph(n, rnd.seed, i, filter), i);
        ++visited;
    }
    return visited;
}

// --------------------------------------------------------------------------
// Sweep harness

struct SweepTarget {
    enum class Kind { Condition, AllConditions, Sandwich, FullSideContainment } kind =
        Kind::AllConditions;
    ConditionId condition = ConditionId::PairSum;

    static SweepTarget all() { return {Kind::AllConditions, ConditionId::PairSum}; }
    static SweepTarget single(ConditionId id) { return {Kind::Condition, id}; }
    static SweepTarget sandwich() { return {Kind::Sandwich, ConditionId::PairSum}; }
    static SweepTarget full_side_containment() {
        return {Kind::FullSideContainment, ConditionId::PairSum};
    }

    std::string name() const {
        switch (kind) {
            case Kind::Condition: return condition_name(condition);
            case Kind::AllConditions: return "all";
            case Kind::Sandwich: return "sandwich";
            case Kind::FullSideContainment: return "full_side_containment";
        }
        return "?";
    }
};

inline std::optional<SweepTarget> sweep_target_from_name(std::string_view name) {
    if (name == "all") return SweepTarget::all();
    if (name == "sandwich") return SweepTarget::sandwich();
    if (name == "full_side_containment") return SweepTarget::full_side_containment();
    if (auto id = condition_from_name(name)) return SweepTarget::single(*id);
    return std::nullopt;
}

struct SweepCounterexample {
    std::uint64_t index = 0;  // code (exhaustive) or sample number (random)
    std::string condition;    // offending condition, or check name
    std::string graph;        // serialized in the graph file format
};

struct SweepReport {
    std::string target;
    int n = 0;
    bool exhaustive = true;
    std::uint64_t samples = 0; // random mode
    std::uint64_t seed = 0;    // random mode
    int min_degree_filter = 0;
    std::uint64_t total_examined = 0;
    std::map<std::string, std::uint64_t> certificates;
    std::uint64_t oracle_calls = 0;
    std::uint64_t qualifying = 0; // graphs meeting the premise (sandwich/containment)
    std::vector<SweepCounterexample> violations;
    std::vector<SweepCounterexample> discrepancies; // sandwich target only
    double elapsed_seconds = 0.0;                   // text output only

    bool ok() const { return violations.empty() && discrepancies.empty(); }
};

namespace detail {

struct SweepAccumulator {
    std::map<std::string, std::uint64_t> certificates;
    std::uint64_t examined = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t qualifying = 0;
    std::vector<SweepCounterexample> violations;
    std::vector<SweepCounterexample> discrepancies;
};

inline void sweep_one(const SweepTarget& target, const BipartiteGraph& g, std::uint64_t index,
                      const SpectralOptions& opts, FamilySpectrumCache& cache,
                      SweepAccumulator& acc) {
    ++acc.examined;
    switch (target.kind) {
        case SweepTarget::Kind::Condition:
        case SweepTarget::Kind::AllConditions: {
            std::vector<ConditionId> which;
            if (target.kind == SweepTarget::Kind::Condition)
                which.push_back(target.condition);
            else
                which.assign(kAllConditions.begin(), kAllConditions.end());
            const auto verdicts = evaluate_conditions(g, which, opts, &cache);
            bool any = false;
            for (const auto& v : verdicts)
                if (v.certified_whc) {
                    ++acc.certificates[condition_name(v.id)];
                    any = true;
                }
            if (any) {
                ++acc.oracle_calls;
                if (!is_weakly_hc(g).weakly_hc)
                    for (const auto& v : verdicts)
                        if (v.certified_whc)
                            acc.violations.push_back(
                                {index, condition_name(v.id), write_graph_text(g)});
            }
            break;
        }
        case SweepTarget::Kind::Sandwich: {
            const auto s = g.sigma();
            if (!s || *s != g.part_x() + 1) break;
            ++acc.oracle_calls;
            if (is_weakly_hc(g).weakly_hc) break;
            ++acc.qualifying;
            if (!matches_sandwich(g))
                acc.discrepancies.push_back({index, "sandwich", write_graph_text(g)});
            break;
        }
        case SweepTarget::Kind::FullSideContainment: {
            if (!is_closed(g)) break;
            const int n = g.part_x();
            const int delta = g.min_degree();
            const auto [fx, fy] = g.full_side_count();
            for (int k = 1; k <= std::min(delta, n / 2); ++k) {
                const long threshold =
                    static_cast<long>(n) * (n - k) + static_cast<long>(k) * (k + 1);
                if (g.edge_count() <= threshold) continue;
                ++acc.qualifying;
                if (fx < n - k + 1 && fy < n - k + 1)
                    acc.violations.push_back(
                        {index, "full_side_containment(k=" + std::to_string(k) + ")",
                         write_graph_text(g)});
            }
            break;
        }
    }
}

} // namespace detail

// Runs the target check over the enumerated graphs, confirming every
// certificate against the oracle. `min_degree` filters the generated graphs
// (0 keeps everything). Workers own disjoint index ranges; the merged
// report is independent of the worker count.
inline SweepReport verify_implication(const SweepTarget& target, int n, const EnumMode& mode,
                                      int min_degree = 0, const SpectralOptions& opts = {},
                                      unsigned threads = 0) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepReport report;
    report.target = target.name();
    report.n = n;
    report.min_degree_filter = min_degree;

    std::uint64_t total = 0;
    if (const auto* ex = std::get_if<ExhaustiveMode>(&mode)) {
        if (n > 4 && !ex->force)
            throw std::invalid_argument(
                "exhaustive enumeration beyond n=4 walks 2^(n^2) graphs; pass force to override");
        if (n > 5) throw std::invalid_argument("exhaustive enumeration capped at n=5 even when forced");
        report.exhaustive = true;
        total = std::uint64_t{1} << (n * n);
    } else {
        const auto& rnd = std::get<RandomMode>(mode);
        if (n > 12) throw std::invalid_argument("random enumeration capped at n=12");
        report.exhaustive = false;
        report.samples = rnd.samples;
        report.seed = rnd.seed;
        total = rnd.samples;
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t chunk = (total + threads - 1) / std::max<std::uint64_t>(1, threads);
    std::vector<detail::SweepAccumulator> partial(threads);
    std::vector<std::exception_ptr> errors(threads);

    auto worker = [&](unsigned w) {
        try {
            FamilySpectrumCache cache(opts.eigen_tol);
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min(total, lo + chunk);
            for (std::uint64_t index = lo; index < hi; ++index) {
                std::optional<BipartiteGraph> g;
                if (report.exhaustive) {
                    g = BipartiteGraph::from_code(n, n, index);
                    if (min_degree > 0 && g->min_degree() < min_degree) continue;
                } else {
                    const auto& rnd = std::get<RandomMode>(mode);
                    g = detail::nth_random_graph(n, rnd.seed, index, [&](const BipartiteGraph& c) {
                        return min_degree == 0 || c.min_degree() >= min_degree;
                    });
                }
                detail::sweep_one(target, *g, index, opts, cache, partial[w]);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (const auto& acc : partial) {
        report.total_examined += acc.examined;
        report.oracle_calls += acc.oracle_calls;
        report.qualifying += acc.qualifying;
        for (const auto& [name, count] : acc.certificates) report.certificates[name] += count;
        report.violations.insert(report.violations.end(), acc.violations.begin(),
                                 acc.violations.end());
        report.discrepancies.insert(report.discrepancies.end(), acc.discrepancies.begin(),
                                    acc.discrepancies.end());
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace whc

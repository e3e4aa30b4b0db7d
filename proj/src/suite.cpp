#include <algorithm>
#include <thread>

#include "psombor/bounds.hpp"

namespace psombor {

namespace {

struct TaskResult {
    std::vector<BoundReport> reports;
    std::string error;
};

Violation to_violation(const BoundReport& r, const Graph& g) {
    Violation v;
    v.graph_id = r.graph_id;
    v.p = r.p;
    v.check_id = r.check_id;
    v.edge_list = edge_list_string(g);
    v.value = r.value;
    v.lower = r.lower;
    v.upper = r.upper;
    v.slack = r.slack;
    v.hard = r.hard;
    v.equality_only = r.holds;
    return v;
}

}  // namespace

SuiteResult run_suite(std::span<const NamedGraph> corpus, std::span<const double> p_values,
                      const SuiteOptions& options) {
    const std::size_t tasks = corpus.size() * p_values.size();
    std::vector<TaskResult> results(tasks);

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t t = first; t < tasks; t += stride) {
            const NamedGraph& ng = corpus[t / p_values.size()];
            const double p = p_values[t % p_values.size()];
            try {
                results[t].reports = check_all(GraphAnalysis(ng.graph, p, ng.id), options.bounds);
            } catch (const std::exception& e) {
                results[t].error = ng.id + " p=" + std::to_string(p) + ": " + e.what();
            }
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1 || tasks < 2) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
        for (auto& th : pool) th.join();
    }

    // Merge in task order so the output does not depend on scheduling.
    SuiteResult out;
    SuiteReport& rep = out.report;
    rep.description = options.description;
    rep.graph_count = corpus.size();
    rep.p_values.assign(p_values.begin(), p_values.end());
    for (std::size_t t = 0; t < tasks; ++t) {
        if (!results[t].error.empty()) {
            rep.evaluation_errors.push_back(results[t].error);
            continue;
        }
        const Graph& g = corpus[t / p_values.size()].graph;
        for (BoundReport& r : results[t].reports) {
            ++rep.report_count;
            CheckCounts& c = rep.per_check[r.check_id];
            switch (r.status()) {
                case ReportStatus::pass: ++c.passed; break;
                case ReportStatus::fail:
                    ++c.failed;
                    rep.violations.push_back(to_violation(r, g));
                    break;
                case ReportStatus::not_applicable: ++c.not_applicable; break;
                case ReportStatus::observed:
                    ++c.observed;
                    if (!r.holds) {
                        ++c.observed_violations;
                        rep.observations.push_back(to_violation(r, g));
                    }
                    break;
            }
            if (r.applicable && r.hard) {
                const double rel = r.relative_slack();
                if (!c.min_relative_slack || rel < *c.min_relative_slack) c.min_relative_slack = rel;
                if (r.equality_expected != Side::none) {
                    ++c.equality_expected;
                    if (r.equality_observed) ++c.equality_confirmed;
                }
            }
            if (options.keep_reports) out.reports.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace psombor

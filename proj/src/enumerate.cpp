#include "graphcone/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "graphcone/errors.hpp"

namespace graphcone {

long long default_budget() {
    if (const char* env = std::getenv("GRAPHCONE_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
        throw ParseError("GRAPHCONE_BUDGET must be a positive integer");
    }
    return 100'000'000;
}

namespace {

struct SearchPlan {
    std::vector<int> edge_order;            // assignment order
    std::vector<std::vector<int>> complete; // per position: inner vertices completed
};

// Orders edges so inner vertices become fully assigned as early as possible,
// which lets parity/triangle pruning cut the box down.
SearchPlan make_plan(const TrivalentGraph& g) {
    SearchPlan plan;
    std::vector<char> assigned(g.edge_count(), 0);
    std::vector<char> touched(g.vertex_count(), 0);
    std::vector<int> remaining(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        remaining[v] = g.valency(v);

    for (int step = 0; step < g.edge_count(); ++step) {
        int best = -1;
        int best_score = -1;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (assigned[e])
                continue;
            int score = 0;
            for (int end : {0, 1}) {
                int v = g.edge(e).ends[end];
                if (!g.is_inner(v))
                    continue;
                int left = remaining[v] - (g.is_loop(e) ? 2 : 1);
                if (g.is_loop(e) && end == 1)
                    continue; // count a loop's vertex once
                if (left == 0)
                    score += 100; // completes the vertex
                else if (touched[v])
                    score += 10;
            }
            if (score > best_score) {
                best_score = score;
                best = e;
            }
        }
        assigned[best] = 1;
        plan.edge_order.push_back(best);
        plan.complete.emplace_back();
        for (int end : {0, 1}) {
            int v = g.edge(best).ends[end];
            touched[v] = 1;
            remaining[v] -= 1;
            if (g.is_inner(v) && remaining[v] == 0 && (!g.is_loop(best) || end == 1))
                plan.complete.back().push_back(v);
        }
    }
    return plan;
}

struct Searcher {
    const TrivalentGraph& g;
    const SearchPlan& plan;
    long long m;
    std::atomic<long long>& work;
    long long budget;
    std::vector<long long> coeffs;
    std::vector<ConeElement> found;

    bool vertex_ok(int v) const {
        const auto& inc = g.incident(v);
        long long a = coeffs[inc[0].edge];
        long long b = coeffs[inc[1].edge];
        long long c = coeffs[inc[2].edge];
        long long sum = a + b + c;
        if (sum % 2 != 0 || sum > 2 * m)
            return false;
        return 2 * std::max({a, b, c}) <= sum;
    }

    void search(size_t pos) {
        if (work.fetch_add(1, std::memory_order_relaxed) >= budget)
            throw BudgetError("enumeration budget of " + std::to_string(budget) +
                              " search nodes exceeded (set GRAPHCONE_BUDGET to raise)");
        if (pos == plan.edge_order.size()) {
            found.push_back(ConeElement{m, coeffs});
            return;
        }
        int e = plan.edge_order[pos];
        for (long long val = 0; val <= m; ++val) {
            coeffs[e] = val;
            bool ok = true;
            for (int v : plan.complete[pos])
                if (!vertex_ok(v)) {
                    ok = false;
                    break;
                }
            if (ok)
                search(pos + 1);
        }
        coeffs[e] = 0;
    }
};

} // namespace

std::vector<ConeElement> points_of_degree(const TrivalentGraph& g, long long m,
                                          const EnumOptions& opts) {
    if (m < 0)
        throw DomainError("degree must be nonnegative");
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_leaf(g.edge(e).ends[0]) && g.is_leaf(g.edge(e).ends[1]))
            throw DomainError("cannot enumerate cone points of a graph with a bare-edge component");

    long long budget = opts.budget > 0 ? opts.budget : default_budget();
    SearchPlan plan = make_plan(g);
    std::atomic<long long> work{0};

    std::vector<ConeElement> all;
    if (g.edge_count() == 0) {
        all.push_back(ConeElement{m, {}});
    } else if (opts.threads <= 1 || m == 0) {
        Searcher s{g, plan, m, work, budget, std::vector<long long>(g.edge_count(), 0), {}};
        s.search(0);
        all = std::move(s.found);
    } else {
        int nthreads = std::min<long long>(opts.threads, m + 1);
        std::vector<std::vector<ConeElement>> buckets(m + 1);
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nthreads);
        int first = plan.edge_order[0];
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t]() {
                try {
                    for (long long val = t; val <= m; val += nthreads) {
                        Searcher s{g,      plan,
                                   m,      work,
                                   budget, std::vector<long long>(g.edge_count(), 0),
                                   {}};
                        s.coeffs[first] = val;
                        bool ok = true;
                        for (int v : plan.complete[0])
                            if (!s.vertex_ok(v))
                                ok = false;
                        if (ok)
                            s.search(1);
                        buckets[val] = std::move(s.found);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool)
            th.join();
        for (auto& err : errors)
            if (err)
                std::rethrow_exception(err);
        for (auto& bucket : buckets)
            for (auto& w : bucket)
                all.push_back(std::move(w));
    }
    std::sort(all.begin(), all.end(),
              [](const ConeElement& a, const ConeElement& b) { return a.coeffs < b.coeffs; });
    return all;
}

} // namespace graphcone

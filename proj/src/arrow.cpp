#include "rkit/arrow.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "rkit/errors.hpp"

namespace rkit {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

using Clock = std::chrono::steady_clock;

struct EdgeState {
    int colored = 0;
    int uni = -1;
    bool uniform = true;
};

enum class Res { found, exhausted, aborted };

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::uint64_t max_nodes = 0;
    Clock::time_point t0;
    double max_seconds = 0.0;
    std::function<void(std::uint64_t, double)> heartbeat;
    std::mutex beat_mutex;
    double last_beat = 0.0;
};

// Backtracking searcher for a "bad" coloring: one leaving every edge
// polychromatic.  Vertices are assigned along a fixed fail-first order and
// colors are canonicalized (a fresh color index may only follow all smaller
// ones), which quotients out color permutations without losing completeness.
struct Searcher {
    const std::vector<std::vector<int>>* edges = nullptr;
    const std::vector<std::vector<int>>* vertex_edges = nullptr;
    const std::vector<int>* order = nullptr;
    int vcount = 0;
    int kcount = 0;
    Shared* shared = nullptr;

    std::vector<int> color;
    std::vector<std::uint64_t> mask;
    std::vector<EdgeState> estate;
    std::uint64_t nodes = 0, prunes = 0, pending = 0;

    void init() {
        color.assign(vcount, -1);
        const std::uint64_t full = kcount >= 64 ? ~0ULL : ((1ULL << kcount) - 1);
        mask.assign(vcount, full);
        estate.assign(edges->size(), EdgeState{});
        nodes = prunes = pending = 0;
    }

    struct Undo {
        std::vector<std::pair<int, EdgeState>> saved_edges;
        std::vector<std::pair<int, std::uint64_t>> saved_masks;
    };

    bool try_assign(int v, int c, Undo& u) {
        color[v] = c;
        for (int e : (*vertex_edges)[v]) {
            EdgeState& s = estate[e];
            u.saved_edges.emplace_back(e, s);
            ++s.colored;
            if (s.uniform) {
                if (s.uni < 0)
                    s.uni = c;
                else if (s.uni != c)
                    s.uniform = false;
            }
            if (!s.uniform)
                continue;
            const int size = static_cast<int>((*edges)[e].size());
            if (s.colored == size)
                return false; // edge went monochromatic
            if (s.colored == size - 1) {
                for (int w : (*edges)[e]) {
                    if (color[w] < 0) {
                        const std::uint64_t old = mask[w];
                        const std::uint64_t cut = old & ~(1ULL << s.uni);
                        if (cut != old) {
                            u.saved_masks.emplace_back(w, old);
                            mask[w] = cut;
                            if (cut == 0)
                                return false;
                        }
                        break;
                    }
                }
            }
        }
        return true;
    }

    void undo(int v, const Undo& u) {
        for (auto it = u.saved_masks.rbegin(); it != u.saved_masks.rend(); ++it)
            mask[it->first] = it->second;
        for (auto it = u.saved_edges.rbegin(); it != u.saved_edges.rend(); ++it)
            estate[it->first] = it->second;
        color[v] = -1;
    }

    bool check_limits() {
        ++nodes;
        if (++pending < 1024)
            return true;
        const std::uint64_t total =
            shared->nodes.fetch_add(pending, std::memory_order_relaxed) + pending;
        pending = 0;
        if (shared->stop.load(std::memory_order_relaxed))
            return false;
        if (total > shared->max_nodes) {
            shared->budget_hit.store(true);
            shared->stop.store(true);
            return false;
        }
        const double secs = std::chrono::duration<double>(Clock::now() - shared->t0).count();
        if (secs > shared->max_seconds) {
            shared->budget_hit.store(true);
            shared->stop.store(true);
            return false;
        }
        if (shared->heartbeat) {
            std::lock_guard<std::mutex> lock(shared->beat_mutex);
            if (secs - shared->last_beat >= 2.0) {
                shared->last_beat = secs;
                shared->heartbeat(total, secs);
            }
        }
        return true;
    }

    std::uint64_t candidate_bits(int v, int used) const {
        const int limit = std::min(used, kcount - 1);
        const std::uint64_t low = limit >= 63 ? ~0ULL : ((1ULL << (limit + 1)) - 1);
        return mask[v] & low;
    }

    // On `found` the assignment is left in place so the caller can read it.
    Res dfs(int depth, int used) {
        if (depth == vcount)
            return Res::found;
        const int v = (*order)[depth];
        std::uint64_t cand = candidate_bits(v, used);
        while (cand) {
            const int c = std::countr_zero(cand);
            cand &= cand - 1;
            if (!check_limits())
                return Res::aborted;
            Undo u;
            if (try_assign(v, c, u)) {
                const Res r = dfs(depth + 1, used + (c == used ? 1 : 0));
                if (r == Res::found)
                    return r;
                if (r == Res::aborted) {
                    undo(v, u);
                    return r;
                }
            } else {
                ++prunes;
            }
            undo(v, u);
        }
        return Res::exhausted;
    }
};

struct Prefix {
    std::vector<std::pair<int, int>> assign; // (vertex, color) along the static order
    int used = 0;
};

void collect_prefixes(Searcher& s, int depth_limit, int depth, int used,
                      std::vector<std::pair<int, int>>& cur, std::vector<Prefix>& out) {
    if (depth == depth_limit) {
        out.push_back(Prefix{cur, used});
        return;
    }
    const int v = (*s.order)[depth];
    std::uint64_t cand = s.candidate_bits(v, used);
    while (cand) {
        const int c = std::countr_zero(cand);
        cand &= cand - 1;
        Searcher::Undo u;
        if (s.try_assign(v, c, u)) {
            cur.emplace_back(v, c);
            collect_prefixes(s, depth_limit, depth + 1, used + (c == used ? 1 : 0), cur, out);
            cur.pop_back();
        }
        s.undo(v, u);
    }
}

} // namespace

ArrowCertificate decide_coloring(const CopyHypergraph& h, std::uint64_t k,
                                 const ArrowOptions& options) {
    const auto t0 = Clock::now();
    ArrowCertificate cert;
    cert.query.k = k;
    const int vcount = static_cast<int>(h.vertices.size());
    cert.stats.vertices = vcount;
    cert.stats.edges = static_cast<int>(h.edges.size());

    auto finish = [&](Verdict v) {
        cert.verdict = v;
        cert.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    Clock::now() - t0)
                                    .count();
        return cert;
    };

    if (k < 2)
        throw std::invalid_argument("arrow queries need at least 2 colors");

    if (vcount == 0) {
        cert.note = "no copies of the small object: holds vacuously";
        return finish(Verdict::holds);
    }
    if (h.copies.empty()) {
        cert.note = "no copies of the big object: fails vacuously";
        cert.bad_coloring.assign(vcount, 1);
        return finish(Verdict::fails);
    }
    for (const auto& e : h.edges)
        if (e.size() <= 1) {
            cert.note = "some copy carries at most one small copy: always monochromatic";
            return finish(Verdict::holds);
        }
    if (k >= static_cast<std::uint64_t>(vcount)) {
        cert.note = "at least as many colors as vertices: an injective coloring is bad";
        cert.bad_coloring.resize(vcount);
        std::iota(cert.bad_coloring.begin(), cert.bad_coloring.end(), 1);
        if (!validate_bad_coloring(h, cert.bad_coloring, k))
            throw invariant_violation("injective coloring failed re-validation");
        return finish(Verdict::fails);
    }
    if (k > 64) {
        cert.note = "more than 64 colors with fewer colors than vertices: outside engine limits";
        return finish(Verdict::inconclusive);
    }

    const std::set<std::vector<int>> dedup(h.edges.begin(), h.edges.end());
    const std::vector<std::vector<int>> edges(dedup.begin(), dedup.end());
    std::vector<std::vector<int>> vertex_edges(vcount);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        for (int v : edges[e])
            vertex_edges[v].push_back(e);

    std::vector<int> order(vcount);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (vertex_edges[x].size() != vertex_edges[y].size())
            return vertex_edges[x].size() > vertex_edges[y].size();
        return x < y;
    });

    Shared shared;
    shared.max_nodes = options.budget.max_nodes;
    shared.max_seconds = options.budget.max_seconds;
    shared.t0 = t0;
    shared.heartbeat = options.heartbeat;

    auto make_searcher = [&]() {
        Searcher s;
        s.edges = &edges;
        s.vertex_edges = &vertex_edges;
        s.order = &order;
        s.vcount = vcount;
        s.kcount = static_cast<int>(k);
        s.shared = &shared;
        s.init();
        return s;
    };

    Res result = Res::exhausted;
    std::vector<int> found;
    const int threads = std::max(1, options.threads);

    if (threads == 1 || vcount < 8) {
        Searcher s = make_searcher();
        result = s.dfs(0, 0);
        cert.stats.nodes = s.nodes;
        cert.stats.prunes = s.prunes;
        if (result == Res::found)
            found = s.color;
    } else {
        Searcher base = make_searcher();
        std::vector<Prefix> prefixes;
        int depth_limit = 1;
        for (;;) {
            prefixes.clear();
            std::vector<std::pair<int, int>> cur;
            collect_prefixes(base, std::min(depth_limit, vcount), 0, 0, cur, prefixes);
            if (prefixes.empty() || depth_limit >= vcount ||
                static_cast<int>(prefixes.size()) >= 4 * threads ||
                static_cast<int>(prefixes.size()) > 2048)
                break;
            ++depth_limit;
        }
        if (prefixes.empty()) {
            result = Res::exhausted;
        } else {
            std::atomic<std::size_t> next{0};
            std::mutex result_mutex;
            bool any_found = false;
            std::uint64_t prunes_total = 0;
            std::vector<std::thread> pool;
            const int nthreads = std::min<int>(threads, static_cast<int>(prefixes.size()));
            for (int t = 0; t < nthreads; ++t) {
                pool.emplace_back([&]() {
                    Searcher s = make_searcher();
                    for (;;) {
                        const std::size_t idx = next.fetch_add(1);
                        if (idx >= prefixes.size() || shared.stop.load())
                            break;
                        s.init();
                        bool alive = true;
                        std::vector<Searcher::Undo> undos(prefixes[idx].assign.size());
                        for (std::size_t i = 0; i < prefixes[idx].assign.size(); ++i) {
                            const auto [v, c] = prefixes[idx].assign[i];
                            if (!s.try_assign(v, c, undos[i])) {
                                alive = false; // cannot happen: prefix survived collection
                                break;
                            }
                        }
                        if (!alive)
                            continue;
                        const Res r = s.dfs(static_cast<int>(prefixes[idx].assign.size()),
                                            prefixes[idx].used);
                        if (r == Res::found) {
                            std::lock_guard<std::mutex> lock(result_mutex);
                            if (!any_found) {
                                any_found = true;
                                found = s.color;
                            }
                            shared.stop.store(true);
                            break;
                        }
                        if (r == Res::aborted)
                            break;
                    }
                    shared.nodes.fetch_add(s.pending);
                    std::lock_guard<std::mutex> lock(result_mutex);
                    prunes_total += s.prunes;
                });
            }
            for (auto& th : pool)
                th.join();
            cert.stats.nodes = shared.nodes.load();
            cert.stats.prunes = prunes_total;
            if (any_found)
                result = Res::found;
            else if (shared.budget_hit.load())
                result = Res::aborted;
            else
                result = Res::exhausted;
        }
    }

    switch (result) {
    case Res::found: {
        cert.bad_coloring.resize(vcount);
        for (int v = 0; v < vcount; ++v)
            cert.bad_coloring[v] = found[v] + 1;
        if (!validate_bad_coloring(h, cert.bad_coloring, k))
            throw invariant_violation("search produced a coloring that failed re-validation");
        return finish(Verdict::fails);
    }
    case Res::exhausted:
        return finish(Verdict::holds);
    case Res::aborted:
        cert.note = "budget exhausted";
        return finish(Verdict::inconclusive);
    }
    return finish(Verdict::inconclusive);
}

ArrowCertificate arrow_holds(const Category& host, const Object& a, const Object& b,
                             const Object& c, std::uint64_t k, const ArrowOptions& options) {
    const CopyHypergraph h = build_copy_hypergraph(host, a, b, c);
    ArrowCertificate cert = decide_coloring(h, k, options);
    cert.query = QueryEcho{host.name, a.str(), b.str(), c.str(), k};
    return cert;
}

bool validate_bad_coloring(const CopyHypergraph& h, const std::vector<int>& coloring,
                           std::uint64_t k) {
    if (coloring.size() != h.vertices.size())
        return false;
    for (int c : coloring)
        if (c < 1 || static_cast<std::uint64_t>(c) > k)
            return false;
    for (const auto& edge : h.edges) {
        if (edge.size() <= 1)
            return false; // such an edge is monochromatic under any coloring
        bool poly = false;
        for (std::size_t i = 1; i < edge.size(); ++i)
            if (coloring[edge[i]] != coloring[edge[0]]) {
                poly = true;
                break;
            }
        if (!poly)
            return false;
    }
    return true;
}

WitnessResult find_witness(const Category& host, const Object& a, const Object& b,
                           std::uint64_t k, int max_object_size,
                           const ArrowOptions& options) {
    WitnessResult result;
    const auto t0 = Clock::now();
    std::uint64_t remaining = options.budget.max_nodes;

    for (const Object& c : host.objects(max_object_size)) {
        // Only objects carrying copies of both ends can witness non-vacuously.
        if (host.hom(b, c).empty() || host.hom(a, c).empty())
            continue;
        ++result.objects_tried;

        const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        if (remaining == 0 || elapsed >= options.budget.max_seconds) {
            result.frontier = "budget exhausted before object " + c.str();
            return result;
        }
        ArrowOptions slice = options;
        slice.budget.max_nodes = remaining;
        slice.budget.max_seconds = options.budget.max_seconds - elapsed;
        const ArrowCertificate cert = arrow_holds(host, a, b, c, k, slice);
        remaining -= std::min(remaining, cert.stats.nodes);

        if (cert.verdict == Verdict::holds) {
            result.found = true;
            result.witness = c;
            result.certificate = cert;
            return result;
        }
        if (cert.verdict == Verdict::inconclusive) {
            result.certificate = cert;
            result.frontier = "undecided at object " + c.str();
            return result;
        }
    }
    result.frontier = "object stream exhausted at size cap " + std::to_string(max_object_size);
    return result;
}

} // namespace rkit

#include "mcc/tilting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include <omp.h>

namespace mcc {

mpz_class count_formula(Dynkin t, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    const int h = coxeter_number(t);
    mpq_class prod = 1;
    for (int e : exponents(t)) prod *= mpq_class(m * h + e + 1, e + 1);
    prod.canonicalize();
    if (prod.get_den() != 1) throw std::logic_error("count formula is not integral");
    return prod.get_num();
}

CompatGraph::CompatGraph(int n) : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {}

void CompatGraph::add_edge(int a, int b) {
    if (a == b) return;
    adj_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
    adj_[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
}

int CompatGraph::degree(int a) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(a)[w]);
    return d;
}

CompatGraph compat_graph(const CompatMatrix& cm) {
    CompatGraph g(cm.size());
    for (int x = 0; x < cm.size(); ++x)
        for (int y = x + 1; y < cm.size(); ++y)
            if (cm.compatible(x, y)) g.add_edge(x, y);
    return g;
}

int TiltingContext::tau(int v) const { return vertex_of[spec.quiver.tau(orbits[v][0])]; }

TiltingContext make_context(Dynkin t, int m, bool parallel) {
    TiltingContext ctx;
    ctx.type = t;
    ctx.m = m;
    ctx.rank = dynkin_rank(t);
    ctx.spec = make_category(t == Dynkin::F4 ? Dynkin::E6 : t, m);
    ctx.cm = parallel ? compat_matrix_parallel(ctx.spec) : compat_matrix_serial(ctx.spec);
    const int n = ctx.spec.size();
    ctx.vertex_of.assign(n, -1);
    if (t != Dynkin::F4) {
        for (int x = 0; x < n; ++x) {
            ctx.orbits.push_back({x});
            ctx.vertex_of[x] = x;
        }
        ctx.graph = compat_graph(ctx.cm);
        return ctx;
    }
    const auto& q = ctx.spec.quiver;
    for (int x = 0; x < n; ++x) {
        int y = q.rho(x);
        if (y < x) continue;
        if (y != x && !ctx.cm.compatible(x, y)) continue;
        ctx.vertex_of[x] = ctx.vertex_of[y] = static_cast<int>(ctx.orbits.size());
        ctx.orbits.push_back(y == x ? std::vector<int>{x} : std::vector<int>{x, y});
    }
    const int k = static_cast<int>(ctx.orbits.size());
    ctx.graph = CompatGraph(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            bool ok = true;
            for (int x : ctx.orbits[a])
                for (int y : ctx.orbits[b]) ok = ok && ctx.cm.compatible(x, y);
            if (ok) ctx.graph.add_edge(a, b);
        }
    return ctx;
}

namespace {

template <int W>
using Bits = std::array<std::uint64_t, W>;

template <int W>
struct CliqueSearch {
    const CompatGraph& g;
    int n;
    std::vector<Bits<W>> nb;
    std::vector<int> r;

    CliqueSearch(const CompatGraph& graph, int target) : g(graph), n(target), nb(graph.size()) {
        for (int v = 0; v < g.size(); ++v) {
            nb[v].fill(0);
            for (int w = 0; w < g.words(); ++w) nb[v][w] = g.row(v)[w];
        }
    }

    static bool empty(const Bits<W>& b) {
        for (auto w : b)
            if (w) return false;
        return true;
    }
    static int count(const Bits<W>& b) {
        int c = 0;
        for (auto w : b) c += std::popcount(w);
        return c;
    }
    static Bits<W> meet(const Bits<W>& a, const Bits<W>& b) {
        Bits<W> c;
        for (int i = 0; i < W; ++i) c[i] = a[i] & b[i];
        return c;
    }

    template <class Emit>
    void expand(Bits<W> p, Bits<W> x, Emit& emit) {
        if (empty(p)) {
            if (!empty(x)) return;
            if (static_cast<int>(r.size()) != n)
                throw std::runtime_error("theory violation: maximal compatible set of size " +
                                         std::to_string(r.size()));
            emit(r);
            return;
        }
        int pivot = -1, best = -1;
        for (const Bits<W>* s : {&p, &x})
            for (int i = 0; i < W; ++i)
                for (auto w = (*s)[i]; w; w &= w - 1) {
                    int u = i * 64 + std::countr_zero(w);
                    int c = count(meet(p, nb[u]));
                    if (c > best) best = c, pivot = u;
                }
        Bits<W> cand;
        for (int i = 0; i < W; ++i) cand[i] = p[i] & ~nb[pivot][i];
        for (int i = 0; i < W; ++i)
            for (auto w = cand[i]; w; w &= w - 1) {
                int v = i * 64 + std::countr_zero(w);
                r.push_back(v);
                expand(meet(p, nb[v]), meet(x, nb[v]), emit);
                r.pop_back();
                p[i] &= ~(std::uint64_t{1} << (v & 63));
                x[i] |= std::uint64_t{1} << (v & 63);
            }
    }

    template <class Emit>
    void root(int v, Emit& emit) {
        Bits<W> p{}, x{};
        for (int i = 0; i < W; ++i) {
            for (auto w = nb[v][i]; w; w &= w - 1) {
                int u = i * 64 + std::countr_zero(w);
                if (u > v) p[i] |= std::uint64_t{1} << (u & 63);
                else x[i] |= std::uint64_t{1} << (u & 63);
            }
        }
        r.assign(1, v);
        expand(p, x, emit);
    }
};

template <int W>
std::uint64_t run(const CompatGraph& g, int n, const std::vector<int>& roots, const ClusterSink& sink,
                  Exec exec) {
    const int nr = static_cast<int>(roots.size());
    std::uint64_t total = 0;
    if (!sink) {
        std::vector<std::uint64_t> counts(nr, 0);
        std::string error;
        auto body = [&](CliqueSearch<W>& cs, int k) {
            std::uint64_t c = 0;
            auto emit = [&](const std::vector<int>&) { ++c; };
            cs.root(roots[k], emit);
            counts[k] = c;
        };
        if (exec == Exec::Serial) {
            CliqueSearch<W> cs(g, n);
            for (int k = 0; k < nr; ++k) body(cs, k);
        } else {
#pragma omp parallel
            {
                CliqueSearch<W> cs(g, n);
#pragma omp for schedule(dynamic, 1)
                for (int k = 0; k < nr; ++k) {
                    try {
                        body(cs, k);
                    } catch (const std::exception& e) {
#pragma omp critical
                        error = e.what();
                    }
                }
            }
            if (!error.empty()) throw std::runtime_error(error);
        }
        for (auto c : counts) total += c;
        return total;
    }
    // stream in batches so the merge stays ordered without holding everything
    const int batch = 32;
    for (int lo = 0; lo < nr; lo += batch) {
        int hi = std::min(nr, lo + batch);
        std::vector<std::vector<std::vector<int>>> found(hi - lo);
        std::string error;
        auto body = [&](CliqueSearch<W>& cs, int k) {
            auto& out = found[k - lo];
            auto emit = [&](const std::vector<int>& c) {
                auto s = c;
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            };
            cs.root(roots[k], emit);
            std::sort(out.begin(), out.end());
        };
        if (exec == Exec::Serial) {
            CliqueSearch<W> cs(g, n);
            for (int k = lo; k < hi; ++k) body(cs, k);
        } else {
#pragma omp parallel
            {
                CliqueSearch<W> cs(g, n);
#pragma omp for schedule(dynamic, 1)
                for (int k = lo; k < hi; ++k) {
                    try {
                        body(cs, k);
                    } catch (const std::exception& e) {
#pragma omp critical
                        error = e.what();
                    }
                }
            }
            if (!error.empty()) throw std::runtime_error(error);
        }
        for (auto& part : found)
            for (auto& c : part) {
                sink(c);
                ++total;
            }
    }
    return total;
}

std::uint64_t dispatch(const CompatGraph& g, int n, const std::vector<int>& roots, const ClusterSink& sink,
                       Exec exec) {
    if (n < 1) throw std::invalid_argument("cluster size must be positive");
    if (g.words() <= 1) return run<1>(g, n, roots, sink, exec);
    if (g.words() <= 2) return run<2>(g, n, roots, sink, exec);
    if (g.words() <= 4) return run<4>(g, n, roots, sink, exec);
    if (g.words() <= 8) return run<8>(g, n, roots, sink, exec);
    throw std::invalid_argument("graph too large for clique search");
}

}  // namespace

std::uint64_t enumerate_clusters(const CompatGraph& g, int n, const ClusterSink& sink, Exec exec) {
    std::vector<int> roots(g.size());
    for (int v = 0; v < g.size(); ++v) roots[v] = v;
    return dispatch(g, n, roots, sink, exec);
}

std::uint64_t count_partitions(const CompatGraph& g, int n, const std::vector<int>& roots, Exec exec) {
    return dispatch(g, n, roots, nullptr, exec);
}

std::vector<Cluster> all_clusters(const CompatGraph& g, int n, Exec exec) {
    std::vector<Cluster> out;
    enumerate_clusters(g, n, [&](const std::vector<int>& c) { out.push_back({c}); }, exec);
    return out;
}

std::vector<int> complements(const CompatGraph& g, const std::vector<int>& partial) {
    std::vector<int> res;
    for (int v = 0; v < g.size(); ++v) {
        bool ok = true;
        for (int p : partial) ok = ok && p != v && g.adjacent(p, v);
        if (ok) res.push_back(v);
    }
    return res;
}

Cluster mutate(const CompatGraph& g, const Cluster& c, int k, std::optional<int> target) {
    auto it = std::find(c.objects.begin(), c.objects.end(), k);
    if (it == c.objects.end()) throw std::invalid_argument("object not in cluster");
    std::vector<int> rest;
    for (int x : c.objects)
        if (x != k) rest.push_back(x);
    auto comp = complements(g, rest);
    int pick;
    if (target) {
        if (*target == k || !std::binary_search(comp.begin(), comp.end(), *target))
            throw std::invalid_argument("target is not a complement");
        pick = *target;
    } else {
        auto pos = std::find(comp.begin(), comp.end(), k);
        if (pos == comp.end() || comp.size() < 2) throw std::logic_error("no alternative complement");
        ++pos;
        pick = pos == comp.end() ? comp.front() : *pos;
    }
    rest.push_back(pick);
    std::sort(rest.begin(), rest.end());
    return {rest};
}

bool is_cluster(const CompatGraph& g, int n, const std::vector<int>& objects) {
    if (static_cast<int>(objects.size()) != n) return false;
    for (std::size_t a = 0; a < objects.size(); ++a)
        for (std::size_t b = a + 1; b < objects.size(); ++b)
            if (!g.adjacent(objects[a], objects[b])) return false;
    return complements(g, objects).empty();
}

std::string PairEntry::str() const {
    return "{" + a.str() + ", " + b.str() + "} x" + std::to_string(orbit_size);
}

namespace {

bool color_match(Color a, Color b, Color f1, Color f2) { return (a == f1 && b == f2) || (a == f2 && b == f1); }

}  // namespace

std::vector<PairEntry> pair_report(const TiltingContext& ctx, const DiagonalModel& model, Color c1, Color c2,
                                   bool up_to_rotation) {
    const int k = ctx.size();
    auto diag = [&](int v) {
        // F4 orbits are named by their green or red member
        const ColoredDiagonal* best = nullptr;
        for (int x : ctx.orbits[v]) {
            const auto& d = model.diagonal_of(x);
            if (!best || d.color != Color::B) best = &d;
        }
        return *best;
    };
    auto entry = [&](int v, int w) {
        auto a = diag(v), b = diag(w);
        if (b < a) std::swap(a, b);
        return std::make_pair(a, b);
    };
    std::map<std::pair<ColoredDiagonal, ColoredDiagonal>, int> reps;
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < k; ++v)
        for (int w = v + 1; w < k; ++w) {
            if (!ctx.graph.adjacent(v, w)) continue;
            if (!color_match(diag(v).color, diag(w).color, c1, c2)) continue;
            if (!up_to_rotation) {
                reps[entry(v, w)] = 1;
                continue;
            }
            if (seen.count({v, w})) continue;
            // the twisted translation can change colours, so only filtered
            // members of the orbit count
            auto best = entry(v, w);
            int size = 0;
            int a = v, b = w;
            do {
                if (color_match(diag(a).color, diag(b).color, c1, c2)) {
                    seen.insert({std::min(a, b), std::max(a, b)});
                    best = std::min(best, entry(a, b));
                    ++size;
                }
                a = ctx.tau(a);
                b = ctx.tau(b);
            } while (!(std::min(a, b) == v && std::max(a, b) == w));
            reps[best] = size;
        }
    std::vector<PairEntry> out;
    for (auto& [p, s] : reps) out.push_back({p.first, p.second, s});
    return out;
}

}  // namespace mcc

#include "mcc/quiver.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace mcc {

int TreeShape::leg_length(int leg) const {
    switch (leg) {
        case 1: return r;
        case 2: return s;
        case 3: return t;
    }
    throw std::invalid_argument("leg index");
}

int TreeShape::leg_of(int v) const {
    if (v == 0) return 0;
    if (v <= r) return 1;
    if (v <= r + s) return 2;
    if (v <= r + s + t) return 3;
    throw std::out_of_range("tree vertex");
}

int TreeShape::depth(int v) const {
    switch (leg_of(v)) {
        case 0: return 0;
        case 1: return v;
        case 2: return v - r;
        default: return v - r - s;
    }
}

int TreeShape::vertex_at(int leg, int d) const {
    if (d == 0) return 0;
    if (d < 0 || d > leg_length(leg)) return -1;
    switch (leg) {
        case 1: return d;
        case 2: return r + d;
        default: return r + s + d;
    }
}

std::vector<std::pair<int, int>> TreeShape::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int leg = 1; leg <= 3; ++leg)
        for (int d = 1; d <= leg_length(leg); ++d)
            e.emplace_back(vertex_at(leg, d), vertex_at(leg, d - 1));
    return e;
}

std::vector<int> TreeShape::degrees() const {
    std::vector<int> deg(vertex_count(), 0);
    for (auto [a, b] : edges()) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

bool TreeShape::symmetric() const { return r == s || s == t || r == t; }

int TreeShape::rho(int v) const {
    int leg = leg_of(v);
    if (leg == 0) return v;
    int a = 0, b = 0;
    if (s == t) a = 2, b = 3;
    else if (r == s) a = 1, b = 2;
    else if (r == t) a = 1, b = 3;
    else return v;
    if (leg == a) return vertex_at(b, depth(v));
    if (leg == b) return vertex_at(a, depth(v));
    return v;
}

StableTranslationQuiver::StableTranslationQuiver(int n, std::vector<std::pair<int, int>> arrows,
                                                 std::vector<int> tau)
    : out_(n), in_(n), tau_(std::move(tau)), tau_inv_(n, -1) {
    if (static_cast<int>(tau_.size()) != n) throw std::invalid_argument("tau size");
    for (int v = 0; v < n; ++v) {
        if (tau_[v] < 0 || tau_[v] >= n || tau_inv_[tau_[v]] != -1)
            throw std::invalid_argument("tau is not a bijection");
        tau_inv_[tau_[v]] = v;
    }
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
    for (auto [a, b] : arrows) {
        if (a == b) throw std::invalid_argument("loop");
        out_[a].push_back(b);
        in_[b].push_back(a);
    }
    for (auto& l : in_) std::sort(l.begin(), l.end());
}

int StableTranslationQuiver::tau_pow(int v, int k) const {
    for (; k > 0; --k) v = tau_[v];
    for (; k < 0; ++k) v = tau_inv_[v];
    return v;
}

bool StableTranslationQuiver::has_arrow(int a, int b) const {
    return std::binary_search(out_[a].begin(), out_[a].end(), b);
}

std::vector<std::pair<int, int>> StableTranslationQuiver::arrows() const {
    std::vector<std::pair<int, int>> res;
    for (int a = 0; a < size(); ++a)
        for (int b : out_[a]) res.emplace_back(a, b);
    return res;
}

std::size_t StableTranslationQuiver::arrow_count() const {
    std::size_t c = 0;
    for (auto& l : out_) c += l.size();
    return c;
}

int StableTranslationQuiver::orbit_length(int v) const {
    int len = 1;
    for (int w = tau_[v]; w != v; w = tau_[w]) ++len;
    return len;
}

void StableTranslationQuiver::set_rho(std::vector<int> rho) {
    if (static_cast<int>(rho.size()) != size()) throw std::invalid_argument("rho size");
    for (int v = 0; v < size(); ++v)
        if (rho[rho[v]] != v) throw std::invalid_argument("rho is not an involution");
    rho_ = std::move(rho);
}

std::string StableTranslationQuiver::name_of(int v) const {
    if (!names.empty()) return names[v];
    if (!coords.empty()) return "(" + std::to_string(coords[v].col) + "," + std::to_string(coords[v].node) + ")";
    return std::to_string(v);
}

int StableTranslationQuiver::find_coord(TQVertex x) const {
    for (int v = 0; v < static_cast<int>(coords.size()); ++v)
        if (coords[v] == x) return v;
    return -1;
}

StableTranslationQuiver build_quotient_quiver(const TreeShape& shape, int N, int twist_power) {
    if (N < 1) throw std::invalid_argument("period must be positive");
    if (twist_power != 0 && !shape.symmetric()) throw std::invalid_argument("rho undefined");
    const int nodes = shape.vertex_count();
    const bool flip = twist_power % 2 != 0;
    auto phi = [&](int v) { return flip ? shape.rho(v) : v; };
    auto id = [&](int c, int v) {
        while (c >= N) c -= N, v = phi(v);
        while (c < 0) c += N, v = phi(v);
        return c * nodes + v;
    };
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> tau(N * nodes);
    for (int c = 0; c < N; ++c) {
        for (auto [a, b] : shape.edges()) {
            arrows.emplace_back(id(c, a), id(c, b));
            arrows.emplace_back(id(c, b), id(c + 1, a));
        }
        for (int v = 0; v < nodes; ++v) tau[id(c, v)] = id(c - 1, v);
    }
    StableTranslationQuiver q(N * nodes, std::move(arrows), std::move(tau));
    q.shape = shape;
    q.period = N;
    q.twist = twist_power == 0 ? "none" : "rho^" + std::to_string(twist_power);
    q.coords.resize(N * nodes);
    for (int c = 0; c < N; ++c)
        for (int v = 0; v < nodes; ++v) q.coords[id(c, v)] = {c, v};
    if (shape.symmetric()) {
        std::vector<int> rho(N * nodes);
        for (int c = 0; c < N; ++c)
            for (int v = 0; v < nodes; ++v) rho[id(c, v)] = id(c, shape.rho(v));
        q.set_rho(std::move(rho));
    }
    return q;
}

StableTranslationQuiver m_power(const StableTranslationQuiver& q, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (m == 1) return q;
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> path;
    std::function<void(int)> walk = [&](int v) {
        if (static_cast<int>(path.size()) == m + 1) {
            arrows.emplace_back(path.front(), v);
            return;
        }
        for (int w : q.succ(v)) {
            if (path.size() >= 2 && q.tau(w) == path[path.size() - 2]) continue;
            path.push_back(w);
            walk(w);
            path.pop_back();
        }
    };
    for (int v = 0; v < q.size(); ++v) {
        path.assign(1, v);
        walk(v);
    }
    std::vector<int> tau(q.size());
    for (int v = 0; v < q.size(); ++v) tau[v] = q.tau_pow(v, m);
    StableTranslationQuiver p(q.size(), std::move(arrows), std::move(tau));
    p.shape = q.shape;
    p.period = q.period;
    p.twist = q.twist;
    p.coords = q.coords;
    p.names = q.names;
    return p;
}

StabilityResult check_stability(const StableTranslationQuiver& q) {
    for (int x = 0; x < q.size(); ++x) {
        std::vector<int> a = q.pred(x);
        std::vector<int> b = q.succ(q.tau(x));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return {false, x, "predecessors of x differ from successors of tau(x)"};
    }
    return {};
}

std::vector<std::vector<int>> components(const StableTranslationQuiver& q) {
    std::vector<int> comp(q.size(), -1);
    std::vector<std::vector<int>> res;
    for (int s = 0; s < q.size(); ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(res.size());
        res.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            res[id].push_back(v);
            auto visit = [&](int w) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            };
            for (int w : q.succ(v)) visit(w);
            for (int w : q.pred(v)) visit(w);
        }
        std::sort(res[id].begin(), res[id].end());
    }
    return res;
}

StableTranslationQuiver induced_subquiver(const StableTranslationQuiver& q,
                                          const std::vector<int>& verts) {
    std::vector<int> local(q.size(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> tau(verts.size());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        int v = verts[i];
        if (local[q.tau(v)] < 0) throw std::invalid_argument("vertex set not tau-closed");
        tau[i] = local[q.tau(v)];
        for (int w : q.succ(v))
            if (local[w] >= 0) arrows.emplace_back(i, local[w]);
    }
    StableTranslationQuiver sub(static_cast<int>(verts.size()), std::move(arrows), std::move(tau));
    sub.period = q.period;
    sub.twist = q.twist;
    sub.shape = q.shape;
    for (int v : verts) {
        if (!q.coords.empty()) sub.coords.push_back(q.coords[v]);
        if (!q.names.empty()) sub.names.push_back(q.names[v]);
    }
    return sub;
}

namespace {

struct IsoSearch {
    const StableTranslationQuiver& a;
    const StableTranslationQuiver& b;
    std::vector<int> map, inv;
    std::vector<std::array<int, 3>> sig_a, sig_b;

    IsoSearch(const StableTranslationQuiver& a_, const StableTranslationQuiver& b_)
        : a(a_), b(b_), map(a_.size(), -1), inv(b_.size(), -1) {
        for (int v = 0; v < a.size(); ++v)
            sig_a.push_back({static_cast<int>(a.pred(v).size()), static_cast<int>(a.succ(v).size()),
                             a.orbit_length(v)});
        for (int v = 0; v < b.size(); ++v)
            sig_b.push_back({static_cast<int>(b.pred(v).size()), static_cast<int>(b.succ(v).size()),
                             b.orbit_length(v)});
    }

    bool consistent(int x) const {
        int y = map[x];
        for (int w : a.succ(x))
            if (map[w] >= 0 && !b.has_arrow(y, map[w])) return false;
        for (int w : a.pred(x))
            if (map[w] >= 0 && !b.has_arrow(map[w], y)) return false;
        for (int w : b.succ(y))
            if (inv[w] >= 0 && !a.has_arrow(x, inv[w])) return false;
        for (int w : b.pred(y))
            if (inv[w] >= 0 && !a.has_arrow(inv[w], x)) return false;
        return true;
    }

    // map the whole tau-orbit of x onto that of y; returns assigned vertices
    bool assign_orbit(int x, int y, std::vector<int>& assigned) {
        if (sig_a[x] != sig_b[y]) return false;
        int len = a.orbit_length(x);
        int u = x, w = y;
        for (int k = 0; k < len; ++k) {
            if (map[u] >= 0 || inv[w] >= 0) {
                if (map[u] != w) return false;
            } else {
                map[u] = w;
                inv[w] = u;
                assigned.push_back(u);
            }
            u = a.tau(u);
            w = b.tau(w);
        }
        for (int v : assigned)
            if (!consistent(v)) return false;
        return true;
    }

    void undo(const std::vector<int>& assigned) {
        for (int v : assigned) {
            inv[map[v]] = -1;
            map[v] = -1;
        }
    }

    bool search() {
        int x = -1, anchor = -1;
        bool from_pred = false;
        for (int v = 0; v < a.size() && x < 0; ++v) {
            if (map[v] >= 0) continue;
            for (int w : a.pred(v))
                if (map[w] >= 0) { x = v; anchor = w; from_pred = true; break; }
            if (x >= 0) break;
            for (int w : a.succ(v))
                if (map[w] >= 0) { x = v; anchor = w; from_pred = false; break; }
        }
        if (x < 0) {
            for (int v = 0; v < a.size(); ++v)
                if (map[v] < 0) { x = v; break; }
            if (x < 0) return true;
        }
        std::vector<int> candidates;
        if (anchor >= 0) {
            candidates = from_pred ? b.succ(map[anchor]) : b.pred(map[anchor]);
        } else {
            for (int w = 0; w < b.size(); ++w) candidates.push_back(w);
        }
        for (int y : candidates) {
            if (inv[y] >= 0) continue;
            std::vector<int> assigned;
            if (assign_orbit(x, y, assigned) && search()) return true;
            undo(assigned);
        }
        return false;
    }
};

}  // namespace

bool is_isomorphism(const StableTranslationQuiver& a, const StableTranslationQuiver& b,
                    const std::vector<int>& map) {
    if (a.size() != b.size() || static_cast<int>(map.size()) != a.size()) return false;
    if (a.arrow_count() != b.arrow_count()) return false;
    std::vector<char> hit(b.size(), 0);
    for (int v = 0; v < a.size(); ++v) {
        if (map[v] < 0 || map[v] >= b.size() || hit[map[v]]) return false;
        hit[map[v]] = 1;
    }
    for (int v = 0; v < a.size(); ++v) {
        if (map[a.tau(v)] != b.tau(map[v])) return false;
        for (int w : a.succ(v))
            if (!b.has_arrow(map[v], map[w])) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_isomorphism(const StableTranslationQuiver& a,
                                                 const StableTranslationQuiver& b,
                                                 const std::vector<std::pair<int, int>>& pinned) {
    if (a.size() != b.size() || a.arrow_count() != b.arrow_count()) return std::nullopt;
    IsoSearch s(a, b);
    for (auto [x, y] : pinned) {
        std::vector<int> assigned;
        if (!s.assign_orbit(x, y, assigned)) return std::nullopt;
    }
    if (!s.search()) return std::nullopt;
    if (!is_isomorphism(a, b, s.map)) return std::nullopt;
    return s.map;
}

std::optional<std::vector<int>> find_embedding(const StableTranslationQuiver& small,
                                               const StableTranslationQuiver& big) {
    for (const auto& comp : components(big)) {
        if (static_cast<int>(comp.size()) != small.size()) continue;
        StableTranslationQuiver sub;
        try {
            sub = induced_subquiver(big, comp);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (auto iso = find_isomorphism(small, sub)) {
            for (int& v : *iso) v = comp[v];
            return iso;
        }
    }
    return std::nullopt;
}

StableTranslationQuiver fold_by_rho(const StableTranslationQuiver& q,
                                    std::vector<std::vector<int>>* orbits_out) {
    if (!q.has_rho()) throw std::invalid_argument("rho undefined");
    std::vector<int> orbit(q.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (int v = 0; v < q.size(); ++v) {
        if (orbit[v] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        orbits.push_back({v});
        orbit[v] = id;
        if (q.rho(v) != v) {
            orbits.back().push_back(q.rho(v));
            orbit[q.rho(v)] = id;
        }
    }
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> tau(orbits.size());
    for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
        tau[o] = orbit[q.tau(orbits[o][0])];
        for (int v : orbits[o])
            for (int w : q.succ(v)) arrows.emplace_back(o, orbit[w]);
    }
    StableTranslationQuiver f(static_cast<int>(orbits.size()), std::move(arrows), std::move(tau));
    f.period = q.period;
    f.twist = q.twist;
    for (auto& o : orbits) {
        std::string n = q.name_of(o[0]);
        if (o.size() > 1) n += "|" + q.name_of(o[1]);
        f.names.push_back(n);
    }
    if (orbits_out) *orbits_out = std::move(orbits);
    return f;
}

}  // namespace mcc

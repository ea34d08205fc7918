#include "mcc/category.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcc {

std::string to_string(Dynkin d) {
    switch (d) {
        case Dynkin::E6: return "E6";
        case Dynkin::E7: return "E7";
        case Dynkin::E8: return "E8";
        case Dynkin::F4: return "F4";
    }
    return "?";
}

Dynkin parse_dynkin(const std::string& s) {
    if (s == "E6" || s == "e6") return Dynkin::E6;
    if (s == "E7" || s == "e7") return Dynkin::E7;
    if (s == "E8" || s == "e8") return Dynkin::E8;
    if (s == "F4" || s == "f4") return Dynkin::F4;
    throw std::invalid_argument("unknown type " + s);
}

int coxeter_number(Dynkin d) {
    switch (d) {
        case Dynkin::E6: return 12;
        case Dynkin::E7: return 18;
        case Dynkin::E8: return 30;
        case Dynkin::F4: return 12;
    }
    return 0;
}

std::vector<int> exponents(Dynkin d) {
    switch (d) {
        case Dynkin::E6: return {1, 4, 5, 7, 8, 11};
        case Dynkin::E7: return {1, 5, 7, 9, 11, 13, 17};
        case Dynkin::E8: return {1, 7, 11, 13, 17, 19, 23, 29};
        case Dynkin::F4: return {1, 5, 7, 11};
    }
    return {};
}

int dynkin_rank(Dynkin d) { return static_cast<int>(exponents(d).size()); }

TQVertex CategorySpec::sigma(TQVertex x, int k) const {
    x.col += k * (h / 2);
    if (type == Dynkin::E6 && k % 2 != 0) x.node = shape.rho(x.node);
    return x;
}

TQVertex CategorySpec::orbit_shift(TQVertex x, int i) const {
    x = sigma(x, i * m);
    x.col += i;
    return x;
}

int CategorySpec::object_of(TQVertex x) const {
    int c = x.col, v = x.node;
    int q = c >= 0 ? c / period : -((-c + period - 1) / period);
    c -= q * period;
    if (twist_power % 2 != 0 && q % 2 != 0) v = shape.rho(v);
    return c * shape.vertex_count() + v;
}

int CategorySpec::node_of_root(int i) const {
    for (int v = 0; v < static_cast<int>(bourbaki.size()); ++v)
        if (bourbaki[v] == i) return v;
    throw std::out_of_range("root index");
}

std::vector<int> CategorySpec::anchor_objects() const {
    std::vector<int> res;
    for (auto a : anchor) res.push_back(object_of(a));
    return res;
}

CategorySpec make_category(Dynkin type, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    CategorySpec s;
    s.type = type;
    s.m = m;
    switch (type) {
        case Dynkin::E6: s.shape = TreeShape::E6(); break;
        case Dynkin::E7: s.shape = TreeShape::E7(); break;
        case Dynkin::E8: s.shape = TreeShape::E8(); break;
        case Dynkin::F4: throw std::invalid_argument("F4 is realised by folding E6");
    }
    s.h = coxeter_number(type);
    s.exps = exponents(type);
    s.period = (s.h / 2) * m + 1;
    s.twist_power = type == Dynkin::E6 ? m : 0;
    s.quiver = build_quotient_quiver(s.shape, s.period, s.twist_power);
    // node 0 = alpha4, 1 = alpha2, short legs alpha3, alpha1 and alpha5, alpha6, ...
    s.bourbaki = {4, 2, 3, 1, 5, 6, 7, 8};
    s.bourbaki.resize(s.shape.vertex_count());
    // slice through the anchor cluster: columns relative to the branch vertex
    const std::vector<int> col_of_root = {1, 0, 0, 0, 0, 1, 1, 2};
    for (int i = 1; i <= s.shape.vertex_count(); ++i)
        s.anchor.push_back({col_of_root[i - 1], s.node_of_root(i)});
    return s;
}

Hammock::Hammock(const TreeShape& shape, TQVertex x, int width)
    : nodes_(shape.vertex_count()), width_(width), x_(x), f_(static_cast<std::size_t>(width) * nodes_, 0) {
    std::vector<int> order(nodes_);
    for (int v = 0; v < nodes_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return shape.depth(a) > shape.depth(b); });
    std::vector<std::vector<int>> same_col(nodes_), prev_col(nodes_);
    for (auto [a, b] : shape.edges()) {
        same_col[b].push_back(a);
        prev_col[a].push_back(b);
    }
    auto val = [&](int dc, int v) { return dc < 0 ? 0 : f_[dc * nodes_ + v]; };
    for (int dc = 0; dc < width_; ++dc) {
        for (int v : order) {
            int& out = f_[dc * nodes_ + v];
            if (dc == 0 && v == x.node) {
                out = 1;
                continue;
            }
            int sum = 0;
            for (int a : same_col[v]) sum += val(dc, a);
            for (int b : prev_col[v]) sum += val(dc - 1, b);
            out = std::max(0, sum - val(dc - 1, v));
        }
    }
}

int Hammock::at(TQVertex y) const {
    int dc = y.col - x_.col;
    if (dc < 0 || dc >= width_) return 0;
    return f_[dc * nodes_ + y.node];
}

int hom_dim_cover(const CategorySpec& spec, TQVertex x, TQVertex y, int width) {
    if (width < 0) width = spec.h + 2;
    if (width < spec.h + 2) throw std::invalid_argument("window");
    return Hammock(spec.shape, x, width).at(y);
}

int ExtProfile::total() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

namespace {

constexpr int kOrbitBound = 3;

int orbit_sum(const CategorySpec& spec, const Hammock& hx, TQVertex yhat, int j) {
    int total = 0;
    for (int i = -kOrbitBound; i <= kOrbitBound; ++i) {
        int v = hx.at(spec.orbit_shift(spec.sigma(yhat, j), i));
        if (v != 0 && (i == -kOrbitBound || i == kOrbitBound))
            throw std::runtime_error("orbit window exhausted");
        total += v;
    }
    return total;
}

void fill_row(const CategorySpec& spec, int x, CompatMatrix& cm) {
    Hammock hx(spec.shape, spec.lift(x), spec.h + 2);
    for (int y = 0; y < spec.size(); ++y)
        for (int j = 1; j <= spec.m; ++j) cm.set_ext(x, y, j, orbit_sum(spec, hx, spec.lift(y), j));
}

}  // namespace

ExtProfile ext_profile(const CategorySpec& spec, int x, int y) {
    Hammock hx(spec.shape, spec.lift(x), spec.h + 2);
    ExtProfile p;
    for (int j = 1; j <= spec.m; ++j) p.dims.push_back(orbit_sum(spec, hx, spec.lift(y), j));
    return p;
}

int compatibility_degree(const CategorySpec& spec, int x, int y) { return ext_profile(spec, x, y).total(); }

int CompatMatrix::degree(int x, int y) const {
    int d = 0;
    for (int j = 1; j <= m_; ++j) d += ext(x, y, j);
    return d;
}

CompatMatrix compat_matrix_serial(const CategorySpec& spec) {
    CompatMatrix cm(spec.size(), spec.m);
    for (int x = 0; x < spec.size(); ++x) fill_row(spec, x, cm);
    return cm;
}

CompatMatrix compat_matrix_parallel(const CategorySpec& spec) {
    CompatMatrix cm(spec.size(), spec.m);
    const int n = spec.size();
    bool failed = false;
#pragma omp parallel for schedule(dynamic)
    for (int x = 0; x < n; ++x) {
        try {
            fill_row(spec, x, cm);
        } catch (const std::exception&) {
#pragma omp atomic write
            failed = true;
        }
    }
    if (failed) throw std::runtime_error("orbit window exhausted");
    return cm;
}

std::string RootLabel::str() const {
    if (negative) return "-a" + std::to_string(index);
    std::string s = "c" + std::to_string(color) + ":(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

std::vector<RootLabel> root_labels(const CategorySpec& spec) {
    const int n = spec.rank();
    std::vector<std::vector<Hammock>> from_p(spec.m);
    for (int j = 1; j <= spec.m; ++j)
        for (int k = 1; k <= n; ++k)
            from_p[j - 1].emplace_back(spec.shape, spec.sigma(spec.tau(spec.anchor[k - 1], -1), j - 1),
                                       spec.h + 2);
    std::vector<RootLabel> labels(spec.size());
    std::vector<char> is_anchor(spec.size(), 0);
    auto anchors = spec.anchor_objects();
    for (int k = 1; k <= n; ++k) {
        labels[anchors[k - 1]].negative = true;
        labels[anchors[k - 1]].index = k;
        is_anchor[anchors[k - 1]] = 1;
    }
    for (int x = 0; x < spec.size(); ++x) {
        int hits = 0;
        for (int i = -kOrbitBound; i <= kOrbitBound; ++i) {
            TQVertex l = spec.orbit_shift(spec.lift(x), i);
            for (int j = 1; j <= spec.m; ++j) {
                std::vector<int> c(n);
                bool nonzero = false;
                for (int k = 1; k <= n; ++k) {
                    c[k - 1] = from_p[j - 1][k - 1].at(l);
                    nonzero = nonzero || c[k - 1] != 0;
                }
                if (!nonzero) continue;
                ++hits;
                labels[x].color = j;
                labels[x].coords = c;
            }
        }
        if (is_anchor[x] ? hits != 0 : hits != 1)
            throw std::runtime_error("object outside the fundamental domain decomposition");
    }
    return labels;
}

}  // namespace mcc

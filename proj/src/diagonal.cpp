#include "mcc/diagonal.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace mcc {

char color_char(Color c) {
    switch (c) {
        case Color::R: return 'R';
        case Color::B: return 'B';
        case Color::G: return 'G';
    }
    return '?';
}

std::string ColoredDiagonal::str() const {
    return "[" + std::to_string(i) + "," + std::to_string(j) + "]_" + color_char(color);
}

ColoredDiagonal ColoredDiagonal::parse(const std::string& s) {
    static const std::regex re(R"(\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]_?\{?([RBGP])\}?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad diagonal " + s);
    ColoredDiagonal d;
    d.i = std::stoi(m[1]);
    d.j = std::stoi(m[2]);
    char c = m[3].str()[0];
    d.color = c == 'R' ? Color::R : c == 'B' ? Color::B : Color::G;
    if (d.color == Color::G && d.i > d.j) std::swap(d.i, d.j);
    return d;
}

std::string to_string(OffsetConvention c) { return c == OffsetConvention::Shifted ? "shifted" : "aligned"; }

OffsetConvention parse_convention(const std::string& s) {
    if (s == "shifted") return OffsetConvention::Shifted;
    if (s == "aligned") return OffsetConvention::Aligned;
    throw std::invalid_argument("unknown convention " + s);
}

ColoredDiagonal make_diagonal(int base, Color c, int offset, int polygon) {
    auto w = [&](int v) { return ((v - 1) % polygon + polygon) % polygon + 1; };
    int a = w(base), b = w(base + offset);
    switch (c) {
        case Color::R: return {a, b, Color::R};
        case Color::B: return {b, a, Color::B};
        case Color::G: return {std::min(a, b), std::max(a, b), Color::G};
    }
    return {};
}

DiagonalSet::DiagonalSet(int polygon, int step, std::vector<int> green, std::vector<int> red,
                         std::vector<int> blue)
    : polygon_(polygon), step_(step), green_(std::move(green)), red_(std::move(red)), blue_(std::move(blue)) {
    auto check = [&](const std::vector<int>& offs) {
        for (int o : offs)
            if (o < 2 || o > polygon_ - 2) throw std::invalid_argument("offset out of range");
    };
    check(green_);
    check(red_);
    check(blue_);
    for (int g : green_) {
        if (std::count(green_.begin(), green_.end(), polygon_ - g) && polygon_ - g != g)
            throw std::invalid_argument("green offsets collide");
        if (std::count(red_.begin(), red_.end(), g) || std::count(blue_.begin(), blue_.end(), g))
            throw std::invalid_argument("paired diagonals reused as single ones");
    }
    for (int b = 1; b <= polygon_; ++b) {
        auto add = [&](Color c, int o) {
            auto d = make_diagonal(b, c, o, polygon_);
            if (!index_.emplace(d, size()).second) throw std::invalid_argument("duplicate diagonal");
            members_.push_back(d);
            base_.push_back(b);
            offset_.push_back(o);
        };
        for (int o : green_) add(Color::G, o);
        for (int o : red_) add(Color::R, o);
        for (int o : blue_) add(Color::B, o);
    }
}

const std::vector<int>& DiagonalSet::offsets(Color c) const {
    return c == Color::G ? green_ : c == Color::R ? red_ : blue_;
}

int DiagonalSet::index_of(const ColoredDiagonal& d) const {
    auto it = index_.find(d);
    return it == index_.end() ? -1 : it->second;
}

int DiagonalSet::index_of(int base, Color c, int offset) const {
    const auto& offs = offsets(c);
    if (std::find(offs.begin(), offs.end(), offset) == offs.end()) return -1;
    return index_of(make_diagonal(base, c, offset, polygon_));
}

int DiagonalSet::count(Color c) const {
    return static_cast<int>(std::count_if(members_.begin(), members_.end(),
                                          [&](const ColoredDiagonal& d) { return d.color == c; }));
}

DiagonalSet build_P(int r, int s, int t, int n) {
    if (r < 0 || s < 0 || t < 0) throw std::invalid_argument("negative leg length");
    if (n < std::max(r + s + 1, r + t + 1)) throw std::invalid_argument("polygon too small for the tree");
    std::vector<int> g, red, blue;
    for (int o = 2; o <= r + 2; ++o) g.push_back(o);
    for (int o = r + 3; o <= r + s + 2; ++o) red.push_back(o);
    for (int o = r + 3; o <= r + t + 2; ++o) blue.push_back(o);
    return DiagonalSet(n + 3, 1, g, red, blue);
}

DiagonalSet build_P_m(int n, int m, int k1, int k2, OffsetConvention conv) {
    if (m < 1 || k1 < 0 || k2 < 0) throw std::invalid_argument("bad parameters");
    std::vector<int> g, red, blue;
    if (conv == OffsetConvention::Shifted) {
        int r = 2 * m - 1;
        g = {r + 2 - m, r + 2};
        for (int j = 1; j <= k1; ++j) red.push_back(r + 2 + j * m);
        for (int j = 1; j <= k2; ++j) blue.push_back(r + 2 + j * m);
    } else {
        g = {2 * m, 3 * m};
        for (int j = 1; j <= k1; ++j) red.push_back((3 + j) * m);
        for (int j = 1; j <= k2; ++j) blue.push_back((3 + j) * m);
    }
    int top = std::max(red.empty() ? 0 : red.back(), blue.empty() ? 0 : blue.back());
    if (n + 3 < top + 2) throw std::invalid_argument("polygon too small for the offsets");
    return DiagonalSet(n + 3, m, g, red, blue);
}

ColoredDiagonal apply_auto(Auto which, const ColoredDiagonal& d, const DiagonalSet& set) {
    int k = set.index_of(d);
    if (k < 0) throw std::invalid_argument("diagonal not in set: " + d.str());
    int b = set.base(k), o = set.offset(k);
    Color c = d.color;
    auto rho = [&](Color col) { return col == Color::R ? Color::B : col == Color::B ? Color::R : col; };
    switch (which) {
        case Auto::Rho:
            if (!set.symmetric()) throw std::invalid_argument("rho undefined on asymmetric set");
            return make_diagonal(b, rho(c), o, set.polygon());
        case Auto::Tau:
            return make_diagonal(b - 1, c, o, set.polygon());
        case Auto::Tau0:
            if (!set.symmetric()) throw std::invalid_argument("tau0 undefined on asymmetric set");
            return make_diagonal(b - 1, b == 1 ? rho(c) : c, o, set.polygon());
    }
    return d;
}

namespace {

Color swap_rb(Color c) { return c == Color::R ? Color::B : c == Color::B ? Color::R : c; }

bool has_offset(const DiagonalSet& set, Color c, int o) {
    const auto& v = set.offsets(c);
    return std::find(v.begin(), v.end(), o) != v.end();
}

}  // namespace

std::vector<ColoredDiagonal> rotation_successors(const ColoredDiagonal& d, const DiagonalSet& set,
                                                 Translation mode) {
    int k = set.index_of(d);
    if (k < 0) throw std::invalid_argument("diagonal not in set: " + d.str());
    const int m = set.step(), N = set.polygon();
    const int b = set.base(k), o = set.offset(k);
    const Color c = d.color;
    std::vector<ColoredDiagonal> res;
    // fix the start vertex of the base, move the far end clockwise
    if (c == Color::G) {
        if (has_offset(set, Color::G, o + m)) {
            res.push_back(make_diagonal(b, Color::G, o + m, N));
        } else {
            if (has_offset(set, Color::R, o + m)) res.push_back(make_diagonal(b, Color::R, o + m, N));
            if (has_offset(set, Color::B, o + m)) res.push_back(make_diagonal(b, Color::B, o + m, N));
        }
    } else if (has_offset(set, c, o + m)) {
        res.push_back(make_diagonal(b, c, o + m, N));
    }
    // move the base vertex clockwise
    Color nc = c;
    bool found = false;
    if (c != Color::G && has_offset(set, c, o - m)) {
        found = true;
    } else if (has_offset(set, Color::G, o - m)) {
        nc = Color::G;
        found = true;
    }
    if (found) {
        bool wraps = b + m > N;
        if (mode == Translation::Tau0 && wraps) nc = swap_rb(nc);
        res.push_back(make_diagonal(b + m, nc, o - m, N));
    }
    return res;
}

StableTranslationQuiver build_diagonal_quiver(const DiagonalSet& set, Translation mode) {
    if (mode == Translation::Tau0 && !set.symmetric()) throw std::invalid_argument("tau0 undefined on asymmetric set");
    const int n = set.size(), m = set.step(), N = set.polygon();
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> tau(n);
    for (int k = 0; k < n; ++k) {
        for (const auto& s : rotation_successors(set[k], set, mode)) {
            int t = set.index_of(s);
            if (t < 0) throw std::logic_error("successor outside the set");
            arrows.emplace_back(k, t);
        }
        int b = set.base(k);
        Color c = set.color(k);
        if (mode == Translation::Tau0 && b - m < 1) c = swap_rb(c);
        tau[k] = set.index_of(make_diagonal(b - m, c, set.offset(k), N));
    }
    StableTranslationQuiver q(n, std::move(arrows), std::move(tau));
    for (const auto& d : set.members()) q.names.push_back(d.str());
    q.period = N;
    q.twist = mode == Translation::Tau0 ? "tau0" : "none";
    if (set.symmetric()) {
        std::vector<int> rho(n);
        for (int k = 0; k < n; ++k) rho[k] = set.index_of(make_diagonal(set.base(k), swap_rb(set.color(k)), set.offset(k), N));
        q.set_rho(std::move(rho));
    }
    auto st = check_stability(q);
    if (!st.ok) throw std::runtime_error("diagonal quiver is not stable at " + q.name_of(st.vertex));
    return q;
}

StableTranslationQuiver fold_f4(const StableTranslationQuiver& q, std::vector<std::vector<int>>* orbits) {
    return fold_by_rho(q, orbits);
}

std::pair<int, int> leg_counts(Dynkin t) {
    switch (t) {
        case Dynkin::E6: return {2, 2};
        case Dynkin::E7: return {3, 2};
        case Dynkin::E8: return {4, 2};
        case Dynkin::F4: return {2, 2};
    }
    return {0, 0};
}

namespace {

struct AnchorEntry {
    int base;
    Color color;
    int leg_index;  // position in the colour's offset list
};

std::vector<AnchorEntry> anchor_entries(Dynkin t) {
    // -alpha_6 .. -alpha_1 shared by all three types
    std::vector<AnchorEntry> tail = {{1, Color::R, 1}, {1, Color::R, 0}, {2, Color::G, 1},
                                     {1, Color::B, 0}, {2, Color::G, 0}, {1, Color::B, 1}};
    std::vector<AnchorEntry> head;
    if (t == Dynkin::E7) head = {{0, Color::R, 2}};
    if (t == Dynkin::E8) head = {{0, Color::R, 3}, {0, Color::R, 2}};
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

}  // namespace

std::vector<ColoredDiagonal> anchor_diagonals(Dynkin t, const DiagonalSet& set) {
    if (t == Dynkin::F4) t = Dynkin::E6;
    std::vector<ColoredDiagonal> res;
    const int m = set.step();
    for (auto e : anchor_entries(t)) {
        const auto& offs = set.offsets(e.color);
        if (e.leg_index >= static_cast<int>(offs.size())) throw std::invalid_argument("set lacks anchor offsets");
        res.push_back(make_diagonal(1 + m * (e.base - 1), e.color, offs[e.leg_index], set.polygon()));
    }
    return res;
}

int DiagonalModel::object_of(const ColoredDiagonal& d) const {
    int k = set.index_of(d);
    if (k < 0) throw std::invalid_argument("diagonal not in model: " + d.str());
    return to_object[k];
}

std::vector<int> anchor_bijection(const CategorySpec& spec, const DiagonalSet& set,
                                  const StableTranslationQuiver& q_diag) {
    auto anchors = anchor_diagonals(spec.type, set);
    const int n = spec.rank();
    std::vector<std::pair<int, int>> pins;
    for (int k = 0; k < n; ++k) {
        int idx = set.index_of(anchors[k]);
        if (idx < 0) throw std::runtime_error("anchor diagonal missing: " + anchors[k].str());
        // anchors are listed from -alpha_n down to -alpha_1
        pins.emplace_back(idx, spec.object_of(spec.anchor[n - 1 - k]));
    }
    auto iso = find_isomorphism(q_diag, spec.quiver, pins);
    if (!iso) throw std::runtime_error("no isomorphism respecting the anchor");
    return *iso;
}

DiagonalModel make_model(const CategorySpec& spec, std::optional<OffsetConvention> conv) {
    auto [k1, k2] = leg_counts(spec.type);
    const int n = spec.period - 3;
    const Translation mode = spec.type == Dynkin::E6 ? Translation::Tau0 : Translation::Tau;
    std::vector<OffsetConvention> tries;
    if (conv) tries = {*conv};
    else tries = {OffsetConvention::Aligned, OffsetConvention::Shifted};
    std::string note;
    std::optional<DiagonalModel> chosen;
    for (auto c : tries) {
        try {
            DiagonalSet set = build_P_m(n, spec.m, k1, k2, c);
            auto q = build_diagonal_quiver(set, mode);
            auto map = anchor_bijection(spec, set, q);
            note += to_string(c) + ": stable, anchored isomorphism found; ";
            if (!chosen) {
                DiagonalModel dm;
                dm.type = spec.type;
                dm.m = spec.m;
                dm.convention = c;
                dm.set = set;
                dm.quiver = std::move(q);
                dm.to_object = map;
                dm.to_diag.assign(spec.size(), -1);
                for (int k = 0; k < set.size(); ++k) dm.to_diag[map[k]] = k;
                chosen = std::move(dm);
            }
        } catch (const std::exception& e) {
            note += to_string(c) + ": rejected (" + e.what() + "); ";
        }
    }
    if (!chosen) throw std::runtime_error("no offset convention yields the AR quiver: " + note);
    chosen->selection_note = note + "selected " + to_string(chosen->convention);
    return *chosen;
}

}  // namespace mcc

#include "mcc/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcc {

json quiver_to_json(const StableTranslationQuiver& q) {
    json j;
    if (q.shape) j["shape"] = {{"r", q.shape->r}, {"s", q.shape->s}, {"t", q.shape->t}};
    j["period"] = q.period;
    j["twist"] = q.twist;
    j["vertices"] = json::array();
    for (int v = 0; v < q.size(); ++v) {
        json x = {{"id", v}};
        if (!q.coords.empty()) {
            x["col"] = q.coords[v].col;
            x["node"] = q.coords[v].node;
        }
        if (!q.names.empty()) x["name"] = q.names[v];
        j["vertices"].push_back(x);
    }
    j["arrows"] = json::array();
    for (auto [a, b] : q.arrows()) j["arrows"].push_back({a, b});
    j["tau"] = json::array();
    for (int v = 0; v < q.size(); ++v) j["tau"].push_back({v, q.tau(v)});
    if (q.has_rho()) {
        j["rho"] = json::array();
        for (int v = 0; v < q.size(); ++v) j["rho"].push_back(q.rho(v));
    }
    return j;
}

StableTranslationQuiver quiver_from_json(const json& j) {
    const auto& vs = j.at("vertices");
    const int n = static_cast<int>(vs.size());
    std::vector<int> tau(n, -1);
    for (const auto& p : j.at("tau")) {
        int v = p.at(0).get<int>(), w = p.at(1).get<int>();
        if (v < 0 || v >= n || w < 0 || w >= n) throw std::runtime_error("tau entry out of range");
        tau[v] = w;
    }
    if (std::count(tau.begin(), tau.end(), -1)) throw std::runtime_error("tau is not total");
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j.at("arrows")) arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    StableTranslationQuiver q(n, arrows, tau);
    if (j.contains("shape")) {
        const auto& s = j["shape"];
        q.shape = TreeShape{s.at("r").get<int>(), s.at("s").get<int>(), s.at("t").get<int>()};
    }
    q.period = j.value("period", 0);
    q.twist = j.value("twist", std::string("none"));
    for (int v = 0; v < n; ++v) {
        const auto& x = vs[v];
        if (x.at("id").get<int>() != v) throw std::runtime_error("vertices must be listed by id");
        if (x.contains("col")) q.coords.push_back({x["col"].get<int>(), x.at("node").get<int>()});
        if (x.contains("name")) q.names.push_back(x["name"].get<std::string>());
    }
    if (!q.coords.empty() && static_cast<int>(q.coords.size()) != n) throw std::runtime_error("partial coordinates");
    if (!q.names.empty() && static_cast<int>(q.names.size()) != n) throw std::runtime_error("partial names");
    if (j.contains("rho")) q.set_rho(j["rho"].get<std::vector<int>>());
    return q;
}

bool same_quiver(const StableTranslationQuiver& a, const StableTranslationQuiver& b) {
    if (a.size() != b.size() || a.tau_map() != b.tau_map() || a.has_rho() != b.has_rho()) return false;
    auto x = a.arrows(), y = b.arrows();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
    if (a.has_rho())
        for (int v = 0; v < a.size(); ++v)
            if (a.rho(v) != b.rho(v)) return false;
    return a.shape == b.shape && a.period == b.period && a.twist == b.twist && a.coords == b.coords &&
           a.names == b.names;
}

std::string quiver_to_dot(const StableTranslationQuiver& q) {
    std::ostringstream o;
    o << "digraph AR {\n  rankdir=LR;\n";
    std::map<int, std::vector<int>> by_col;
    for (int v = 0; v < q.size(); ++v) {
        o << "  v" << v << " [label=\"" << q.name_of(v) << "\"];\n";
        if (!q.coords.empty()) by_col[q.coords[v].col].push_back(v);
    }
    for (const auto& [c, vs] : by_col) {
        o << "  { rank=same;";
        for (int v : vs) o << " v" << v << ";";
        o << " }\n";
    }
    auto arrows = q.arrows();
    std::sort(arrows.begin(), arrows.end());
    for (auto [a, b] : arrows) o << "  v" << a << " -> v" << b << ";\n";
    for (int v = 0; v < q.size(); ++v) o << "  v" << v << " -> v" << q.tau(v) << " [style=dashed, constraint=false];\n";
    o << "}\n";
    return o.str();
}

json compat_to_json(const CategorySpec& spec, const CompatMatrix& cm) {
    json j;
    j["type"] = to_string(spec.type);
    j["m"] = cm.m();
    std::vector<int> objects(cm.size());
    for (int x = 0; x < cm.size(); ++x) objects[x] = x;
    j["objects"] = objects;
    std::vector<std::vector<int>> deg(cm.size(), std::vector<int>(cm.size()));
    json ext = json::array();
    for (int x = 0; x < cm.size(); ++x) {
        json row = json::array();
        for (int y = 0; y < cm.size(); ++y) {
            deg[x][y] = cm.degree(x, y);
            std::vector<int> e;
            for (int k = 1; k <= cm.m(); ++k) e.push_back(cm.ext(x, y, k));
            row.push_back(e);
        }
        ext.push_back(row);
    }
    j["degree"] = deg;
    j["ext"] = ext;
    json labels = json::array();
    for (const auto& r : root_labels(spec)) labels.push_back(r.str());
    j["roots"] = labels;
    return j;
}

CompatMatrix compat_from_json(const json& j) {
    const int n = static_cast<int>(j.at("objects").size());
    const int m = j.at("m").get<int>();
    CompatMatrix cm(n, m);
    const auto& ext = j.at("ext");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 1; k <= m; ++k) cm.set_ext(x, y, k, ext.at(x).at(y).at(k - 1).get<int>());
    const auto& deg = j.at("degree");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (deg.at(x).at(y).get<int>() != cm.degree(x, y)) throw std::runtime_error("degree disagrees with ext");
    return cm;
}

json tableau_to_json(const Tableau& t) {
    return {{"rows", t.rows()}, {"cols", t.cols()}, {"entries", t.row_data()}};
}

Tableau tableau_from_json(const json& j) {
    Tableau t(j.at("entries").get<std::vector<std::vector<int>>>());
    if (t.rows() != j.at("rows").get<int>() || t.cols() != j.at("cols").get<int>())
        throw std::runtime_error("tableau shape mismatch");
    return t;
}

json cluster_to_json(const ClusterRecord& c) {
    json j = {{"type", to_string(c.type)}, {"m", c.m}, {"objects", c.objects}, {"diagonals", c.diagonals}};
    j["tableaux"] = c.tableaux;
    return j;
}

ClusterRecord cluster_from_json(const json& j) {
    ClusterRecord c;
    c.type = parse_dynkin(j.at("type").get<std::string>());
    c.m = j.at("m").get<int>();
    c.objects = j.at("objects").get<std::vector<int>>();
    c.diagonals = j.value("diagonals", std::vector<std::string>{});
    c.tableaux = j.value("tableaux", std::vector<std::string>{});
    return c;
}

std::string vertex_name(const TiltingContext& ctx, const DiagonalModel& model, int v) {
    const ColoredDiagonal* best = nullptr;
    for (int x : ctx.orbits.at(v)) {
        const auto& d = model.diagonal_of(x);
        if (!best || d.color != Color::B) best = &d;
    }
    return best->str();
}

ClusterRecord describe_cluster(const TiltingContext& ctx, const DiagonalModel& model, const Dictionary* dict,
                               std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    ClusterRecord c;
    c.type = ctx.type;
    c.m = ctx.m;
    c.objects = vertices;
    for (int v : vertices) {
        c.diagonals.push_back(vertex_name(ctx, model, v));
        if (dict && ctx.m == 1 && ctx.type != Dynkin::F4) c.tableaux.push_back(dict->tableau_of(v).str());
    }
    return c;
}

std::vector<int> resolve_vertices(const TiltingContext& ctx, const DiagonalModel& model,
                                  const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const auto& s : names) {
        if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
            int v = std::stoi(s);
            if (v >= ctx.size()) throw std::invalid_argument("object id out of range: " + s);
            out.push_back(v);
            continue;
        }
        int x = model.object_of(ColoredDiagonal::parse(s));
        if (x < 0) throw std::invalid_argument("diagonal not in the model: " + s);
        int v = ctx.vertex_of[x];
        if (v < 0) throw std::invalid_argument("diagonal has no F4 vertex: " + s);
        out.push_back(v);
    }
    return out;
}

json tau_report_json(const TauReport& r) {
    json j;
    j["header"] = r.header;
    j["frozen"] = r.frozen;
    j["matched"] = r.matched;
    j["total"] = r.pairs.size();
    j["ch_checked"] = r.ch_checked;
    j["ch_matched"] = r.ch_matched;
    j["ch_pairs"] = r.ch_pairs;
    j["ch_pairs_matched"] = r.ch_pairs_matched;
    j["pairs"] = json::array();
    for (const auto& p : r.pairs) {
        json e = {{"object", p.object}, {"T", p.t.str()}, {"tauT", p.tau_t.str()}, {"matched", p.matched}};
        if (p.matched) {
            e["exponents"] = p.match.exponents;
            e["sign"] = p.match.sign;
        } else {
            e["note"] = p.note;
        }
        j["pairs"].push_back(e);
    }
    return j;
}

json mesh_report_json(const MeshReport& r) {
    json j = {{"meshes", r.meshes}, {"content_pass", r.content_pass}, {"frozen_pass", r.frozen_pass},
              {"row_pass", r.row_pass}, {"ok", r.ok()}};
    j["failures"] = json::array();
    for (const auto& f : r.failures) j["failures"].push_back({{"object", f.object}, {"detail", f.detail}});
    return j;
}

json pairs_to_json(const std::vector<PairEntry>& pairs) {
    json j = json::array();
    for (const auto& p : pairs) j.push_back({{"a", p.a.str()}, {"b", p.b.str()}, {"orbit_size", p.orbit_size}});
    return j;
}

namespace {

struct Point {
    double x, y;
};

Point polygon_vertex(int k, int polygon, double cx, double cy, double r) {
    const double pi = std::acos(-1.0);
    double a = -pi / 2 + 2 * pi * (k - 1) / polygon;
    return {cx + r * std::cos(a), cy + r * std::sin(a)};
}

const char* colour_name(Color c) {
    switch (c) {
        case Color::R: return "red";
        case Color::B: return "blue";
        default: return "green";
    }
}

}  // namespace

std::string render_svg(int polygon, const std::vector<ColoredDiagonal>& ds, const std::string& title) {
    const double cx = 200, cy = 210, r = 160;
    std::ostringstream o;
    o << std::fixed << std::setprecision(2);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"420\" viewBox=\"0 0 400 420\">\n";
    o << "<defs>\n";
    for (const char* c : {"red", "blue"})
        o << "<marker id=\"arrow-" << c << "\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" "
          << "markerHeight=\"8\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"" << c << "\"/></marker>\n";
    o << "</defs>\n";
    o << "<title>" << title << "</title>\n";
    o << "<polygon fill=\"none\" stroke=\"black\" points=\"";
    for (int k = 1; k <= polygon; ++k) {
        auto p = polygon_vertex(k, polygon, cx, cy, r);
        o << (k > 1 ? " " : "") << p.x << "," << p.y;
    }
    o << "\"/>\n";
    for (int k = 1; k <= polygon; ++k) {
        auto p = polygon_vertex(k, polygon, cx, cy, r + 16);
        o << "<text x=\"" << p.x << "\" y=\"" << p.y + 4 << "\" font-size=\"12\" text-anchor=\"middle\">" << k
          << "</text>\n";
    }
    for (const auto& d : ds) {
        auto a = polygon_vertex(d.i, polygon, cx, cy, r), b = polygon_vertex(d.j, polygon, cx, cy, r);
        // red and blue between the same vertices are drawn slightly apart
        double dx = b.x - a.x, dy = b.y - a.y, len = std::hypot(dx, dy);
        double sh = d.color == Color::G ? 0 : (d.color == Color::R ? 3 : -3);
        if (len > 0 && d.color == Color::B) sh = -sh;
        double ox = len > 0 ? -dy / len * sh : 0, oy = len > 0 ? dx / len * sh : 0;
        o << "<line x1=\"" << a.x + ox << "\" y1=\"" << a.y + oy << "\" x2=\"" << b.x + ox << "\" y2=\"" << b.y + oy
          << "\" stroke=\"" << colour_name(d.color) << "\" stroke-width=\"2\"";
        if (d.color != Color::G) o << " marker-end=\"url(#arrow-" << colour_name(d.color) << ")\"";
        o << "><title>" << d.str() << "</title></line>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string render_tikz(int polygon, const std::vector<ColoredDiagonal>& ds) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(3);
    o << "\\begin{tikzpicture}[scale=2]\n";
    for (int k = 1; k <= polygon; ++k) {
        auto p = polygon_vertex(k, polygon, 0, 0, 1);
        o << "  \\coordinate (v" << k << ") at (" << p.x << "," << -p.y << ");\n";
        auto q = polygon_vertex(k, polygon, 0, 0, 1.15);
        o << "  \\node at (" << q.x << "," << -q.y << ") {\\small " << k << "};\n";
    }
    o << "  \\draw";
    for (int k = 1; k <= polygon; ++k) o << " (v" << k << ") --";
    o << " cycle;\n";
    for (const auto& d : ds) {
        o << "  \\draw[" << colour_name(d.color) << (d.color == Color::G ? "" : ", ->") << ", thick] (v" << d.i
          << ") -- (v" << d.j << ");\n";
    }
    o << "\\end{tikzpicture}\n";
    return o.str();
}

int apply_thread_cap() {
    const char* e = std::getenv("MCC_THREADS");
    if (!e || !*e) return 0;
    int n = std::atoi(e);
    if (n < 1) throw std::invalid_argument("MCC_THREADS must be a positive integer");
#ifdef _OPENMP
    omp_set_num_threads(n);
#endif
    return n;
}

}  // namespace mcc

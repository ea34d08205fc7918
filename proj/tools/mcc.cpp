#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mcc/export.hpp"

using namespace mcc;

namespace {

enum Exit { Ok = 0, Invariant = 1, BadConfig = 2, LongGuard = 3 };

struct Config {
    std::string type = "E6";
    int m = 1;
    std::string convention;
    std::string out;
    std::uint64_t seed = 1;
    bool long_run = false;
};

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Dynkin type_of(const Config& c) {
    try {
        return parse_dynkin(c.type);
    } catch (const std::exception&) {
        throw BadInput("unknown type " + c.type);
    }
}

void check_m(const Config& c, int max_m = 3) {
    if (c.m < 1 || c.m > max_m) throw BadInput("m must lie in 1.." + std::to_string(max_m));
}

void emit(const Config& c, const std::string& text) {
    if (c.out.empty() || c.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw BadInput("cannot write " + c.out);
    f << text;
}

DiagonalModel model_for(const Config& c, const CategorySpec& spec) {
    if (c.convention.empty()) return make_model(spec);
    return make_model(spec, parse_convention(c.convention));
}

Dynkin simply_laced(Dynkin t) { return t == Dynkin::F4 ? Dynkin::E6 : t; }

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if ((ch == ',' || ch == ';') && depth == 0) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int> anchor_vertices(const TiltingContext& ctx) {
    std::vector<int> out;
    for (int x : ctx.spec.anchor_objects()) {
        int v = ctx.vertex_of[x];
        if (v >= 0 && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// "anchor", a JSON file, or a list of diagonals / object ids
std::vector<int> parse_cluster(const TiltingContext& ctx, const DiagonalModel& model, const std::string& arg) {
    if (arg == "anchor") return anchor_vertices(ctx);
    std::ifstream f(arg);
    if (f) {
        auto rec = cluster_from_json(json::parse(f));
        if (rec.type != ctx.type || rec.m != ctx.m) throw BadInput("cluster file is for another category");
        return rec.objects;
    }
    try {
        return resolve_vertices(ctx, model, split(arg));
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
}

int cmd_build(const Config& c, const std::string& dot) {
    check_m(c);
    auto t = type_of(c);
    auto spec = make_category(simply_laced(t), c.m);
    auto model = model_for(c, spec);
    json j;
    j["type"] = to_string(t);
    j["m"] = c.m;
    j["convention"] = to_string(model.convention);
    auto quotient = spec.quiver;
    auto diagonal = model.quiver;
    if (t == Dynkin::F4) {
        quotient = fold_by_rho(quotient);
        diagonal = fold_f4(diagonal);
    }
    j["quotient"] = quiver_to_json(quotient);
    j["diagonal"] = quiver_to_json(diagonal);
    j["isomorphism"] = model.to_object;
    bool ok = is_isomorphism(model.quiver, spec.quiver, model.to_object) && check_stability(quotient).ok &&
              check_stability(diagonal).ok && same_quiver(quiver_from_json(j["quotient"]), quotient);
    emit(c, j.dump(1) + "\n");
    if (!dot.empty()) {
        std::ofstream f(dot);
        if (!f) throw BadInput("cannot write " + dot);
        f << quiver_to_dot(quotient);
    }
    std::cerr << to_string(t) << " m=" << c.m << ": " << quotient.size() << " vertices, " << quotient.arrow_count()
              << " arrows, period " << spec.period << (ok ? "" : ", INVARIANT FAILURE") << "\n";
    return ok ? Ok : Invariant;
}

int cmd_compat(const Config& c, bool serial) {
    check_m(c);
    auto t = type_of(c);
    auto spec = make_category(simply_laced(t), c.m);
    auto cm = serial ? compat_matrix_serial(spec) : compat_matrix_parallel(spec);
    emit(c, compat_to_json(spec, cm).dump() + "\n");
    return Ok;
}

bool needs_long(Dynkin t, int m) { return (t == Dynkin::E8 && m >= 2) || (t == Dynkin::E7 && m >= 3); }

int cmd_enumerate(const Config& c, bool count_only, bool serial, bool progress) {
    check_m(c);
    auto t = type_of(c);
    if (needs_long(t, c.m) && !c.long_run) {
        std::cerr << "enumeration of " << to_string(t) << " m=" << c.m << " (" << count_formula(t, c.m).get_str()
                  << " clusters) requires --long\n";
        return LongGuard;
    }
    auto start = std::chrono::steady_clock::now();
    auto ctx = make_context(t, c.m, !serial);
    auto model = make_model(ctx.spec);
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = nullptr;
    if (!count_only) {
        if (c.out.empty() || c.out == "-") {
            stream = &std::cout;
        } else {
            file = std::make_unique<std::ofstream>(c.out);
            if (!*file) throw BadInput("cannot write " + c.out);
            stream = file.get();
        }
    }
    std::uint64_t seen = 0;
    ClusterSink sink = [&](const std::vector<int>& cl) {
        ++seen;
        if (stream) *stream << cluster_to_json(describe_cluster(ctx, model, nullptr, cl)).dump() << "\n";
        if (progress && seen % 1000000 == 0) std::cerr << "  " << seen << " clusters\n";
    };
    std::uint64_t n = enumerate_clusters(ctx.graph, ctx.rank, sink, serial ? Exec::Serial : Exec::Parallel);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto expected = count_formula(t, c.m);
    if (count_only) std::cout << n << "\n";
    std::cerr << to_string(t) << " m=" << c.m << ": " << n << " clusters, formula " << expected.get_str() << ", "
              << secs << " s\n";
    return mpz_class(std::to_string(n)) == expected ? Ok : Invariant;
}

int cmd_mutate(const Config& c, const std::string& cluster, const std::string& at, const std::string& to) {
    check_m(c);
    auto t = type_of(c);
    auto ctx = make_context(t, c.m);
    auto model = make_model(ctx.spec);
    auto verts = parse_cluster(ctx, model, cluster);
    if (!is_cluster(ctx.graph, ctx.rank, verts)) throw BadInput("not a cluster");
    auto pick = resolve_vertices(ctx, model, {at});
    auto it = std::find(verts.begin(), verts.end(), pick[0]);
    if (it == verts.end()) throw BadInput(at + " is not in the cluster");
    std::vector<int> rest;
    for (int v : verts)
        if (v != pick[0]) rest.push_back(v);
    auto comps = complements(ctx.graph, rest);
    std::optional<int> target;
    if (!to.empty()) target = resolve_vertices(ctx, model, {to})[0];
    std::unique_ptr<Dictionary> dict;
    if (c.m == 1 && t != Dynkin::F4) dict = std::make_unique<Dictionary>(dictionary(t, model));
    std::sort(verts.begin(), verts.end());
    Cluster next = mutate(ctx.graph, Cluster{verts}, pick[0], target);
    json j;
    j["from"] = cluster_to_json(describe_cluster(ctx, model, dict.get(), verts));
    j["to"] = cluster_to_json(describe_cluster(ctx, model, dict.get(), next.objects));
    json cj = json::array();
    for (int v : comps) cj.push_back(vertex_name(ctx, model, v));
    j["complements"] = cj;
    emit(c, j.dump(1) + "\n");
    return static_cast<int>(comps.size()) == c.m + 1 ? Ok : Invariant;
}

int cmd_dict(const Config& c, const std::string& object, const std::string& tableau, bool validate) {
    auto t = type_of(c);
    if (t == Dynkin::F4) throw BadInput("dictionaries exist for E6, E7, E8");
    auto spec = make_category(t, 1);
    auto model = make_model(spec);
    auto d = dictionary(t, model);
    if (!object.empty()) {
        int x;
        try {
            x = model.object_of(ColoredDiagonal::parse(object));
        } catch (const std::invalid_argument& e) {
            throw BadInput(e.what());
        }
        emit(c, d.tableau_of(x).str() + "\n");
        return Ok;
    }
    if (!tableau.empty()) {
        int x = d.object_of(Tableau::parse(tableau));
        if (x < 0) {
            std::cerr << "no diagonal carries " << tableau << "\n";
            return Invariant;
        }
        emit(c, d.entries[x].diagonal.str() + "\n");
        return Ok;
    }
    if (validate) {
        auto rc = d.rank_counts();
        auto mesh = mesh_sum_check(d, spec);
        auto mats = generic_matrices(3, grassmannian_m(t), 2, c.seed);
        auto cl = exchange_closure(initial_seed(t, mats));
        std::set<Tableau> dict_set, reached;
        for (const auto& e : d.entries) dict_set.insert(reduce(e.tableau));
        for (const auto& [label, v] : cl.variables) reached.insert(label);
        bool ok = mesh.ok() && reached == dict_set && cl.conflicts.empty();
        std::ostringstream o;
        o << to_string(t) << ": " << d.size() << " entries, ranks";
        for (std::size_t k = 1; k < rc.size(); ++k) o << " " << rc[k];
        o << "; meshes " << mesh.meshes << " (" << mesh.content_pass << " exact, " << mesh.frozen_pass
          << " up to frozen); closure " << reached.size() << " labels over " << cl.seeds << " seeds, "
          << (reached == dict_set ? "equal to" : "DIFFERENT FROM") << " the dictionary\n";
        emit(c, o.str());
        return ok ? Ok : Invariant;
    }
    if (!c.out.empty()) {
        write_dictionary_file(c.out, t, d);
        return Ok;
    }
    for (const auto& e : d.entries) std::cout << e.diagonal.str() << " " << e.tableau.str() << "\n";
    return Ok;
}

int cmd_mesh(const Config& c) {
    auto t = type_of(c);
    if (t == Dynkin::F4) throw BadInput("mesh-check needs E6, E7 or E8");
    auto spec = make_category(t, 1);
    auto d = dictionary(t, make_model(spec));
    auto rep = mesh_sum_check(d, spec);
    emit(c, mesh_report_json(rep).dump(1) + "\n");
    return rep.ok() ? Ok : Invariant;
}

int cmd_twist(const Config& c, const std::string& pairs, int matrices) {
    auto t = type_of(c);
    if (t == Dynkin::F4) throw BadInput("twist-check needs E6, E7 or E8");
    auto spec = make_category(t, 1);
    auto d = dictionary(t, make_model(spec));
    std::vector<int> objs;
    if (pairs != "all") {
        int k = 0;
        try {
            k = std::stoi(pairs);
        } catch (const std::exception&) {
            throw BadInput("--pairs takes 'all' or a count");
        }
        std::mt19937_64 rng(c.seed);
        for (int x = 0; x < d.size(); ++x) objs.push_back(x);
        std::shuffle(objs.begin(), objs.end(), rng);
        objs.resize(std::min<std::size_t>(objs.size(), std::max(k, 1)));
        std::sort(objs.begin(), objs.end());
    }
    auto rep = verify_tau(t, d, spec, matrices, c.seed, objs);
    emit(c, tau_report_json(rep).dump(1) + "\n");
    std::cerr << to_string(t) << ": " << rep.matched << "/" << rep.pairs.size() << " pairs matched\n";
    return rep.all_matched() ? Ok : Invariant;
}

Color parse_color(char ch) {
    switch (ch) {
        case 'R': return Color::R;
        case 'B': return Color::B;
        case 'G': return Color::G;
    }
    throw BadInput(std::string("unknown colour ") + ch);
}

int cmd_pairs(const Config& c, const std::string& colors, bool all) {
    check_m(c, 2);
    auto t = type_of(c);
    if (colors.size() != 2) throw BadInput("--colors takes two letters from R, B, G");
    auto ctx = make_context(t, c.m);
    auto model = make_model(ctx.spec);
    auto rep = pair_report(ctx, model, parse_color(colors[0]), parse_color(colors[1]), !all);
    json j = {{"type", to_string(t)}, {"m", c.m}, {"colors", colors}, {"up_to_rotation", !all}};
    j["pairs"] = pairs_to_json(rep);
    emit(c, j.dump(1) + "\n");
    std::cerr << rep.size() << " pairs\n";
    return Ok;
}

int cmd_render(const Config& c, const std::string& cluster, const std::string& format) {
    check_m(c);
    auto t = type_of(c);
    auto ctx = make_context(t, c.m);
    auto model = make_model(ctx.spec);
    auto verts = parse_cluster(ctx, model, cluster);
    std::vector<ColoredDiagonal> ds;
    for (int v : verts)
        for (int x : ctx.orbits.at(v)) ds.push_back(model.diagonal_of(x));
    std::sort(ds.begin(), ds.end());
    const int polygon = model.set.polygon();
    std::string title = to_string(t) + " m=" + std::to_string(c.m);
    if (format == "svg") emit(c, render_svg(polygon, ds, title));
    else if (format == "tikz") emit(c, render_tikz(polygon, ds));
    else throw BadInput("--format takes svg or tikz");
    return Ok;
}

int cmd_selfcheck(const Config& c) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        failures += !ok;
    };
    const std::pair<Dynkin, int> small[] = {{Dynkin::F4, 1}, {Dynkin::F4, 2}, {Dynkin::E6, 1},
                                            {Dynkin::E6, 2}, {Dynkin::E7, 1}, {Dynkin::E8, 1}};
    for (auto [t, m] : small) {
        auto ctx = make_context(t, m);
        auto n = enumerate_clusters(ctx.graph, ctx.rank);
        report("enumerate " + to_string(t) + " m=" + std::to_string(m),
               mpz_class(std::to_string(n)) == count_formula(t, m));
    }
    for (auto t : {Dynkin::E6, Dynkin::E7, Dynkin::E8})
        for (int m : {1, 2}) {
            auto spec = make_category(t, m);
            auto model = make_model(spec);
            report("stability and model isomorphism " + to_string(t) + " m=" + std::to_string(m),
                   check_stability(spec.quiver).ok && is_isomorphism(model.quiver, spec.quiver, model.to_object));
        }
    for (auto t : {Dynkin::E6, Dynkin::E7, Dynkin::E8}) {
        auto spec = make_category(t, 1);
        auto d = dictionary(t, make_model(spec));
        report("mesh sums " + to_string(t), mesh_sum_check(d, spec).ok());
        auto cl = exchange_closure(initial_seed(t, generic_matrices(3, grassmannian_m(t), 2, c.seed)));
        std::set<Tableau> a, b;
        for (const auto& e : d.entries) a.insert(reduce(e.tableau));
        for (const auto& [l, v] : cl.variables) b.insert(l);
        report("exchange closure " + to_string(t), a == b && cl.conflicts.empty());
    }
    {
        auto spec = make_category(Dynkin::E6, 1);
        auto d = dictionary(Dynkin::E6, make_model(spec));
        report("twist on E6", verify_tau(Dynkin::E6, d, spec, 2, c.seed).all_matched());
    }
    return failures ? Invariant : Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-cluster categories of exceptional type: quivers, diagonal models, clusters, tableaux"};
    app.require_subcommand(1);
    Config cfg;
    auto common = [&](CLI::App* s, bool with_m = true) {
        s->add_option("--type", cfg.type, "E6, E7, E8 or F4")->default_val("E6");
        if (with_m) s->add_option("--m", cfg.m, "m")->default_val(1);
        s->add_option("--out", cfg.out, "output file (default stdout)");
        s->add_option("--seed", cfg.seed, "seed for matrix sampling")->default_val(1);
    };

    std::string dot, cluster = "anchor", at, to, object, tableau, pairs = "all", colors = "RR", format = "svg";
    bool count_only = false, serial = false, validate = false, all = false, progress = false;
    int matrices = 2;

    auto* build = app.add_subcommand("build", "quotient and diagonal quivers as JSON");
    common(build);
    build->add_option("--convention", cfg.convention, "offset convention shifted or aligned");
    build->add_option("--dot", dot, "also write the quotient quiver as DOT");

    auto* compat = app.add_subcommand("compat", "Ext profiles and compatibility degrees as JSON");
    common(compat);
    compat->add_flag("--serial", serial, "use the serial reference kernel");

    auto* enumerate = app.add_subcommand("enumerate", "m-cluster tilting objects");
    common(enumerate);
    enumerate->add_flag("--count-only", count_only, "print only the count");
    enumerate->add_flag("--long", cfg.long_run, "allow long runs");
    enumerate->add_flag("--serial", serial, "use the serial reference kernel");
    enumerate->add_flag("--progress", progress, "report progress on stderr");

    auto* mut = app.add_subcommand("mutate", "replace one summand of a cluster");
    common(mut);
    mut->add_option("--cluster", cluster, "anchor, a cluster JSON file or a list of diagonals")->default_val("anchor");
    mut->add_option("--at", at, "summand to replace")->required();
    mut->add_option("--to", to, "chosen complement (default: next in cyclic order)");

    auto* dict = app.add_subcommand("dict", "diagonal / tableau dictionary");
    common(dict, false);
    dict->add_option("--object", object, "colored diagonal, e.g. [1,6]_R");
    dict->add_option("--tableau", tableau, "tableau, e.g. (3,4,6)");
    dict->add_flag("--validate", validate, "sizes, mesh sums and exchange closure");

    auto* mesh = app.add_subcommand("mesh-check", "mesh sums of the labelled AR quiver");
    common(mesh, false);

    auto* twist = app.add_subcommand("twist-check", "twist versus tau on dictionary pairs");
    common(twist, false);
    twist->add_option("--pairs", pairs, "all or a number of sampled pairs")->default_val("all");
    twist->add_option("--matrices", matrices, "number of random matrices")->default_val(2)->check(CLI::Range(2, 8));

    auto* pr = app.add_subcommand("pair-report", "compatible pairs by colour");
    common(pr);
    pr->add_option("--colors", colors, "two of R, B, G")->default_val("RR");
    pr->add_flag("--all", all, "list every pair instead of rotation classes");

    auto* render = app.add_subcommand("render", "draw a cluster in its polygon");
    common(render);
    render->add_option("--cluster", cluster, "anchor, a cluster JSON file or a list of diagonals")->default_val("anchor");
    render->add_option("--format", format, "svg or tikz")->default_val("svg");

    auto* self = app.add_subcommand("selfcheck", "invariant suite");
    self->add_option("--seed", cfg.seed, "seed for matrix sampling")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : BadConfig;
    }
    try {
        apply_thread_cap();
        if (*build) return cmd_build(cfg, dot);
        if (*compat) return cmd_compat(cfg, serial);
        if (*enumerate) return cmd_enumerate(cfg, count_only, serial, progress);
        if (*mut) return cmd_mutate(cfg, cluster, at, to);
        if (*dict) return cmd_dict(cfg, object, tableau, validate);
        if (*mesh) return cmd_mesh(cfg);
        if (*twist) return cmd_twist(cfg, pairs, matrices);
        if (*pr) return cmd_pairs(cfg, colors, all);
        if (*render) return cmd_render(cfg, cluster, format);
        if (*self) return cmd_selfcheck(cfg);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadConfig;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return Invariant;
    }
    return BadConfig;
}

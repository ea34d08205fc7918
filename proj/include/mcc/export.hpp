#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcc/category.hpp"
#include "mcc/diagonal.hpp"
#include "mcc/grassmannian.hpp"
#include "mcc/quiver.hpp"
#include "mcc/tableau.hpp"
#include "mcc/tilting.hpp"

namespace mcc {

using json = nlohmann::json;

json quiver_to_json(const StableTranslationQuiver& q);
StableTranslationQuiver quiver_from_json(const json& j);
bool same_quiver(const StableTranslationQuiver& a, const StableTranslationQuiver& b);
std::string quiver_to_dot(const StableTranslationQuiver& q);

json compat_to_json(const CategorySpec& spec, const CompatMatrix& cm);
CompatMatrix compat_from_json(const json& j);

json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

struct ClusterRecord {
    Dynkin type = Dynkin::E6;
    int m = 1;
    std::vector<int> objects;  // vertices of the tilting context
    std::vector<std::string> diagonals;
    std::vector<std::string> tableaux;  // m = 1, simply laced only
    bool operator==(const ClusterRecord&) const = default;
};

json cluster_to_json(const ClusterRecord& c);
ClusterRecord cluster_from_json(const json& j);

// Name of a context vertex: its diagonal, or for F4 the non-blue member of
// the orbit.
std::string vertex_name(const TiltingContext& ctx, const DiagonalModel& model, int v);
ClusterRecord describe_cluster(const TiltingContext& ctx, const DiagonalModel& model, const Dictionary* dict,
                               std::vector<int> vertices);
// Diagonal names or object ids; throws on anything unknown.
std::vector<int> resolve_vertices(const TiltingContext& ctx, const DiagonalModel& model,
                                  const std::vector<std::string>& names);

json tau_report_json(const TauReport& r);
json mesh_report_json(const MeshReport& r);
json pairs_to_json(const std::vector<PairEntry>& pairs);

// Polygon vertices clockwise from 12 o'clock; red and blue carry arrowheads.
std::string render_svg(int polygon, const std::vector<ColoredDiagonal>& ds, const std::string& title);
std::string render_tikz(int polygon, const std::vector<ColoredDiagonal>& ds);

// MCC_THREADS caps the OpenMP team size; returns the cap or 0.
int apply_thread_cap();

}  // namespace mcc

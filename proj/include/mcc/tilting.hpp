#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mcc/category.hpp"
#include "mcc/diagonal.hpp"

namespace mcc {

mpz_class count_formula(Dynkin t, int m);

struct Cluster {
    std::vector<int> objects;  // sorted
    bool operator==(const Cluster&) const = default;
    auto operator<=>(const Cluster&) const = default;
};

// Adjacent means compatible; no loops stored.
class CompatGraph {
public:
    CompatGraph() = default;
    explicit CompatGraph(int n);

    int size() const { return n_; }
    int words() const { return words_; }
    void add_edge(int a, int b);
    bool adjacent(int a, int b) const { return (row(a)[b >> 6] >> (b & 63)) & 1u; }
    const std::uint64_t* row(int a) const { return adj_.data() + static_cast<std::size_t>(a) * words_; }
    int degree(int a) const;
    bool operator==(const CompatGraph&) const = default;

private:
    int n_ = 0, words_ = 0;
    std::vector<std::uint64_t> adj_;
};

CompatGraph compat_graph(const CompatMatrix& cm);

// Cluster theory for one type. For F4 the vertices are rho-orbits of E6
// objects, adjacent when all lifts are pairwise compatible.
struct TiltingContext {
    Dynkin type = Dynkin::E6;
    int m = 1;
    int rank = 0;
    CategorySpec spec;  // E6 for F4
    CompatMatrix cm;
    CompatGraph graph;
    std::vector<std::vector<int>> orbits;  // vertex -> objects of spec
    std::vector<int> vertex_of;            // object of spec -> vertex, -1 if excluded

    int size() const { return graph.size(); }
    int tau(int v) const;
};

TiltingContext make_context(Dynkin t, int m, bool parallel = true);

enum class Exec { Serial, Parallel };

using ClusterSink = std::function<void(const std::vector<int>&)>;

// Maximal cliques, each once, in lexicographic order. Throws "theory
// violation" on a maximal clique whose size is not n.
std::uint64_t enumerate_clusters(const CompatGraph& g, int n, const ClusterSink& sink = nullptr,
                                 Exec exec = Exec::Parallel);

// Count only the cliques whose smallest vertex lies in `roots`.
std::uint64_t count_partitions(const CompatGraph& g, int n, const std::vector<int>& roots,
                               Exec exec = Exec::Parallel);

std::vector<Cluster> all_clusters(const CompatGraph& g, int n, Exec exec = Exec::Parallel);

std::vector<int> complements(const CompatGraph& g, const std::vector<int>& partial);

Cluster mutate(const CompatGraph& g, const Cluster& c, int k, std::optional<int> target = std::nullopt);

bool is_cluster(const CompatGraph& g, int n, const std::vector<int>& objects);

struct PairEntry {
    ColoredDiagonal a, b;
    int orbit_size = 0;
    std::string str() const;
    bool operator==(const PairEntry&) const = default;
    auto operator<=>(const PairEntry&) const = default;
};

// Unordered compatible pairs whose colours match the filter, optionally
// reduced to canonical representatives under the model translation.
std::vector<PairEntry> pair_report(const TiltingContext& ctx, const DiagonalModel& model, Color c1, Color c2,
                                   bool up_to_rotation);

}  // namespace mcc

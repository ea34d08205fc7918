#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcc {

// Three-legged tree. Vertex 0 is the branch vertex, leg 1 holds ids 1..r,
// leg 2 holds r+1..r+s, leg 3 holds r+s+1..r+s+t, each leg listed from the
// branch outwards. Edges point toward the branch.
struct TreeShape {
    int r = 0, s = 0, t = 0;

    int vertex_count() const { return r + s + t + 1; }
    int leg_length(int leg) const;
    int leg_of(int v) const;    // 0 for the branch vertex, else 1..3
    int depth(int v) const;     // distance to the branch vertex
    int vertex_at(int leg, int depth) const;
    std::vector<std::pair<int, int>> edges() const;  // (far, near)
    std::vector<int> degrees() const;
    bool symmetric() const;
    int rho(int v) const;  // leg swap; identity on non-symmetric shapes

    static TreeShape E6() { return {1, 2, 2}; }
    static TreeShape E7() { return {1, 2, 3}; }
    static TreeShape E8() { return {1, 2, 4}; }

    bool operator==(const TreeShape&) const = default;
};

struct TQVertex {
    int col = 0;
    int node = 0;
    bool operator==(const TQVertex&) const = default;
    auto operator<=>(const TQVertex&) const = default;
};

struct StabilityResult {
    bool ok = true;
    int vertex = -1;
    std::string reason;
};

class StableTranslationQuiver {
public:
    StableTranslationQuiver() = default;
    StableTranslationQuiver(int n, std::vector<std::pair<int, int>> arrows,
                            std::vector<int> tau);

    int size() const { return static_cast<int>(tau_.size()); }
    const std::vector<int>& succ(int v) const { return out_[v]; }
    const std::vector<int>& pred(int v) const { return in_[v]; }
    int tau(int v) const { return tau_[v]; }
    int tau_inv(int v) const { return tau_inv_[v]; }
    int tau_pow(int v, int k) const;
    bool has_arrow(int a, int b) const;
    std::vector<std::pair<int, int>> arrows() const;
    std::size_t arrow_count() const;
    int orbit_length(int v) const;

    const std::vector<int>& tau_map() const { return tau_; }

    bool has_rho() const { return !rho_.empty(); }
    int rho(int v) const { return rho_[v]; }
    void set_rho(std::vector<int> rho);

    // optional metadata
    std::optional<TreeShape> shape;
    int period = 0;
    std::string twist = "none";
    std::vector<TQVertex> coords;
    std::vector<std::string> names;

    std::string name_of(int v) const;
    int find_coord(TQVertex x) const;

private:
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> tau_, tau_inv_, rho_;
};

// ZT / <tau^{-N} phi>, phi = rho^twist_power (twist_power = 0 means none).
StableTranslationQuiver build_quotient_quiver(const TreeShape& shape, int N,
                                              int twist_power = 0);

StableTranslationQuiver m_power(const StableTranslationQuiver& q, int m);

StabilityResult check_stability(const StableTranslationQuiver& q);

// weakly connected components via arrows, each sorted
std::vector<std::vector<int>> components(const StableTranslationQuiver& q);

// the full subquiver on the given vertices (must be tau-closed)
StableTranslationQuiver induced_subquiver(const StableTranslationQuiver& q,
                                          const std::vector<int>& verts);

// A vertex-bijection a -> b commuting with tau and preserving arrows in
// both directions. Pinned pairs are imposed before the search.
std::optional<std::vector<int>> find_isomorphism(
    const StableTranslationQuiver& a, const StableTranslationQuiver& b,
    const std::vector<std::pair<int, int>>& pinned = {});

// Isomorphism of small onto one connected component of big.
std::optional<std::vector<int>> find_embedding(const StableTranslationQuiver& small,
                                               const StableTranslationQuiver& big);

bool is_isomorphism(const StableTranslationQuiver& a, const StableTranslationQuiver& b,
                    const std::vector<int>& map);

// Fold by an involution rho commuting with tau: vertices are rho-orbits.
StableTranslationQuiver fold_by_rho(const StableTranslationQuiver& q,
                                    std::vector<std::vector<int>>* orbits = nullptr);

}  // namespace mcc

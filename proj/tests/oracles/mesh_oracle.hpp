#pragma once

// Hom(X, -) in the mesh category of Z(tree) computed as iterated cokernels
// with explicit arrow maps. No clipping rule is used.

#include <algorithm>
#include <map>

#include "mcc/quiver.hpp"
#include "oracles/linalg.hpp"

namespace oracle {

class MeshOracle {
public:
    MeshOracle(const mcc::TreeShape& shape, mcc::TQVertex x, int width) : x_(x), width_(width) {
        const int nodes = shape.vertex_count();
        std::vector<int> order(nodes);
        for (int v = 0; v < nodes; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return shape.depth(a) > shape.depth(b); });
        std::vector<std::vector<int>> same_col(nodes), prev_col(nodes);
        for (auto [a, b] : shape.edges()) {
            same_col[b].push_back(a);
            prev_col[a].push_back(b);
        }
        for (int dc = 0; dc < width; ++dc) {
            for (int v : order) {
                Key y{x.col + dc, v};
                if (dc == 0 && v == x.node) {
                    dim_[y] = 1;
                    continue;
                }
                std::vector<Key> preds;
                for (int a : same_col[v]) preds.push_back({y.first, a});
                for (int b : prev_col[v])
                    if (dc > 0) preds.push_back({y.first - 1, b});
                Key ty{y.first - 1, v};
                int tdim = dc > 0 ? dim_[ty] : 0;
                int total = 0;
                std::vector<int> offset;
                for (auto& z : preds) {
                    offset.push_back(total);
                    total += dim_[z];
                }
                // A: total x tdim, blocks are the maps tau y -> z
                Mat A(total, std::vector<mpq_class>(tdim, 0));
                for (std::size_t k = 0; k < preds.size(); ++k) {
                    if (tdim == 0 || dim_[preds[k]] == 0) continue;
                    const Mat& f = map_.at({ty, preds[k]});
                    for (int i = 0; i < dim_[preds[k]]; ++i)
                        for (int j = 0; j < tdim; ++j) A[offset[k] + i][j] = f[i][j];
                }
                Mat L = total == 0 ? Mat{} : null_space(transpose(A, tdim), total);
                int d = static_cast<int>(L.size());
                dim_[y] = d;
                for (std::size_t k = 0; k < preds.size(); ++k) {
                    Mat f(d, std::vector<mpq_class>(dim_[preds[k]], 0));
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < dim_[preds[k]]; ++j) f[i][j] = L[i][offset[k] + j];
                    map_[{preds[k], y}] = f;
                }
            }
        }
    }

    int dim(mcc::TQVertex y) const {
        auto it = dim_.find({y.col, y.node});
        return it == dim_.end() ? 0 : it->second;
    }

private:
    using Key = std::pair<int, int>;
    mcc::TQVertex x_;
    int width_;
    std::map<Key, int> dim_;
    std::map<std::pair<Key, Key>, Mat> map_;
};

}  // namespace oracle

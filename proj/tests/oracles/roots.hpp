#pragma once

// Positive roots of E6/E7/E8 in Bourbaki labelling, generated by simple
// reflections from the Cartan matrix.

#include <set>
#include <vector>

#include "mcc/category.hpp"

namespace oracle {

inline std::vector<std::vector<int>> cartan(mcc::Dynkin t) {
    int n = mcc::dynkin_rank(t);
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (auto [a, b] : edges) {
        if (a > n || b > n) continue;
        c[a - 1][b - 1] = c[b - 1][a - 1] = -1;
    }
    return c;
}

inline std::vector<std::vector<int>> positive_roots(mcc::Dynkin t) {
    auto c = cartan(t);
    int n = static_cast<int>(c.size());
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> todo;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        auto b = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += b[j] * c[j][i];
            auto r = b;
            r[i] -= pairing;
            bool positive = true;
            for (int x : r) positive = positive && x >= 0;
            if (positive && roots.insert(r).second) todo.push_back(r);
        }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace oracle

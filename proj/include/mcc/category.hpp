#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcc/quiver.hpp"

namespace mcc {

enum class Dynkin { E6, E7, E8, F4 };

std::string to_string(Dynkin d);
Dynkin parse_dynkin(const std::string& s);
int coxeter_number(Dynkin d);
std::vector<int> exponents(Dynkin d);
int dynkin_rank(Dynkin d);

struct CategorySpec {
    Dynkin type = Dynkin::E6;
    int m = 1;
    TreeShape shape;
    int h = 0;
    std::vector<int> exps;
    int period = 0;       // (h/2) m + 1
    int twist_power = 0;  // m for E6, 0 otherwise
    StableTranslationQuiver quiver;
    std::vector<int> bourbaki;         // tree node -> simple root index 1..n
    std::vector<TQVertex> anchor;      // cover lift of the object labelled -alpha_{i+1}

    int rank() const { return shape.vertex_count(); }
    int size() const { return quiver.size(); }

    TQVertex tau(TQVertex x, int k = 1) const { return {x.col - k, x.node}; }
    TQVertex sigma(TQVertex x, int k = 1) const;
    TQVertex orbit_shift(TQVertex x, int i) const;  // (tau^{-1} Sigma^m)^i
    int object_of(TQVertex x) const;
    TQVertex lift(int obj) const { return quiver.coords[obj]; }
    int node_of_root(int i) const;  // Bourbaki index -> tree node
    std::vector<int> anchor_objects() const;
};

CategorySpec make_category(Dynkin type, int m);

// dim Hom(X, -) on a window of the cover starting at col(X)
class Hammock {
public:
    Hammock(const TreeShape& shape, TQVertex x, int width);
    int at(TQVertex y) const;
    int width() const { return width_; }
    TQVertex source() const { return x_; }

private:
    int nodes_, width_;
    TQVertex x_;
    std::vector<int> f_;
};

int hom_dim_cover(const CategorySpec& spec, TQVertex x, TQVertex y, int width = -1);

struct ExtProfile {
    std::vector<int> dims;  // dims[j-1] = dim Ext^j
    int total() const;
    bool operator==(const ExtProfile&) const = default;
};

ExtProfile ext_profile(const CategorySpec& spec, int x, int y);
int compatibility_degree(const CategorySpec& spec, int x, int y);

// All Ext profiles, stored densely as ext[(x*size + y)*m + j-1].
class CompatMatrix {
public:
    CompatMatrix() = default;
    CompatMatrix(int n, int m) : n_(n), m_(m), ext_(static_cast<std::size_t>(n) * n * m, 0) {}

    int size() const { return n_; }
    int m() const { return m_; }
    int ext(int x, int y, int j) const { return ext_[idx(x, y, j)]; }
    void set_ext(int x, int y, int j, int v) { ext_[idx(x, y, j)] = static_cast<std::uint8_t>(v); }
    int degree(int x, int y) const;
    bool compatible(int x, int y) const { return degree(x, y) == 0 && degree(y, x) == 0; }
    bool operator==(const CompatMatrix&) const = default;

private:
    std::size_t idx(int x, int y, int j) const {
        return (static_cast<std::size_t>(x) * n_ + y) * m_ + (j - 1);
    }
    int n_ = 0, m_ = 0;
    std::vector<std::uint8_t> ext_;
};

CompatMatrix compat_matrix_serial(const CategorySpec& spec);
CompatMatrix compat_matrix_parallel(const CategorySpec& spec);

struct RootLabel {
    bool negative = false;
    int index = 0;             // for negative simples: i of -alpha_i
    int color = 0;             // for positive roots: 1..m
    std::vector<int> coords;   // over alpha_1..alpha_n
    std::string str() const;
    bool operator==(const RootLabel&) const = default;
};

std::vector<RootLabel> root_labels(const CategorySpec& spec);

}  // namespace mcc

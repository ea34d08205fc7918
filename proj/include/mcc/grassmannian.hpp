#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mcc/category.hpp"
#include "mcc/tableau.hpp"

namespace mcc {

using Vec = std::vector<mpq_class>;
using ZVec = std::vector<mpz_class>;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const mpq_class& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    Vec column(int c) const;  // 0-based
    void set_column(int c, const Vec& v);
    bool operator==(const ExactMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;
};

mpq_class determinant(std::vector<Vec> rows);

// Minor on the columns idx (1-based, strictly increasing).
mpq_class pluecker(const ExactMatrix& p, const Column& idx);

Vec cross_product(const std::vector<Vec>& vs);

// Column i is the cross product of the n-1 cyclically preceding columns,
// with the sign (-1)^{i(n-i)} for i < n.
ExactMatrix ms_twist(const ExactMatrix& p);

ExactMatrix random_integer_matrix(int n, int m, std::mt19937_64& rng, int bound = 9);

// Random integer matrices whose maximal minors, and those of their twists,
// are all nonzero.
std::vector<ExactMatrix> generic_matrices(int n, int m, int count, std::uint64_t seed);

mpq_class evaluate(const std::vector<ChTerm>& terms, const ExactMatrix& p);
mpq_class evaluate_ch(const Tableau& t, const ExactMatrix& p, int ambient);

struct FrozenMatch {
    std::vector<int> exponents;
    int sign = 1;
    std::string str() const;
};

// a = sign * b * prod frozen^e on every matrix; frozen[f][matrix].
std::optional<FrozenMatch> frozen_factor_match(const Vec& a, const Vec& b, const std::vector<Vec>& frozen,
                                               int bound = 4);

struct Seed {
    Dynkin type = Dynkin::E6;
    int n = 3, m = 7;
    std::vector<Tableau> labels;
    std::vector<bool> frozen;
    std::vector<std::vector<int>> b;  // b[i][j] = arrows i -> j minus arrows j -> i
    std::vector<ZVec> values;         // [vertex][matrix]; integral on integer matrices

    int size() const { return static_cast<int>(labels.size()); }
    std::vector<int> mutable_vertices() const;
    std::vector<Tableau> cluster() const;  // sorted mutable labels
};

int grassmannian_m(Dynkin t);
Seed initial_seed(Dynkin t, const std::vector<ExactMatrix>& mats);
Seed mutate_seed(const Seed& s, int k);

struct Closure {
    std::map<Tableau, Vec> variables;  // reduced label -> values
    std::uint64_t seeds = 0;
    std::vector<std::string> conflicts;  // same label with different values, or the reverse
};

Closure exchange_closure(const Seed& s0, bool parallel = true);

struct TauPair {
    int object = 0;
    Tableau t, tau_t;
    bool matched = false;
    FrozenMatch match;
    std::string note;
};

struct TauReport {
    std::string header;
    std::vector<std::string> frozen;
    std::vector<TauPair> pairs;
    int matched = 0;
    int ch_checked = 0, ch_matched = 0;  // formula value vs mutation value
    int ch_pairs = 0, ch_pairs_matched = 0;  // both sides by the formula
    bool all_matched() const { return matched == static_cast<int>(pairs.size()); }
};

// Pairs (T, tau T) from the dictionary, compared as values of the cluster
// variables on twist(p) and p; objects limits the set (empty = all).
TauReport verify_tau(Dynkin t, const Dictionary& d, const CategorySpec& spec, int matrices = 2,
                     std::uint64_t seed = 1, const std::vector<int>& objects = {});

}  // namespace mcc

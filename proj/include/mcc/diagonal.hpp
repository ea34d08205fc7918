#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcc/category.hpp"
#include "mcc/quiver.hpp"

namespace mcc {

enum class Color { R, B, G };

char color_char(Color c);

// [i,j]_R and [i,j]_B are oriented; [i,j]_G is unordered with i < j.
// Vertices are 1..N.
struct ColoredDiagonal {
    int i = 0, j = 0;
    Color color = Color::R;

    std::string str() const;
    static ColoredDiagonal parse(const std::string& s);
    bool operator==(const ColoredDiagonal&) const = default;
    auto operator<=>(const ColoredDiagonal&) const = default;
};

enum class OffsetConvention { Shifted, Aligned };
std::string to_string(OffsetConvention c);
OffsetConvention parse_convention(const std::string& s);

enum class Translation { Tau, Tau0 };

// Every member has a base vertex b and an offset o: G = {b, b+o},
// R = [b, b+o], B = [b+o, b].
class DiagonalSet {
public:
    DiagonalSet(int polygon, int step, std::vector<int> green, std::vector<int> red,
                std::vector<int> blue);

    int polygon() const { return polygon_; }
    int step() const { return step_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<ColoredDiagonal>& members() const { return members_; }
    const ColoredDiagonal& operator[](int k) const { return members_[k]; }
    const std::vector<int>& offsets(Color c) const;
    bool symmetric() const { return red_ == blue_; }

    int index_of(const ColoredDiagonal& d) const;  // -1 if absent
    int index_of(int base, Color c, int offset) const;
    int base(int k) const { return base_[k]; }
    int offset(int k) const { return offset_[k]; }
    Color color(int k) const { return members_[k].color; }
    int count(Color c) const;
    int wrap(int v) const { return ((v - 1) % polygon_ + polygon_) % polygon_ + 1; }

private:
    int polygon_, step_;
    std::vector<int> green_, red_, blue_;
    std::vector<ColoredDiagonal> members_;
    std::vector<int> base_, offset_;
    std::map<ColoredDiagonal, int> index_;
};

ColoredDiagonal make_diagonal(int base, Color c, int offset, int polygon);

DiagonalSet build_P(int r, int s, int t, int n);
DiagonalSet build_P_m(int n, int m, int k1, int k2, OffsetConvention conv);

enum class Auto { Rho, Tau, Tau0 };
ColoredDiagonal apply_auto(Auto which, const ColoredDiagonal& d, const DiagonalSet& set);

std::vector<ColoredDiagonal> rotation_successors(const ColoredDiagonal& d, const DiagonalSet& set,
                                                 Translation mode);

StableTranslationQuiver build_diagonal_quiver(const DiagonalSet& set, Translation mode);

StableTranslationQuiver fold_f4(const StableTranslationQuiver& q,
                                std::vector<std::vector<int>>* orbits = nullptr);

// Red and blue offset counts for the anchored model of a type.
std::pair<int, int> leg_counts(Dynkin t);

// The printed anchor cluster, in order -alpha_n, ..., -alpha_1, transported
// to the m-diagonal set.
std::vector<ColoredDiagonal> anchor_diagonals(Dynkin t, const DiagonalSet& set);

struct DiagonalModel {
    Dynkin type = Dynkin::E6;
    int m = 1;
    OffsetConvention convention = OffsetConvention::Aligned;
    DiagonalSet set{7, 1, {2, 3}, {4, 5}, {4, 5}};
    StableTranslationQuiver quiver;
    std::vector<int> to_object;  // diagonal index -> AR object
    std::vector<int> to_diag;    // AR object -> diagonal index
    std::string selection_note;

    const ColoredDiagonal& diagonal_of(int obj) const { return set[to_diag[obj]]; }
    int object_of(const ColoredDiagonal& d) const;
};

// Translation-quiver isomorphism sending the anchor diagonals to the anchor
// slice of the category.
std::vector<int> anchor_bijection(const CategorySpec& spec, const DiagonalSet& set,
                                  const StableTranslationQuiver& q_diag);

DiagonalModel make_model(const CategorySpec& spec,
                         std::optional<OffsetConvention> conv = std::nullopt);

}  // namespace mcc

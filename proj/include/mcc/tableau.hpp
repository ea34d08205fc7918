#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcc/category.hpp"
#include "mcc/diagonal.hpp"

namespace mcc {

using Column = std::vector<int>;

// Rectangular tableau, stored by rows.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(int rows) : rows_(rows, std::vector<int>{}) {}
    explicit Tableau(std::vector<std::vector<int>> rows);

    // Columns are arranged in lexicographic order; throws if the result is
    // not semi-standard.
    static Tableau from_columns(int n, std::vector<Column> cols);
    static Tableau column(Column c) {
        const int n = static_cast<int>(c.size());
        return from_columns(n, {std::move(c)});
    }
    static Tableau parse(const std::string& s);  // "(1,3 / 2,5 / 4,6)" or "(3,4,6)"

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
    bool empty() const { return cols() == 0; }
    int at(int r, int c) const { return rows_[r][c]; }
    const std::vector<std::vector<int>>& row_data() const { return rows_; }
    Column column_at(int c) const;
    std::vector<Column> columns() const;
    std::vector<int> content() const;  // sorted multiset of entries
    int max_entry() const;

    bool is_semistandard() const;
    std::string str() const;

    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

Tableau row_union(const Tableau& s, const Tableau& t);
Tableau row_union(const std::vector<Tableau>& ts, int n);
bool is_factor(const Tableau& a, const Tableau& b);
Tableau row_delete(const Tableau& a, const Tableau& b);  // a^{-1} b

bool is_trivial(const Tableau& t);
Tableau reduce(const Tableau& t);
bool equivalent(const Tableau& s, const Tableau& t);

int gap_weight(const Column& c);
int gap_weight(const Tableau& t);

struct SmallGapData {
    Tableau form;
    std::vector<int> i, j;
    std::vector<int> w;  // w[a] = w_T(a), 0-based
};

// ambient: entries range over [1, ambient]
SmallGapData small_gap_form(const Tableau& t, int ambient);

std::vector<int> restriction_shape(const Tableau& t, int i);
bool dominance_leq(const Tableau& s, const Tableau& t);

struct ChTerm {
    int sign = 1;
    std::vector<Column> columns;
    bool operator==(const ChTerm&) const = default;
};

std::vector<ChTerm> ch_expand(const Tableau& t, int ambient);
Tableau top_of(const std::vector<ChTerm>& expansion);

struct DictEntry {
    ColoredDiagonal diagonal;
    Tableau tableau;
    std::string provenance;
};

// Indexed by object id of the m = 1 category.
struct Dictionary {
    Dynkin type = Dynkin::E6;
    int ambient = 7;
    std::vector<DictEntry> entries;
    std::map<Tableau, int> index;

    int size() const { return static_cast<int>(entries.size()); }
    const Tableau& tableau_of(int obj) const { return entries[obj].tableau; }
    int object_of(const Tableau& t) const;  // -1 if absent
    std::vector<int> rank_counts() const;   // by number of columns
};

std::map<ColoredDiagonal, Tableau> read_dictionary_file(const std::string& path, std::map<ColoredDiagonal, std::string>* prov = nullptr);
void write_dictionary_file(const std::string& path, Dynkin t, const Dictionary& d);

Tableau green_rule(const ColoredDiagonal& green, const std::map<ColoredDiagonal, Tableau>& rb, int polygon);

std::string default_data_dir();

// E6 from the printed red/blue lists and the green rule; E7/E8 from the
// figure transcriptions.
Dictionary dictionary(Dynkin t, const DiagonalModel& model, const std::string& data_dir = default_data_dir());
Dictionary dictionary_from_map(Dynkin t, const DiagonalModel& model, const std::map<ColoredDiagonal, Tableau>& map,
                               const std::string& provenance);

Tableau tableau_tau(const Dictionary& d, const CategorySpec& spec, const Tableau& t);

struct MeshFailure {
    int object = 0;
    std::string detail;
};

struct MeshReport {
    int meshes = 0;
    int content_pass = 0;
    int frozen_pass = 0;  // equal after removing frozen columns
    int row_pass = 0;
    std::vector<MeshFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Frozen Pluecker coordinates of the Grassmannian attached to a type:
// cyclic intervals, plus P167 for E7.
std::vector<Column> frozen_columns(Dynkin t);
bool frozen_decomposable(const std::vector<int>& content, const std::vector<Column>& frozen);

MeshReport mesh_sum_check(const Dictionary& d, const CategorySpec& spec);

Tableau tableau_mutation(const Tableau& tk, const std::vector<Tableau>& in, const std::vector<Tableau>& out);

}  // namespace mcc

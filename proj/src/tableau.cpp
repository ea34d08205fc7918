#include "mcc/tableau.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mcc {

using json = nlohmann::json;

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != rows_[0].size()) throw std::invalid_argument("tableau is not rectangular");
}

Tableau Tableau::from_columns(int n, std::vector<Column> cols) {
    for (auto& c : cols) {
        if (static_cast<int>(c.size()) != n) throw std::invalid_argument("column of wrong height");
        std::sort(c.begin(), c.end());
    }
    std::sort(cols.begin(), cols.end());
    std::vector<std::vector<int>> rows(n);
    for (const auto& c : cols)
        for (int r = 0; r < n; ++r) rows[r].push_back(c[r]);
    Tableau t(std::move(rows));
    if (!t.is_semistandard()) throw std::invalid_argument("columns do not form a semi-standard tableau");
    return t;
}

Tableau Tableau::parse(const std::string& s) {
    std::string body;
    for (char ch : s)
        if (ch != '(' && ch != ')' && ch != ' ') body += ch;
    if (body.empty()) throw std::invalid_argument("empty tableau string");
    auto numbers = [](const std::string& part) {
        std::vector<int> v;
        std::stringstream ss(part);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) v.push_back(std::stoi(tok));
        return v;
    };
    if (body.find('/') == std::string::npos) return column(numbers(body));
    std::vector<std::vector<int>> rows;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, '/')) rows.push_back(numbers(part));
    Tableau t(std::move(rows));
    if (!t.is_semistandard()) throw std::invalid_argument("not semi-standard: " + s);
    return t;
}

Column Tableau::column_at(int c) const {
    Column col;
    for (const auto& r : rows_) col.push_back(r[c]);
    return col;
}

std::vector<Column> Tableau::columns() const {
    std::vector<Column> out;
    for (int c = 0; c < cols(); ++c) out.push_back(column_at(c));
    return out;
}

std::vector<int> Tableau::content() const {
    std::vector<int> v;
    for (const auto& r : rows_) v.insert(v.end(), r.begin(), r.end());
    std::sort(v.begin(), v.end());
    return v;
}

int Tableau::max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
        for (int x : r) m = std::max(m, x);
    return m;
}

bool Tableau::is_semistandard() const {
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) {
            if (c + 1 < cols() && rows_[r][c] > rows_[r][c + 1]) return false;
            if (r + 1 < rows() && rows_[r][c] >= rows_[r + 1][c]) return false;
        }
    return true;
}

std::string Tableau::str() const {
    if (empty()) return "()";
    std::string s = "(";
    if (cols() == 1) {
        for (int r = 0; r < rows(); ++r) s += (r ? "," : "") + std::to_string(rows_[r][0]);
        return s + ")";
    }
    for (int r = 0; r < rows(); ++r) {
        if (r) s += " / ";
        for (int c = 0; c < cols(); ++c) s += (c ? "," : "") + std::to_string(rows_[r][c]);
    }
    return s + ")";
}

Tableau row_union(const Tableau& s, const Tableau& t) {
    if (s.rows() != t.rows()) throw std::invalid_argument("row counts differ");
    std::vector<std::vector<int>> rows(s.rows());
    for (int r = 0; r < s.rows(); ++r) {
        rows[r] = s.row_data()[r];
        rows[r].insert(rows[r].end(), t.row_data()[r].begin(), t.row_data()[r].end());
        std::sort(rows[r].begin(), rows[r].end());
    }
    Tableau u(std::move(rows));
    if (!u.is_semistandard()) throw std::logic_error("row union is not semi-standard");
    return u;
}

Tableau row_union(const std::vector<Tableau>& ts, int n) {
    Tableau acc(n);
    for (const auto& t : ts) acc = row_union(acc, t);
    return acc;
}

namespace {

bool row_contains(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

bool is_factor(const Tableau& a, const Tableau& b) {
    if (a.rows() != b.rows()) return false;
    for (int r = 0; r < a.rows(); ++r)
        if (!row_contains(a.row_data()[r], b.row_data()[r])) return false;
    return true;
}

Tableau row_delete(const Tableau& a, const Tableau& b) {
    if (!is_factor(a, b)) throw std::invalid_argument("not a factor: " + a.str() + " in " + b.str());
    std::vector<std::vector<int>> rows(a.rows());
    for (int r = 0; r < a.rows(); ++r) {
        const auto& x = a.row_data()[r];
        const auto& y = b.row_data()[r];
        std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(rows[r]));
    }
    return Tableau(std::move(rows));
}

bool is_trivial(const Tableau& t) {
    for (int r = 0; r + 1 < t.rows(); ++r)
        for (int c = 0; c < t.cols(); ++c)
            if (t.at(r + 1, c) != t.at(r, c) + 1) return false;
    return true;
}

namespace {

Tableau trivial_column(int a, int n) {
    Column c(n);
    std::iota(c.begin(), c.end(), a);
    return Tableau::column(c);
}

}  // namespace

Tableau reduce(const Tableau& t) {
    Tableau cur = t;
    const int n = t.rows();
    bool again = true;
    while (again && !cur.empty()) {
        again = false;
        for (int a = 1; a + n - 1 <= cur.max_entry(); ++a) {
            auto col = trivial_column(a, n);
            if (!is_factor(col, cur)) continue;
            auto rest = row_delete(col, cur);
            if (!rest.is_semistandard()) continue;
            cur = rest;
            again = true;
            break;
        }
    }
    return cur;
}

bool equivalent(const Tableau& s, const Tableau& t) { return reduce(s) == reduce(t); }

int gap_weight(const Column& c) {
    int g = 0;
    for (std::size_t j = 1; j < c.size(); ++j) g += c[j] - c[j - 1] - 1;
    return g;
}

int gap_weight(const Tableau& t) {
    int g = 0;
    for (const auto& c : t.columns()) g += gap_weight(c);
    return g;
}

namespace {

int inversions(const std::vector<int>& w) {
    int c = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b) c += w[a] > w[b];
    return c;
}

// content [i, i+n] minus j, or nothing if j is outside
std::optional<Column> gap_column(int i, int n, int j) {
    if (j < i || j > i + n) return std::nullopt;
    Column c;
    for (int x = i; x <= i + n; ++x)
        if (x != j) c.push_back(x);
    return c;
}

// Bruhat order via the tableau criterion
bool bruhat_geq(const std::vector<int>& u, const std::vector<int>& w) {
    for (std::size_t p = 1; p <= u.size(); ++p) {
        std::vector<int> a(u.begin(), u.begin() + p), b(w.begin(), w.begin() + p);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t q = 0; q < p; ++q)
            if (a[q] < b[q]) return false;
    }
    return true;
}

}  // namespace

SmallGapData small_gap_form(const Tableau& t, int ambient) {
    const int n = t.rows();
    Tableau r = reduce(t);
    const int k = gap_weight(r);
    if (k < 1) throw std::invalid_argument("small gap form needs positive gap weight");
    const int extra = k - r.cols();
    if (extra < 0) throw std::logic_error("reduced tableau has a gap-free column");
    const int top = ambient - n + 1;
    std::vector<Tableau> hits;
    std::vector<int> pick(extra, 1);
    while (true) {
        try {
            Tableau u = r;
            for (int a : pick) u = row_union(u, trivial_column(a, n));
            bool small = true;
            for (const auto& c : u.columns()) small = small && gap_weight(c) == 1;
            if (small && reduce(u) == r && std::find(hits.begin(), hits.end(), u) == hits.end()) hits.push_back(u);
        } catch (const std::logic_error&) {
        }
        // next weakly increasing sequence in [1, top]
        int p = extra - 1;
        while (p >= 0 && pick[p] == top) --p;
        if (p < 0) break;
        ++pick[p];
        for (int q = p + 1; q < extra; ++q) pick[q] = pick[p];
    }
    if (hits.empty()) throw std::runtime_error("no small-gap representative found within bound");
    if (hits.size() > 1) throw std::logic_error("small-gap representative is not unique");
    SmallGapData d;
    d.form = hits[0];
    auto cols = d.form.columns();
    for (const auto& c : cols) {
        d.i.push_back(c.front());
        for (int x = c.front(); x <= c.front() + n; ++x)
            if (!std::binary_search(c.begin(), c.end(), x)) {
                d.j.push_back(x);
                break;
            }
    }
    std::sort(d.j.begin(), d.j.end());
    std::vector<int> w(k);
    std::iota(w.begin(), w.end(), 0);
    auto sorted_cols = cols;
    std::sort(sorted_cols.begin(), sorted_cols.end());
    int best = -1;
    bool tie = false;
    do {
        std::vector<Column> cand;
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            auto c = gap_column(d.i[w[a]], n, d.j[a]);
            if (!c) ok = false;
            else cand.push_back(*c);
        }
        if (!ok) continue;
        std::sort(cand.begin(), cand.end());
        if (cand != sorted_cols) continue;
        int len = inversions(w);
        if (len > best) {
            best = len;
            d.w = w;
            tie = false;
        } else if (len == best) {
            tie = true;
        }
    } while (std::next_permutation(w.begin(), w.end()));
    if (best < 0) throw std::logic_error("no valid permutation for the small-gap form");
    if (tie) throw std::logic_error("maximal permutation is not unique");
    return d;
}

std::vector<int> restriction_shape(const Tableau& t, int i) {
    std::vector<int> sh;
    for (const auto& r : t.row_data())
        sh.push_back(static_cast<int>(std::upper_bound(r.begin(), r.end(), i) - r.begin()));
    return sh;
}

bool dominance_leq(const Tableau& s, const Tableau& t) {
    if (s.rows() != t.rows()) return false;
    const int top = std::max(s.max_entry(), t.max_entry());
    for (int i = 1; i <= top; ++i) {
        auto a = restriction_shape(s, i), b = restriction_shape(t, i);
        int pa = 0, pb = 0;
        for (std::size_t r = 0; r < a.size(); ++r) {
            pa += a[r];
            pb += b[r];
            if (pa > pb) return false;
        }
    }
    return true;
}

std::vector<ChTerm> ch_expand(const Tableau& t, int ambient) {
    const int n = t.rows();
    Tableau r = reduce(t);
    if (r.empty()) return {ChTerm{1, {}}};
    auto d = small_gap_form(t, ambient);
    const int k = static_cast<int>(d.i.size());
    if (k > 3) throw std::invalid_argument("KL regime not implemented");
    std::vector<ChTerm> out;
    std::vector<int> u(k);
    std::iota(u.begin(), u.end(), 0);
    do {
        if (!bruhat_geq(u, d.w)) continue;
        ChTerm term;
        term.sign = (inversions(u) + inversions(d.w)) % 2 ? -1 : 1;
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            auto c = gap_column(d.i[u[a]], n, d.j[a]);
            if (!c) ok = false;
            else term.columns.push_back(*c);
        }
        if (!ok) continue;
        std::sort(term.columns.begin(), term.columns.end());
        out.push_back(std::move(term));
    } while (std::next_permutation(u.begin(), u.end()));
    return out;
}

Tableau top_of(const std::vector<ChTerm>& expansion) {
    if (expansion.empty()) throw std::invalid_argument("empty expansion");
    std::vector<Tableau> ts;
    for (const auto& term : expansion) {
        int n = term.columns.empty() ? 0 : static_cast<int>(term.columns[0].size());
        ts.push_back(Tableau::from_columns(n, term.columns));
    }
    for (const auto& cand : ts) {
        bool top = true;
        for (const auto& o : ts) top = top && dominance_leq(o, cand);
        if (top) return cand;
    }
    throw std::runtime_error("expansion has no dominance maximum");
}

int Dictionary::object_of(const Tableau& t) const {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    it = index.find(reduce(t));
    return it == index.end() ? -1 : it->second;
}

std::vector<int> Dictionary::rank_counts() const {
    std::vector<int> c;
    for (const auto& e : entries) {
        int k = e.tableau.cols();
        if (static_cast<int>(c.size()) <= k) c.resize(k + 1, 0);
        ++c[k];
    }
    return c;
}

std::map<ColoredDiagonal, Tableau> read_dictionary_file(const std::string& path,
                                                       std::map<ColoredDiagonal, std::string>* prov) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    if (j.at("version").get<int>() != 1) throw std::runtime_error("unsupported dictionary version");
    std::map<ColoredDiagonal, Tableau> out;
    for (const auto& e : j.at("entries")) {
        auto d = ColoredDiagonal::parse(e.at("diagonal").get<std::string>());
        Tableau t(e.at("tableau").at("entries").get<std::vector<std::vector<int>>>());
        if (t.rows() != e.at("tableau").at("rows").get<int>() || t.cols() != e.at("tableau").at("cols").get<int>())
            throw std::runtime_error("tableau shape mismatch in " + path);
        if (!out.emplace(d, t).second) throw std::runtime_error("duplicate diagonal " + d.str());
        if (prov) (*prov)[d] = e.value("provenance", "");
    }
    return out;
}

void write_dictionary_file(const std::string& path, Dynkin t, const Dictionary& d) {
    json j;
    j["type"] = to_string(t);
    j["version"] = 1;
    j["entries"] = json::array();
    for (const auto& e : d.entries)
        j["entries"].push_back({{"diagonal", e.diagonal.str()},
                                {"tableau", {{"rows", e.tableau.rows()}, {"cols", e.tableau.cols()}, {"entries", e.tableau.row_data()}}},
                                {"provenance", e.provenance}});
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
}

namespace {

int cyclic_next(const Column& s, int a, int dir) {
    auto it = std::find(s.begin(), s.end(), a);
    int p = static_cast<int>(it - s.begin());
    int k = static_cast<int>(s.size());
    return s[((p + dir) % k + k) % k];
}

}  // namespace

Tableau green_rule(const ColoredDiagonal& green, const std::map<ColoredDiagonal, Tableau>& rb, int polygon) {
    if (green.color != Color::G) throw std::invalid_argument("green_rule needs a green diagonal");
    auto w = [&](int v) { return ((v - 1) % polygon + polygon) % polygon + 1; };
    int i, off;
    int d = green.j - green.i;
    if (d == 2 || d == 3) i = green.i, off = d;
    else if (polygon - d == 2 || polygon - d == 3) i = green.j, off = polygon - d;
    else throw std::invalid_argument("green rule covers offsets 2 and 3 only");
    auto get = [&](const ColoredDiagonal& x) {
        auto it = rb.find(x);
        if (it == rb.end()) throw std::runtime_error("dictionary entry missing: " + x.str());
        return it->second;
    };
    Tableau r = get({w(i + off), i, Color::R});
    Tableau b = get({i, w(i + off), Color::B});
    if (off == 2) {
        if (r.cols() != 1 || b.cols() != 1) throw std::runtime_error("green rule expects one-column neighbours");
        Column sr = r.column_at(0), sb = b.column_at(0);
        std::vector<int> common;
        std::set_intersection(sr.begin(), sr.end(), sb.begin(), sb.end(), std::back_inserter(common));
        if (common.size() != 1) throw std::runtime_error("green rule: no unique common element");
        int a = common[0];
        // the stated orientation, then its mirror if the first is frozen
        for (int dir : {1, -1}) {
            Column c = {a, cyclic_next(sr, a, dir), cyclic_next(sb, a, -dir)};
            std::sort(c.begin(), c.end());
            if (std::adjacent_find(c.begin(), c.end()) != c.end()) continue;
            Tableau t = Tableau::column(c);
            if (!is_trivial(t)) return t;
        }
        throw std::runtime_error("green rule yields only frozen columns");
    }
    if ((r.cols() == 2) == (b.cols() == 2)) throw std::runtime_error("green rule: expected exactly one two-column neighbour");
    const Tableau& t = r.cols() == 2 ? r : b;
    if (t.rows() != 3) throw std::runtime_error("green rule expects three rows");
    return Tableau({{t.at(0, 0), t.at(1, 0)}, {t.at(0, 1), t.at(2, 0)}, {t.at(1, 1), t.at(2, 1)}});
}

std::string default_data_dir() {
    if (const char* e = std::getenv("MCC_DATA_DIR")) return e;
#ifdef MCC_DATA_DIR
    return MCC_DATA_DIR;
#else
    return "data";
#endif
}

Dictionary dictionary_from_map(Dynkin t, const DiagonalModel& model, const std::map<ColoredDiagonal, Tableau>& map,
                               const std::string& provenance) {
    if (model.m != 1) throw std::invalid_argument("dictionaries live on the m = 1 model");
    Dictionary d;
    d.type = t;
    d.ambient = t == Dynkin::E6 ? 7 : 8;
    const int n = model.set.size();
    d.entries.resize(n);
    for (int obj = 0; obj < n; ++obj) {
        const auto& diag = model.diagonal_of(obj);
        auto it = map.find(diag);
        if (it == map.end()) throw std::runtime_error("dictionary entry missing: " + diag.str());
        d.entries[obj] = {diag, it->second, provenance};
        if (!d.index.emplace(it->second, obj).second)
            throw std::runtime_error("dictionary is not injective at " + it->second.str());
    }
    return d;
}

Dictionary dictionary(Dynkin t, const DiagonalModel& model, const std::string& data_dir) {
    const std::string dir = data_dir + "/dictionaries/";
    if (t == Dynkin::E6) {
        auto rb = read_dictionary_file(dir + "e6_printed.json");
        auto full = rb;
        for (const auto& diag : model.set.members())
            if (diag.color == Color::G) full[diag] = green_rule(diag, rb, model.set.polygon());
        auto d = dictionary_from_map(t, model, full, "printed list");
        for (auto& e : d.entries)
            if (e.diagonal.color == Color::G) e.provenance = "green rule";
        return d;
    }
    if (t == Dynkin::F4) throw std::invalid_argument("no tableau dictionary for F4");
    std::map<ColoredDiagonal, std::string> prov;
    auto map = read_dictionary_file(dir + (t == Dynkin::E7 ? "e7.json" : "e8.json"), &prov);
    auto d = dictionary_from_map(t, model, map, "figure");
    for (auto& e : d.entries)
        if (!prov[e.diagonal].empty()) e.provenance = prov[e.diagonal];
    return d;
}

Tableau tableau_tau(const Dictionary& d, const CategorySpec& spec, const Tableau& t) {
    int obj = d.object_of(t);
    if (obj < 0) throw std::runtime_error("dictionary entry missing: " + t.str());
    return d.tableau_of(spec.quiver.tau(obj));
}

std::vector<Column> frozen_columns(Dynkin t) {
    const int n = 3, m = t == Dynkin::E6 ? 7 : 8;
    std::vector<Column> out;
    for (int i = 0; i < m; ++i) {
        Column c;
        for (int r = 0; r < n; ++r) c.push_back((i + r) % m + 1);
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    if (t == Dynkin::E7) out.push_back({1, 6, 7});
    std::sort(out.begin(), out.end());
    return out;
}

bool frozen_decomposable(const std::vector<int>& content, const std::vector<Column>& frozen) {
    if (content.empty()) return true;
    const int x = content.front();
    for (const auto& f : frozen) {
        if (!std::binary_search(f.begin(), f.end(), x)) continue;
        if (!std::includes(content.begin(), content.end(), f.begin(), f.end())) continue;
        std::vector<int> rest;
        std::set_difference(content.begin(), content.end(), f.begin(), f.end(), std::back_inserter(rest));
        if (frozen_decomposable(rest, frozen)) return true;
    }
    return false;
}

MeshReport mesh_sum_check(const Dictionary& d, const CategorySpec& spec) {
    MeshReport rep;
    const auto fz = frozen_columns(d.type);
    const auto& q = spec.quiver;
    const int n = d.entries.empty() ? 0 : d.entries[0].tableau.rows();
    for (int x = 0; x < q.size(); ++x) {
        ++rep.meshes;
        const Tableau& tx = d.tableau_of(x);
        const Tableau& ttx = d.tableau_of(q.tau(x));
        auto lhs = tx.content();
        auto l2 = ttx.content();
        lhs.insert(lhs.end(), l2.begin(), l2.end());
        std::sort(lhs.begin(), lhs.end());
        std::vector<int> rhs;
        std::vector<std::vector<int>> lrows(n), rrows(n);
        for (int r = 0; r < n; ++r) {
            lrows[r] = tx.row_data()[r];
            lrows[r].insert(lrows[r].end(), ttx.row_data()[r].begin(), ttx.row_data()[r].end());
        }
        for (int p : q.pred(x)) {
            auto c = d.tableau_of(p).content();
            rhs.insert(rhs.end(), c.begin(), c.end());
            for (int r = 0; r < n; ++r)
                rrows[r].insert(rrows[r].end(), d.tableau_of(p).row_data()[r].begin(), d.tableau_of(p).row_data()[r].end());
        }
        std::sort(rhs.begin(), rhs.end());
        for (int r = 0; r < n; ++r) {
            std::sort(lrows[r].begin(), lrows[r].end());
            std::sort(rrows[r].begin(), rrows[r].end());
        }
        bool exact = lhs == rhs;
        bool frozen = false;
        if (!exact && std::includes(lhs.begin(), lhs.end(), rhs.begin(), rhs.end())) {
            std::vector<int> diff;
            std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
            frozen = frozen_decomposable(diff, fz);
        }
        if (exact) ++rep.content_pass;
        if (frozen) ++rep.frozen_pass;
        if (!exact && !frozen) rep.failures.push_back({x, "mesh ending at " + tx.str() + " has unequal entries"});
        if (lrows == rrows) ++rep.row_pass;
    }
    return rep;
}

Tableau tableau_mutation(const Tableau& tk, const std::vector<Tableau>& in, const std::vector<Tableau>& out) {
    const int n = tk.rows();
    Tableau a = row_union(in, n), b = row_union(out, n);
    const Tableau* mx;
    if (dominance_leq(a, b)) mx = &b;
    else if (dominance_leq(b, a)) mx = &a;
    else throw std::runtime_error("arrow products are incomparable");
    return row_delete(tk, *mx);
}

}  // namespace mcc

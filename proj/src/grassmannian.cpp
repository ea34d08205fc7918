#include "mcc/grassmannian.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace mcc {

Vec ExactMatrix::column(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void ExactMatrix::set_column(int c, const Vec& v) {
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

mpq_class determinant(std::vector<Vec> a) {
    const int n = static_cast<int>(a.size());
    mpq_class det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

mpq_class pluecker(const ExactMatrix& p, const Column& idx) {
    const int n = p.rows();
    if (static_cast<int>(idx.size()) != n) throw std::invalid_argument("index tuple has wrong length");
    for (int k = 0; k < n; ++k) {
        if (idx[k] < 1 || idx[k] > p.cols()) throw std::invalid_argument("column index out of range");
        if (k && idx[k] <= idx[k - 1]) throw std::invalid_argument("indices must be strictly increasing");
    }
    std::vector<Vec> a(n, Vec(n));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) a[r][k] = p.at(r, idx[k] - 1);
    return determinant(std::move(a));
}

Vec cross_product(const std::vector<Vec>& vs) {
    const int n = static_cast<int>(vs.size()) + 1;
    for (const auto& v : vs)
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("cross product needs n-1 vectors of length n");
    Vec out(n);
    for (int i = 0; i < n; ++i) {
        // det with columns v_1, ..., v_{n-1}, e_i
        std::vector<Vec> a(n, Vec(n));
        for (int r = 0; r < n; ++r) {
            for (int k = 0; k + 1 < n; ++k) a[r][k] = vs[k][r];
            a[r][n - 1] = r == i ? 1 : 0;
        }
        out[i] = determinant(std::move(a));
    }
    return out;
}

ExactMatrix ms_twist(const ExactMatrix& p) {
    const int n = p.rows(), m = p.cols();
    ExactMatrix q(n, m);
    for (int i = 1; i <= m; ++i) {
        std::vector<Vec> vs;
        for (int s = n - 1; s >= 1; --s) vs.push_back(p.column(((i - 1 - s) % m + m) % m));
        Vec c = cross_product(vs);
        if (i <= n - 1 && (i * (n - i)) % 2)
            for (auto& x : c) x = -x;
        q.set_column(i - 1, c);
    }
    return q;
}

ExactMatrix random_integer_matrix(int n, int m, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    ExactMatrix p(n, m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) p.at(r, c) = dist(rng);
    return p;
}

namespace {

std::vector<Column> all_subsets(int n, int m) {
    std::vector<Column> out;
    Column c(n);
    for (int k = 0; k < n; ++k) c[k] = k + 1;
    while (true) {
        out.push_back(c);
        int k = n - 1;
        while (k >= 0 && c[k] == m - n + k + 1) --k;
        if (k < 0) break;
        ++c[k];
        for (int j = k + 1; j < n; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

bool all_minors_nonzero(const ExactMatrix& p) {
    for (const auto& idx : all_subsets(p.rows(), p.cols()))
        if (pluecker(p, idx) == 0) return false;
    return true;
}

}  // namespace

std::vector<ExactMatrix> generic_matrices(int n, int m, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ExactMatrix> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 10000) throw std::runtime_error("could not sample generic matrices");
        auto p = random_integer_matrix(n, m, rng);
        if (all_minors_nonzero(p) && all_minors_nonzero(ms_twist(p))) out.push_back(p);
    }
    return out;
}

mpq_class evaluate(const std::vector<ChTerm>& terms, const ExactMatrix& p) {
    mpq_class s = 0;
    for (const auto& t : terms) {
        mpq_class prod = t.sign;
        for (const auto& c : t.columns) prod *= pluecker(p, c);
        s += prod;
    }
    return s;
}

mpq_class evaluate_ch(const Tableau& t, const ExactMatrix& p, int ambient) {
    Tableau r = reduce(t);
    if (r.cols() == 1) return pluecker(p, r.column_at(0));
    return evaluate(ch_expand(t, ambient), p);
}

std::string FrozenMatch::str() const {
    std::string s = sign < 0 ? "-[" : "[";
    for (std::size_t k = 0; k < exponents.size(); ++k) s += (k ? "," : "") + std::to_string(exponents[k]);
    return s + "]";
}

namespace {

void enumerate_exponents(int count, int bound, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> e(count, -bound);
    while (true) {
        f(e);
        int k = count - 1;
        while (k >= 0 && e[k] == bound) e[k--] = -bound;
        if (k < 0) break;
        ++e[k];
    }
}

double log_abs(const mpq_class& q) {
    long en = 0, ed = 0;
    double n = mpz_get_d_2exp(&en, q.get_num_mpz_t()), d = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log(std::abs(n)) - std::log(std::abs(d)) + (en - ed) * std::log(2.0);
}

mpq_class monomial(const std::vector<Vec>& frozen, const std::vector<int>& idx, const std::vector<int>& e, int mat) {
    mpq_class v = 1;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const mpq_class& f = frozen[idx[k]][mat];
        for (int t = 0; t < std::abs(e[k]); ++t) {
            if (e[k] > 0) v *= f;
            else v /= f;
        }
    }
    return v;
}

}  // namespace

std::optional<FrozenMatch> frozen_factor_match(const Vec& a, const Vec& b, const std::vector<Vec>& frozen, int bound) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("value vectors differ in length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == 0 || b[i] == 0) throw std::invalid_argument("frozen_factor_match needs nonzero values");
    const int f = static_cast<int>(frozen.size());
    std::vector<int> left, right, all(f);
    for (int k = 0; k < f; ++k) {
        (k < f / 2 ? left : right).push_back(k);
        all[k] = k;
    }
    // meet in the middle on log|.| of the first matrix, confirmed exactly
    std::vector<double> lf(f);
    for (int k = 0; k < f; ++k) lf[k] = log_abs(frozen[k][0]);
    const double target = log_abs(a[0]) - log_abs(b[0]);
    std::vector<std::pair<double, std::vector<int>>> table;
    enumerate_exponents(static_cast<int>(left.size()), bound, [&](const std::vector<int>& e) {
        double s = 0;
        for (std::size_t k = 0; k < left.size(); ++k) s += e[k] * lf[left[k]];
        table.emplace_back(s, e);
    });
    std::sort(table.begin(), table.end());
    const double tol = 1e-7 * (1 + std::abs(target));
    std::optional<FrozenMatch> found;
    enumerate_exponents(static_cast<int>(right.size()), bound, [&](const std::vector<int>& e) {
        if (found) return;
        double s = target;
        for (std::size_t k = 0; k < right.size(); ++k) s -= e[k] * lf[right[k]];
        auto lo = std::lower_bound(table.begin(), table.end(), s - tol,
                                   [](const auto& entry, double v) { return entry.first < v; });
        for (auto it = lo; it != table.end() && it->first <= s + tol; ++it) {
            FrozenMatch fm;
            fm.exponents.assign(f, 0);
            for (std::size_t k = 0; k < left.size(); ++k) fm.exponents[left[k]] = it->second[k];
            for (std::size_t k = 0; k < right.size(); ++k) fm.exponents[right[k]] = e[k];
            mpq_class q = a[0] / (b[0] * monomial(frozen, all, fm.exponents, 0));
            if (q != 1 && q != -1) continue;
            fm.sign = q > 0 ? 1 : -1;
            bool ok = true;
            for (std::size_t mat = 1; ok && mat < a.size(); ++mat)
                ok = a[mat] == fm.sign * b[mat] * monomial(frozen, all, fm.exponents, static_cast<int>(mat));
            if (ok) {
                found = fm;
                return;
            }
        }
    });
    return found;
}

std::vector<int> Seed::mutable_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (!frozen[v]) out.push_back(v);
    return out;
}

std::vector<Tableau> Seed::cluster() const {
    std::vector<Tableau> out;
    for (int v : mutable_vertices()) out.push_back(labels[v]);
    std::sort(out.begin(), out.end());
    return out;
}

int grassmannian_m(Dynkin t) {
    if (t == Dynkin::E6) return 7;
    if (t == Dynkin::E7 || t == Dynkin::E8) return 8;
    throw std::invalid_argument("no Grassmannian seed for this type");
}

Seed initial_seed(Dynkin t, const std::vector<ExactMatrix>& mats) {
    Seed s;
    s.type = t;
    s.m = grassmannian_m(t);
    const int rows = s.m - 2;  // grid rows 0..rows-1, three grid columns
    // grid column 0: P_{1,2,r+3}; column 1: P_{1,r+2,r+3}; column 2: P_{r+1,r+2,r+3}
    std::map<std::pair<int, int>, int> id;
    auto add = [&](int r, int c, Column col) {
        id[{r, c}] = s.size();
        s.labels.push_back(Tableau::column(col));
        bool fr = r == 0 || r == rows - 1 || c == 2;
        if (t == Dynkin::E7 && col == Column{1, 6, 7}) fr = true;
        s.frozen.push_back(fr);
    };
    for (int r = 0; r < rows; ++r) add(r, 0, {1, 2, r + 3});
    for (int r = 1; r < rows; ++r) add(r, 1, {1, r + 2, r + 3});
    for (int r = 1; r < rows; ++r) add(r, 2, {r + 1, r + 2, r + 3});
    const int n = s.size();
    s.b.assign(n, std::vector<int>(n, 0));
    auto arrow = [&](std::pair<int, int> from, std::pair<int, int> to) {
        auto a = id.find(from), b = id.find(to);
        if (a == id.end() || b == id.end()) return;
        if (s.frozen[a->second] && s.frozen[b->second]) return;
        s.b[a->second][b->second] += 1;
        s.b[b->second][a->second] -= 1;
    };
    for (int c = 0; c < 3; ++c)
        for (int r = 1; r + 1 <= rows; ++r) arrow({r + 1, c}, {r, c});
    arrow({1, 0}, {0, 0});
    for (int r = 1; r + 1 < rows; ++r) {
        arrow({r, 1}, {r, 0});
        arrow({r, 2}, {r, 1});
        arrow({r, 0}, {r + 1, 1});
        arrow({r, 1}, {r + 1, 2});
    }
    for (int v = 0; v < n; ++v) {
        ZVec vals;
        for (const auto& p : mats) {
            mpq_class q = pluecker(p, s.labels[v].column_at(0));
            if (q.get_den() != 1) throw std::invalid_argument("seed matrices must be integral");
            vals.push_back(q.get_num());
        }
        s.values.push_back(vals);
    }
    return s;
}

Seed mutate_seed(const Seed& s, int k) {
    if (k < 0 || k >= s.size() || s.frozen[k]) throw std::invalid_argument("vertex is not mutable");
    Seed t = s;
    const int n = s.size();
    std::vector<Tableau> in, out;
    const std::size_t mats = s.values[k].size();
    ZVec pin(mats, 1), pout(mats, 1);
    for (int i = 0; i < n; ++i) {
        int bik = s.b[i][k];
        for (int c = 0; c < std::abs(bik); ++c) {
            if (bik > 0) in.push_back(s.labels[i]);
            else out.push_back(s.labels[i]);
            for (std::size_t p = 0; p < mats; ++p) (bik > 0 ? pin : pout)[p] *= s.values[i][p];
        }
    }
    for (std::size_t p = 0; p < mats; ++p) {
        if (s.values[k][p] == 0) throw std::domain_error("zero cluster variable value");
        mpz_class num = pin[p] + pout[p];
        if (!mpz_divisible_p(num.get_mpz_t(), s.values[k][p].get_mpz_t()))
            throw std::logic_error("exchange relation left the integers");
        mpz_divexact(t.values[k][p].get_mpz_t(), num.get_mpz_t(), s.values[k][p].get_mpz_t());
        if (t.values[k][p] == 0) throw std::domain_error("zero cluster variable value");
    }
    t.labels[k] = reduce(tableau_mutation(s.labels[k], in, out));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) t.b[i][j] = -s.b[i][j];
            else {
                int bik = s.b[i][k], bkj = s.b[k][j];
                int sgn = (bik > 0) - (bik < 0);
                t.b[i][j] = s.b[i][j] + sgn * std::max(bik * bkj, 0);
            }
        }
    return t;
}

namespace {

Tableau mutated_label(const Seed& s, int k) {
    std::vector<Tableau> in, out;
    for (int i = 0; i < s.size(); ++i) {
        int bik = s.b[i][k];
        for (int c = 0; c < std::abs(bik); ++c) (bik > 0 ? in : out).push_back(s.labels[i]);
    }
    return reduce(tableau_mutation(s.labels[k], in, out));
}

std::vector<Tableau> cluster_after(const Seed& s, int k, const Tableau& label) {
    std::vector<Tableau> key;
    for (int v : s.mutable_vertices()) key.push_back(v == k ? label : s.labels[v]);
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

Closure exchange_closure(const Seed& s0, bool parallel) {
    Closure cl;
    std::set<std::vector<Tableau>> seen;
    std::vector<Seed> frontier{s0};
    seen.insert(s0.cluster());
    auto record = [&](const Seed& s) {
        for (int v : s.mutable_vertices()) {
            Vec q(s.values[v].begin(), s.values[v].end());
            auto [it, fresh] = cl.variables.emplace(s.labels[v], q);
            if (!fresh && it->second != q) cl.conflicts.push_back("label " + s.labels[v].str() + " has two values");
        }
    };
    record(s0);
    while (!frontier.empty()) {
        cl.seeds += frontier.size();
        std::vector<std::pair<int, int>> moves;
        for (int f = 0; f < static_cast<int>(frontier.size()); ++f)
            for (int k : frontier[f].mutable_vertices()) moves.emplace_back(f, k);
        std::vector<Tableau> labels(moves.size());
        const int nm = static_cast<int>(moves.size());
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
        for (int i = 0; i < nm; ++i) {
            try {
                labels[i] = mutated_label(frontier[moves[i].first], moves[i].second);
            } catch (...) {
#pragma omp critical
                error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        std::vector<std::pair<int, int>> todo;
        for (int i = 0; i < nm; ++i) {
            const auto& [f, k] = moves[i];
            if (seen.insert(cluster_after(frontier[f], k, labels[i])).second) todo.push_back(moves[i]);
        }
        std::vector<Seed> next(todo.size());
        error = nullptr;
        const int nt = static_cast<int>(todo.size());
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
        for (int i = 0; i < nt; ++i) {
            try {
                next[i] = mutate_seed(frontier[todo[i].first], todo[i].second);
            } catch (...) {
#pragma omp critical
                error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        for (const auto& s : next) record(s);
        frontier = std::move(next);
    }
    // distinct labels must carry distinct values
    std::map<Vec, Tableau> by_value;
    for (const auto& [label, vals] : cl.variables) {
        auto [it, fresh] = by_value.emplace(vals, label);
        if (!fresh) cl.conflicts.push_back("labels " + label.str() + " and " + it->second.str() + " share a value");
    }
    return cl;
}

TauReport verify_tau(Dynkin t, const Dictionary& d, const CategorySpec& spec, int matrices, std::uint64_t seed,
                     const std::vector<int>& objects) {
    if (matrices < 2) throw std::invalid_argument("at least two matrices are needed");
    TauReport rep;
    rep.header = "twist column i = cross product of columns i-n+1..i-1 (indices mod m), sign (-1)^{i(n-i)} for i < n; "
                 "values compared up to sign and frozen monomials";
    const int n = 3, m = grassmannian_m(t);
    std::vector<ExactMatrix> mats;
    for (int attempt = 0; attempt < 5; ++attempt) {
        auto base = generic_matrices(n, m, matrices, seed + 7919 * attempt);
        mats = base;
        for (const auto& p : base) mats.push_back(ms_twist(p));
        try {
            Closure cl = exchange_closure(initial_seed(t, mats));
            auto frozen_cols = frozen_columns(t);
            std::vector<Vec> frozen;
            for (const auto& c : frozen_cols) {
                rep.frozen.push_back(Tableau::column(c).str());
                Vec v;
                for (int i = 0; i < matrices; ++i) v.push_back(pluecker(mats[i], c));
                frozen.push_back(v);
            }
            auto value = [&](const Tableau& label, bool twisted) {
                auto it = cl.variables.find(reduce(label));
                if (it == cl.variables.end()) throw std::runtime_error("label not reached by mutation: " + label.str());
                Vec v;
                for (int i = 0; i < matrices; ++i) v.push_back(it->second[twisted ? matrices + i : i]);
                return v;
            };
            std::vector<int> objs = objects;
            if (objs.empty())
                for (int x = 0; x < d.size(); ++x) objs.push_back(x);
            for (int x : objs) {
                TauPair tp;
                tp.object = x;
                tp.t = d.tableau_of(x);
                tp.tau_t = d.tableau_of(spec.quiver.tau(x));
                auto a = value(tp.t, true), b = value(tp.tau_t, false);
                auto fm = frozen_factor_match(a, b, frozen);
                if (fm) {
                    tp.matched = true;
                    tp.match = *fm;
                    ++rep.matched;
                } else {
                    tp.note = "no frozen monomial within bound";
                }
                // the explicit formula agrees with the mutation value where it applies
                auto nonzero = [](const Vec& v) {
                    return std::all_of(v.begin(), v.end(), [](const mpq_class& q) { return q != 0; });
                };
                auto ch_on = [&](const Tableau& u, bool twisted) {
                    Vec c;
                    for (int i = 0; i < matrices; ++i) c.push_back(evaluate_ch(u, mats[twisted ? matrices + i : i], m));
                    return c;
                };
                if (gap_weight(reduce(tp.t)) <= 3) {
                    ++rep.ch_checked;
                    Vec c = ch_on(tp.t, false);
                    if (nonzero(c) && frozen_factor_match(c, value(tp.t, false), frozen)) ++rep.ch_matched;
                    if (gap_weight(reduce(tp.tau_t)) <= 3) {
                        ++rep.ch_pairs;
                        Vec ca = ch_on(tp.t, true), cb = ch_on(tp.tau_t, false);
                        if (nonzero(ca) && nonzero(cb) && frozen_factor_match(ca, cb, frozen)) ++rep.ch_pairs_matched;
                    }
                }
                rep.pairs.push_back(std::move(tp));
            }
            return rep;
        } catch (const std::domain_error&) {
            rep = TauReport{};
            rep.header = "resampled";
        }
    }
    throw std::runtime_error("degenerate matrices after 5 attempts");
}

}  // namespace mcc

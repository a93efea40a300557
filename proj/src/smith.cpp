#include "nbhd/smith.hpp"

#include <algorithm>
#include <limits>
#include <tuple>


namespace nbhd {

namespace {

using Row = IntegerMatrix::Row;

const Integer* find_value(const Row& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const MatrixEntry& e, std::size_t c) { return e.col < c; });
    return it != row.end() && it->col == col ? &it->value : nullptr;
}

class SparseEliminator {
public:
    explicit SparseEliminator(const IntegerMatrix& m)
        : rows_(m.rows()), col_rows_(m.cols()), col_count_(m.cols(), 0), active_(m.rows(), 1) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            rows_[r] = m.row(r);
            for (const auto& e : rows_[r]) {
                col_rows_[e.col].push_back(r);
                ++col_count_[e.col];
            }
        }
    }

    std::vector<Integer> run() {
        std::vector<Integer> diagonal;
        std::size_t pr = 0, pc = 0;
        while (select_pivot(pr, pc)) {
            while (true) {
                if (clear_column(pr, pc)) continue;
                if (reduce_row(pr, pc)) continue;
                break;
            }
            diagonal.push_back(abs(*find_value(rows_[pr], pc)));
            retire_row(pr);
        }
        return diagonal;
    }

private:
    bool select_pivot(std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        const Integer* best = nullptr;
        std::size_t best_cost = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!active_[r] || rows_[r].empty()) continue;
            const std::size_t row_cost = rows_[r].size() - 1;
            for (const auto& e : rows_[r]) {
                const std::size_t cost = row_cost * (col_count_[e.col] - 1);
                if (found) {
                    int cmp = abs_compare(e.value, *best);
                    if (cmp > 0 || (cmp == 0 && cost >= best_cost)) continue;
                }
                found = true;
                best = &e.value;
                best_cost = cost;
                pr = r;
                pc = e.col;
                if (cost == 0 && abs_is_one(e.value)) return true;
            }
        }
        return found;
    }

    static bool abs_is_one(const Integer& v) { return v == 1 || v == -1; }

    static int abs_compare(const Integer& a, const Integer& b) {
        if (abs_is_one(a)) return abs_is_one(b) ? 0 : -1;
        if (abs_is_one(b)) return 1;
        return abs(a).compare(abs(b));
    }

    // Active rows other than `pr` holding a nonzero in `col`, ascending.
    std::vector<std::size_t> rows_in_column(std::size_t col, std::size_t pr) {
        auto& list = col_rows_[col];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        std::erase_if(list, [&](std::size_t r) { return !active_[r] || !find_value(rows_[r], col); });
        std::vector<std::size_t> out;
        for (std::size_t r : list)
            if (r != pr) out.push_back(r);
        return out;
    }

    // rows_[target] -= q * rows_[source]
    void subtract_multiple(std::size_t target, const Integer& q, std::size_t source) {
        const Row& a = rows_[target];
        const Row& b = rows_[source];
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].col < a[i].col) {
                out.push_back({b[j].col, -q * b[j].value});
                ++col_count_[b[j].col];
                col_rows_[b[j].col].push_back(target);
                ++j;
            } else {
                Integer v = a[i].value - q * b[j].value;
                if (v != 0)
                    out.push_back({a[i].col, std::move(v)});
                else
                    --col_count_[a[i].col];
                ++i;
                ++j;
            }
        }
        rows_[target] = std::move(out);
    }

    // Euclidean row steps against the pivot column. Returns true when a
    // remainder became the new (smaller) pivot.
    bool clear_column(std::size_t& pr, std::size_t pc) {
        for (std::size_t s : rows_in_column(pc, pr)) {
            const Integer q = *find_value(rows_[s], pc) / *find_value(rows_[pr], pc);
            if (q != 0) subtract_multiple(s, q, pr);
            if (find_value(rows_[s], pc)) {
                pr = s;
                return true;
            }
        }
        return false;
    }

    // With the pivot alone in its column, column operations only touch the
    // pivot row. Returns true when a remainder became the new pivot.
    bool reduce_row(std::size_t pr, std::size_t& pc) {
        const Integer pivot = *find_value(rows_[pr], pc);
        for (auto& e : rows_[pr]) {
            if (e.col == pc) continue;
            Integer rem = e.value % pivot;
            if (rem != 0) {
                e.value = std::move(rem);
                pc = e.col;
                return true;
            }
        }
        return false;
    }

    void retire_row(std::size_t pr) {
        for (const auto& e : rows_[pr]) --col_count_[e.col];
        rows_[pr].clear();
        active_[pr] = 0;
    }

    std::vector<Row> rows_;
    std::vector<std::vector<std::size_t>> col_rows_;
    std::vector<std::size_t> col_count_;
    std::vector<char> active_;
};

}  // namespace

std::vector<Integer> normalize_diagonal(std::vector<Integer> diagonal) {
    std::vector<Integer> units, rest;
    for (auto& d : diagonal) {
        if (d == 0) continue;
        d = abs(d);
        (d == 1 ? units : rest).push_back(std::move(d));
    }
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            if (rest[j] % rest[i] == 0) continue;
            Integer g = gcd(rest[i], rest[j]);
            Integer l = rest[i] / g * rest[j];
            rest[i] = std::move(g);
            rest[j] = std::move(l);
        }
    units.insert(units.end(), rest.begin(), rest.end());
    std::sort(units.begin(), units.end());
    return units;
}

SnfResult smith_normal_form(const IntegerMatrix& m) {
    SparseEliminator elim(m);
    SnfResult res;
    res.invariant_factors = normalize_diagonal(elim.run());
    res.rank = res.invariant_factors.size();
    return res;
}

SnfWitness smith_normal_form_with_transforms(const IntegerMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    DenseMatrix d = m.to_dense();
    DenseMatrix u = identity_matrix(rows);
    DenseMatrix v = identity_matrix(cols);

    auto row_axpy = [&](std::size_t target, const Integer& q, std::size_t source) {
        for (std::size_t c = 0; c < cols; ++c) d[target][c] -= q * d[source][c];
        for (std::size_t c = 0; c < rows; ++c) u[target][c] -= q * u[source][c];
    };
    auto col_axpy = [&](std::size_t target, const Integer& q, std::size_t source) {
        for (std::size_t r = 0; r < rows; ++r) d[r][target] -= q * d[r][source];
        for (std::size_t r = 0; r < cols; ++r) v[r][target] -= q * v[r][source];
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(d[a], d[b]);
        std::swap(u[a], u[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& r : d) std::swap(r[a], r[b]);
        for (auto& r : v) std::swap(r[a], r[b]);
    };

    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        // Minimum-magnitude nonzero of the trailing block.
        bool found = false;
        std::size_t br = t, bc = t;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (d[r][c] != 0 && (!found || abs(d[r][c]) < abs(d[br][bc]))) {
                    found = true;
                    br = r;
                    bc = c;
                }
        if (!found) break;
        swap_rows(t, br);
        swap_cols(t, bc);

        while (true) {
            bool again = false;
            for (std::size_t r = t + 1; r < rows && !again; ++r) {
                if (d[r][t] == 0) continue;
                row_axpy(r, d[r][t] / d[t][t], t);
                if (d[r][t] != 0) {
                    swap_rows(t, r);
                    again = true;
                }
            }
            for (std::size_t c = t + 1; c < cols && !again; ++c) {
                if (d[t][c] == 0) continue;
                col_axpy(c, d[t][c] / d[t][t], t);
                if (d[t][c] != 0) {
                    swap_cols(t, c);
                    again = true;
                }
            }
            if (again) continue;
            // The pivot must divide the whole trailing block; otherwise fold
            // the offending row into the pivot row and reduce again.
            for (std::size_t r = t + 1; r < rows && !again; ++r)
                for (std::size_t c = t + 1; c < cols && !again; ++c)
                    if (d[r][c] % d[t][t] != 0) {
                        row_axpy(t, Integer(-1), r);
                        again = true;
                    }
            if (!again) break;
        }
        if (d[t][t] < 0) {
            for (auto& x : d[t]) x = -x;
            for (auto& x : u[t]) x = -x;
        }
    }

    SnfWitness w;
    for (std::size_t i = 0; i < t; ++i) w.snf.invariant_factors.push_back(d[i][i]);
    w.snf.rank = t;
    w.u = std::move(u);
    w.diagonal = std::move(d);
    w.v = std::move(v);
    return w;
}

}  // namespace nbhd

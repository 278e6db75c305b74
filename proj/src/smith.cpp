#include "tracehom/smith.hpp"

#include <map>
#include <set>

#include "tracehom/errors.hpp"

namespace tracehom {

int SmithForm::rank_mod(unsigned p) const {
    int r = 0;
    for (const BigInt& d : invariant_factors)
        if (d % p != 0) ++r;
    return r;
}

bool SmithForm::torsion_free() const {
    for (const BigInt& d : invariant_factors)
        if (d != 1) return false;
    return true;
}

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Row-major sparse working copy with a per-column row index kept in sync.
struct WorkMatrix {
    std::vector<std::map<int, BigInt>> row;
    std::vector<std::set<int>> col_rows;
    std::vector<char> row_done;
    std::vector<char> col_done;

    BigInt get(int r, int c) const {
        auto it = row[r].find(c);
        return it == row[r].end() ? BigInt(0) : it->second;
    }

    void set(int r, int c, BigInt v) {
        if (v == 0) {
            row[r].erase(c);
            col_rows[c].erase(r);
        } else {
            row[r][c] = std::move(v);
            col_rows[c].insert(r);
        }
    }

    // row r -= q * row pr
    void row_axpy(int r, int pr, const BigInt& q) {
        for (const auto& [c, v] : row[pr]) set(r, c, get(r, c) - q * v);
    }

    // col c -= q * col pc
    void col_axpy(int c, int pc, const BigInt& q) {
        std::vector<int> rows_with_pc(col_rows[pc].begin(), col_rows[pc].end());
        for (int r : rows_with_pc) set(r, c, get(r, c) - q * get(r, pc));
    }
};

} // namespace

SmithForm smith_normal_form(const SparseIntMatrix& m, std::size_t max_nonzeros) {
    if (m.entries.size() > max_nonzeros)
        throw ResourceLimitError("matrix cap exceeded: " + std::to_string(m.entries.size()) +
                                 " nonzeros > max_matrix=" + std::to_string(max_nonzeros));

    WorkMatrix w;
    w.row.resize(m.rows);
    w.col_rows.resize(m.cols);
    w.row_done.assign(m.rows, 0);
    w.col_done.assign(m.cols, 0);
    for (const auto& [r, c, v] : m.entries) {
        if (r < 0 || r >= m.rows || c < 0 || c >= m.cols) throw DomainError("matrix entry out of range");
        if (v == 0) continue;
        if (!w.row[r].emplace(c, v).second) throw DomainError("duplicate matrix entry");
        w.col_rows[c].insert(r);
    }

    std::vector<BigInt> diagonal;

    for (;;) {
        // Minimal-absolute-value pivot among active entries.
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (int r = 0; r < m.rows && best != 1; ++r) {
            if (w.row_done[r]) continue;
            for (const auto& [c, v] : w.row[r]) {
                if (w.col_done[c]) continue;
                BigInt a = v < 0 ? BigInt(-v) : v;
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                    if (best == 1) break;
                }
            }
        }
        if (pr < 0) break;

        // Clear pivot column and row; truncated-division remainders shrink the
        // pivot strictly, so this loop terminates.
        for (;;) {
            BigInt pivot = w.get(pr, pc);

            std::vector<int> col_others;
            for (int r : w.col_rows[pc])
                if (r != pr && !w.row_done[r]) col_others.push_back(r);
            for (int r : col_others) {
                BigInt q = w.get(r, pc) / pivot;
                if (q != 0) w.row_axpy(r, pr, q);
            }

            // If remainders survive in the column, pivot on the smallest one.
            int smaller_r = -1;
            BigInt smaller = 0;
            for (int r : w.col_rows[pc]) {
                if (r == pr || w.row_done[r]) continue;
                BigInt a = w.get(r, pc);
                if (a < 0) a = -a;
                if (smaller_r < 0 || a < smaller) {
                    smaller = a;
                    smaller_r = r;
                }
            }
            if (smaller_r >= 0) {
                pr = smaller_r;
                continue;
            }

            pivot = w.get(pr, pc);
            std::vector<int> row_others;
            for (const auto& [c, v] : w.row[pr])
                if (c != pc && !w.col_done[c]) row_others.push_back(c);
            for (int c : row_others) {
                BigInt q = w.get(pr, c) / pivot;
                if (q != 0) w.col_axpy(c, pc, q);
            }

            int smaller_c = -1;
            smaller = 0;
            for (const auto& [c, v] : w.row[pr]) {
                if (c == pc || w.col_done[c]) continue;
                BigInt a = v < 0 ? BigInt(-v) : v;
                if (smaller_c < 0 || a < smaller) {
                    smaller = a;
                    smaller_c = c;
                }
            }
            if (smaller_c >= 0) {
                pc = smaller_c;
                continue;
            }

            // Column ops can refill the pivot column; verify both are clean.
            bool col_clean = true;
            for (int r : w.col_rows[pc])
                if (r != pr && !w.row_done[r]) col_clean = false;
            if (!col_clean) continue;
            break;
        }

        BigInt pivot = w.get(pr, pc);
        if (pivot < 0) pivot = -pivot;
        diagonal.push_back(pivot);
        w.row_done[pr] = 1;
        w.col_done[pc] = 1;
    }

    // Massage the diagonal into a divisibility chain (gcd/lcm exchanges).
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
            if (diagonal[j] % diagonal[i] != 0) {
                BigInt g = gcd_big(diagonal[i], diagonal[j]);
                BigInt l = diagonal[i] / g * diagonal[j];
                diagonal[i] = g;
                diagonal[j] = l;
            }
        }
    }

    SmithForm out;
    out.invariant_factors = std::move(diagonal);
    return out;
}

} // namespace tracehom

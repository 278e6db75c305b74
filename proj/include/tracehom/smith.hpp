#ifndef TRACEHOM_SMITH_HPP
#define TRACEHOM_SMITH_HPP

#include <tuple>
#include <vector>

#include "tracehom/bigint.hpp"

namespace tracehom {

struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, BigInt>> entries; // (row, col, value), positions unique
};

/// Invariant factors of an integer matrix: positive, ordered by divisibility
/// (each divides the next). Their count is the rank over the rationals.
struct SmithForm {
    std::vector<BigInt> invariant_factors;

    int rank() const { return static_cast<int>(invariant_factors.size()); }
    /// Rank over GF(p): factors not divisible by p survive reduction mod p.
    int rank_mod(unsigned p) const;
    /// True iff every invariant factor is 1 (cokernel torsion cannot arise).
    bool torsion_free() const;
};

/// Exact Smith normal form by unimodular row/column elimination, pivoting on a
/// minimal-absolute-value entry to control coefficient growth.
SmithForm smith_normal_form(const SparseIntMatrix& m, std::size_t max_nonzeros = 200000);

} // namespace tracehom

#endif

#include "tracehom/homology.hpp"

#include <algorithm>
#include <map>

#include "tracehom/errors.hpp"

namespace tracehom {

FieldSpec FieldSpec::prime_field(unsigned p) {
    if (p < 2) throw DomainError("field characteristic must be a prime");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError(std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

std::string FieldSpec::name() const { return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

BigInt BettiTable::rank(int degree) const {
    auto it = ranks.find(degree);
    return it == ranks.end() ? BigInt(0) : it->second;
}

namespace {

std::size_t closure_nonzeros(const std::vector<std::vector<std::vector<int>>>& closure) {
    // ∂_d holds d+1 entries per d-simplex.
    std::size_t total = 0;
    for (std::size_t level = 1; level < closure.size(); ++level) total += closure[level].size() * level;
    return total;
}

SparseIntMatrix boundary_from_closure(const std::vector<std::vector<std::vector<int>>>& closure, int d) {
    SparseIntMatrix m;
    const auto& rows = closure[static_cast<std::size_t>(d)];     // (d-1)-simplices
    const auto& cols = closure[static_cast<std::size_t>(d) + 1]; // d-simplices
    m.rows = static_cast<int>(rows.size());
    m.cols = static_cast<int>(cols.size());

    std::map<std::vector<int>, int> row_index;
    for (int i = 0; i < m.rows; ++i) row_index.emplace(rows[static_cast<std::size_t>(i)], i);

    for (int c = 0; c < m.cols; ++c) {
        const auto& simplex = cols[static_cast<std::size_t>(c)];
        for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
            std::vector<int> face;
            face.reserve(simplex.size() - 1);
            for (std::size_t i = 0; i < simplex.size(); ++i)
                if (i != omit) face.push_back(simplex[i]);
            int sign = (omit % 2 == 0) ? 1 : -1;
            m.entries.emplace_back(row_index.at(face), c, sign);
        }
    }
    return m;
}

} // namespace

SparseIntMatrix boundary_matrix(const SimplicialComplex& x, int d, const HomologyLimits& limits) {
    if (x.is_void()) throw DomainError("boundary matrix of the void complex is undefined");
    if (d < 0) throw DomainError("boundary degree must be nonnegative");
    auto closure = x.simplices_by_dimension();
    if (d + 1 >= static_cast<int>(closure.size())) return SparseIntMatrix{};
    if (closure_nonzeros(closure) > limits.max_matrix_nonzeros)
        throw ResourceLimitError("matrix cap exceeded (max_matrix=" + std::to_string(limits.max_matrix_nonzeros) + ")");
    return boundary_from_closure(closure, d);
}

BettiTable reduced_betti(const SimplicialComplex& x, const FieldSpec& field, const HomologyLimits& limits) {
    BettiTable table;
    table.field = field;
    if (x.is_void()) return table;

    auto closure = x.simplices_by_dimension();
    const int dim = static_cast<int>(closure.size()) - 2;
    if (closure_nonzeros(closure) > limits.max_matrix_nonzeros)
        throw ResourceLimitError("matrix cap exceeded (max_matrix=" + std::to_string(limits.max_matrix_nonzeros) + ")");

    // rank_over_field[d] = rank of ∂_d, d in 0..dim; treat ∂_{dim+1} = 0.
    std::vector<BigInt> field_rank(static_cast<std::size_t>(dim) + 2, 0);
    for (int d = 0; d <= dim; ++d) {
        SmithForm snf = smith_normal_form(boundary_from_closure(closure, d), limits.max_matrix_nonzeros);
        field_rank[static_cast<std::size_t>(d)] =
            field.is_rationals() ? snf.rank() : snf.rank_mod(field.characteristic());
    }

    for (int d = -1; d <= dim; ++d) {
        BigInt simplices = static_cast<long long>(closure[static_cast<std::size_t>(d) + 1].size());
        BigInt lower = (d >= 0) ? field_rank[static_cast<std::size_t>(d)] : BigInt(0);
        BigInt upper = field_rank[static_cast<std::size_t>(d) + 1];
        BigInt betti = simplices - lower - upper;
        if (betti < 0) throw InvariantViolation("negative Betti rank computed");
        if (betti != 0) table.ranks.emplace(d, betti);
    }
    return table;
}

LaurentPolynomial reduced_poincare(const SimplicialComplex& x, const FieldSpec& field, const HomologyLimits& limits) {
    LaurentPolynomial out;
    for (const auto& [degree, rank] : reduced_betti(x, field, limits).ranks)
        out += LaurentPolynomial::monomial(rank, degree + 1);
    return out;
}

bool integral_torsion_free(const SimplicialComplex& x, const HomologyLimits& limits) {
    if (x.is_void()) return true;
    auto closure = x.simplices_by_dimension();
    if (closure_nonzeros(closure) > limits.max_matrix_nonzeros)
        throw ResourceLimitError("matrix cap exceeded (max_matrix=" + std::to_string(limits.max_matrix_nonzeros) + ")");
    const int dim = static_cast<int>(closure.size()) - 2;
    for (int d = 0; d <= dim; ++d) {
        if (!smith_normal_form(boundary_from_closure(closure, d), limits.max_matrix_nonzeros).torsion_free())
            return false;
    }
    return true;
}

} // namespace tracehom

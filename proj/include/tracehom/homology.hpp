#ifndef TRACEHOM_HOMOLOGY_HPP
#define TRACEHOM_HOMOLOGY_HPP

#include <map>
#include <string>

#include "tracehom/bigint.hpp"
#include "tracehom/laurent.hpp"
#include "tracehom/simplicial_complex.hpp"
#include "tracehom/smith.hpp"

namespace tracehom {

/// Coefficient field: the rationals or a prime field GF(p).
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(unsigned p);

    bool is_rationals() const { return p_ == 0; }
    unsigned characteristic() const { return p_; }
    std::string name() const; // "Q" or "GF(p)"

    bool operator==(const FieldSpec& other) const = default;

private:
    explicit FieldSpec(unsigned p) : p_(p) {}
    unsigned p_;
};

/// Reduced Betti numbers by degree (degree >= -1); zero ranks are omitted.
/// The empty complex {∅} has the single entry {-1: 1}.
struct BettiTable {
    std::map<int, BigInt> ranks;
    FieldSpec field = FieldSpec::rationals();

    BigInt rank(int degree) const;
    bool same_ranks(const BettiTable& other) const { return ranks == other.ranks; }
};

struct HomologyLimits {
    std::size_t max_matrix_nonzeros = 200000;
};

/// Boundary matrix ∂_d of the augmented chain complex: rows are the
/// (d-1)-simplices, columns the d-simplices, both in canonical order. d = 0
/// maps vertices onto the empty simplex.
SparseIntMatrix boundary_matrix(const SimplicialComplex& x, int d, const HomologyLimits& limits = {});

/// Exact reduced homology ranks over the field, every degree from -1 up,
/// computed from integer Smith normal forms of the boundary matrices.
BettiTable reduced_betti(const SimplicialComplex& x, const FieldSpec& field, const HomologyLimits& limits = {});

/// f(X, t) = Σ_i dim H̃_{i-1}(X) t^i; the empty complex gives the constant 1,
/// the void complex 0.
LaurentPolynomial reduced_poincare(const SimplicialComplex& x, const FieldSpec& field,
                                   const HomologyLimits& limits = {});

/// True iff no boundary matrix has an invariant factor > 1, i.e. the integral
/// homology of X is free in every degree.
bool integral_torsion_free(const SimplicialComplex& x, const HomologyLimits& limits = {});

} // namespace tracehom

#endif

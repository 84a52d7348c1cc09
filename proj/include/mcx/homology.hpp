#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mcx/bigint.hpp"
#include "mcx/complex.hpp"
#include "mcx/sphere_calculus.hpp"

namespace mcx {

/// Dense matrix of exact integers.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> data; // row-major

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    BigInt& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct SmithResult {
    std::size_t rank = 0;
    std::vector<BigInt> invariant_factors; // d_1 | d_2 | ..., all positive
};

/// Signed incidence of d-faces into (d-1)-faces, the augmentation into the
/// empty face at d = 0. Out-of-range d yields an empty matrix.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d);

/// Exact Smith normal form; smallest-nonzero-magnitude pivoting with row
/// and column moves.
SmithResult smith_normal_form(IntegerMatrix m);

/// Exact rank by fraction-free (Bareiss) elimination; independent of the
/// Smith normal form path.
std::size_t rank_fraction_free(IntegerMatrix m);

/// Reduced integral homology. betti holds only nonzero entries, torsion
/// only nonempty invariant-factor lists (> 1). The empty complex gets
/// betti[-1] = 1.
struct HomologyProfile {
    std::map<int, long long> betti;
    std::map<int, std::vector<BigInt>> torsion;

    bool torsion_free() const { return torsion.empty(); }
    long long betti_at(int d) const;
    long long reduced_euler() const;

    bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile reduced_homology(const SimplicialComplex& k);

/// Reduced Euler characteristic straight from the f-vector.
long long euler_characteristic(const SimplicialComplex& k);

/// Checks d(d(face)) = 0 for every face, by sparse composition; throws on
/// violation. Cheap enough to run on every complex built.
void check_boundary_squares_zero(const SimplicialComplex& k);

/// Torsion-free profile -> the wedge it is consistent with (contractible
/// for an all-zero profile, S^{-1} for the empty complex). Torsion -> none.
std::optional<HomotopyClass> wedge_profile(const HomologyProfile& h);

/// Betti-number shadow of wedging/suspending/joining profiles; used by the
/// rule-soundness tests. All inputs must be torsion-free for join.
HomologyProfile compose_wedge(const std::vector<HomologyProfile>& parts,
                              const std::vector<int>& shifts);
HomologyProfile compose_join(const std::vector<HomologyProfile>& parts);

} // namespace mcx

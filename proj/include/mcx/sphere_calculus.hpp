#pragma once

#include <map>
#include <string>

#include "mcx/bigint.hpp"
#include "mcx/errors.hpp"

namespace mcx {

/// Formal homotopy type: a point, or a wedge of spheres with positive
/// multiplicities per dimension. S^{-1} (the empty complex) is a first-class
/// value but may only occur as the sole summand; that keeps the edgeless
/// base case composable under suspension and join.
class HomotopyClass {
public:
    /// Contractible (the normal form of the empty wedge).
    static HomotopyClass contractible();

    /// The empty complex, S^{-1}.
    static HomotopyClass empty_complex();

    /// count copies of S^dim, dim >= 0, count >= 1.
    static HomotopyClass sphere(int dim, BigInt count = 1);

    /// Wedge from a dimension -> count table; empty table normalizes to
    /// contractible; a table mixing -1 with anything else is malformed.
    static HomotopyClass wedge_of(std::map<int, BigInt> spheres);

    bool is_contractible() const { return spheres_.empty(); }
    bool is_empty_complex() const;

    /// dimension -> count, all counts positive; empty iff contractible.
    const std::map<int, BigInt>& spheres() const { return spheres_; }

    /// Reduced Euler characteristic: 0 for a point, sum of count * (-1)^d.
    BigInt reduced_euler() const;

    /// Poincare polynomial in y: dimension -> coefficient (zero map for a
    /// point; the S^{-1} term appears as exponent -1).
    std::map<int, BigInt> poincare_polynomial() const;

    /// Sphere count per dimension including -1; used to compare against
    /// reduced homology profiles.
    std::map<int, BigInt> betti_shadow() const { return spheres_; }

    /// "pt", "S^-1", "2*S^1 v S^3".
    std::string to_text() const;

    bool operator==(const HomotopyClass&) const = default;

private:
    std::map<int, BigInt> spheres_;
};

/// One-point union. Contractible is the identity; wedging the lone S^{-1}
/// with anything other than another S^{-1} is malformed.
HomotopyClass wedge(const HomotopyClass& a, const HomotopyClass& b);

/// k-fold suspension: shifts every sphere dimension up by k.
HomotopyClass suspension(const HomotopyClass& a, int k = 1);

/// Join: contractible is absorbing, S^{-1} is the identity, and wedges
/// convolve with dimension shift +1.
HomotopyClass join(const HomotopyClass& a, const HomotopyClass& b);

inline bool equals(const HomotopyClass& a, const HomotopyClass& b) { return a == b; }

} // namespace mcx

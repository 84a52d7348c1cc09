#pragma once

#include <map>
#include <utility>

#include "mcx/bigint.hpp"
#include "mcx/sphere_calculus.hpp"

namespace mcx::formulas {

/// F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}.
BigInt fibonacci(long long n);

/// Homotopy type of the matching complex of the t-triangle line tiling:
/// hard-coded for t <= 4, the two-suspension recursion beyond.
HomotopyClass triangle_homotopy(int t);

/// s(t, d): number of d-spheres for the t-triangle tiling.
struct SphereCountTable {
    std::map<std::pair<int, int>, BigInt> counts; // (t, d) -> count, nonzero only
    int t_max = 0;

    BigInt at(int t, int d) const;
    std::map<int, BigInt> row(int t) const;
    bool operator==(const SphereCountTable&) const = default;
};

/// Coefficients of (2x^2 + x^3 y + 5x^4 y + 2x^6 y^2) / (1 - 2x^3 y - x^5 y^2),
/// extracted by exact convolution of the denominator recurrence.
SphereCountTable triangle_counts_via_gf(int t_max);

/// Seed values for t <= 6 plus s(t,d) = 2 s(t-3,d-1) + s(t-5,d-2).
SphereCountTable triangle_counts_via_recursion(int t_max);

struct DimInterval {
    int lo = 0;
    int hi = 0;
    bool operator==(const DimInterval&) const = default;
};

/// Mod-5 branch table behind the upper end of the dimension interval.
int f_of_t(int t);

/// [floor(t/3), (2t - f(t)) / 5] for t >= 2; the division is always exact.
DimInterval dim_interval(int t);

/// Wedge of F_{t+2} - 1 spheres of dimension t (pentagon line tiling).
HomotopyClass pentagon_homotopy(int t);

/// Wedge of F_{t+2} spheres of dimension t (pentagon tiling + pendant edge).
HomotopyClass pendant_pentagon_homotopy(int t);

/// Embedded reference rows t = 2..13 (dimension -> count). Golden fixture:
/// every computational channel must reproduce these independently.
const std::map<int, std::map<int, BigInt>>& golden_triangle_rows();

} // namespace mcx::formulas

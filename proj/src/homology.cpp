#include "mcx/homology.hpp"

#include <algorithm>
#include <bit>

namespace mcx {
namespace {

using Mask = SimplicialComplex::Mask;

// vertices of a face mask in ascending ground order
std::vector<int> bits_of(Mask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

std::size_t level_index(const std::vector<Mask>& level, Mask m) {
    return static_cast<std::size_t>(
        std::lower_bound(level.begin(), level.end(), m) - level.begin());
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// d_1 | d_2 | ... normal form of a list of elementary divisors
void normalize_invariant_factors(std::vector<BigInt>& diag) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] != 0) {
                BigInt g = boost::multiprecision::gcd(diag[i], diag[i + 1]);
                BigInt l = diag[i] / g * diag[i + 1];
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
    }
}

} // namespace

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    const auto& levels = k.faces_by_card();
    auto count_at = [&](int card) -> std::size_t {
        if (card < 0 || card >= static_cast<int>(levels.size())) return 0;
        return levels[card].size();
    };
    std::size_t rows = count_at(d);     // (d-1)-faces have cardinality d
    std::size_t cols = count_at(d + 1); // d-faces have cardinality d+1
    IntegerMatrix m(rows, cols);
    if (rows == 0 || cols == 0) return m;

    const auto& from = levels[d + 1];
    const auto& to = levels[d];
    for (std::size_t c = 0; c < cols; ++c) {
        Mask face = from[c];
        auto verts = bits_of(face);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            Mask sub = face & ~(Mask{1} << verts[i]);
            std::size_t r = level_index(to, sub);
            m.at(r, c) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

void check_boundary_squares_zero(const SimplicialComplex& k) {
    const auto& levels = k.faces_by_card();
    for (std::size_t card = 2; card < levels.size(); ++card) {
        for (Mask face : levels[card]) {
            std::map<Mask, int> coeff;
            auto verts = bits_of(face);
            for (std::size_t i = 0; i < verts.size(); ++i) {
                Mask sub = face & ~(Mask{1} << verts[i]);
                int sign_i = (i % 2 == 0) ? 1 : -1;
                auto sub_verts = bits_of(sub);
                for (std::size_t j = 0; j < sub_verts.size(); ++j) {
                    Mask sub2 = sub & ~(Mask{1} << sub_verts[j]);
                    int sign_j = (j % 2 == 0) ? 1 : -1;
                    coeff[sub2] += sign_i * sign_j;
                }
            }
            for (const auto& [m, c] : coeff)
                if (c != 0) fail(ErrorCode::Internal, "boundary of boundary is nonzero");
        }
    }
}

SmithResult smith_normal_form(IntegerMatrix a) {
    const std::size_t rows = a.rows, cols = a.cols;
    std::size_t k = 0;
    std::vector<BigInt> diag;

    while (k < rows && k < cols) {
        // smallest nonzero magnitude in the trailing submatrix
        std::size_t pi = 0, pj = 0;
        bool found = false;
        BigInt best;
        for (std::size_t i = k; i < rows && !(found && best == 1); ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const BigInt& v = a.at(i, j);
                if (v == 0) continue;
                BigInt av = abs_big(v);
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        if (!found) break;

        for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(k, j), a.at(pi, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, k), a.at(i, pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (a.at(i, k) == 0) continue;
                BigInt q = a.at(i, k) / a.at(k, k);
                if (q != 0)
                    for (std::size_t j = k; j < cols; ++j) a.at(i, j) -= q * a.at(k, j);
                if (a.at(i, k) != 0) {
                    // remainder smaller than the pivot: swap it up and redo
                    for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(k, j), a.at(i, j));
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (a.at(k, j) == 0) continue;
                BigInt q = a.at(k, j) / a.at(k, k);
                if (q != 0)
                    for (std::size_t i = k; i < rows; ++i) a.at(i, j) -= q * a.at(i, k);
                if (a.at(k, j) != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, k), a.at(i, j));
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the submatrix
                for (std::size_t i = k + 1; i < rows && clean; ++i)
                    for (std::size_t j = k + 1; j < cols && clean; ++j)
                        if (a.at(i, j) % a.at(k, k) != 0) {
                            for (std::size_t jj = 0; jj < cols; ++jj)
                                a.at(k, jj) += a.at(i, jj);
                            clean = false;
                        }
            }
        }
        diag.push_back(abs_big(a.at(k, k)));
        ++k;
    }

    normalize_invariant_factors(diag);

    SmithResult result;
    result.rank = diag.size();
    result.invariant_factors = std::move(diag);
    return result;
}

std::size_t rank_fraction_free(IntegerMatrix a) {
    const std::size_t rows = a.rows, cols = a.cols;
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a.at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(pivot, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

long long HomologyProfile::betti_at(int d) const {
    auto it = betti.find(d);
    return it == betti.end() ? 0 : it->second;
}

long long HomologyProfile::reduced_euler() const {
    long long chi = 0;
    for (const auto& [d, b] : betti) chi += (d % 2 == 0 ? b : -b);
    return chi;
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
    check_boundary_squares_zero(k);

    int dim = k.dim();
    auto f = k.f_vector(); // f[card], card = d + 1

    std::vector<SmithResult> snf(static_cast<std::size_t>(dim + 2));
    for (int d = 0; d <= dim; ++d) snf[d] = smith_normal_form(boundary_matrix(k, d));

    HomologyProfile profile;
    for (int d = -1; d <= dim; ++d) {
        long long faces_d = (d + 1 < static_cast<int>(f.size())) ? f[d + 1] : 0;
        long long rank_d = (d >= 0) ? static_cast<long long>(snf[d].rank) : 0;
        long long rank_d1 = (d + 1 <= dim) ? static_cast<long long>(snf[d + 1].rank) : 0;
        long long b = faces_d - rank_d - rank_d1;
        if (b < 0) fail(ErrorCode::Internal, "negative Betti number");
        if (b != 0) profile.betti[d] = b;
        if (d + 1 <= dim) {
            std::vector<BigInt> factors;
            for (const BigInt& v : snf[d + 1].invariant_factors)
                if (v > 1) factors.push_back(v);
            if (!factors.empty()) profile.torsion[d] = std::move(factors);
        }
    }

    if (profile.reduced_euler() != euler_characteristic(k))
        fail(ErrorCode::Internal, "Betti alternating sum disagrees with the Euler characteristic");
    return profile;
}

long long euler_characteristic(const SimplicialComplex& k) {
    auto f = k.f_vector();
    long long chi = -1; // the empty face contributes at dimension -1
    for (std::size_t card = 1; card < f.size(); ++card)
        chi += (card % 2 == 1 ? f[card] : -f[card]);
    return chi;
}

std::optional<HomotopyClass> wedge_profile(const HomologyProfile& h) {
    if (!h.torsion_free()) return std::nullopt;
    std::map<int, BigInt> spheres;
    for (const auto& [d, b] : h.betti) spheres[d] = b;
    return HomotopyClass::wedge_of(std::move(spheres));
}

HomologyProfile compose_wedge(const std::vector<HomologyProfile>& parts,
                              const std::vector<int>& shifts) {
    if (parts.size() != shifts.size())
        fail(ErrorCode::InvalidArgument, "one shift per wedge summand");
    HomologyProfile out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (const auto& [d, b] : parts[i].betti) out.betti[d + shifts[i]] += b;
        for (const auto& [d, factors] : parts[i].torsion) {
            auto& list = out.torsion[d + shifts[i]];
            list.insert(list.end(), factors.begin(), factors.end());
        }
    }
    std::erase_if(out.betti, [](const auto& kv) { return kv.second == 0; });
    for (auto& [d, list] : out.torsion) {
        normalize_invariant_factors(list); // direct sums renormalize, e.g. [2,3] -> [1,6]
        std::erase_if(list, [](const BigInt& f) { return f == 1; });
    }
    return out;
}

HomologyProfile compose_join(const std::vector<HomologyProfile>& parts) {
    HomologyProfile acc;
    acc.betti[-1] = 1; // the empty complex is the join identity
    for (const auto& part : parts) {
        if (!part.torsion_free() || !acc.torsion_free())
            fail(ErrorCode::InvalidArgument,
                 "join composition implemented for torsion-free profiles only");
        HomologyProfile next;
        for (const auto& [p, a] : acc.betti)
            for (const auto& [q, b] : part.betti) next.betti[p + q + 1] += a * b;
        acc = std::move(next);
    }
    std::erase_if(acc.betti, [](const auto& kv) { return kv.second == 0; });
    return acc;
}

} // namespace mcx

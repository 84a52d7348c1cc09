#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcx/multigraph.hpp"

namespace mcx {

/// Simplicial complex by full face enumeration, faces stored per cardinality
/// as bitmasks over the ground set. The empty face is always present; the
/// empty complex has dim -1. The void complex is not representable.
class SimplicialComplex {
public:
    using Mask = std::uint64_t;
    static constexpr std::size_t kMaxGround = 48;
    static constexpr std::size_t kDefaultEnumerationBudget = 24;
    static constexpr std::size_t kFaceCountGuard = 4'000'000;

    SimplicialComplex(); // the empty complex (only the empty face)

    /// Faces = matchings of g, ground set = edge ids. Without a size cap the
    /// edge count must stay within the enumeration budget (24); with a cap,
    /// faces larger than the cap are not enumerated.
    static SimplicialComplex matching_complex(const Multigraph& g,
                                              std::optional<int> size_cap = std::nullopt);

    /// Faces = independent vertex sets of a simple graph.
    static SimplicialComplex independence_complex(const Multigraph& g);

    /// Downward closure of the given facets over the given ground set.
    static SimplicialComplex from_facets(std::vector<std::string> ground,
                                         const std::vector<std::vector<std::string>>& facets);

    /// Join: faces are unions of one face from each factor (ground sets are
    /// concatenated and must be disjoint).
    static SimplicialComplex join_complex(const SimplicialComplex& a,
                                          const SimplicialComplex& b);

    int dim() const { return static_cast<int>(faces_by_card_.size()) - 2; }
    const std::vector<std::string>& ground() const { return ground_; }

    /// faces_by_card()[c] = sorted masks of the faces of cardinality c;
    /// index 0 holds the empty face.
    const std::vector<std::vector<Mask>>& faces_by_card() const { return faces_by_card_; }

    std::size_t face_count() const; // includes the empty face

    bool contains_mask(Mask m) const;
    bool contains(const std::vector<std::string>& face) const;

    Mask mask_of(const std::vector<std::string>& face) const; // throws on unknown token
    std::vector<std::string> tokens_of(Mask m) const;

    /// lk(sigma, K); ground restricted to vertices appearing in the result.
    SimplicialComplex link(const std::vector<std::string>& sigma) const;

    /// del(sigma, K) = faces not containing sigma; sigma must be a nonempty
    /// face. Ground restricted to vertices appearing in the result.
    SimplicialComplex face_deletion(const std::vector<std::string>& sigma) const;

    /// [f_{-1}, f_0, ..., f_dim], so f_vector()[0] == 1 always.
    std::vector<long long> f_vector() const;

    /// Maximal faces as sorted token lists, lexicographically ordered.
    std::vector<std::vector<std::string>> facets() const;

    /// Downward-closure check; exhaustive when the ground set is small,
    /// otherwise callers sample (see tests).
    bool downward_closed() const;

    bool operator==(const SimplicialComplex& other) const {
        return ground_ == other.ground_ && faces_by_card_ == other.faces_by_card_;
    }

private:
    std::vector<std::string> ground_;              // sorted tokens
    std::vector<std::vector<Mask>> faces_by_card_; // [card] -> sorted masks

    static SimplicialComplex from_conflicts(std::vector<std::string> ground,
                                            const std::vector<Mask>& conflicts,
                                            std::optional<int> size_cap);
    void normalize();
};

} // namespace mcx

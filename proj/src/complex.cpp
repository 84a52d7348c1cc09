#include "mcx/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace mcx {
namespace {

int popcount(SimplicialComplex::Mask m) { return std::popcount(m); }

} // namespace

SimplicialComplex::SimplicialComplex() { faces_by_card_ = {{0}}; }

void SimplicialComplex::normalize() {
    for (auto& level : faces_by_card_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    while (faces_by_card_.size() > 1 && faces_by_card_.back().empty())
        faces_by_card_.pop_back();
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& level : faces_by_card_) total += level.size();
    return total;
}

bool SimplicialComplex::contains_mask(Mask m) const {
    std::size_t card = static_cast<std::size_t>(popcount(m));
    if (card >= faces_by_card_.size()) return false;
    const auto& level = faces_by_card_[card];
    return std::binary_search(level.begin(), level.end(), m);
}

SimplicialComplex::Mask SimplicialComplex::mask_of(const std::vector<std::string>& face) const {
    Mask m = 0;
    for (const auto& token : face) {
        auto it = std::lower_bound(ground_.begin(), ground_.end(), token);
        if (it == ground_.end() || *it != token)
            fail(ErrorCode::UnknownId, "token '" + token + "' not in the ground set");
        m |= Mask{1} << (it - ground_.begin());
    }
    return m;
}

std::vector<std::string> SimplicialComplex::tokens_of(Mask m) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (m & (Mask{1} << i)) out.push_back(ground_[i]);
    return out;
}

bool SimplicialComplex::contains(const std::vector<std::string>& face) const {
    return contains_mask(mask_of(face));
}

SimplicialComplex SimplicialComplex::from_conflicts(std::vector<std::string> ground,
                                                    const std::vector<Mask>& conflicts,
                                                    std::optional<int> size_cap) {
    SimplicialComplex k;
    k.ground_ = std::move(ground);
    std::size_t n = k.ground_.size();
    std::size_t max_card = size_cap ? static_cast<std::size_t>(std::max(0, *size_cap)) : n;

    k.faces_by_card_.assign(1, {Mask{0}});
    std::size_t total = 1;

    // depth-first enumeration of conflict-free subsets in index order
    std::vector<std::pair<std::size_t, Mask>> stack; // (next index to try, current face)
    std::vector<Mask> chosen_conflicts;
    std::vector<Mask> face_stack;

    struct Frame {
        std::size_t next;
        Mask face;
        Mask blocked;
    };
    std::vector<Frame> frames;
    frames.push_back({0, 0, 0});
    while (!frames.empty()) {
        Frame f = frames.back();
        frames.pop_back();
        if (static_cast<std::size_t>(popcount(f.face)) >= max_card) continue;
        for (std::size_t i = f.next; i < n; ++i) {
            Mask bit = Mask{1} << i;
            if (f.blocked & bit) continue;
            Mask face = f.face | bit;
            std::size_t card = static_cast<std::size_t>(popcount(face));
            if (k.faces_by_card_.size() <= card) k.faces_by_card_.resize(card + 1);
            k.faces_by_card_[card].push_back(face);
            if (++total > kFaceCountGuard)
                fail(ErrorCode::Budget, "face enumeration exceeded the guard of " +
                                            std::to_string(kFaceCountGuard) + " faces");
            frames.push_back({i + 1, face, f.blocked | conflicts[i]});
        }
    }
    k.normalize();
    return k;
}

SimplicialComplex SimplicialComplex::matching_complex(const Multigraph& g,
                                                      std::optional<int> size_cap) {
    std::size_t m = g.edge_count();
    if (!size_cap && m > kDefaultEnumerationBudget)
        fail(ErrorCode::Budget, "matching complex enumeration limited to " +
                                    std::to_string(kDefaultEnumerationBudget) +
                                    " edges without a size cap (got " + std::to_string(m) + ")");
    if (m > kMaxGround)
        fail(ErrorCode::Budget, "ground set limited to " + std::to_string(kMaxGround));

    std::vector<std::string> ground;
    for (const auto& e : g.edges()) ground.push_back(e.id); // already sorted by id

    std::vector<Mask> conflicts(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && g.edges_adjacent(ground[i], ground[j])) conflicts[i] |= Mask{1} << j;

    return from_conflicts(std::move(ground), conflicts, size_cap);
}

SimplicialComplex SimplicialComplex::independence_complex(const Multigraph& g) {
    if (!g.is_simple())
        fail(ErrorCode::NotSimple, "independence complex requires a simple graph");
    std::size_t n = g.vertex_count();
    if (n > kDefaultEnumerationBudget)
        fail(ErrorCode::Budget, "independence complex enumeration limited to " +
                                    std::to_string(kDefaultEnumerationBudget) + " vertices");

    std::vector<std::string> ground = g.vertices();
    std::vector<Mask> conflicts(n, 0);
    for (const auto& e : g.edges()) {
        auto iu = std::lower_bound(ground.begin(), ground.end(), e.u) - ground.begin();
        auto iv = std::lower_bound(ground.begin(), ground.end(), e.v) - ground.begin();
        conflicts[iu] |= Mask{1} << iv;
        conflicts[iv] |= Mask{1} << iu;
    }
    return from_conflicts(std::move(ground), conflicts, std::nullopt);
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> ground, const std::vector<std::vector<std::string>>& facets) {
    std::sort(ground.begin(), ground.end());
    ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
    if (ground.size() > kMaxGround)
        fail(ErrorCode::Budget, "ground set limited to " + std::to_string(kMaxGround));

    SimplicialComplex k;
    k.ground_ = std::move(ground);
    k.faces_by_card_ = {{Mask{0}}};
    for (const auto& facet : facets) {
        Mask fm = k.mask_of(facet);
        // close downward: all subsets
        std::size_t card = static_cast<std::size_t>(popcount(fm));
        if (k.faces_by_card_.size() <= card) k.faces_by_card_.resize(card + 1);
        for (Mask sub = fm;; sub = (sub - 1) & fm) {
            if (sub != 0) k.faces_by_card_[popcount(sub)].push_back(sub);
            if (sub == 0) break;
        }
    }
    k.normalize();
    return k;
}

SimplicialComplex SimplicialComplex::join_complex(const SimplicialComplex& a,
                                                  const SimplicialComplex& b) {
    std::vector<std::string> ground = a.ground_;
    for (const auto& t : b.ground_) ground.push_back(t);
    {
        auto sorted = ground;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorCode::InvalidArgument, "join factors must have disjoint ground sets");
    }
    if (ground.size() > kMaxGround)
        fail(ErrorCode::Budget, "ground set limited to " + std::to_string(kMaxGround));

    // b's tokens shift up by |ground(a)|; re-sorting happens via rebuild below
    std::vector<std::vector<std::string>> faces;
    for (const auto& level_a : a.faces_by_card_)
        for (Mask fa : level_a)
            for (const auto& level_b : b.faces_by_card_)
                for (Mask fb : level_b) {
                    auto face = a.tokens_of(fa);
                    for (const auto& t : b.tokens_of(fb)) face.push_back(t);
                    faces.push_back(std::move(face));
                }
    return from_facets(std::move(ground), faces);
}

SimplicialComplex SimplicialComplex::link(const std::vector<std::string>& sigma) const {
    Mask sm = mask_of(sigma);
    if (!contains_mask(sm)) fail(ErrorCode::Precondition, "link: sigma is not a face");

    std::vector<std::vector<std::string>> faces;
    Mask used = 0;
    std::vector<Mask> masks;
    for (const auto& level : faces_by_card_)
        for (Mask f : level)
            if ((f & sm) == 0 && contains_mask(f | sm)) {
                masks.push_back(f);
                used |= f;
            }

    std::vector<std::string> ground;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (used & (Mask{1} << i)) ground.push_back(ground_[i]);
    for (Mask f : masks) faces.push_back(tokens_of(f));
    return from_facets(std::move(ground), faces);
}

SimplicialComplex SimplicialComplex::face_deletion(const std::vector<std::string>& sigma) const {
    if (sigma.empty())
        fail(ErrorCode::Malformed, "deleting the empty face would leave the void complex");
    Mask sm = mask_of(sigma);
    if (!contains_mask(sm)) fail(ErrorCode::Precondition, "face_deletion: sigma is not a face");

    std::vector<std::vector<std::string>> faces;
    Mask used = 0;
    std::vector<Mask> masks;
    for (const auto& level : faces_by_card_)
        for (Mask f : level)
            if ((f & sm) != sm) {
                masks.push_back(f);
                used |= f;
            }
    std::vector<std::string> ground;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (used & (Mask{1} << i)) ground.push_back(ground_[i]);
    for (Mask f : masks) faces.push_back(tokens_of(f));
    return from_facets(std::move(ground), faces);
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    for (const auto& level : faces_by_card_) f.push_back(static_cast<long long>(level.size()));
    return f;
}

std::vector<std::vector<std::string>> SimplicialComplex::facets() const {
    std::vector<std::vector<std::string>> out;
    for (std::size_t card = 0; card < faces_by_card_.size(); ++card) {
        for (Mask f : faces_by_card_[card]) {
            bool maximal = true;
            for (std::size_t i = 0; i < ground_.size() && maximal; ++i) {
                Mask bit = Mask{1} << i;
                if (!(f & bit) && contains_mask(f | bit)) maximal = false;
            }
            if (maximal && !(card == 0 && faces_by_card_.size() > 1)) out.push_back(tokens_of(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::downward_closed() const {
    for (std::size_t card = 1; card < faces_by_card_.size(); ++card)
        for (Mask f : faces_by_card_[card])
            for (std::size_t i = 0; i < ground_.size(); ++i) {
                Mask bit = Mask{1} << i;
                if ((f & bit) && !contains_mask(f & ~bit)) return false;
            }
    return true;
}

} // namespace mcx

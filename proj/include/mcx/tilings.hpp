#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcx/multigraph.hpp"

namespace mcx::tilings {

enum class Family {
    Triangular,
    Pentagonal,
    PentagonalPendant,
    Extended,
    Path,
    Cycle,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Parameters for one generated graph. Which fields matter depends on the
/// family: t for the regular tilings, (s, k, l, offsets) for extended ones,
/// n for paths and cycles.
struct TilingSpec {
    Family family = Family::Triangular;
    int t = 0;
    std::vector<int> s;
    int k = 0;
    int l = 0;
    std::vector<int> offsets; // one per cycle 1..n-1; empty means defaults
    int n = 0;

    bool operator==(const TilingSpec&) const = default;
};

/// Regular triangular line tiling with t triangles; t = 0 is the single
/// edge a0b0. Labels follow the a_i / b_i scheme so traces read like the
/// construction.
Multigraph triangular(int t);

/// Regular pentagonal line tiling with t pentagons, t >= 1.
Multigraph pentagonal(int t);

/// pentagonal(t) plus one pendant edge at b0 (vertex p0, edge b0p0), the
/// attachment point fixed by the reference drawing. Its neighbors are the
/// first vertical a0b0 and the base edge b0b1.
Multigraph pentagonal_pendant(int t);

/// String of cycles of lengths s[0..n-1], consecutive cycles glued along an
/// edge, plus pendant paths of lengths k (at a_n) and l (at b_n). offsets[i]
/// places the shared edge of cycle i+1 (position within the cycle walk,
/// 2 <= offset <= s-2); empty offsets mean the antipodal default.
Multigraph extended(const std::vector<int>& s, int k, int l,
                    const std::vector<int>& offsets = {});

Multigraph path(int n);  // n >= 1 vertices
Multigraph cycle(int n); // n >= 3, or n = 2 for the parallel pair

/// Antipodal default position of the shared edge in an s-cycle.
int default_offset(int s);

/// Extended tiling together with its construction bookkeeping: one closed
/// vertex walk per cycle (walk[0], walk[1] span the edge shared with the
/// previous cycle), the marked position of each cycle's other distinguished
/// edge, and the two pendant-path vertex lists (attachment vertex first).
/// The scripted reduction consumes this.
struct ExtendedLayout {
    Multigraph graph;
    std::vector<std::vector<std::string>> walks;
    std::vector<int> marked;
    std::vector<std::string> t_path;
    std::vector<std::string> u_path;
};

ExtendedLayout extended_layout(const std::vector<int>& s, int k, int l,
                               const std::vector<int>& offsets = {});

Multigraph generate(const TilingSpec& spec);

/// Inverse of the regular generators via the edge-count forms
/// |E| = 2t+1 / 4t+1 / 4t+2 (exact match required).
std::optional<int> triangular_t_from_edge_count(std::size_t edges);
std::optional<int> pentagonal_t_from_edge_count(std::size_t edges);
std::optional<int> pendant_t_from_edge_count(std::size_t edges);

} // namespace mcx::tilings

#pragma once

#include <utility>
#include <vector>

#include "secdom/family.hpp"
#include "secdom/vertex_set.hpp"

namespace secdom {

/// A repeated placement pattern: (copy offset, row) pairs within a window of
/// `width` copies, both 1-based.
struct PatternTile {
    int width;
    std::vector<std::pair<int, int>> placements;
};

namespace tiles {
extern const PatternTile p2_path_a;  // {(1,1),(2,2),(3,1)} over 4 copies
extern const PatternTile p2_path_b;  // {(1,2),(2,1),(3,2)} over 4 copies
extern const PatternTile p2_cycle;   // {(2,1),(3,2),(5,1),(5,2),(7,1),(8,2)} over 8 copies
extern const PatternTile m2n_prefix; // {(2,1),(3,2),(4,1)} over 4 copies
extern const PatternTile p3_diagonal;  // {(1,1),(2,2),(3,3)} over 3 copies
extern const PatternTile p3_full_copy; // {(1,1),(1,2),(1,3)} over 1 copy
extern const PatternTile p3_tail_pair; // {(1,1),(2,2),(2,3)} over 2 copies
} // namespace tiles

/// Deterministic secure dominating set built from the family's tile pattern:
///   p2xpn: tiles A/B alternated over 4*ceil(n/4) copies, then the residue
///          rule (n=0 mod 4: add row 1 of the final copy; n=1: drop the first
///          and final two copies; n=2: drop the final two; n=3: drop the final).
///   p2xcn: the 8-copy tile repeated when n = 0 mod 8, else the p2xpn set
///          reused on the cyclic layout.
///   m2n:   the 4-copy prefix plus 8-copy tiles when n = 4 mod 8, else the
///          p2xpn set reused.
///   p3xcn: the diagonal tile repeated, plus one full copy (n = 1 mod 3) or
///          the two-copy tail (n = 2 mod 3).
/// The size equals gamma_s_formula(inst) except p3xcn with n in {4, 7}, where
/// it is one above the (solver-certified) optimum. p3xpn has no implemented
/// construction and throws UnsupportedFamilyError.
VertexSet construct_optimal(const FamilyInstance& inst);

/// |construct_optimal(inst)|, i.e. the formula value, +1 for p3xcn n in {4,7}.
int expected_construction_size(const FamilyInstance& inst);

} // namespace secdom

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "secdom/family.hpp"
#include "secdom/solve.hpp"
#include "secdom/vertex_set.hpp"

namespace secdom {

/// Per-copy classification of a set over a product-family graph. A copy
/// containing i vertices of S has type i; m_counts[i] counts type-i copies.
/// For 2-row families, type-1 copies carry a parity mark: 'o' when the top /
/// outer row (row 1) is occupied, 'i' for the inner row; other copies '-'.
struct CopyProfile {
    Family family;
    int n;
    bool cyclic;
    std::vector<int> types;      // index c-1 holds the type of copy c
    std::vector<char> row_marks; // 'o' / 'i' / '-'
    std::array<int, 4> m_counts;
};

CopyProfile classify_copies(const FamilyInstance& inst, const VertexSet& s);

/// The balance identity m0 = n - |S| + m2 + 2*m3. Holds for every profile.
bool balance_identity(const CopyProfile& profile, int s_size, int n);

enum class BlockKind {
    block,       // delimited by type-0 copies on both ends
    end_block,   // one type-0 terminal, the other end of the path
    type1_block, // a block whose interior copies are all type 1
    type2_block, // a block whose interior is a single type-2 copy
};

std::string_view block_kind_name(BlockKind kind);

/// `start` is the 1-based first copy; `length` counts copies including the
/// type-0 delimiters; `s_count` is the number of S-vertices inside.
struct Block {
    int start;
    int length;
    BlockKind kind;
    int s_count;
};

/// All maximal blocks in copy order. Cyclic profiles wrap and report plain or
/// type1/type2 blocks only; they need two type-0 copies to anchor a block, so
/// the result is empty when m0 <= 1. Path profiles also report end-blocks.
std::vector<Block> find_blocks(const CopyProfile& profile);

/// 1-based start positions of the type pattern (digits over 0..3), wrapping
/// when the profile is cyclic. Empty pattern or other characters: ContractError.
std::vector<int> find_pattern(const CopyProfile& profile, std::string_view pattern);

/// A modification that preserves secure domination of a given set:
/// adding any edge, deleting an edge with both endpoints in S, or deleting a
/// vertex outside S.
struct Modification {
    enum class Kind { add_edge, delete_edge_in_s, delete_vertex };

    Kind kind;
    int u = -1;
    int v = -1;

    static Modification add_edge(int u, int v) { return {Kind::add_edge, u, v}; }
    static Modification delete_edge_in_s(int u, int v) { return {Kind::delete_edge_in_s, u, v}; }
    static Modification delete_vertex(int v) { return {Kind::delete_vertex, v}; }
};

/// Modified graph plus the re-indexed set. For vertex deletion the ids are
/// compacted in order; old_to_new maps old ids (-1 for the deleted vertex),
/// and `set` is s carried through that mapping. For edge modifications the
/// mapping is the identity and `set` is s unchanged.
struct ModifiedGraph {
    Graph graph;
    VertexSet set;
    std::vector<int> old_to_new;
};

/// Applies one modification. Side conditions (edge existence/absence, S
/// membership) are checked and violations raise ContractError. The returned
/// set is guaranteed to remain secure dominating whenever s was.
ModifiedGraph apply_modification(const Graph& g, const VertexSet& s, const Modification& mod);

/// Edge-deletion test for an edge uv with u, v outside S: deletable iff
/// both endpoints have more than one S-neighbor, or the number of common
/// S-neighbors differs from 1. Non-edges raise ContractError; an endpoint
/// inside S simply yields false.
bool deletable_edge(const Graph& g, const VertexSet& s, int u, int v);

/// The trim bound gamma_s(g - u_set) + |u_set n S|, computed with the exact
/// solver; at most |s| whenever s is secure dominating. Precondition (checked):
/// every edge leaving u_set has its u_set endpoint outside s.
int trim_bound(const Graph& g, const VertexSet& s, const VertexSet& u_set,
               const SolveOptions& options = {});

struct AuditViolation {
    int n;
    int size;
    VertexSet set;
    std::string pattern;
    int position; // 1-based copy position; 0 when the whole set is at fault
};

/// Enumerates every secure dominating set with size in [size_lo, size_hi] and
/// reports each occurrence of the forbidden type pattern. Expected empty for
/// the audited patterns ("1010", "101101" on p2xpn).
std::vector<AuditViolation> audit_forbidden_pattern(const FamilyInstance& inst, int size_lo,
                                                    int size_hi, std::string_view pattern);

/// p3xcn audit: within every window of six consecutive type-1 copies, the
/// first and fourth copies must occupy the same row ("111111" violations);
/// and all-type-1 sets may exist only when n = 0 mod 3 ("all-type-1"
/// violations).
std::vector<AuditViolation> audit_111111(const FamilyInstance& inst, int size_lo, int size_hi);

/// Enumerates the size-k secure dominating sets and reports every type-1
/// block whose length is not 4 or 5 ("type1-block" violations). Expected
/// empty for minimum sets of p2xcn with n = 0 mod 8.
std::vector<AuditViolation> audit_type1_block_lengths(const FamilyInstance& inst, int size);

} // namespace secdom

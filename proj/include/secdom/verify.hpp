#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "secdom/graph.hpp"
#include "secdom/vertex_set.hpp"

namespace secdom {

/// True iff every vertex is in s or adjacent to a member of s.
bool is_dominating(const Graph& g, const VertexSet& s);

/// Definitional guard check: w is adjacent to v and (s \ {w}) u {v} is a
/// dominating set, re-verified from scratch. Preconditions: w in s, v not in s.
/// This is the reference the localized SwapVerifier is validated against.
bool guards(const Graph& g, const VertexSet& s, int w, int v);

/// Localized swap check over a fixed (g, s): after swapping w out and v in,
/// only vertices of N[w] \ N[v] that lose their sole dominator (plus vertices
/// s never dominated) need re-examination.
class SwapVerifier {
public:
    SwapVerifier(const Graph& g, const VertexSet& s);

    bool dominating() const { return undominated_.empty(); }

    /// Same contract and result as the free guards().
    bool guards(int w, int v) const;

private:
    const Graph& g_;
    std::vector<char> in_set_;
    std::vector<int> cover_count_; // |N[u] n S| per vertex u
    std::vector<int> undominated_; // vertices with cover_count == 0
};

/// True iff every vertex outside s has a guard in s. Uses the localized path.
bool is_secure_dominating(const Graph& g, const VertexSet& s);

/// Reference implementation built on the definitional guards() only.
bool is_secure_dominating_naive(const Graph& g, const VertexSet& s);

/// One guard per outside vertex; pairs (v, w) sorted by v, each w the
/// lowest-id valid guard of v.
struct GuardCertificate {
    std::vector<std::pair<int, int>> assignments;
};

struct CertificateResult {
    std::optional<GuardCertificate> certificate;
    int first_unguardable = -1; // set iff !ok()

    bool ok() const { return certificate.has_value(); }
};

/// Builds a guard certificate, or reports the lowest-id unguardable vertex.
CertificateResult certificate(const Graph& g, const VertexSet& s);

} // namespace secdom

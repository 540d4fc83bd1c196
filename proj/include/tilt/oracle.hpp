#pragma once

// Brute-force ground truth: perfect-matching counts via a frontier dynamic
// program, exhaustive tiling enumeration, and the four-vertex condensation
// identity checks (on graphs and on the region recurrence).

#include "tilt/closedform.hpp"
#include "tilt/lattice.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace tilt {

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidQuad : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Sweep { RowMajor, ColMajor };

// Exact perfect-matching count. Sweeps cells in the given order keeping a
// bit-mask of forward cells already claimed by a matched edge; memory is
// bounded by the number of distinct frontier states.
BigInt count_matchings(const MatchGraph& g, Sweep sweep = Sweep::RowMajor);

// Visits every tiling of r (backtracking on the first uncovered cell, branch
// order left/right/vertical); stops early when the visitor returns false.
void for_each_tiling(const Region& r, const std::function<bool(const Tiling&)>& visit);

// All tilings of r; throws LimitExceeded once more than limit are found.
std::vector<Tiling> enumerate_tilings(const Region& r, std::uint64_t limit);

struct KuoQuad {
    TriCell u, v, w, s;  // cyclic boundary order; u,w up, v,s down
};

// Cells on the outer boundary of r in cyclic order (the order their edges
// are met when walking the region's boundary polygon).
std::vector<TriCell> boundary_cycle(const Region& r);

// Up to max_quads quads of distinct boundary cells in cyclic order with the
// up/down pattern required by the condensation identity.
std::vector<KuoQuad> boundary_quads(const Region& r, std::size_t max_quads);

// M(G) M(G-{u,v,w,s}) = M(G-{u,v}) M(G-{w,s}) + M(G-{u,s}) M(G-{v,w}).
bool check_kuo_graph(const MatchGraph& g, const KuoQuad& q);

enum class KuoMethod { ClosedForm, Oracle };

// Recurrence over the region family obtained by dropping the top dent-free
// level a_l:
//   M(x,t,a) M(x,t-1,a') = M(x,t,a') M(x,t-1,a) + M(x+1,t-1,a') M(x-1,t,a).
// Requires x >= 1, t >= 1, l >= 1.
bool check_kuo_region(const TiltedParams& p, KuoMethod method);

// Convenience: matching count of a region's dual graph.
BigInt count_region(const Region& r);

}  // namespace tilt

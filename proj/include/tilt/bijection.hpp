#pragma once

// Tiling <-> plane-partition correspondences. Both directions work through
// the lozenge-path decomposition of a tiling: fixing one lozenge class as
// background, the other two classes chain into disjoint boundary-to-boundary
// paths, one per staircase corner (first map) or per dent (second map).

#include "tilt/closedform.hpp"
#include "tilt/lattice.hpp"

#include <json.hpp>

#include <stdexcept>
#include <vector>

namespace tilt {

struct InvalidTiling : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPartition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlanePartition {
    std::vector<long long> shape;                 // row lengths, weakly decreasing
    std::vector<std::vector<long long>> rows;     // each row weakly decreasing

    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
};

nlohmann::json pp_to_json(const PlanePartition& pp);
PlanePartition pp_from_json(const nlohmann::json& j);

// Row j records the labels of path l-j+1; path p starts at the staircase
// corner of level a_p, runs right to left through left/vertical lozenges
// (background: right lozenges), and labels each vertical lozenge by
// p + (number of left lozenges before it). Shape is
// (t+(k+1)a_l-k-l, ..., t+(k+1)a_1-k-1).
PlanePartition tiling_to_pp_cor1(const TiltedParams& p, const Tiling& t);

// Inverse map: rebuilds every path from its label sequence and fills the
// rest with right lozenges. Throws InvalidPartition when the labels violate
// the class constraints (shape, per-path label range, or path overlap).
Tiling pp_to_tiling_cor1(const TiltedParams& p, const PlanePartition& pp);

// Number of plane partitions in the image class, by backtracking over
// per-path label sequences with geometric feasibility as the acceptor.
BigInt enumerate_pp_cor1(const TiltedParams& p);

// True iff some tiling's first path carries exactly these labels.
bool cor1_first_path_feasible(const TiltedParams& p, const std::vector<long long>& labels);

// Second correspondence, on H(k; x=0, t=0; h dents at levels b_1 < ... < b_h
// complementary to a). Path j descends from the b_j-th dent, carries exactly
// b_j - j left lozenges, and labels them by the number of right lozenges
// passed (background: vertical lozenges). Row j records path h-j+1; shape is
// (b_h-h, ..., b_1-1).
PlanePartition tiling_to_pp_cor2(long long h, long long l, long long k,
                                 const std::vector<long long>& a, const Tiling& t);

Tiling pp_to_tiling_cor2(long long k, long long h, long long l,
                         const std::vector<long long>& a, const PlanePartition& pp);

BigInt enumerate_pp_cor2(long long k, long long h, long long l,
                         const std::vector<long long>& a);

// Same count by the literal printed class description: shape-lambda plane
// partitions with parts at most h+k(h+l), j-th part from the right at least
// kj, and in-row neighbor differences at least (lambda_i - lambda_{i+1})k.
// Kept separate so its agreement with the path-derived count can be
// reported rather than assumed.
BigInt enumerate_pp_cor2_literal(long long k, long long h, long long l,
                                 const std::vector<long long>& a);

}  // namespace tilt

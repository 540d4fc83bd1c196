#pragma once

// Closed-form tiling counts: the Phi product, the tilted-halved-hexagon
// formula, and the three classical specializations (hexagon, dented
// semi-hexagon, halved hexagon).

#include "tilt/exactnum.hpp"

#include <stdexcept>
#include <vector>

namespace tilt {

struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonIntegerResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (k, x, t, h, a_1 < ... < a_l) with all scalars >= 0 and a_i in [1, h+l].
// Implicitly a_{l+1} = l+h+1.
struct TiltedParams {
    long long k = 0, x = 0, t = 0, h = 0;
    std::vector<long long> a;

    static TiltedParams make(long long k, long long x, long long t, long long h,
                             std::vector<long long> a);
    long long l() const { return static_cast<long long>(a.size()); }
};

struct HexParams {
    long long a = 0, b = 0, c = 0;
    static HexParams make(long long a, long long b, long long c);
};

// Trapezoid of sides a, b, a+b, b with b dents at base positions s_1 < ... < s_b.
struct SemiHexParams {
    long long a = 0, b = 0;
    std::vector<long long> s;
    static SemiHexParams make(long long a, long long b, std::vector<long long> s);
};

struct HalvedHexParams {
    long long a = 0, b = 0, c = 0;  // c <= b
    static HalvedHexParams make(long long a, long long b, long long c);
};

// Three-fold Pochhammer-ratio product; 1 when a is empty. Floor-indexed
// bounds use exact integer division; an empty index range is a factor 1.
BigRational phi(long long k, const std::vector<long long>& a, long long t, long long x,
                long long h);

// Phi(a; t, x, h) * prod_{i=1..l} Phi((a_1..a_i); t, a_{i+1}-a_i-1, a_i-i).
// The h-slot of the nested factor is a_i - i; the variant a_{i+1}-i-1 breaks
// integrality for h > 0 and disagrees with the enumeration oracle.
// Throws NonIntegerResult if the reduced product is not a nonnegative integer.
BigInt count_tilted(const TiltedParams& p);

BigInt count_hexagon(const HexParams& p);

// Product over dent indices 1 <= i < j <= b of (s_j - s_i)/(j - i).
BigInt count_semihexagon(const SemiHexParams& p);

// prod_{i=1..a} [ prod_{j=1..b-c+1} (a+i+j-1)/(i+j-1)
//               * prod_{j=b-c+2..b-a+i} (2a+i+j-1)/(i+j-1) ].
// Evaluated exactly as written; integrality is asserted, not assumed.
BigInt count_halved_hexagon(const HalvedHexParams& p);

}  // namespace tilt

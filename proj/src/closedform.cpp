#include "tilt/closedform.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace tilt {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw InvalidParams(what);
}

void check_increasing(const std::vector<long long>& v, long long lo, long long hi,
                      const char* what) {
    long long prev = lo - 1;
    for (long long x : v) {
        require(x > prev, what);
        prev = x;
    }
    if (!v.empty()) require(v.front() >= lo && v.back() <= hi, what);
}

}  // namespace

TiltedParams TiltedParams::make(long long k, long long x, long long t, long long h,
                                std::vector<long long> a) {
    require(k >= 0 && x >= 0 && t >= 0 && h >= 0, "tilted params must be nonnegative");
    check_increasing(a, 1, h + static_cast<long long>(a.size()),
                     "dent-free levels must be strictly increasing in [1, h+l]");
    return TiltedParams{k, x, t, h, std::move(a)};
}

HexParams HexParams::make(long long a, long long b, long long c) {
    require(a >= 0 && b >= 0 && c >= 0, "hexagon sides must be nonnegative");
    return HexParams{a, b, c};
}

SemiHexParams SemiHexParams::make(long long a, long long b, std::vector<long long> s) {
    require(a >= 0 && b >= 0, "semihexagon sides must be nonnegative");
    require(static_cast<long long>(s.size()) == b, "need exactly b dent positions");
    check_increasing(s, 1, a + b, "dent positions must be strictly increasing in [1, a+b]");
    return SemiHexParams{a, b, std::move(s)};
}

HalvedHexParams HalvedHexParams::make(long long a, long long b, long long c) {
    require(a >= 0 && b >= 0 && c >= 0, "halved hexagon sides must be nonnegative");
    require(c <= b, "halved hexagon requires c <= b");
    return HalvedHexParams{a, b, c};
}

BigRational phi(long long k, const std::vector<long long>& a, long long t, long long x,
                long long h) {
    const long long l = static_cast<long long>(a.size());
    BigRational res(1);
    for (long long i = 1; i <= l; ++i) {
        const long long ai = a[i - 1];
        const long long n = t + (k + 1) * ai - l - k;
        res *= pochhammer(x + h + l + 1 - ai, n);
        res /= pochhammer(h + l + 1 - ai, n);
    }
    for (long long j = 1; j <= k - 1; ++j) {
        for (long long i = 1; i <= (l + k - j) / (k + 1); ++i) {
            const long long base = k * (k + 1) * i + (j - 1) * k - (k + 1) * (k - 1) + t;
            res *= pochhammer((k + 1) * (x + h) + base, j);
            res /= pochhammer((k + 1) * h + base, j);
        }
    }
    for (long long i = 1; i <= l / (k + 1); ++i) {
        const long long n = (k + 1) * l + k - (k + 1) * (k + 1) * i;
        const long long base = k * (k + 1) * i - k + 1 + t;
        res *= pochhammer((k + 1) * (x + h) + base, n);
        res /= pochhammer((k + 1) * h + base, n);
    }
    return res;
}

BigInt count_tilted(const TiltedParams& p) {
    const long long l = p.l();
    std::vector<long long> ext = p.a;
    ext.push_back(l + p.h + 1);

    BigRational res = phi(p.k, p.a, p.t, p.x, p.h);
    for (long long i = 1; i <= l; ++i) {
        std::vector<long long> head(p.a.begin(), p.a.begin() + i);
        const long long xi = ext[i] - ext[i - 1] - 1;
        const long long hi = p.a[i - 1] - i;
        res *= phi(p.k, head, p.t, xi, hi);
    }
    if (boost::multiprecision::denominator(res) != 1 || res < 0)
        throw NonIntegerResult("tilted count did not reduce to a nonnegative integer");
    return boost::multiprecision::numerator(res);
}

BigInt count_hexagon(const HexParams& p) {
    BigRational res(1);
    for (long long i = 1; i <= p.a; ++i)
        for (long long j = 1; j <= p.b; ++j)
            for (long long k = 1; k <= p.c; ++k) {
                res *= BigInt(i + j + k - 1);
                res /= BigInt(i + j + k - 2);
            }
    if (boost::multiprecision::denominator(res) != 1)
        throw NonIntegerResult("hexagon count did not reduce to an integer");
    return boost::multiprecision::numerator(res);
}

BigInt count_semihexagon(const SemiHexParams& p) {
    BigRational res(1);
    for (long long i = 1; i <= p.b; ++i)
        for (long long j = i + 1; j <= p.b; ++j) {
            res *= BigInt(p.s[j - 1] - p.s[i - 1]);
            res /= BigInt(j - i);
        }
    if (boost::multiprecision::denominator(res) != 1)
        throw NonIntegerResult("semihexagon count did not reduce to an integer");
    return boost::multiprecision::numerator(res);
}

BigInt count_halved_hexagon(const HalvedHexParams& p) {
    BigRational res(1);
    for (long long i = 1; i <= p.a; ++i) {
        for (long long j = 1; j <= p.b - p.c + 1; ++j) {
            res *= BigInt(p.a + i + j - 1);
            res /= BigInt(i + j - 1);
        }
        for (long long j = p.b - p.c + 2; j <= p.b - p.a + i; ++j) {
            res *= BigInt(2 * p.a + i + j - 1);
            res /= BigInt(i + j - 1);
        }
    }
    if (boost::multiprecision::denominator(res) != 1)
        throw NonIntegerResult("halved hexagon product did not reduce to an integer");
    return boost::multiprecision::numerator(res);
}

}  // namespace tilt

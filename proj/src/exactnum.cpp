#include "tilt/exactnum.hpp"

#include <sstream>

namespace tilt {

BigRational pochhammer(long long x, long long n) {
    if (n == 0) return BigRational(1);
    if (n > 0) {
        BigInt p = 1;
        for (long long i = 0; i < n; ++i) p *= BigInt(x + i);
        return BigRational(p);
    }
    BigInt d = 1;
    for (long long i = 1; i <= -n; ++i) {
        long long f = x - i;
        if (f == 0)
            throw PoleError("pochhammer(" + std::to_string(x) + "," + std::to_string(n) +
                            "): zero factor x-" + std::to_string(i));
        d *= BigInt(f);
    }
    // cpp_rational's (num, den) constructor wants a positive denominator
    if (d < 0) return BigRational(BigInt(-1), -d);
    return BigRational(BigInt(1), d);
}

BigRational product_ratio(const std::vector<std::pair<BigRational, BigRational>>& factors) {
    BigRational acc(1);
    for (const auto& [num, den] : factors) {
        if (den == 0) throw DivisionByZero("product_ratio: zero denominator factor");
        acc *= num;
        acc /= den;  // cpp_rational keeps the result reduced
    }
    return acc;
}

std::string to_decimal(const BigInt& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace tilt

#include "exmatch/numbers.hpp"

namespace exmatch {

Bint binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Bint r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact: r equals C(a-b+i, i) here
    }
    return r;
}

}  // namespace exmatch

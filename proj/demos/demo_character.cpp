// Demo: the graded character of the anyon sector equals a quotient of theta
// and eta-type infinite products, order by order in the grading parameter.
//
// Both sides are expanded as exact rational q-series (in the natural unit
// exponent, where one integer power of q equals 2*r*s units) and compared
// coefficient by coefficient.  The program is self-checking.

#include "dcs/qseries.hpp"

#include <cstdio>
#include <cstdlib>

using namespace dcs;

int main() {
    const ModelParams p(2, 1);
    const long orders = 12;               // integer q-orders to display
    const long cap = orders * 2 * p.r * p.s;  // unit exponents

    const QSeries lhs = lhs_series(p, cap);
    const QSeries rhs = rhs_series(p, cap);

    std::printf("model: r = %ld, s = %ld; comparing %ld unit exponents (%ld q-orders)\n\n",
                p.r, p.s, cap + 1, orders);
    std::printf("%14s  %16s  %16s\n", "unit exponent", "state count", "product side");

    bool all_equal = true;
    for (long k = 0; k <= cap; ++k) {
        const bool eq = lhs.at(k) == rhs.at(k);
        all_equal = all_equal && eq;
        if (lhs.at(k) != 0 || rhs.at(k) != 0 || !eq)
            std::printf("%14ld  %16s  %16s%s\n", k, rat_to_string(lhs.at(k)).c_str(),
                        rat_to_string(rhs.at(k)).c_str(), eq ? "" : "   MISMATCH");
    }

    if (!all_equal) {
        std::fprintf(stderr, "FAIL: character identity violated\n");
        return EXIT_FAILURE;
    }
    std::printf("\nall %ld coefficients agree exactly\nOK\n", cap + 1);
    return EXIT_SUCCESS;
}

#include "bigeo/states.hpp"

#include <cmath>

namespace bigeo {

GeneralInitialState branch_ket(Branch branch, double p) {
    if (p < 0.0 || p > 1.0) throw domain_error("branch_ket: p must be in [0, 1]");
    GeneralInitialState s;
    const double a = std::sqrt(1.0 - p);
    const double b = std::sqrt(p);
    if (branch == Branch::Theta) {
        s.alpha = a;
        s.beta = 0.0;
        s.zeta = 0.0;
        s.delta = b;
    } else {
        s.alpha = 0.0;
        s.beta = a;
        s.zeta = b;
        s.delta = 0.0;
    }
    return s;
}

} // namespace bigeo

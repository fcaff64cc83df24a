#include "germcq/germ.hpp"

#include <stdexcept>

namespace germcq {

void ConstraintGerm::check() const {
    for (const auto& p : g)
        if (p.nvars() != n) throw std::invalid_argument("inequality component nvars mismatch");
    for (const auto& p : h) {
        if (p.nvars() != n) throw std::invalid_argument("equality component nvars mismatch");
        if (p.constant_term() != 0)
            throw std::invalid_argument("equality component must vanish at the origin");
    }
}

ActiveSet active_set(const ConstraintGerm& germ) {
    ActiveSet as;
    for (int j = 1; j <= germ.q(); ++j) {
        Rat v = germ.g[j - 1].constant_term();
        if (v == 0) as.indices.push_back(j);
        if (v > 0) as.feasible = false;
    }
    return as;
}

}  // namespace germcq

#pragma once

#include "germcq/normal_form.hpp"

#include <functional>
#include <string>

namespace germcq {

/// Verdict for all four qualifications, with the case-analysis branch that
/// produced the ACQ/GCQ answer. The hierarchy licq => mfcq => acq => gcq is
/// checked on construction.
struct CqVerdict {
    bool licq = false;
    bool mfcq = false;
    bool acq = false;
    bool gcq = false;
    std::string branch;
};

CqVerdict decide(const NormalForm& nf);

struct CatalogBounds {
    int n_max = 6;
    int q_max = 4;
    std::string table_filter;  // "", "T1", "T2", "T3"
};

/// Every valid catalog descriptor within the bounds, each sign pattern, and
/// moduli on the fixed rational grid {-3,-1,0,1/2,1,3/2,3} filtered by the
/// nondegeneracy conditions. Deterministic order. Returns the emission count.
long enumerate_catalog(const CatalogBounds& bounds,
                       const std::function<void(const NormalForm&, const CqVerdict&)>& sink);

const std::vector<Rat>& moduli_grid();

}  // namespace germcq

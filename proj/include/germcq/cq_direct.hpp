#pragma once

#include "germcq/germ.hpp"
#include "germcq/simplex.hpp"

#include <optional>

namespace germcq {

struct MfcqResult {
    bool holds = false;
    std::optional<RationalVector> witness;  // an MF-vector when holds
};

/// Gradients at the origin of the active inequality components followed by
/// all equality components.
RatMatrix active_jacobian(const ConstraintGerm& germ);

/// Linear independence of the active-constraint and equality gradients,
/// decided by exact rank. Throws on an infeasible germ.
bool licq(const ConstraintGerm& germ);

/// Full rank of dh(0) plus existence of a strict descent direction, decided
/// by an exact rational LP (equalities removed by nullspace substitution,
/// directions boxed to [-1,1], Bland's rule). Throws on an infeasible germ.
MfcqResult mfcq(const ConstraintGerm& germ);

}  // namespace germcq

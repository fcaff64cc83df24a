#pragma once

#include "germcq/germ.hpp"
#include "germcq/normal_form.hpp"
#include "germcq/simplex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace germcq {

/// Convex polyhedral cone carrying an H-representation (rows a with a.d <= 0
/// or a.d = 0) and/or a V-representation (conic hull of rays plus a lineality
/// space). Either side can be derived from the other by exact double
/// description, capped at n <= 12.
struct PolyhedralCone {
    int n = 0;
    bool has_h = false;
    std::vector<RationalVector> le;  // a.d <= 0
    std::vector<RationalVector> eq;  // a.d = 0
    bool has_v = false;
    std::vector<RationalVector> rays;
    std::vector<RationalVector> lineality;

    static PolyhedralCone from_h(int n, std::vector<RationalVector> le,
                                 std::vector<RationalVector> eq);
    static PolyhedralCone from_v(int n, std::vector<RationalVector> rays,
                                 std::vector<RationalVector> lineality);

    void ensure_v();
    void ensure_h();
    bool member(const RationalVector& d) const;  // needs H
};

constexpr int kMaxDoubleDescriptionDim = 12;

/// H-representation rows grad g_j(0) (active j, <=) and grad h_j(0) (=).
/// Identically-zero gradients impose nothing and are omitted.
PolyhedralCone linearized_cone(const ConstraintGerm& germ);

PolyhedralCone polar(const PolyhedralCone& cone);

/// Mutual inclusion checked on generators, exact.
bool cone_equal_polyhedral(const PolyhedralCone& a, const PolyhedralCone& b);

enum class QuadRel { EQ0, LE0 };

/// Rule: a point d with d_j = 0 for every j outside `support` and
/// sign_poly(d) > 0 is removed from the cone.
struct ExcludedSet {
    std::vector<int> support;  // 1-based variable indices
    Polynomial sign_poly;
};

/// Semialgebraic cone: coordinates forced to 0, coordinates forced <= 0, one
/// quadratic condition (= 0 or <= 0), and an optional excluded subset.
struct ConeDescriptor {
    int n = 0;
    std::vector<int> zero_indices;    // 1-based
    std::vector<int> nonpos_indices;  // 1-based
    Polynomial quad;
    QuadRel rel = QuadRel::LE0;
    std::optional<ExcludedSet> excluded;
};

bool member(const ConeDescriptor& cone, const RationalVector& d);

/// Same conditions within a tolerance band after rounding a float direction
/// to rationals; used by the sampling oracle.
bool member_within(const ConeDescriptor& cone, const std::vector<double>& d, double tol);

/// The exact tangent-cone description from the catalog case analysis.
/// Inequality-only descriptors must have l1 = 0 (with l1 > 0 the tangent cone
/// equals the linearized cone and carries no sign-quadratic description).
ConeDescriptor tangent_cone_descriptor(const NormalForm& nf);

/// Conservative conversion to an H-representation; succeeds when the
/// quadratic condition resolves to linear constraints (zero form, definite or
/// semidefinite cases) and any excluded set is a single-variable sign rule.
std::optional<PolyhedralCone> descriptor_as_polyhedral(const ConeDescriptor& cone);

/// Deterministic exact member points of the descriptor: the origin, filtered
/// signed basis probes, and randomized points repaired onto the quadric.
std::vector<RationalVector> sample_members(const ConeDescriptor& cone, int count,
                                           std::uint64_t seed);

}  // namespace germcq

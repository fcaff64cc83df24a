#pragma once

#include "germcq/germ.hpp"

#include <string>
#include <vector>

namespace germcq {

/// Basis bookkeeping for the space of (q+r)-component polynomial jets of
/// order <= k in n variables; dimension (q+r) * C(n+k, k).
struct JetSpace {
    int n = 0;
    int components = 0;
    int order = 0;
    std::vector<Exponents> monomials;  // graded-lex, degree <= order

    static JetSpace make(int n, int components, int order);
    int dim() const { return components * static_cast<int>(monomials.size()); }
    int monomial_index(const Exponents& e) const;
    int slot(int component, int monomial) const {
        return component * static_cast<int>(monomials.size()) + monomial;
    }
};

using SparseColumn = std::vector<std::pair<int, Rat>>;

/// Generator columns of the structure-group tangent space in jet coordinates:
/// monomial multiples of the Jacobian columns, of each equality placed in
/// every component slot, and of each inequality in its own slot.
std::vector<SparseColumn> tangent_generators(const ConstraintGerm& germ, int k,
                                             const JetSpace& jets);
std::vector<SparseColumn> tangent_generators(const ConstraintGerm& germ, int k);

enum class CodimVerdict { Finite, Growing, Undetermined };

struct CodimReport {
    std::vector<long> codims;  // codim_k for k = 1..k_max
    CodimVerdict verdict = CodimVerdict::Undetermined;
    long value = -1;  // stabilized codimension when Finite
};

std::string verdict_name(CodimVerdict v);

/// codim_k = jet dimension - rank(generators) for each order; FINITE when the
/// last three orders agree, GROWING when they strictly increase, otherwise
/// UNDETERMINED. Requires k_max >= 3.
CodimReport codim_sequence(const ConstraintGerm& germ, int k_max);

}  // namespace germcq

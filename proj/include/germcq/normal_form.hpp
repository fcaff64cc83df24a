#pragma once

#include "germcq/germ.hpp"

#include <map>
#include <string>
#include <vector>

namespace germcq {

enum class Table { T1, T2, T3, Regular };

std::string table_name(Table t);
Table table_from_name(const std::string& s);

/// A row instance from the classification catalog, or the full-rank
/// submersion pseudo-class (Regular).
///
/// T1 rows have q = 0, r = 1 (one singular equality). T2 rows have r = 0 and
/// carry the linear-part parameters l (row-determined by q) and l1. T3 rows
/// have r = 1 and q in {1,2,3} fixed per type. Sign data is keyed by the
/// catalog subscripts: numeric variable indices for eps_j, "p" for the primed
/// sign, "0"/"01"/"02"/"12" for the special cubic/cross signs, "1".."3" for
/// delta, and unordered pairs "12"/"13"/"23" for the moduli alpha.
struct NormalForm {
    Table table = Table::Regular;
    std::string type;  // "(1,k)", "(4)", ... ; empty for Regular
    int k = 0;         // only for parametric families "(1,k)", "(3,k)", "(4,k)"
    int n = 0;
    int q = 0;
    int r = 0;
    int l = 0;   // T2 only
    int l1 = 0;  // T2 only
    std::map<std::string, int> eps;
    std::map<std::string, int> delta;
    std::map<std::string, Rat> alpha;

    bool is_regular() const { return table == Table::Regular; }
    int eps_at(const std::string& key) const;
    int delta_at(const std::string& key) const;
    Rat alpha_at(const std::string& key) const;
    int eps_at(int var_index) const { return eps_at(std::to_string(var_index)); }

    std::string display() const;
};

/// Static facts about a catalog row.
struct RowInfo {
    bool parametric = false;
    int k_min = 0, k_max = 0;
    int q_min = 0, q_max = 0;   // T3 rows have q_min == q_max
    int l_offset = 0;           // T2: l = q - l_offset
    int tail_offset = 0;        // eps tail sum starts at variable tail_start(q)
    bool tail_from_q = false;   // tail start measured from q (T2) or absolute (T1/T3)
    int min_n_offset = 0;       // smallest n keeping the row's conditions non-vacuous
    int codim_k_coeff = 0;      // catalog codimension = codim_k_coeff*k + codim_const
    int codim_const = 0;
    int moduli = 0;             // number of alpha moduli
    int tail_start(int q) const { return tail_from_q ? q + tail_offset : tail_offset; }
    int min_n(int q) const { return tail_from_q ? q + min_n_offset : min_n_offset; }
    int codim(int k) const { return codim_k_coeff * k + codim_const; }
};

const RowInfo& row_info(Table table, const std::string& type);
std::vector<std::string> row_types(Table table);

/// Exact eps/delta/alpha key sets a descriptor must carry.
std::vector<std::string> required_eps_keys(const NormalForm& nf);
std::vector<std::string> required_delta_keys(const NormalForm& nf);
std::vector<std::string> required_alpha_keys(const NormalForm& nf);

/// Empty result means the descriptor is a valid catalog instance; otherwise
/// each violated condition is named.
std::vector<std::string> validate(const NormalForm& nf);

void require_valid(const NormalForm& nf);

/// The explicit polynomial germ for a valid descriptor, with the catalog's
/// literal variable indexing.
ConstraintGerm realize(const NormalForm& nf);

NormalForm regular_form(int n, int q, int r);

}  // namespace germcq

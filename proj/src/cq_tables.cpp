#include "germcq/cq_tables.hpp"

#include <stdexcept>

namespace germcq {

namespace {

bool all_eps_are(const NormalForm& nf, int from, int to, int val) {
    for (int j = from; j <= to; ++j)
        if (nf.eps_at(j) != val) return false;
    return true;
}

bool some_eps_is(const NormalForm& nf, int from, int to, int val) {
    for (int j = from; j <= to; ++j)
        if (nf.eps_at(j) == val) return true;
    return false;
}

// Both signs occur in eps_from..eps_to.
bool mixed_eps(const NormalForm& nf, int from, int to) {
    return some_eps_is(nf, from, to, 1) && some_eps_is(nf, from, to, -1);
}

// Exact comparison a < 2*sqrt(product) with product > 0.
bool below_twice_sqrt(const Rat& a, const Rat& product) {
    if (a < 0) return true;
    return a * a < 4 * product;
}

// Type (10) / type (8 mixed) ACQ condition on the moduli triple.
bool moduli_triple_condition(const NormalForm& nf) {
    auto alpha = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return nf.alpha_at(std::to_string(i) + std::to_string(j));
    };
    for (int i = 1; i <= 3; ++i) {
        int j = i == 1 ? 2 : 1;
        int k = i == 3 ? 2 : 3;
        Rat aij = alpha(i, j), aik = alpha(i, k), ajk = alpha(j, k);
        if (aij <= 0 && aik <= 0 && ajk < 2) return true;
        if (aij > 0 && aij < 2 && aik > 0 && aik < 2) {
            Rat lhs = ajk + aij * aik / 2;
            Rat prod = (1 - aij * aij / 4) * (1 - aik * aik / 4);
            if (below_twice_sqrt(lhs, prod)) return true;
        }
    }
    return false;
}

CqVerdict finish(bool licq, bool mfcq, bool acq, bool gcq, std::string branch) {
    CqVerdict v;
    v.licq = licq;
    v.mfcq = mfcq;
    v.acq = acq;
    v.gcq = gcq;
    v.branch = std::move(branch);
    if ((v.licq && !v.mfcq) || (v.mfcq && !v.acq) || (v.acq && !v.gcq))
        throw std::logic_error("hierarchy violated in branch " + v.branch);
    return v;
}

CqVerdict decide_t1(const NormalForm& nf) {
    const int n = nf.n;
    if (nf.type == "(1,k)") {
        bool gcq = (nf.k == 2 && some_eps_is(nf, 2, n, -1)) ||
                   (nf.k >= 3 && mixed_eps(nf, 2, n));
        return finish(false, false, false, gcq, "T1:(1,k)");
    }
    bool gcq = some_eps_is(nf, 4, n, -1);
    return finish(false, false, false, gcq, "T1:(2)");
}

CqVerdict decide_t2(const NormalForm& nf) {
    const int n = nf.n, q = nf.q;
    if (nf.l1 > 0)
        return finish(false, true, true, true, "T2:" + nf.type + ":mf");
    bool acq = false, gcq = false;
    if (nf.type == "(1,k)") {
        acq = (nf.k == 2 && all_eps_are(nf, q, n, -1)) ||
              (nf.k >= 3 && all_eps_are(nf, q + 1, n, -1));
        gcq = (nf.k == 2 && !all_eps_are(nf, q, n, 1)) || !all_eps_are(nf, q + 1, n, 1);
    } else if (nf.type == "(2)") {
        acq = all_eps_are(nf, q + 2, n, -1);
        gcq = !all_eps_are(nf, q + 2, n, 1);
    } else if (nf.type == "(3,k)") {
        acq = (nf.k == 2 && all_eps_are(nf, q - 1, n, -1)) ||
              (nf.k >= 3 && all_eps_are(nf, q, n, -1));
        gcq = !all_eps_are(nf, q, n, 1);
    } else if (nf.type == "(4,k)") {
        acq = false;
        gcq = !all_eps_are(nf, q + 1, n, 1) ||
              nf.eps_at(q) == (nf.k % 2 == 0 ? -1 : 1);
    } else if (nf.type == "(5)") {
        acq = nf.eps_at(q - 1) == -1 && all_eps_are(nf, q + 1, n, -1);
        gcq = !all_eps_are(nf, q + 1, n, 1);
    } else if (nf.type == "(6)") {
        acq = nf.delta_at("1") == -1 && nf.delta_at("2") == -1 &&
              nf.alpha_at("12") < 2 && all_eps_are(nf, q, n, -1);
        gcq = !all_eps_are(nf, q, n, 1);
    } else if (nf.type == "(7)") {
        acq = nf.eps_at(q - 2) == -1 && all_eps_are(nf, q, n, -1);
        gcq = !all_eps_are(nf, q, n, 1);
    } else if (nf.type == "(8)") {
        acq = nf.eps_at(q - 1) == -1 && nf.eps_at("p") == -1 &&
              all_eps_are(nf, q, n, -1);
        gcq = !all_eps_are(nf, q, n, 1);
    } else if (nf.type == "(9)") {
        acq = false;
        gcq = !all_eps_are(nf, q + 1, n, 1) || nf.eps_at("01") == 1 ||
              nf.eps_at("02") == 1;
    } else if (nf.type == "(10)") {
        acq = nf.delta_at("1") == -1 && nf.delta_at("2") == -1 &&
              nf.delta_at("3") == -1 && all_eps_are(nf, q, n, -1) &&
              moduli_triple_condition(nf);
        gcq = !all_eps_are(nf, q, n, 1);
    } else {
        throw std::logic_error("unhandled inequality-only type");
    }
    if (acq) gcq = true;
    return finish(false, false, acq, gcq, "T2:" + nf.type);
}

CqVerdict decide_t3(const NormalForm& nf) {
    const int n = nf.n;
    bool gcq = false;
    if (nf.type == "(1,k)") {
        gcq = mixed_eps(nf, 2, n);
    } else if (nf.type == "(2)") {
        gcq = mixed_eps(nf, 3, n);
    } else if (nf.type == "(3,k)") {
        gcq = nf.k % 2 == 0 ? some_eps_is(nf, 3, n, -1)
                            : (nf.eps_at("1") == 1 || mixed_eps(nf, 3, n));
    } else if (nf.type == "(4)" || nf.type == "(5)" || nf.type == "(6)") {
        gcq = mixed_eps(nf, 3, n);
    } else if (nf.type == "(7)") {
        gcq = mixed_eps(nf, 4, n) || nf.eps_at("1") == 1 || nf.eps_at("2") == 1;
    } else if (nf.type == "(8)") {
        gcq = mixed_eps(nf, 4, n);
    } else {
        throw std::logic_error("unhandled mixed type");
    }
    return finish(false, false, false, gcq, "T3:" + nf.type);
}

}  // namespace

CqVerdict decide(const NormalForm& nf) {
    require_valid(nf);
    if (nf.is_regular()) return finish(true, true, true, true, "regular");
    switch (nf.table) {
        case Table::T1: return decide_t1(nf);
        case Table::T2: return decide_t2(nf);
        case Table::T3: return decide_t3(nf);
        default: break;
    }
    throw std::logic_error("unreachable");
}

const std::vector<Rat>& moduli_grid() {
    static const std::vector<Rat> grid = {Rat(-3), Rat(-1), Rat(0), Rat(1, 2),
                                          Rat(1),  Rat(3, 2), Rat(3)};
    return grid;
}

long enumerate_catalog(const CatalogBounds& bounds,
                       const std::function<void(const NormalForm&, const CqVerdict&)>& sink) {
    if (bounds.n_max > 8) throw std::invalid_argument("enumeration bound n_max capped at 8");
    long count = 0;
    auto emit_signs = [&](NormalForm nf) {
        const auto eps_keys = required_eps_keys(nf);
        const auto delta_keys = required_delta_keys(nf);
        const auto alpha_keys = required_alpha_keys(nf);
        const int sign_vars = static_cast<int>(eps_keys.size() + delta_keys.size());
        if (sign_vars > 24) throw std::logic_error("sign pattern space too large");
        const auto& grid = moduli_grid();
        std::vector<std::size_t> alpha_idx(alpha_keys.size(), 0);
        for (long mask = 0; mask < (1L << sign_vars); ++mask) {
            int bit = 0;
            for (const auto& key : eps_keys)
                nf.eps[key] = (mask >> bit++) & 1 ? -1 : 1;
            for (const auto& key : delta_keys)
                nf.delta[key] = (mask >> bit++) & 1 ? -1 : 1;
            // Odometer over the moduli grid.
            std::fill(alpha_idx.begin(), alpha_idx.end(), 0);
            while (true) {
                for (std::size_t a = 0; a < alpha_keys.size(); ++a)
                    nf.alpha[alpha_keys[a]] = grid[alpha_idx[a]];
                if (validate(nf).empty()) {
                    sink(nf, decide(nf));
                    ++count;
                }
                std::size_t pos = 0;
                while (pos < alpha_idx.size()) {
                    if (++alpha_idx[pos] < grid.size()) break;
                    alpha_idx[pos] = 0;
                    ++pos;
                }
                if (pos == alpha_idx.size()) break;
                if (alpha_keys.empty()) break;
            }
        }
    };

    for (Table table : {Table::T1, Table::T2, Table::T3}) {
        if (!bounds.table_filter.empty() && table_name(table) != bounds.table_filter)
            continue;
        for (const auto& type : row_types(table)) {
            const RowInfo& info = row_info(table, type);
            std::vector<int> ks;
            if (info.parametric)
                for (int k = info.k_min; k <= info.k_max; ++k) ks.push_back(k);
            else
                ks.push_back(0);
            std::vector<int> qs;
            if (table == Table::T1) {
                qs.push_back(0);
            } else if (table == Table::T2) {
                for (int q = info.q_min; q <= bounds.q_max; ++q) qs.push_back(q);
            } else if (info.q_min <= bounds.q_max) {
                qs.push_back(info.q_min);
            }
            for (int k : ks) {
                for (int q : qs) {
                    for (int n = info.min_n(q); n <= bounds.n_max; ++n) {
                        NormalForm nf;
                        nf.table = table;
                        nf.type = type;
                        nf.k = k;
                        nf.n = n;
                        nf.q = q;
                        nf.r = table == Table::T2 ? 0 : 1;
                        if (table == Table::T2) {
                            nf.l = q - info.l_offset;
                            int l1_max = (nf.l + 1) / 2;
                            for (int l1 = 0; l1 <= l1_max; ++l1) {
                                nf.l1 = l1;
                                emit_signs(nf);
                            }
                        } else {
                            emit_signs(nf);
                        }
                    }
                }
            }
        }
    }
    return count;
}

}  // namespace germcq

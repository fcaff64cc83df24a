#include "germcq/normal_form.hpp"

#include <sstream>
#include <stdexcept>

namespace germcq {

std::string table_name(Table t) {
    switch (t) {
        case Table::T1: return "T1";
        case Table::T2: return "T2";
        case Table::T3: return "T3";
        case Table::Regular: return "REGULAR";
    }
    return "?";
}

Table table_from_name(const std::string& s) {
    if (s == "T1") return Table::T1;
    if (s == "T2") return Table::T2;
    if (s == "T3") return Table::T3;
    if (s == "REGULAR") return Table::Regular;
    throw std::invalid_argument("unknown table name: " + s);
}

int NormalForm::eps_at(const std::string& key) const {
    auto it = eps.find(key);
    if (it == eps.end()) throw std::invalid_argument("missing eps key " + key);
    return it->second;
}

int NormalForm::delta_at(const std::string& key) const {
    auto it = delta.find(key);
    if (it == delta.end()) throw std::invalid_argument("missing delta key " + key);
    return it->second;
}

Rat NormalForm::alpha_at(const std::string& key) const {
    auto it = alpha.find(key);
    if (it == alpha.end()) throw std::invalid_argument("missing alpha key " + key);
    return it->second;
}

std::string NormalForm::display() const {
    std::ostringstream os;
    os << table_name(table);
    if (!is_regular()) os << " " << type;
    if (k > 0) os << " k=" << k;
    os << " n=" << n << " q=" << q << " r=" << r;
    if (table == Table::T2) os << " l=" << l << " l1=" << l1;
    return os.str();
}

namespace {

struct RowKey {
    Table table;
    std::string type;
    bool operator<(const RowKey& o) const {
        if (table != o.table) return static_cast<int>(table) < static_cast<int>(o.table);
        return type < o.type;
    }
};

const std::map<RowKey, RowInfo>& registry() {
    static const std::map<RowKey, RowInfo> rows = [] {
        std::map<RowKey, RowInfo> m;
        auto put = [&m](Table t, const std::string& ty, RowInfo info) {
            m.emplace(RowKey{t, ty}, info);
        };
        // Equality-only rows: q = 0, one equality.
        put(Table::T1, "(1,k)", {true, 2, 5, 0, 0, 0, 2, false, 2, 1, -1, 0});
        put(Table::T1, "(2)", {false, 0, 0, 0, 0, 0, 4, false, 3, 0, 4, 0});
        // Inequality-only rows.
        put(Table::T2, "(1,k)", {true, 2, 5, 1, 99, 1, 1, true, 1, 1, -1, 0});
        put(Table::T2, "(2)", {false, 0, 0, 1, 99, 1, 2, true, 2, 0, 4, 0});
        put(Table::T2, "(3,k)", {true, 2, 4, 2, 99, 2, 0, true, 0, 1, 0, 0});
        put(Table::T2, "(4,k)", {true, 3, 4, 2, 99, 2, 1, true, 1, 1, 0, 0});
        put(Table::T2, "(5)", {false, 0, 0, 2, 99, 2, 1, true, 1, 0, 4, 0});
        put(Table::T2, "(6)", {false, 0, 0, 3, 99, 3, 0, true, 0, 0, 3, 1});
        put(Table::T2, "(7)", {false, 0, 0, 3, 99, 3, 0, true, 0, 0, 4, 0});
        put(Table::T2, "(8)", {false, 0, 0, 3, 99, 3, 0, true, 0, 0, 4, 0});
        put(Table::T2, "(9)", {false, 0, 0, 3, 99, 3, 1, true, 1, 0, 4, 0});
        put(Table::T2, "(10)", {false, 0, 0, 4, 99, 4, 0, true, 0, 0, 4, 3});
        // Mixed rows: q active inequalities plus one singular equality.
        put(Table::T3, "(1,k)", {true, 2, 4, 1, 1, 0, 2, false, 2, 1, 0, 0});
        put(Table::T3, "(2)", {false, 0, 0, 1, 1, 0, 3, false, 3, 0, 4, 0});
        put(Table::T3, "(3,k)", {true, 3, 4, 1, 1, 0, 3, false, 3, 1, 0, 0});
        put(Table::T3, "(4)", {false, 0, 0, 2, 2, 0, 3, false, 3, 0, 3, 1});
        put(Table::T3, "(5)", {false, 0, 0, 2, 2, 0, 3, false, 3, 0, 4, 0});
        put(Table::T3, "(6)", {false, 0, 0, 2, 2, 0, 3, false, 3, 0, 4, 0});
        put(Table::T3, "(7)", {false, 0, 0, 2, 2, 0, 4, false, 4, 0, 4, 0});
        put(Table::T3, "(8)", {false, 0, 0, 3, 3, 0, 4, false, 4, 0, 4, 3});
        return m;
    }();
    return rows;
}

}  // namespace

const RowInfo& row_info(Table table, const std::string& type) {
    auto it = registry().find(RowKey{table, type});
    if (it == registry().end())
        throw std::invalid_argument("unknown catalog row " + table_name(table) + " " + type);
    return it->second;
}

std::vector<std::string> row_types(Table table) {
    std::vector<std::string> out;
    for (const auto& [key, info] : registry())
        if (key.table == table) out.push_back(key.type);
    return out;
}

std::vector<std::string> required_eps_keys(const NormalForm& nf) {
    std::vector<std::string> keys;
    auto tail = [&](int from) {
        for (int j = from; j <= nf.n; ++j) keys.push_back(std::to_string(j));
    };
    const int q = nf.q;
    if (nf.table == Table::T1) {
        if (nf.type == "(1,k)") tail(2);
        else if (nf.type == "(2)") { keys.push_back("2"); tail(4); }
    } else if (nf.table == Table::T2) {
        if (nf.type == "(1,k)") { keys.push_back(std::to_string(q)); tail(q + 1); }
        else if (nf.type == "(2)") { keys.push_back(std::to_string(q + 1)); tail(q + 2); }
        else if (nf.type == "(3,k)") { keys.push_back(std::to_string(q - 1)); tail(q); }
        else if (nf.type == "(4,k)") { keys.push_back(std::to_string(q)); tail(q + 1); }
        else if (nf.type == "(5)") { keys.push_back(std::to_string(q - 1)); tail(q + 1); }
        else if (nf.type == "(6)") tail(q);
        else if (nf.type == "(7)" || nf.type == "(8)") {
            keys.push_back(std::to_string(q - 2));
            keys.push_back(std::to_string(q - 1));
            keys.push_back("p");
            tail(q);
        } else if (nf.type == "(9)") {
            keys.push_back("01");
            keys.push_back("02");
            keys.push_back("12");
            tail(q + 1);
        } else if (nf.type == "(10)") { keys.push_back("0"); tail(q); }
    } else if (nf.table == Table::T3) {
        if (nf.type == "(1,k)") tail(2);
        else if (nf.type == "(2)") tail(3);
        else if (nf.type == "(3,k)") { keys.push_back("1"); tail(3); }
        else if (nf.type == "(4)") tail(3);
        else if (nf.type == "(5)" || nf.type == "(6)") {
            keys.push_back("1");
            keys.push_back("2");
            tail(3);
        } else if (nf.type == "(7)") {
            keys.push_back("1");
            keys.push_back("2");
            keys.push_back("3");
            tail(4);
        } else if (nf.type == "(8)") { keys.push_back("1"); tail(4); }
    }
    return keys;
}

std::vector<std::string> required_delta_keys(const NormalForm& nf) {
    if ((nf.table == Table::T2 && nf.type == "(6)") ||
        (nf.table == Table::T3 && nf.type == "(4)"))
        return {"1", "2"};
    if ((nf.table == Table::T2 && nf.type == "(10)") ||
        (nf.table == Table::T3 && nf.type == "(8)"))
        return {"1", "2", "3"};
    return {};
}

std::vector<std::string> required_alpha_keys(const NormalForm& nf) {
    if ((nf.table == Table::T2 && nf.type == "(6)") ||
        (nf.table == Table::T3 && nf.type == "(4)"))
        return {"12"};
    if ((nf.table == Table::T2 && nf.type == "(10)") ||
        (nf.table == Table::T3 && nf.type == "(8)"))
        return {"12", "13", "23"};
    return {};
}

namespace {

// Nondegeneracy of the quadratic part in the moduli directions: the 2x2 or
// 3x3 symmetric coefficient matrix [2*delta_i on the diagonal, alpha_ij off
// it] must be regular.
bool star_condition(const NormalForm& nf, std::vector<std::string>* why) {
    bool ok = true;
    if (required_delta_keys(nf).size() == 2) {
        Rat d1 = nf.delta_at("1"), d2 = nf.delta_at("2");
        Rat a = nf.alpha_at("12");
        if (4 * d1 * d2 - a * a == 0) {
            ok = false;
            if (why) why->push_back("condition (*) fails: 4*delta1*delta2 - alpha^2 = 0");
        }
    } else if (required_delta_keys(nf).size() == 3) {
        Rat d1 = nf.delta_at("1"), d2 = nf.delta_at("2"), d3 = nf.delta_at("3");
        Rat a12 = nf.alpha_at("12"), a13 = nf.alpha_at("13"), a23 = nf.alpha_at("23");
        struct Pair { Rat di, dj, a; const char* name; };
        for (const Pair& p : {Pair{d1, d2, a12, "12"}, Pair{d1, d3, a13, "13"},
                              Pair{d2, d3, a23, "23"}}) {
            if (4 * p.di * p.dj - p.a * p.a == 0) {
                ok = false;
                if (why)
                    why->push_back(std::string("condition (**) fails: pair ") + p.name);
            }
        }
        Rat det = 4 * d1 * d2 * d3 + a12 * a13 * a23 - d1 * a23 * a23 -
                  d2 * a13 * a13 - d3 * a12 * a12;
        if (det == 0) {
            ok = false;
            if (why) why->push_back("condition (**) fails: 3x3 determinant is 0");
        }
    }
    return ok;
}

}  // namespace

std::vector<std::string> validate(const NormalForm& nf) {
    std::vector<std::string> bad;
    if (nf.is_regular()) {
        if (nf.n < 1) bad.push_back("n must be positive");
        if (nf.q < 0 || nf.r < 0) bad.push_back("q and r must be nonnegative");
        if (nf.q + nf.r > nf.n) bad.push_back("regular class needs n >= q + r");
        if (!nf.eps.empty() || !nf.delta.empty() || !nf.alpha.empty())
            bad.push_back("regular class carries no sign data");
        return bad;
    }
    const auto it = [&]() -> const RowInfo* {
        try {
            return &row_info(nf.table, nf.type);
        } catch (const std::exception&) {
            return nullptr;
        }
    }();
    if (!it) {
        bad.push_back("unknown type " + nf.type + " in " + table_name(nf.table));
        return bad;
    }
    const RowInfo& info = *it;
    if (info.parametric) {
        if (nf.k < info.k_min || nf.k > info.k_max) {
            std::ostringstream os;
            os << "k=" << nf.k << " outside range [" << info.k_min << "," << info.k_max
               << "] for type " << nf.type;
            bad.push_back(os.str());
        }
    } else if (nf.k != 0) {
        bad.push_back("type " + nf.type + " takes no k parameter");
    }
    if (nf.table == Table::T1) {
        if (nf.q != 0) bad.push_back("equality-only rows have q = 0");
        if (nf.r != 1) bad.push_back("equality-only rows have r = 1");
    } else if (nf.table == Table::T2) {
        if (nf.r != 0) bad.push_back("inequality-only rows have r = 0");
        if (nf.q < info.q_min) {
            std::ostringstream os;
            os << "q=" << nf.q << " below minimum " << info.q_min << " for type " << nf.type;
            bad.push_back(os.str());
        } else {
            if (nf.l != nf.q - info.l_offset) {
                std::ostringstream os;
                os << "l=" << nf.l << " must equal q-" << info.l_offset << "="
                   << nf.q - info.l_offset << " for type " << nf.type;
                bad.push_back(os.str());
            }
            if (nf.l1 < 0 || 2 * nf.l1 > nf.l + 1) {
                std::ostringstream os;
                os << "l1=" << nf.l1 << " outside [0, ceil(l/2)]";
                bad.push_back(os.str());
            }
        }
    } else if (nf.table == Table::T3) {
        if (nf.r != 1) bad.push_back("mixed rows have r = 1");
        if (nf.q != info.q_min) {
            std::ostringstream os;
            os << "q=" << nf.q << " must be " << info.q_min << " for type " << nf.type;
            bad.push_back(os.str());
        }
        if (nf.l != 0 || nf.l1 != 0) bad.push_back("l/l1 apply only to inequality-only rows");
    }
    if (nf.q >= info.q_min && nf.n < info.min_n(nf.q)) {
        std::ostringstream os;
        os << "n=" << nf.n << " too small: the quadratic tail needs n >= "
           << info.min_n(nf.q);
        bad.push_back(os.str());
    }
    // Sign data must match the row's key set exactly.
    auto check_keys = [&bad](const char* what, const std::vector<std::string>& need,
                             const auto& have) {
        for (const auto& key : need) {
            auto f = have.find(key);
            if (f == have.end()) {
                bad.push_back(std::string("missing ") + what + " key " + key);
            }
        }
        for (const auto& [key, val] : have) {
            (void)val;
            bool wanted = false;
            for (const auto& k2 : need)
                if (k2 == key) wanted = true;
            if (!wanted) bad.push_back(std::string("unexpected ") + what + " key " + key);
        }
    };
    if (nf.q >= info.q_min) {
        check_keys("eps", required_eps_keys(nf), nf.eps);
        check_keys("delta", required_delta_keys(nf), nf.delta);
        check_keys("alpha", required_alpha_keys(nf), nf.alpha);
        for (const auto& [key, v] : nf.eps)
            if (v != 1 && v != -1) bad.push_back("eps[" + key + "] must be +-1");
        for (const auto& [key, v] : nf.delta)
            if (v != 1 && v != -1) bad.push_back("delta[" + key + "] must be +-1");
        if (bad.empty()) star_condition(nf, &bad);
    }
    return bad;
}

void require_valid(const NormalForm& nf) {
    auto bad = validate(nf);
    if (!bad.empty()) {
        std::string msg = "invalid descriptor (" + nf.display() + "):";
        for (const auto& b : bad) msg += " " + b + ";";
        throw std::invalid_argument(msg);
    }
}

namespace {

Polynomial tail_sum(const NormalForm& nf, int from) {
    Polynomial p(nf.n);
    for (int j = from; j <= nf.n; ++j)
        p = p + Polynomial::monomial(nf.n, j, 2, nf.eps_at(j));
    return p;
}

Polynomial gtilde_t2(const NormalForm& nf) {
    const int n = nf.n, q = nf.q;
    auto var = [&](int i) { return Polynomial::variable(n, i); };
    auto mono = [&](int i, int e, const Rat& c) { return Polynomial::monomial(n, i, e, c); };
    if (nf.type == "(1,k)") return mono(q, nf.k, nf.eps_at(q)) + tail_sum(nf, q + 1);
    if (nf.type == "(2)")
        return mono(q, 3, 1) + Rat(nf.eps_at(q + 1)) * var(q) * var(q + 1) * var(q + 1) +
               tail_sum(nf, q + 2);
    if (nf.type == "(3,k)") return mono(q - 1, nf.k, nf.eps_at(q - 1)) + tail_sum(nf, q);
    if (nf.type == "(4,k)")
        return mono(q, nf.k, nf.eps_at(q)) + var(q - 1) * var(q) + tail_sum(nf, q + 1);
    if (nf.type == "(5)")
        return mono(q - 1, 2, nf.eps_at(q - 1)) + mono(q, 3, 1) + tail_sum(nf, q + 1);
    if (nf.type == "(6)")
        return mono(q - 1, 2, nf.delta_at("1")) + mono(q - 2, 2, nf.delta_at("2")) +
               nf.alpha_at("12") * (var(q - 2) * var(q - 1)) + tail_sum(nf, q);
    if (nf.type == "(7)") {
        Polynomial lin = var(q - 2) + Rat(nf.eps_at("p")) * var(q - 1);
        return Rat(nf.eps_at(q - 2)) * (lin * lin) + mono(q - 1, 3, nf.eps_at(q - 1)) +
               tail_sum(nf, q);
    }
    if (nf.type == "(8)")
        return mono(q - 2, 3, nf.eps_at(q - 2)) + mono(q - 1, 2, nf.eps_at(q - 1)) +
               Rat(nf.eps_at("p")) * (var(q - 2) * var(q - 1)) + tail_sum(nf, q);
    if (nf.type == "(9)")
        return mono(q, 3, 1) + Rat(nf.eps_at("01")) * (var(q) * var(q - 1)) +
               Rat(nf.eps_at("02")) * (var(q) * var(q - 2)) +
               Rat(nf.eps_at("12")) * (var(q - 1) * var(q - 2)) + tail_sum(nf, q + 1);
    if (nf.type == "(10)") {
        Polynomial p(n);
        for (int j = 1; j <= 3; ++j)
            p = p + Polynomial::monomial(n, q - 4 + j, 2, nf.delta_at(std::to_string(j)));
        const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {2, 3}};
        for (auto [i, j] : pairs) {
            std::string key = std::to_string(i) + std::to_string(j);
            p = p + nf.alpha_at(key) * (var(q - 4 + i) * var(q - 4 + j));
        }
        p = p + Rat(nf.eps_at("0")) * (var(q - 3) * var(q - 2) * var(q - 1));
        return p + tail_sum(nf, q);
    }
    throw std::logic_error("unhandled inequality-only type " + nf.type);
}

Polynomial h_t1(const NormalForm& nf) {
    const int n = nf.n;
    if (nf.type == "(1,k)") return Polynomial::monomial(n, 1, nf.k, 1) + tail_sum(nf, 2);
    // type (2)
    auto var = [&](int i) { return Polynomial::variable(n, i); };
    return Polynomial::monomial(n, 1, 3, 1) +
           Rat(nf.eps_at(2)) * (var(1) * var(2) * var(2)) +
           Polynomial::monomial(n, 3, 2, 1) + tail_sum(nf, 4);
}

Polynomial h_t3(const NormalForm& nf) {
    const int n = nf.n;
    auto var = [&](int i) { return Polynomial::variable(n, i); };
    auto mono = [&](int i, int e, const Rat& c) { return Polynomial::monomial(n, i, e, c); };
    if (nf.type == "(1,k)") return mono(1, nf.k, 1) + tail_sum(nf, 2);
    if (nf.type == "(2)") return mono(2, 3, 1) + mono(1, 2, 1) + tail_sum(nf, 3);
    if (nf.type == "(3,k)")
        return mono(2, nf.k, 1) + Rat(nf.eps_at("1")) * (var(1) * var(2)) + tail_sum(nf, 3);
    if (nf.type == "(4)")
        return mono(1, 2, nf.delta_at("1")) + mono(2, 2, nf.delta_at("2")) +
               nf.alpha_at("12") * (var(1) * var(2)) + tail_sum(nf, 3);
    if (nf.type == "(5)")
        return mono(1, 3, 1) + mono(2, 2, nf.eps_at("1")) +
               Rat(nf.eps_at("2")) * (var(1) * var(2)) + tail_sum(nf, 3);
    if (nf.type == "(6)") {
        Polynomial lin = var(1) + Rat(nf.eps_at("1")) * var(2);
        return lin * lin + mono(2, 3, nf.eps_at("2")) + tail_sum(nf, 3);
    }
    if (nf.type == "(7)")
        return mono(3, 3, 1) + Rat(nf.eps_at("1")) * (var(2) * var(3)) +
               Rat(nf.eps_at("2")) * (var(3) * var(1)) +
               Rat(nf.eps_at("3")) * (var(1) * var(2)) + tail_sum(nf, 4);
    if (nf.type == "(8)") {
        Polynomial p(n);
        for (int j = 1; j <= 3; ++j)
            p = p + mono(j, 2, nf.delta_at(std::to_string(j)));
        const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {2, 3}};
        for (auto [i, j] : pairs)
            p = p + nf.alpha_at(std::to_string(i) + std::to_string(j)) * (var(i) * var(j));
        return p + Rat(nf.eps_at("1")) * (var(1) * var(2) * var(3)) + tail_sum(nf, 4);
    }
    throw std::logic_error("unhandled mixed type " + nf.type);
}

}  // namespace

ConstraintGerm realize(const NormalForm& nf) {
    require_valid(nf);
    ConstraintGerm germ;
    germ.n = nf.n;
    if (nf.is_regular()) {
        for (int j = 1; j <= nf.q; ++j) germ.g.push_back(Polynomial::variable(nf.n, j));
        for (int j = 1; j <= nf.r; ++j)
            germ.h.push_back(Polynomial::variable(nf.n, nf.q + j));
        return germ;
    }
    if (nf.table == Table::T1) {
        germ.h.push_back(h_t1(nf));
        return germ;
    }
    if (nf.table == Table::T3) {
        for (int j = 1; j <= nf.q; ++j) germ.g.push_back(Polynomial::variable(nf.n, j));
        germ.h.push_back(h_t3(nf));
        return germ;
    }
    // Inequality-only rows.
    for (int j = 1; j <= nf.q - 1; ++j) germ.g.push_back(Polynomial::variable(nf.n, j));
    Polynomial last(nf.n);
    for (int j = 1; j <= nf.l1; ++j) last = last + Polynomial::variable(nf.n, j);
    for (int j = nf.l1 + 1; j <= nf.l; ++j) last = last - Polynomial::variable(nf.n, j);
    last = last + gtilde_t2(nf);
    germ.g.push_back(last);
    return germ;
}

NormalForm regular_form(int n, int q, int r) {
    NormalForm nf;
    nf.table = Table::Regular;
    nf.n = n;
    nf.q = q;
    nf.r = r;
    return nf;
}

}  // namespace germcq

#include "germcq/cq_direct.hpp"
#include "germcq/cq_tables.hpp"
#include "germcq/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using germcq::Json;

Json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input file: " + path);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    return Json::parse(text);
}

struct BoundsOption {
    int n = 6;
    int q = 4;
};

BoundsOption parse_bounds(const std::string& text) {
    BoundsOption b;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--bounds expects n=..,q=..");
        std::string key = item.substr(0, eq);
        int val = std::stoi(item.substr(eq + 1));
        if (key == "n") b.n = val;
        else if (key == "q") b.q = val;
        else throw CLI::ValidationError("unknown bound '" + key + "'");
    }
    if (b.n < 1 || b.n > 8) throw CLI::ValidationError("bound n must be in [1,8]");
    return b;
}

int run_check(const std::string& input) {
    Json doc = read_input(input);
    if (germcq::json_is_descriptor(doc)) {
        germcq::NormalForm nf = germcq::descriptor_from_json(doc);
        auto bad = germcq::validate(nf);
        if (!bad.empty()) {
            Json out = {{"v", germcq::kSchemaVersion}, {"error", "invalid descriptor"},
                        {"violations", bad}};
            std::cout << out.dump() << "\n";
            return 1;
        }
        Json out = germcq::verdict_to_json(germcq::decide(nf));
        out["input"] = "descriptor";
        std::cout << out.dump() << "\n";
        return 0;
    }
    germcq::ConstraintGerm germ = germcq::germ_from_json(doc);
    Json out;
    out["v"] = germcq::kSchemaVersion;
    out["input"] = "germ";
    if (!germcq::active_set(germ).feasible) {
        out["verdict"] = "infeasible";
        std::cout << out.dump() << "\n";
        return 0;
    }
    out["licq"] = germcq::licq(germ);
    auto mf = germcq::mfcq(germ);
    out["mfcq"] = mf.holds;
    if (mf.witness) {
        Json w = Json::array();
        for (const auto& x : *mf.witness) w.push_back(germcq::rat_to_string(x));
        out["mf_vector"] = w;
    }
    out["acq"] = nullptr;
    out["gcq"] = nullptr;
    out["note"] = "not decidable directly - supply a descriptor or run oracle";
    std::cout << out.dump() << "\n";
    return 0;
}

int run_catalog(const BoundsOption& bounds, const std::string& table) {
    germcq::CatalogBounds cb;
    cb.n_max = bounds.n;
    cb.q_max = bounds.q;
    cb.table_filter = table;
    germcq::enumerate_catalog(cb, [](const germcq::NormalForm& nf,
                                     const germcq::CqVerdict& v) {
        Json line;
        line["v"] = germcq::kSchemaVersion;
        line["descriptor"] = germcq::descriptor_to_json(nf);
        line["verdict"] = germcq::verdict_to_json(v);
        std::cout << line.dump() << "\n";
    });
    return 0;
}

int run_cones(const std::string& input) {
    Json doc = read_input(input);
    Json out;
    out["v"] = germcq::kSchemaVersion;
    germcq::ConstraintGerm germ;
    if (germcq::json_is_descriptor(doc)) {
        germcq::NormalForm nf = germcq::descriptor_from_json(doc);
        germcq::require_valid(nf);
        germ = germcq::realize(nf);
        try {
            out["tangent"] = germcq::cone_descriptor_to_json(
                germcq::tangent_cone_descriptor(nf));
        } catch (const std::invalid_argument& err) {
            out["tangent_note"] = err.what();
        }
    } else {
        germ = germcq::germ_from_json(doc);
    }
    germcq::PolyhedralCone lin = germcq::linearized_cone(germ);
    out["linearized"] = germcq::cone_to_json(lin);
    out["polar"] = germcq::cone_to_json(germcq::polar(lin));
    std::cout << out.dump() << "\n";
    return 0;
}

int run_oracle(const std::string& input, const germcq::OracleConfig& cfg) {
    Json doc = read_input(input);
    if (!germcq::json_is_descriptor(doc)) {
        germcq::ConstraintGerm germ = germcq::germ_from_json(doc);
        auto est = germcq::estimate_tangent_directions(germ, cfg);
        Json out = germcq::direction_estimate_to_json(est);
        out["note"] = "no descriptor given: estimate only, no agreement verdict";
        std::cout << out.dump() << "\n";
        return 3;
    }
    germcq::NormalForm nf = germcq::descriptor_from_json(doc);
    germcq::require_valid(nf);
    auto report = germcq::cone_agreement(nf, cfg);
    Json out = agreement_report_to_json(report);
    out["descriptor"] = germcq::descriptor_to_json(nf);
    std::cout << out.dump() << "\n";
    return report.agreement() ? 0 : 2;
}

int run_codim(const std::string& input, int kmax) {
    Json doc = read_input(input);
    germcq::ConstraintGerm germ;
    Json extra;
    if (germcq::json_is_descriptor(doc)) {
        germcq::NormalForm nf = germcq::descriptor_from_json(doc);
        germcq::require_valid(nf);
        germ = germcq::realize(nf);
        if (!nf.is_regular()) {
            const auto& info = germcq::row_info(nf.table, nf.type);
            extra["catalog_codim"] = info.codim(nf.k);
            if (info.moduli > 0) {
                extra["moduli"] = info.moduli;
                extra["stratum_note"] =
                    "catalog column lists the stratum value; the computed "
                    "codimension is the plain one";
            }
        }
    } else {
        germ = germcq::germ_from_json(doc);
    }
    auto report = germcq::codim_sequence(germ, kmax);
    Json out = germcq::codim_report_to_json(report);
    for (const auto& [key, value] : extra.items()) out[key] = value;
    std::cout << out.dump() << "\n";
    return report.verdict == germcq::CodimVerdict::Undetermined ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact constraint-qualification analysis for polynomial constraint germs"};
    app.require_subcommand(1);

    std::string input;
    std::string bounds_text = "n=6,q=4";
    std::string table_filter;
    germcq::OracleConfig oracle_cfg;
    long long seed = -1;
    int kmax = 8;
    int jobs = 1;
    long budget = oracle_cfg.witness_budget;

    auto* check = app.add_subcommand("check", "Decide LICQ/MFCQ (germ) or all four (descriptor)");
    check->add_option("input", input, "JSON file, or - for stdin");

    auto* catalog = app.add_subcommand("catalog", "Stream every catalog descriptor with verdicts");
    catalog->add_option("--bounds", bounds_text, "n=..,q=.. enumeration bounds");
    catalog->add_option("--table", table_filter, "restrict to T1, T2 or T3");

    auto* cones = app.add_subcommand("cones", "Linearized cone, its polar, and the tangent descriptor");
    cones->add_option("input", input, "JSON file, or - for stdin");

    auto* oracle = app.add_subcommand("oracle", "Sampling agreement report for a descriptor");
    oracle->add_option("input", input, "JSON file, or - for stdin");
    oracle->add_option("--seed", seed, "random seed (required)")->required();
    oracle->add_option("--budget", budget, "witness probe budget per direction");
    oracle->add_option("--jobs", jobs, "worker threads for sampling");

    auto* codim = app.add_subcommand("codim", "Jet-space codimension sequence");
    codim->add_option("input", input, "JSON file, or - for stdin");
    codim->add_option("--kmax", kmax, "largest jet order (default 8)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(input);
        if (catalog->parsed()) return run_catalog(parse_bounds(bounds_text), table_filter);
        if (cones->parsed()) return run_cones(input);
        if (oracle->parsed()) {
            oracle_cfg.seed = static_cast<std::uint64_t>(seed);
            oracle_cfg.witness_budget = budget;
            oracle_cfg.jobs = jobs;
            return run_oracle(input, oracle_cfg);
        }
        if (codim->parsed()) return run_codim(input, kmax);
    } catch (const germcq::Json::exception& e) {
        Json err = {{"v", germcq::kSchemaVersion}, {"error", e.what()}};
        std::cout << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err = {{"v", germcq::kSchemaVersion}, {"error", e.what()}};
        std::cout << err.dump() << "\n";
        return 1;
    }
    return 1;
}

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ringlab/hunt.hpp"
#include "ringlab/verify.hpp"

using namespace ringlab;

namespace {

int write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot write " << path << "\n";
        return 1;
    }
    os << content;
    return 0;
}

// --spec takes a construction expression, a ring file or a presentation file
struct SpecInput {
    std::optional<RingClassification> classified;
    std::string note;
};

RingClassification classify_spec(const std::string& spec, const ClassifyConfig& cfg) {
    std::ifstream file(spec);
    if (file) {
        std::stringstream buf;
        buf << file.rdbuf();
        std::string text = buf.str();
        std::istringstream sniff(text);
        std::string head;
        sniff >> head;
        if (head == "ring") {
            FiniteRing ring = parse_ring(text, cfg.limits);
            return classify_ring(ring, cfg);
        }
        if (head == "algebra") {
            Presentation pres = parse_presentation(text);
            auto alg = build_algebra(pres);
            FiniteRing ring = alg->realize(cfg.limits); // throws if not realizable
            return classify_ring(ring, cfg);
        }
        throw Error(ErrorCode::ParseError, "file must start with 'ring' or 'algebra'");
    }
    return classify_expr(spec, cfg);
}

std::string render_classification(const RingClassification& c, bool json) {
    if (!json) {
        std::ostringstream os;
        os << "ring " << c.label << " order=" << c.order
           << (c.unital ? " unital" : " non-unital") << "\n";
        for (const auto& [prop, v] : c.verdicts) os << explain(prop, c.verdicts) << "\n";
        os << "radicals: |N|=" << c.radicals.nil_count << " |N_*|=" << c.radicals.prime_count
           << " |N^*|=" << c.radicals.upper_count << " |J|=" << c.radicals.jacobson_count
           << "\n";
        for (const auto& s : c.inconsistencies) os << "INCONSISTENT: " << s << "\n";
        os << "work=" << c.work << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << "{\n  \"ring\": \"" << c.label << "\",\n  \"order\": " << c.order
       << ",\n  \"verdicts\": [\n";
    bool first = true;
    for (const auto& [prop, v] : c.verdicts) {
        if (!first) os << ",\n";
        first = false;
        os << "    {\"property\": \"" << prop_name(prop) << "\", \"status\": \""
           << status_name(v.status) << "\", \"exact\": " << (v.exact ? "true" : "false") << "}";
    }
    os << "\n  ]\n}\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite ring property laboratory"};
    app.require_subcommand(1);

    uint32_t max_degree = 2;
    uint64_t budget = 100'000'000;
    uint32_t power_bound = 64;
    app.add_option("--max-degree", max_degree, "polynomial degree bound for the scans");
    app.add_option("--budget", budget, "convolution budget for the pair scans");
    app.add_option("--power-bound", power_bound, "power bound for nilpotency checks");

    auto* cmd_classify = app.add_subcommand("classify", "classify a ring given by a "
                                                        "construction expression or file");
    std::string spec;
    bool as_json = false;
    cmd_classify->add_option("--spec", spec, "construction expression or path")->required();
    cmd_classify->add_flag("--json", as_json, "machine-readable output");

    auto* cmd_verify = app.add_subcommand("verify-paper", "run the built-in corpus against its "
                                                          "expectations");
    std::string report_path;
    bool strict = false;
    bool verify_json = false;
    uint32_t jobs = 1;
    cmd_verify->add_option("--report", report_path, "write the report here ('-' = stdout)");
    cmd_verify->add_flag("--strict", strict, "bound-limited expectations count as failures");
    cmd_verify->add_flag("--json", verify_json, "machine-readable report");
    cmd_verify->add_option("--jobs", jobs, "parallel workers over corpus entries");

    auto* cmd_hunt = app.add_subcommand("hunt", "search small rings separating property pairs");
    uint32_t max_order = 16;
    std::string pairs_arg, hunt_report;
    cmd_hunt->add_option("--max-order", max_order, "largest ring order in the grid");
    cmd_hunt->add_option("--pairs", pairs_arg,
                         "comma-separated have:lack property pairs (default: all open pairs)");
    cmd_hunt->add_option("--report", hunt_report, "write the report here ('-' = stdout)");

    auto* cmd_lattice = app.add_subcommand("lattice", "emit the property implication lattice");
    std::string dot_path;
    cmd_lattice->add_option("--dot", dot_path, "DOT output path ('-' = stdout)")->required();

    auto* cmd_explain = app.add_subcommand("explain", "derivation chain for one property");
    std::string explain_spec, property_name_arg;
    cmd_explain->add_option("--spec", explain_spec, "construction expression or path")
        ->required();
    cmd_explain->add_option("--property", property_name_arg, "property name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_classify) {
            ClassifyConfig cfg{max_degree, budget, power_bound, {}};
            RingClassification c = classify_spec(spec, cfg);
            std::cout << render_classification(c, as_json);
            return c.inconsistencies.empty() ? 0 : 1;
        }
        if (*cmd_verify) {
            RunConfig cfg;
            cfg.max_degree = max_degree;
            cfg.budget = budget;
            cfg.power_bound = power_bound;
            cfg.strict = strict;
            cfg.jobs = jobs;
            auto t0 = std::chrono::steady_clock::now();
            Report report = verify_paper(cfg);
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
            std::cerr << "verify-paper: " << elapsed.count() << "s wall\n";
            int wr = write_out(report_path, verify_json ? report.json() : report.text());
            if (wr != 0) return wr;
            return report.ok ? 0 : 1;
        }
        if (*cmd_hunt) {
            HuntConfig cfg;
            cfg.max_order = max_order;
            cfg.max_degree = max_degree;
            cfg.budget = budget;
            if (!pairs_arg.empty()) {
                std::istringstream ps(pairs_arg);
                std::string item;
                while (std::getline(ps, item, ',')) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw Error(ErrorCode::ParseError, "pairs use have:lack syntax");
                    auto have = prop_from_name(item.substr(0, colon));
                    auto lack = prop_from_name(item.substr(colon + 1));
                    if (!have || !lack)
                        throw Error(ErrorCode::ParseError, "unknown property in " + item);
                    cfg.pairs.emplace_back(*have, *lack);
                }
            }
            HuntReport report = hunt(cfg);
            return write_out(hunt_report, report.text());
        }
        if (*cmd_lattice) return write_out(dot_path, lattice_dot());
        if (*cmd_explain) {
            auto prop = prop_from_name(property_name_arg);
            if (!prop) throw Error(ErrorCode::ParseError,
                                   "unknown property " + property_name_arg);
            ClassifyConfig cfg{max_degree, budget, power_bound, {}};
            RingClassification c = classify_spec(explain_spec, cfg);
            std::cout << explain(*prop, c.verdicts) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

// Command-line driver: runs the plan-to-text pipeline for a built-in or
// file-loaded domain and prints the requested stage.
//
// Exit codes: 0 success, 1 planning failure, 2 validation/parse failure,
// 3 I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "instrgen/domain_io.hpp"
#include "instrgen/pipeline.hpp"

namespace {

constexpr int kExitPlanning = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

int write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return kExitIo;
    }
    out << text;
    return out ? 0 : kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic planner and instruction generator for "
                 "household-device models"};

    std::string domain = "toaster";
    std::string domain_file;
    std::string stage = "text";
    std::string out_path;
    std::string spl_out_path;
    int max_depth = instrgen::kDefaultMaxDepth;

    app.add_option("--domain", domain,
                   "Built-in domain: toaster, breadmaker, combined");
    app.add_option("--domain-file", domain_file,
                   "Load the domain from a file instead");
    app.add_option("--stage", stage,
                   "Output stage: plan, points, merged, interpret, spl, "
                   "text, trace");
    app.add_option("--out", out_path, "Write output here instead of stdout");
    app.add_option("--spl-out", spl_out_path,
                   "Also write the SPL stage to this file");
    app.add_option("--max-depth", max_depth, "Planner depth bound");

    CLI11_PARSE(app, argc, argv);

    instrgen::DomainModel model;
    try {
        if (!domain_file.empty()) {
            std::ifstream in(domain_file, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read domain file: " << domain_file
                          << "\n";
                return kExitIo;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            model = instrgen::load_domain(buf.str());
        } else {
            model = instrgen::builtin_domain(domain);
        }
        auto diagnostics = instrgen::validate_domain(model);
        if (!diagnostics.empty()) {
            for (const auto& diag : diagnostics)
                std::cerr << "error: " << diag.message << "\n";
            return kExitValidation;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    instrgen::PipelineResult result;
    try {
        result = instrgen::run_pipeline(model, max_depth);
    } catch (const instrgen::NoPlanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPlanning;
    } catch (const instrgen::DepthExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPlanning;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    std::string text;
    if (stage == "plan") {
        for (const auto& a : result.plan) text += instrgen::to_string(a) + "\n";
    } else if (stage == "points") {
        text = instrgen::format_points(result.points) + "\n";
    } else if (stage == "merged") {
        text = instrgen::format_indexed(result.merged) + "\n";
    } else if (stage == "interpret") {
        text = instrgen::format_entries(result.interp.entries) + "\n" +
               "PATTERNS: " + instrgen::format_patterns(result.interp.patterns) +
               "\n";
    } else if (stage == "spl") {
        text = instrgen::write_spl(result.nodes);
    } else if (stage == "text") {
        for (const auto& s : result.sentences) text += s + "\n";
    } else if (stage == "trace") {
        text = instrgen::trace_text(result);
    } else {
        std::cerr << "error: unknown stage: " << stage << "\n";
        return kExitValidation;
    }

    if (!spl_out_path.empty()) {
        int rc = write_output(spl_out_path, instrgen::write_spl(result.nodes));
        if (rc != 0) return rc;
    }
    return write_output(out_path, text);
}

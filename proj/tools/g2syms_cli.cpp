// Command-line front end: list and build the catalog triples, certify a
// triple file, and run the spinor-level audit.
//
// Exit codes: 0 all checks pass, 1 any check fails, 2 any check is
// inconclusive, 64 usage error.

#include "g2syms/catalog.hpp"
#include "g2syms/clifford.hpp"
#include "g2syms/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

int report_exit_code(const g2syms::Report& rpt) {
    if (rpt.any_fail()) return kExitFail;
    if (rpt.any_inconclusive()) return kExitInconclusive;
    return kExitPass;
}

void print_report(const g2syms::Report& rpt) { std::cout << rpt.summary(); }

bool write_json(const std::string& path, const g2syms::Json& j) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        return false;
    }
    out << j.dump(2) << "\n";
    return true;
}

std::optional<g2syms::FamilySpec> parse_spec(const std::string& family, const std::string& a_sig,
                                             const std::string& t_text) {
    g2syms::FamilySpec spec;
    if (family == "1") spec.family = g2syms::Family::F1;
    else if (family == "2a") spec.family = g2syms::Family::F2a;
    else if (family == "2b") spec.family = g2syms::Family::F2b;
    else {
        std::cerr << "unknown family '" << family << "' (expected 1, 2a, or 2b)\n";
        return std::nullopt;
    }
    if (spec.family == g2syms::Family::F2b) {
        spec.a_signature = g2syms::Signature{1, 0, 0};
    } else if (a_sig == "1,1") {
        spec.a_signature = g2syms::Signature{1, 1, 0};
    } else if (a_sig == "2,0") {
        spec.a_signature = g2syms::Signature{2, 0, 0};
    } else {
        std::cerr << "unknown a-signature '" << a_sig << "' (expected 1,1 or 2,0)\n";
        return std::nullopt;
    }
    if (spec.family == g2syms::Family::F1) {
        std::optional<g2syms::QSqrt2> t = g2syms::parse_scalar(t_text);
        if (!t) {
            std::cerr << "cannot parse t value '" << t_text << "'\n";
            return std::nullopt;
        }
        spec.t = *t;
    } else if (t_text != "0") {
        std::cerr << "only family 1 carries the parameter t\n";
        return std::nullopt;
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructors and certification for the signature-(4,3) triples"};
    app.require_subcommand(1);

    CLI::App* catalog = app.add_subcommand("catalog", "list the built-in specifications");
    bool list = false;
    catalog->add_flag("--list", list, "print one spec per line");

    CLI::App* build = app.add_subcommand("build", "build a catalog triple and write it as JSON");
    std::string family, a_sig = "1,1", t_text = "0", out_path;
    build->add_option("--family", family, "1, 2a, or 2b")->required();
    build->add_option("--a-sig", a_sig, "module signature: 1,1 or 2,0");
    build->add_option("--t", t_text, "parameter for family 1, e.g. -1, 1/2, 1/2+3/4*sqrt2");
    build->add_option("--out", out_path, "output file")->required();

    CLI::App* certify = app.add_subcommand("certify", "run the certification battery on a triple file");
    std::string in_path, report_path;
    certify->add_option("file", in_path, "triple JSON file")->required();
    certify->add_option("--report", report_path, "write the report as JSON");

    CLI::App* audit = app.add_subcommand("spinor-audit", "verify the spinor-level invariants");
    std::string audit_report_path;
    audit->add_option("--report", audit_report_path, "write the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (catalog->parsed()) {
            for (const g2syms::FamilySpec& spec : g2syms::catalog_sweep())
                std::cout << spec.name() << "\n";
            if (!list) std::cout << "(" << g2syms::catalog_sweep().size() << " specs)\n";
            return kExitPass;
        }
        if (build->parsed()) {
            std::optional<g2syms::FamilySpec> spec = parse_spec(family, a_sig, t_text);
            if (!spec) return kExitUsage;
            g2syms::CatalogTriple ct = g2syms::build_family(*spec);
            if (!write_json(out_path, g2syms::catalog_triple_to_json(ct))) return kExitUsage;
            std::cout << "wrote " << spec->name() << " (dim " << ct.triple.algebra().dim()
                      << ") to " << out_path << "\n";
            return kExitPass;
        }
        if (certify->parsed()) {
            std::ifstream in(in_path);
            if (!in) {
                std::cerr << "cannot open " << in_path << "\n";
                return kExitUsage;
            }
            g2syms::Json j = g2syms::Json::parse(in);
            g2syms::TripleFile tf = g2syms::triple_from_json(j);
            g2syms::Report rpt = g2syms::certify(tf.triple, tf.omega);
            print_report(rpt);
            if (!report_path.empty() && !write_json(report_path, g2syms::report_to_json(rpt)))
                return kExitUsage;
            return report_exit_code(rpt);
        }
        if (audit->parsed()) {
            g2syms::CliffordRep rep = g2syms::CliffordRep::build_standard();
            g2syms::Report rpt = g2syms::spinor_audit(rep);
            print_report(rpt);
            if (!audit_report_path.empty() &&
                !write_json(audit_report_path, g2syms::report_to_json(rpt)))
                return kExitUsage;
            return report_exit_code(rpt);
        }
    } catch (const g2syms::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const g2syms::Json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

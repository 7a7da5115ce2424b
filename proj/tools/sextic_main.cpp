// Command line front end: cohomology queries, Chow arithmetic, the
// classification tables, the region plot, and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sextic/chern.hpp"
#include "sextic/chow.hpp"
#include "sextic/classify.hpp"
#include "sextic/cohomology.hpp"
#include "sextic/regions.hpp"
#include "sextic/report.hpp"
#include "sextic/verify.hpp"

namespace {

using namespace sextic;

Variety parse_variety(const std::string& s) {
    if (s == "F") return Variety::F;
    if (s == "Phi") return Variety::Phi;
    throw std::invalid_argument("variety must be F or Phi");
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_file, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + out_file);
    os << text;
}

struct CohomArgs {
    std::string variety;
    long long a1 = 0, a2 = 0;
    std::vector<long long> twist_range;
    std::string format = "json";
    std::string out;
};

int run_cohom(const CohomArgs& args) {
    const Variety v = parse_variety(args.variety);
    std::vector<long long> twists;
    if (!args.twist_range.empty()) {
        if (args.twist_range[0] > args.twist_range[1])
            throw std::invalid_argument("--twist-range expects LO <= HI");
        for (long long t = args.twist_range[0]; t <= args.twist_range[1]; ++t)
            twists.push_back(t);
    }
    emit(render_cohom(v, args.a1, args.a2, twists, parse_format(args.format)), args.out);
    return 0;
}

struct TableArgs {
    std::string which;
    std::string format = "json";
    std::string out;
};

int run_table(const TableArgs& args) {
    emit(render_table(parse_table_kind(args.which), parse_format(args.format)), args.out);
    return 0;
}

struct RegionsArgs {
    long long bound = 9;
    std::string format = "ascii";
    std::string out;
};

int run_regions(const RegionsArgs& args) {
    if (args.bound > 100) throw std::invalid_argument("--bound must be at most 100");
    const Format f = parse_format(args.format);
    if (f != Format::Svg && f != Format::Ascii)
        throw std::invalid_argument("regions supports only svg and ascii output");
    emit(render_regions(args.bound, f), args.out);
    return 0;
}

struct VerifyArgs {
    std::string scope = "all";
    std::string format = "text";
    std::string out;
};

int run_verify_cmd(const VerifyArgs& args) {
    const VerifyReport report = run_verify(parse_scope(args.scope));
    if (args.format == "text")
        emit(render_verify_text(report), args.out);
    else if (args.format == "json")
        emit(render_verify_json(report), args.out);
    else
        throw std::invalid_argument("verify supports text or json output");
    return report.overall ? 0 : 1;
}

struct ChowArgs {
    std::string variety;
    std::string op;
    std::vector<long long> coeffs;
    std::string out;
};

int run_chow(const ChowArgs& args) {
    const Variety v = parse_variety(args.variety);
    ChowClass result = ChowClass::zero(v);
    if (args.op == "pow") {
        if (args.coeffs.size() != 3)
            throw std::invalid_argument("chow pow expects: a1 a2 k");
        const long long k = args.coeffs[2];
        if (k < 0 || k > 8) throw std::invalid_argument("chow pow exponent must be in [0, 8]");
        result = ChowClass::unit(v);
        const ChowClass d = DivisorClass{v, args.coeffs[0], args.coeffs[1]}.to_chow();
        for (long long i = 0; i < k; ++i) result = result * d;
    } else if (args.op == "mul") {
        if (args.coeffs.size() != 4)
            throw std::invalid_argument("chow mul expects: a1 a2 b1 b2");
        result = DivisorClass{v, args.coeffs[0], args.coeffs[1]}.to_chow() *
                 DivisorClass{v, args.coeffs[2], args.coeffs[3]}.to_chow();
    } else {
        throw std::invalid_argument("chow operation must be pow or mul");
    }
    emit(chow_result_json(result), args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection theory and rank-2 aCM bundle classification "
                 "on the del Pezzo sextics F and Phi"};
    app.require_subcommand(1);

    CohomArgs cohom_args;
    auto* cohom = app.add_subcommand("cohom", "cohomology table of a line bundle");
    cohom->add_option("variety", cohom_args.variety, "F or Phi")->required();
    cohom->add_option("a1", cohom_args.a1, "coefficient of h1 / eta1")->required();
    cohom->add_option("a2", cohom_args.a2, "coefficient of h2 / eta2")->required();
    cohom->add_option("--twist-range", cohom_args.twist_range,
                      "emit one row per twist t in [LO, HI]")
        ->expected(2);
    cohom->add_option("--format", cohom_args.format, "json, csv or markdown");
    cohom->add_option("--out", cohom_args.out, "write to a file instead of stdout");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "print a classification table");
    table->add_option("which", table_args.which,
                      "section4, intermediateF, intermediatePhi, ulrichF, embeddings, "
                      "theoremB-F or theoremB-Phi")
        ->required();
    table->add_option("--format", table_args.format, "json, csv or markdown");
    table->add_option("--out", table_args.out, "write to a file instead of stdout");

    RegionsArgs regions_args;
    auto* regions = app.add_subcommand("regions", "plot the cohomology regions");
    regions->add_option("--bound", regions_args.bound, "plot on [-B, B]^2 (default 9, max 100)");
    regions->add_option("--format", regions_args.format, "svg or ascii");
    regions->add_option("--out", regions_args.out, "write to a file instead of stdout");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--scope", verify_args.scope, "all, cohomology, chern or classify");
    verify->add_option("--format", verify_args.format, "text or json");
    verify->add_option("--out", verify_args.out, "write to a file instead of stdout");

    ChowArgs chow_args;
    auto* chow = app.add_subcommand("chow", "divisor arithmetic in the Chow ring");
    chow->add_option("variety", chow_args.variety, "F or Phi")->required();
    chow->add_option("op", chow_args.op, "pow or mul")->required();
    chow->add_option("coeffs", chow_args.coeffs, "pow: a1 a2 k; mul: a1 a2 b1 b2")
        ->expected(3, 4);
    chow->add_option("--out", chow_args.out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (cohom->parsed()) return run_cohom(cohom_args);
        if (table->parsed()) return run_table(table_args);
        if (regions->parsed()) return run_regions(regions_args);
        if (verify->parsed()) return run_verify_cmd(verify_args);
        if (chow->parsed()) return run_chow(chow_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

#include "chipres/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace chipres {

namespace {

Multigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
    if (format == "text")
        out << json_to_text(j);
    else
        out << j.dump(2) << "\n";
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chip-firing ideals, cellular resolutions, and their verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string graph_path, q_name, format = "json";
    app.add_option("--graph", graph_path, "graph file (JSON or text)")->required();
    app.add_option("--q", q_name, "distinguished vertex")->required();
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* gens = app.add_subcommand("gens", "generating sets of IG, MG, JG, OG");
    std::string ideal_str = "IG";
    bool all_cuts = false;
    gens->add_option("--ideal", ideal_str, "IG|MG|JG|OG")->required();
    gens->add_flag("--all-cuts", all_cuts, "use every cut, not only bonds");

    auto* betti = app.add_subcommand("betti", "Betti table shared by the four ideals");
    bool fine = false;
    betti->add_flag("--fine", fine, "include the divisor-class fine grading");

    auto* resol = app.add_subcommand("resolution", "minimal cellular free resolution");
    std::string resol_ideal = "OG", export_kind = "json";
    resol->add_option("--ideal", resol_ideal, "IG|MG|JG|OG")->required();
    resol->add_option("--export", export_kind, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* reduce = app.add_subcommand("reduce", "q-reduced representative of a divisor");
    std::string divisor_str;
    reduce->add_option("--divisor", divisor_str, "comma list name:coeff")->required();

    app.add_subcommand("greens", "Green's function matrix");

    auto* trees = app.add_subcommand("trees", "spanning tree count / enumeration");
    bool enumerate = false;
    trees->add_flag("--enumerate", enumerate, "list all trees with their orientations");

    app.add_subcommand("facets", "facets and minimal primes of Sigma_G^q");
    app.add_subcommand("dual", "Alexander dual generators of MG");

    auto* verify = app.add_subcommand("verify", "verification suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "cells|oracle|potential|grobner|all");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());  // CLI11 parses reversed vectors
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        Multigraph g = load_graph(graph_path);
        int q = g.vertex_index(q_name);
        if (gens->parsed()) {
            emit(out, gens_report(g, q, ideal_from_name(ideal_str), all_cuts), format);
        } else if (betti->parsed()) {
            emit(out, betti_report(g, q, fine), format);
        } else if (resol->parsed()) {
            if (export_kind == "dot")
                out << resolution_dot(g, q, ideal_from_name(resol_ideal));
            else
                emit(out, resolution_report(g, q, ideal_from_name(resol_ideal)), format);
        } else if (reduce->parsed()) {
            emit(out, reduce_report(g, q, parse_divisor(g, divisor_str)), format);
        } else if (app.get_subcommand("greens")->parsed()) {
            emit(out, greens_report(g, q), format);
        } else if (trees->parsed()) {
            emit(out, trees_report(g, q, enumerate), format);
        } else if (app.get_subcommand("facets")->parsed()) {
            emit(out, facets_report(g, q), format);
        } else if (app.get_subcommand("dual")->parsed()) {
            emit(out, dual_report(g, q), format);
        } else if (verify->parsed()) {
            Json j = verify_report(g, q, suite);
            emit(out, j, format);
            return j["pass"].get<bool>() ? 0 : 2;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace chipres

#ifndef CHIPRES_CLI_NO_MAIN
int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return chipres::cli_run(args, std::cout, std::cerr);
}
#endif

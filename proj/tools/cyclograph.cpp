// Command-line front end; argument parsing only, the work happens in cli::run.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclograph/cli.hpp"

namespace {

using cyclograph::Error;
using cyclograph::ErrorCode;
using cyclograph::VertexId;

VertexId parse_id(const std::string& tok, const char* flag) {
    std::size_t used = 0;
    VertexId v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (tok.empty() || used != tok.size())
        throw Error(ErrorCode::InvalidArgument, std::string(flag) + ": '" + tok + "' is not an integer vertex id");
    return v;
}

const char* describe(const std::string& command) {
    if (command == "minor") return "exact principal minor det L_w[V'] with its per-class breakdown";
    if (command == "expand") return "Cauchy-Binet expansion of the minor over |V'|-edge subsets";
    if (command == "census") return "tally of all-regular substructures on V' by class";
    if (command == "count-ab") return "alpha/beta unicyclic counts from the w5 and w5^2 determinants";
    if (command == "count-galois") return "unicyclic count from the product over Galois conjugates of w_p";
    if (command == "triangles") return "triangles and rootless trees on a 3-vertex set";
    if (command == "count4") return "the five 4-vertex substructure counts";
    if (command == "spanning-trees") return "spanning trees via Laplacian cofactors";
    return "";
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
    if (s.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hermitian Laplacian minors, decompositions and counts for oriented graphs"};
    app.require_subcommand(1);

    cyclograph::cli::RunConfig cfg;
    std::string vset_text, eset_text;
    VertexId vertex = 0;
    bool vset_given = false, eset_given = false, vertex_given = false;

    for (const auto& name : cyclograph::cli::commands()) {
        CLI::App* sub = app.add_subcommand(name, describe(name));
        sub->add_option("input", cfg.input, "graph file (text or JSON), '-' for stdin")->required();
        sub->add_option("--param", cfg.params, "root parameter: 1, -1, i, wN, wN^Q or N/Q (repeatable, comma list)")
            ->delimiter(',');
        sub->add_option("--vset", vset_text, "comma-separated vertex ids");
        sub->add_option("--output,-o", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--verify", cfg.verify, "cross-check against the substructure census");
        sub->add_flag("--force", cfg.force, "lift the edge-subset guardrail");
        if (name == "count-ab" || name == "count-galois")
            sub->add_option("--eset", eset_text, "comma-separated u:v arcs of the substructure");
        if (name == "count-galois") sub->add_option("--p", cfg.p, "odd prime")->required();
        if (name == "spanning-trees") sub->add_option("--vertex", vertex, "vertex whose row and column are deleted");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cyclograph::cli::kInputError;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    const CLI::App* sub = app.get_subcommands().front();
    auto given = [sub](const char* flag) {
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    vset_given = given("--vset");
    eset_given = given("--eset");
    vertex_given = given("--vertex");
    cfg.threads = cyclograph::cli::default_threads();

    try {
        if (vset_given) {
            std::vector<VertexId> ids;
            for (const auto& t : split(vset_text, ',')) ids.push_back(parse_id(t, "--vset"));
            cfg.vset = std::move(ids);
        }
        if (eset_given) {
            std::vector<std::pair<VertexId, VertexId>> arcs;
            for (const auto& t : split(eset_text, ',')) {
                const auto colon = t.find(':');
                if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--eset: '" + t + "' is not u:v");
                arcs.emplace_back(parse_id(t.substr(0, colon), "--eset"), parse_id(t.substr(colon + 1), "--eset"));
            }
            cfg.eset = std::move(arcs);
        }
        if (vertex_given) cfg.vertex = vertex;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cyclograph::cli::kInputError;
    }

    return cyclograph::cli::run(cfg, std::cout, std::cerr, std::cin);
}

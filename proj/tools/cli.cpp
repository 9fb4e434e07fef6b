#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchedkit.h"

namespace {

[[noreturn]] void die(int rc) {
    std::cerr << "error: " << mk_last_error() << "\n";
    std::exit(rc == MK_ERR_PARSE || rc == MK_ERR_DOMAIN || rc == MK_ERR_WORK_LIMIT ? 1 : 1);
}

void check(int rc) {
    if (rc != MK_OK) die(rc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(1);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        std::exit(1);
    }
    out << content;
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    mk_string_free(s);
    return out;
}

// A diagram argument may be a chord file ("cd" header) or a knot/tangle file.
bool looks_like_chord_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (ls >> kw) return kw == "cd" || kw == "chord";
    }
    return false;
}

bool looks_like_tangle_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string kw;
        if ((ls >> kw) && kw == "boundary") return true;
    }
    return false;
}

mk_ideal* ideal_of_file(const std::string& text, int k) {
    mk_ideal* ideal = nullptr;
    if (looks_like_chord_file(text)) {
        mk_chord_diagram* cd = nullptr;
        check(mk_cd_parse(text.c_str(), &cd));
        check(mk_cd_elementary_ideal(cd, k, &ideal));
        mk_cd_free(cd);
    } else {
        mk_knot_diagram* kd = nullptr;
        check(mk_kd_parse(text.c_str(), &kd));
        check(mk_kd_elementary_ideal(kd, k, &ideal));
        mk_kd_free(kd);
    }
    return ideal;
}

std::string ideal_display(mk_ideal* ideal) {
    int zero = 0;
    check(mk_ideal_is_zero(ideal, &zero));
    if (zero) return "0";
    std::string basis = take_string([&] {
        char* s = nullptr;
        check(mk_ideal_basis(ideal, &s));
        return s;
    }());
    std::string joined;
    std::istringstream is(basis);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (!joined.empty()) joined += ", ";
        joined += line;
    }
    return joined;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matchedkit: elementary ideals of knots from bipartite chord diagrams"};
    app.require_subcommand(1);
    long long work_limit = 0;
    app.add_option("--work-limit", work_limit, "reduction-step budget for ideal computations");

    std::string file, out_path, cuts, params, name, fraction;
    int k = 1;
    bool show_generators = false;

    auto* c_ideal = app.add_subcommand("ideal", "elementary ideal E_k of a diagram");
    c_ideal->add_option("--file", file, "chord or knot diagram file")->required();
    c_ideal->add_option("-k", k, "ideal index")->required();
    c_ideal->add_flag("--show-generators", show_generators, "also print the raw generators");

    auto* c_alex = app.add_subcommand("alexander", "Alexander polynomial (generator of E_1)");
    c_alex->add_option("--file", file, "chord or knot diagram file")->required();

    auto* c_support = app.add_subcommand("support", "support chords of a chord diagram");
    c_support->add_option("--file", file, "chord diagram file")->required();

    auto* c_thm = app.add_subcommand("theorem1", "check that t+1 is outside a nontrivial E_k");
    c_thm->add_option("--file", file, "chord diagram file")->required();
    c_thm->add_option("-k", k, "ideal index")->required();

    auto* c_rat = app.add_subcommand("rational", "even continued fraction and chord diagram of p/q");
    c_rat->add_option("fraction", fraction, "fraction p/q")->required();
    c_rat->add_option("--out", out_path, "write the chord diagram file here");

    auto* c_dup = app.add_subcommand("duplicate", "union of a tangle with its mirror image");
    c_dup->add_option("--file", file, "knot or tangle diagram file")->required();
    c_dup->add_option("--cuts", cuts, "comma-separated cut arcs (knot files)");
    c_dup->add_option("--params", params, "comma-separated twist parameters")->required();
    c_dup->add_option("--out", out_path, "write the result here");

    auto* c_cat = app.add_subcommand("catalog", "emit a named construction");
    c_cat->add_option("name", name, "catalog entry name")->required();
    c_cat->add_option("--out", out_path, "write the payload here");

    auto* c_graph = app.add_subcommand("graph", "intersection graph of a chord diagram");
    c_graph->add_option("--file", file, "chord diagram file")->required();
    c_graph->add_flag("--dot", "DOT output (the default and only format)");
    c_graph->add_option("--out", out_path, "write the graph here");

    auto* c_render = app.add_subcommand("render", "SVG drawing of a chord diagram");
    c_render->add_option("--file", file, "chord diagram file")->required();
    c_render->add_flag("--svg", "SVG output (the default and only format)");
    c_render->add_option("--out", out_path, "write the drawing here");

    auto* c_oracle = app.add_subcommand("oracle-check",
                                        "compare stencil and Wirtinger ideals of a diagram");
    c_oracle->add_option("--file", file, "chord diagram file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (work_limit > 0) check(mk_set_work_limit(work_limit));

    if (*c_ideal) {
        std::string text = read_file(file);
        mk_ideal* ideal = ideal_of_file(text, k);
        int trivial = 0;
        check(mk_ideal_is_trivial(ideal, &trivial));
        std::cout << "E_" << k << " = <" << ideal_display(ideal) << "> : "
                  << (trivial ? "TRIVIAL" : "NONTRIVIAL") << "\n";
        if (show_generators) {
            char* gens = nullptr;
            check(mk_ideal_generators(ideal, &gens));
            std::cout << "generators:\n" << take_string(gens);
        }
        mk_ideal_free(ideal);
    } else if (*c_alex) {
        std::string text = read_file(file);
        char* poly = nullptr;
        if (looks_like_chord_file(text)) {
            mk_chord_diagram* cd = nullptr;
            check(mk_cd_parse(text.c_str(), &cd));
            check(mk_cd_alexander(cd, &poly));
            mk_cd_free(cd);
        } else {
            mk_knot_diagram* kd = nullptr;
            check(mk_kd_parse(text.c_str(), &kd));
            check(mk_kd_alexander(kd, &poly));
            mk_kd_free(kd);
        }
        std::cout << take_string(poly) << "\n";
    } else if (*c_support) {
        mk_chord_diagram* cd = nullptr;
        check(mk_cd_parse(read_file(file).c_str(), &cd));
        char* ids = nullptr;
        check(mk_cd_support_chords(cd, &ids));
        std::string s = take_string(ids);
        std::cout << (s.empty() ? "(none)" : s) << "\n";
        mk_cd_free(cd);
    } else if (*c_thm) {
        mk_chord_diagram* cd = nullptr;
        check(mk_cd_parse(read_file(file).c_str(), &cd));
        int trivial = 0, member = 0;
        check(mk_cd_theorem1(cd, k, &trivial, &member));
        if (trivial)
            std::cout << "E_" << k << " TRIVIAL (t+1 exclusion vacuous)\n";
        else
            std::cout << "E_" << k << " NONTRIVIAL, t+1 " << (member ? "IS A MEMBER" : "not a member")
                      << "\n";
        mk_cd_free(cd);
    } else if (*c_rat) {
        auto slash = fraction.find('/');
        long long p = 0, q = 0;
        try {
            if (slash == std::string::npos) throw std::invalid_argument(fraction);
            p = std::stoll(fraction.substr(0, slash));
            q = std::stoll(fraction.substr(slash + 1));
        } catch (const std::exception&) {
            std::cerr << "error: expected a fraction p/q, got '" << fraction << "'\n";
            return 2;
        }
        char* terms = nullptr;
        check(mk_even_cf(p, q, &terms));
        std::cout << take_string(terms) << "\n";
        mk_chord_diagram* cd = nullptr;
        char* support_id = nullptr;
        check(mk_rational_diagram(p, q, &cd, &support_id));
        std::cout << "support chord: " << take_string(support_id) << "\n";
        char* text = nullptr;
        check(mk_cd_serialize(cd, &text));
        write_output(out_path, take_string(text));
        mk_cd_free(cd);
    } else if (*c_dup) {
        std::string text = read_file(file);
        mk_tangle* tangle = nullptr;
        if (looks_like_tangle_file(text)) {
            if (!cuts.empty()) {
                std::cerr << "error: --cuts conflicts with a tangle file (it has a boundary line)\n";
                return 2;
            }
            check(mk_tangle_parse(text.c_str(), &tangle));
        } else {
            if (cuts.empty()) {
                std::cerr << "error: knot files need --cuts\n";
                return 2;
            }
            mk_knot_diagram* kd = nullptr;
            check(mk_kd_parse(text.c_str(), &kd));
            check(mk_kd_cut(kd, cuts.c_str(), &tangle));
            mk_kd_free(kd);
        }
        mk_knot_diagram* result = nullptr;
        check(mk_tangle_duplicate(tangle, params.c_str(), &result));
        mk_tangle_free(tangle);
        char* out = nullptr;
        check(mk_kd_serialize(result, &out));
        write_output(out_path, take_string(out));
        mk_kd_free(result);
    } else if (*c_cat) {
        char *kind = nullptr, *payload = nullptr, *prov = nullptr;
        check(mk_catalog_get(name.c_str(), &kind, &payload, &prov));
        std::cout << "# " << name << " (" << take_string(kind) << "): " << take_string(prov)
                  << "\n";
        write_output(out_path, take_string(payload));
    } else if (*c_graph) {
        mk_chord_diagram* cd = nullptr;
        check(mk_cd_parse(read_file(file).c_str(), &cd));
        char* dot = nullptr;
        check(mk_cd_graph_dot(cd, &dot));
        write_output(out_path, take_string(dot));
        mk_cd_free(cd);
    } else if (*c_render) {
        mk_chord_diagram* cd = nullptr;
        check(mk_cd_parse(read_file(file).c_str(), &cd));
        char* svg = nullptr;
        check(mk_cd_render_svg(cd, &svg));
        write_output(out_path, take_string(svg));
        mk_cd_free(cd);
    } else if (*c_oracle) {
        mk_chord_diagram* cd = nullptr;
        check(mk_cd_parse(read_file(file).c_str(), &cd));
        int agree = 0;
        check(mk_cd_oracle_check(cd, &agree));
        mk_cd_free(cd);
        if (!agree) {
            std::cout << "MISMATCH: stencil and Wirtinger ideals differ\n";
            return 1;
        }
        std::cout << "OK: stencil and Wirtinger ideals agree for k = 1, 2, 3\n";
    }
    return 0;
}

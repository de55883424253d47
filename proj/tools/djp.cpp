// djp — exact computations in the Drinfeld double of the Jordan plane.
//
// Exit codes: 0 pass, 1 check failure, 2 usage/parse error, 3 I/O/schema error.

#include "CLI11.hpp"
#include "json.hpp"

#include "djp/expr.hpp"
#include "djp/homology.hpp"
#include "djp/module_json.hpp"
#include "djp/quiver.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int worker_count() {
    if (const char* env = std::getenv("DJP_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return int(std::min(hw ? hw : 1u, 8u));
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

void emit(const std::string& content, const std::string& out) {
    if (out.empty() || out == "-") std::cout << content;
    else write_file_atomic(out, content);
}

long to_int(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(what) + ": expected an integer, got '" + s + "'");
}

djp::Rational to_rational(const std::string& s, const char* what) {
    try {
        return djp::Rational::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

// "L<k>" builds the simple module of weight k; anything else is a file path
djp::FdModule resolve_module(const std::string& arg) {
    if (arg.size() >= 2 && arg[0] == 'L') {
        bool digits = true;
        for (size_t i = 1; i < arg.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(arg[i]));
        if (digits) return djp::build_simple(int(to_int(arg.substr(1), "simple label")));
    }
    return djp::load_module(arg);
}

int print_report(const djp::CheckReport& rep) {
    for (const auto& item : rep.items)
        std::cout << (item.pass ? "ok   " : "FAIL ") << item.name << '\n';
    std::cout << (rep.ok ? "PASS" : "FAIL") << " (" << rep.items.size() << " checks)\n";
    return rep.ok ? 0 : 1;
}

djp::FdModule build_from_args(const std::string& type, const std::vector<std::string>& a) {
    auto want = [&](size_t n, const char* usage) {
        if (a.size() != n) throw UsageError(std::string("module build ") + usage);
    };
    if (type == "L") {
        want(1, "L <n>");
        return djp::build_simple(int(to_int(a[0], "n")));
    }
    if (type == "T") {
        want(2, "T <n> <m>");
        return djp::build_T(int(to_int(a[0], "n")), int(to_int(a[1], "m")));
    }
    if (type == "S") {
        want(2, "S <n> <gamma>");
        return djp::build_S(int(to_int(a[0], "n")), to_rational(a[1], "gamma"));
    }
    if (type == "verma") {
        want(2, "verma <n> <depth>");
        return djp::build_verma_trunc(int(to_int(a[0], "n")), int(to_int(a[1], "depth")));
    }
    if (type == "verma2") {
        want(4, "verma2 <n> <lambda> <mu> <depth>");
        return djp::build_verma2_trunc(int(to_int(a[0], "n")), to_rational(a[1], "lambda"),
                                       to_rational(a[2], "mu"), int(to_int(a[3], "depth")));
    }
    if (type == "dual") {
        want(1, "dual <file>");
        return djp::dual(djp::load_module(a[0]));
    }
    if (type == "tensor") {
        want(2, "tensor <file> <file>");
        return djp::tensor(djp::load_module(a[0]), djp::load_module(a[1]));
    }
    throw UsageError("unknown module type '" + type +
                     "' (expected L, T, S, verma, verma2, dual, tensor)");
}

json weight_report(const djp::FdModule& m) {
    json arr = json::array();
    for (const auto& [w, sp] : djp::weight_decomposition(m).spaces)
        arr.push_back({{"weight", w}, {"dim", sp.dim()}});
    return {{"dim", m.dim}, {"weights", arr}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact computations in the Drinfeld double of the Jordan plane.\n"
        "Generator names in expressions and output: x y g gi xi u v, where\n"
        "'xi' is the ASCII name of the Cartan-like generator (Greek xi) and\n"
        "'gi' is the inverse of the group-like generator g."};
    app.require_subcommand(1);

    std::string expr_text;
    auto* nf = app.add_subcommand("nf", "print the PBW normal form of an expression");
    nf->add_option("expr", expr_text, "expression, e.g. \"v*x - x*v\"")->required();

    int hopf_degree = 5, hopf_samples = 200;
    unsigned hopf_seed = 1;
    auto* hopf = app.add_subcommand("hopf-check",
                                    "verify the defining relations and Hopf axioms");
    hopf->add_option("--degree", hopf_degree, "max letters in sampled monomials");
    hopf->add_option("--samples", hopf_samples, "number of random monomials");
    hopf->add_option("--seed", hopf_seed, "RNG seed");

    auto* module = app.add_subcommand("module", "build or verify module files");
    module->require_subcommand(1);
    std::string build_type, build_out = "-";
    std::vector<std::string> build_args;
    auto* mbuild = module->add_subcommand(
        "build", "L n | T n m | S n gamma | verma n depth | verma2 n lambda mu depth | "
                 "dual FILE | tensor FILE FILE");
    mbuild->add_option("type", build_type)->required();
    mbuild->add_option("args", build_args, "constructor arguments");
    mbuild->add_option("-o,--out", build_out, "output file (default: stdout)");
    std::string verify_path;
    auto* mverify = module->add_subcommand("verify", "check the defining relations");
    mverify->add_option("file", verify_path)->required();

    std::string weights_path;
    auto* weights = app.add_subcommand("weights", "weight-space decomposition as JSON");
    weights->add_option("file", weights_path)->required();
    std::string hw_path;
    auto* hw = app.add_subcommand("hw", "highest weight and its rank as JSON");
    hw->add_option("file", hw_path)->required();
    std::string hws_path;
    auto* hws = app.add_subcommand("hw-series", "highest-weight series subquotients");
    hws->add_option("file", hws_path)->required();

    std::string hom_src, hom_tgt;
    auto* hom = app.add_subcommand("hom", "dimension of the space of module maps");
    hom->add_option("source", hom_src)->required();
    hom->add_option("target", hom_tgt)->required();

    std::string ext_quot, ext_sub;
    auto* ext = app.add_subcommand(
        "ext", "dim Ext^1(QUOT, SUB); arguments are files or labels like L2");
    ext->add_option("quot", ext_quot)->required();
    ext->add_option("sub", ext_sub)->required();

    std::string socle_path, socle_out = "-";
    auto* soc = app.add_subcommand("socle", "largest semisimple submodule, as module JSON");
    soc->add_option("file", socle_path)->required();
    soc->add_option("-o,--out", socle_out, "output file (default: stdout)");

    std::string factors_path;
    auto* factors = app.add_subcommand("factors",
                                       "composition factor weights as a JSON array");
    factors->add_option("file", factors_path)->required();

    std::string indec_path;
    auto* indec = app.add_subcommand("indec", "indecomposability: true/false/undetermined");
    indec->add_option("file", indec_path)->required();

    int quiver_max = 6;
    std::string quiver_dot;
    bool quiver_zero_loop = false;
    auto* quiver = app.add_subcommand("quiver", "Ext table between simples, optional DOT");
    quiver->add_option("--max", quiver_max, "largest simple weight")->required();
    quiver->add_option("--dot", quiver_dot, "write DOT to this file");
    quiver->add_flag("--loop-at-zero", quiver_zero_loop,
                     "force an arrow loop at vertex 0 (the computed table has none)");

    int wild_max = 6;
    auto* wild = app.add_subcommand("wildness", "representation-type report as JSON");
    wild->add_option("--max", wild_max, "largest simple weight")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (*nf) {
            std::cout << djp::parse_expression(expr_text).str() << '\n';
            return 0;
        }
        if (*hopf) {
            djp::CheckReport rep = djp::verify_presentation();
            djp::CheckReport h = djp::hopf_suite(hopf_degree, hopf_samples, hopf_seed);
            for (auto& item : h.items) rep.add(item.name, item.pass);
            return print_report(rep);
        }
        if (*mbuild) {
            djp::FdModule m = build_from_args(build_type, build_args);
            emit(djp::module_to_json(m) + "\n", build_out);
            return 0;
        }
        if (*mverify) return print_report(djp::verify_module(djp::load_module(verify_path)));
        if (*weights) {
            std::cout << weight_report(djp::load_module(weights_path)).dump(1) << '\n';
            return 0;
        }
        if (*hw) {
            djp::HwData d = djp::hw_data(djp::load_module(hw_path));
            std::cout << json{{"hw", d.hw}, {"hw_rank", d.hw_rank}}.dump() << '\n';
            return 0;
        }
        if (*hws) {
            json arr = json::array();
            for (const auto& q : djp::hw_series(djp::load_module(hws_path))) {
                djp::HwData d = djp::hw_data(q);
                arr.push_back({{"dim", q.dim}, {"hw", d.hw}, {"hw_rank", d.hw_rank}});
            }
            std::cout << arr.dump(1) << '\n';
            return 0;
        }
        if (*hom) {
            std::cout << djp::hom_space(resolve_module(hom_src), resolve_module(hom_tgt)).dim()
                      << '\n';
            return 0;
        }
        if (*ext) {
            std::cout << djp::ext1(resolve_module(ext_quot), resolve_module(ext_sub)).dimension
                      << '\n';
            return 0;
        }
        if (*soc) {
            emit(djp::module_to_json(djp::socle(djp::load_module(socle_path)).module) + "\n",
                 socle_out);
            return 0;
        }
        if (*factors) {
            json arr = djp::composition_factors(djp::load_module(factors_path));
            std::cout << arr.dump() << '\n';
            return 0;
        }
        if (*indec) {
            std::cout << djp::tri_name(djp::is_indecomposable(djp::load_module(indec_path)))
                      << '\n';
            return 0;
        }
        if (*quiver) {
            djp::Quiver q = djp::gabriel_quiver(quiver_max, worker_count());
            if (quiver_zero_loop) q = djp::force_zero_loop(q);
            json arr = json::array();
            for (const auto& [ij, mult] : q.arrows)
                arr.push_back({{"from", ij.first}, {"to", ij.second}, {"mult", mult}});
            std::cout << json{{"max_n", q.max_n}, {"arrows", arr}}.dump(1) << '\n';
            if (!quiver_dot.empty()) write_file_atomic(quiver_dot, djp::to_dot(q));
            return 0;
        }
        if (*wild) {
            std::cout << djp::report_json(
                             djp::representation_type_report(wild_max, worker_count()))
                      << '\n';
            return 0;
        }
    } catch (const djp::ParseError& e) {
        std::cerr << "parse error at offset " << e.position << ": " << e.what() << '\n';
        return 2;
    } catch (const djp::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "check failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

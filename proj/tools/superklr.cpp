// Command line surface for the link homology engine: homology tables,
// Jones/Euler cross-checks, even-Khovanov comparison, reduced homology and
// the diagrammatic relation suite.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>

#include "superklr/pd.hpp"
#include "superklr/pipeline.hpp"

using namespace superklr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

struct LinkOptions {
    std::string braid_text;
    std::string pd_path;
    std::string coeff = "Q";
    std::vector<std::string> t_signs;
    std::vector<std::string> r_signs;
    std::uint64_t seed_signs = 0;
    bool json = false;
};

void add_link_options(CLI::App* cmd, LinkOptions& opt) {
    cmd->add_option("--braid", opt.braid_text, "braid word 'k: a1 a2 ...' (ai in +-1..+-(k-1))");
    cmd->add_option("--pd", opt.pd_path, "PD code file (JSON list of {over, under, sign})");
    cmd->add_option("--coeff", opt.coeff, "coefficients: Z, Q, F2 or Fp:<p>")->default_val("Q");
    cmd->add_option("--t", opt.t_signs, "sign t_ij as 'i:j:-1' (repeatable)");
    cmd->add_option("--r", opt.r_signs, "sign r_i as 'i:-1' (repeatable)");
    cmd->add_option("--seed-signs", opt.seed_signs,
                    "selects among admissible global sign assignments");
    cmd->add_flag("--json", opt.json, "machine readable output");
}

ScalarConfig parse_scalars(const LinkOptions& opt) {
    ScalarConfig sc;
    for (const auto& s : opt.t_signs) {
        int i, j, v;
        if (std::sscanf(s.c_str(), "%d:%d:%d", &i, &j, &v) != 3)
            throw std::invalid_argument("--t expects i:j:+1 or i:j:-1");
        sc.set_t(i, j, v);
    }
    for (const auto& s : opt.r_signs) {
        int i, v;
        if (std::sscanf(s.c_str(), "%d:%d", &i, &v) != 2)
            throw std::invalid_argument("--r expects i:+1 or i:-1");
        sc.set_r(i, v);
    }
    return sc;
}

CoefficientField parse_coeff(const std::string& s) {
    if (s == "Z" || s == "Q") return CoefficientField::rationals();
    if (s == "F2") return CoefficientField::mod(2);
    if (s.rfind("Fp:", 0) == 0) return CoefficientField::mod(std::stoll(s.substr(3)));
    throw std::invalid_argument("--coeff expects Z, Q, F2 or Fp:<p>");
}

RunConfig make_config(const LinkOptions& opt) {
    RunConfig cfg;
    if (!opt.braid_text.empty()) {
        cfg.braid = Braid::parse(opt.braid_text);
        cfg.link_name = opt.braid_text;
    } else if (!opt.pd_path.empty()) {
        std::ifstream in(opt.pd_path);
        if (!in) throw std::invalid_argument("cannot open PD file: " + opt.pd_path);
        nlohmann::json j;
        in >> j;
        cfg.braid = pd_to_braid(PdCode::from_json(j));
        cfg.link_name = opt.pd_path;
    } else {
        throw std::invalid_argument("one of --braid or --pd is required");
    }
    cfg.scalars = parse_scalars(opt);
    cfg.coeff = parse_coeff(opt.coeff);
    cfg.sign_seed = opt.seed_signs;
    return cfg;
}

void print_homology(const RunResult& r) {
    std::cout << "link: " << r.link_name << "\nwrithe: " << r.writhe << "\n";
    std::cout << "integral homology:\n" << r.homology.str();
    std::cout << "poincare: " << r.poincare_poly.str() << "\n";
    std::cout << "euler: " << r.euler.str() << "\n";
    std::cout << "jones: " << r.jones.str() << "\n";
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"superklr: an exact link homology engine over the super KLR calculus"};
    app.require_subcommand(1);

    LinkOptions hopt, jopt, copt, ropt;
    auto* cmd_homology = app.add_subcommand("homology", "integral homology table of a link");
    add_link_options(cmd_homology, hopt);
    auto* cmd_jones = app.add_subcommand(
        "jones-check", "graded Euler characteristic against the Kauffman bracket");
    add_link_options(cmd_jones, jopt);
    auto* cmd_compare =
        app.add_subcommand("compare-even", "degreewise comparison with even Khovanov homology");
    add_link_options(cmd_compare, copt);
    auto* cmd_reduce =
        app.add_subcommand("reduce", "reduced homology and the (q + 1/q) factorization");
    add_link_options(cmd_reduce, ropt);

    int rel_rank = 4, rel_size = 6;
    bool rel_json = false;
    std::vector<std::string> rel_t;
    auto* cmd_relations =
        app.add_subcommand("verify-relations", "machine verification of the diagram relations");
    cmd_relations->add_option("--rank", rel_rank, "number of colors")->default_val(4);
    cmd_relations->add_option("--max-size", rel_size, "bound on |nu|")->default_val(6);
    cmd_relations->add_option("--t", rel_t, "sign t_ij as 'i:j:-1' (repeatable)");
    cmd_relations->add_flag("--json", rel_json, "machine readable output");

    CLI11_PARSE(app, argc, argv);

    if (cmd_homology->parsed()) {
        return run_guarded([&] {
            auto r = run_link(make_config(hopt));
            if (hopt.json)
                std::cout << result_to_json(r).dump(2) << "\n";
            else
                print_homology(r);
            return kExitOk;
        });
    }
    if (cmd_jones->parsed()) {
        return run_guarded([&] {
            auto r = run_link(make_config(jopt));
            bool pass = r.checks.euler_equals_jones;
            if (jopt.json) {
                nlohmann::json j;
                j["link"] = r.link_name;
                j["euler"] = laurent_to_json(r.euler);
                j["jones"] = laurent_to_json(r.jones);
                j["pass"] = pass;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "euler: " << r.euler.str() << "\njones: " << r.jones.str() << "\n"
                          << (pass ? "pass" : "FAIL") << "\n";
            }
            return pass ? kExitOk : kExitInvariant;
        });
    }
    if (cmd_compare->parsed()) {
        return run_guarded([&] {
            auto r = run_link(make_config(copt));
            if (copt.json) {
                nlohmann::json j;
                j["link"] = r.link_name;
                j["equal_over_Z"] = r.compare.equal_over_Z;
                j["equal_over_Q"] = r.compare.equal_over_Q;
                j["equal_mod_2"] = r.compare.equal_mod_2;
                j["integral_diffs"] = r.compare.integral_diffs;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "comparison with even Khovanov homology\n" << r.compare.str() << "\n";
            }
            return r.compare.equal_mod_2 ? kExitOk : kExitInvariant;
        });
    }
    if (cmd_reduce->parsed()) {
        return run_guarded([&] {
            auto r = run_link(make_config(ropt));
            bool pass = r.checks.reduced_factorization;
            if (ropt.json) {
                nlohmann::json j;
                j["link"] = r.link_name;
                j["reduced_poincare"] = poincare_to_json(r.reduced_poincare);
                j["poincare"] = poincare_to_json(r.poincare_poly);
                j["factorization"] = pass;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "reduced poincare: " << r.reduced_poincare.str() << "\n"
                          << "factorization H = q H_red + q^-1 H_red: "
                          << (pass ? "pass" : "FAIL") << "\n";
            }
            return pass ? kExitOk : kExitInvariant;
        });
    }
    if (cmd_relations->parsed()) {
        return run_guarded([&] {
            ScalarConfig sc;
            for (const auto& s : rel_t) {
                int i, j, v;
                if (std::sscanf(s.c_str(), "%d:%d:%d", &i, &j, &v) != 3)
                    throw std::invalid_argument("--t expects i:j:+1 or i:j:-1");
                sc.set_t(i, j, v);
            }
            auto rep = verify_relations(rel_rank, rel_size, sc);
            if (rel_json) {
                nlohmann::json j;
                j["entries"] = relation_report_json(rep);
                j["failures"] = rep.failures();
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& e : rep.entries)
                    if (!e.pass) std::cout << "FAIL " << e.relation << " " << e.instance << "\n";
                std::cout << rep.entries.size() << " instances, " << rep.failures()
                          << " failures\n";
            }
            return rep.failures() == 0 ? kExitOk : kExitInvariant;
        });
    }
    return kExitUsage;
}

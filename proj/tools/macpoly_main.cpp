// macpoly: exact computation and verification of permuted-basement,
// nonsymmetric, and partially symmetric Macdonald polynomials.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "macpoly/json_io.hpp"
#include "macpoly/verify.hpp"

using namespace macpoly;

namespace {

void print_poly(const XPoly& f, bool as_json, bool as_latex) {
    if (as_json)
        std::cout << to_json(f).dump() << "\n";
    else if (as_latex)
        std::cout << latex(f) << "\n";
    else
        std::cout << f.str() << "\n";
}

int report_exit(const VerifyReport& rep, bool as_json) {
    if (as_json) {
        std::cout << rep.to_json().dump() << "\n";
    } else {
        std::cout << rep.identity_id << " " << rep.instance << ": "
                  << (rep.holds ? "holds" : "fails") << "\n";
        if (rep.witness) {
            std::cout << "  lhs  = " << rep.witness->lhs.str() << "\n";
            std::cout << "  rhs  = " << rep.witness->rhs.str() << "\n";
            std::cout << "  diff = " << rep.witness->difference.str() << "\n";
        }
    }
    return rep.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Macdonald polynomial computations and identity verification"};
    app.require_subcommand(1);

    std::string mu_s, lambda_s, gamma_s, basement_s, pi1_s, pi2_s;
    int n_arg = 0, m_arg = 0;
    bool as_json = false, as_latex = false, with_stats = false;

    // compute e | compute p
    auto* compute = app.add_subcommand("compute", "compute a Macdonald polynomial");
    compute->require_subcommand(1);
    auto* comp_e = compute->add_subcommand("e", "permuted basement E_mu^pi");
    comp_e->add_option("--mu", mu_s, "composition, comma-separated")->required();
    comp_e->add_option("--basement", basement_s, "basement permutation (default identity)");
    comp_e->add_flag("--json", as_json);
    comp_e->add_flag("--latex", as_latex);
    auto* comp_p = compute->add_subcommand("p", "partially symmetric P_{lambda|gamma}");
    comp_p->add_option("--lambda", lambda_s, "partition, comma-separated (may be empty)");
    comp_p->add_option("--gamma", gamma_s, "composition, comma-separated (may be empty)");
    comp_p->add_flag("--json", as_json);
    comp_p->add_flag("--latex", as_latex);

    // fillings
    auto* fill = app.add_subcommand("fillings", "enumerate non-attacking fillings");
    fill->add_option("--mu", mu_s)->required();
    fill->add_option("--basement", basement_s);
    fill->add_flag("--stats", with_stats, "print maj/inv/coinv statistics per filling");
    fill->add_flag("--json", as_json);
    fill->add_flag("--latex", as_latex, "emit TikZ pictures");

    // verify <identity>
    auto* verify = app.add_subcommand("verify", "check one identity instance");
    verify->require_subcommand(1);
    auto* v_cl = verify->add_subcommand("cl", "Concha-Lapointe identity");
    v_cl->add_option("--lambda", lambda_s);
    v_cl->add_option("--gamma", gamma_s);
    v_cl->add_option("--n", n_arg)->required();
    auto* v_comp = verify->add_subcommand("complement", "permuted basement complement identity");
    v_comp->add_option("--mu", mu_s)->required();
    v_comp->add_option("--pi1", pi1_s, "permutation of [1,m], one-line");
    v_comp->add_option("--pi2", pi2_s, "permutation of [m+1,n], one-line");
    bool allow_empty_pi2 = false;
    v_comp->add_flag("--allow-empty-pi2", allow_empty_pi2,
                     "accept an empty pi2 (m = n): the parameter-inversion degeneration");
    auto* v_kl = verify->add_subcommand("kl", "Kazhdan-Lusztig fixedness");
    v_kl->add_option("--lambda", lambda_s);
    v_kl->add_option("--gamma", gamma_s);
    v_kl->add_option("--n", n_arg)->required();
    auto* v_hhl = verify->add_subcommand("hhl", "combinatorial formula vs Hecke definition");
    v_hhl->add_option("--mu", mu_s)->required();
    v_hhl->add_option("--basement", basement_s);
    auto* v_eig = verify->add_subcommand("eigen", "Cherednik eigenvalue equation");
    v_eig->add_option("--mu", mu_s)->required();
    v_eig->add_option("--m", m_arg)->required();
    auto* v_comb = verify->add_subcommand("comb", "combinatorial lemma bundle");
    v_comb->add_option("--mu", mu_s)->required();
    v_comb->add_option("--m", m_arg)->required();
    for (auto* sc : {v_cl, v_comp, v_kl, v_hhl, v_eig, v_comb}) sc->add_flag("--json", as_json);

    // suite
    auto* suite = app.add_subcommand("suite", "sweep all identities within bounds");
    SweepBounds bounds;
    std::string basement_mode = "all";
    bool inject_fault = false;
    suite->add_option("--n-max", bounds.n_max);
    suite->add_option("--deg-max", bounds.degree_max);
    suite->add_option("--seed", bounds.seed);
    suite->add_option("--samples", bounds.sample_count);
    suite->add_option("--basements", basement_mode, "all | concatenated | sampled");
    suite->add_flag("--inject-fault", inject_fault,
                    "negative control: perturb one coefficient by +1");

    try {
        app.parse(argc, argv);

        if (comp_e->parsed()) {
            Composition mu = Composition::parse(mu_s);
            Perm pi = basement_s.empty() ? Perm::identity(1, mu.size()) : Perm::parse(basement_s);
            print_poly(hhl_polynomial(mu, pi), as_json, as_latex);
            return 0;
        }
        if (comp_p->parsed()) {
            Composition lambda = Composition::parse(lambda_s);
            Composition gamma = Composition::parse(gamma_s);
            print_poly(partial_P(lambda, gamma, lambda.size() + gamma.size()), as_json, as_latex);
            return 0;
        }
        if (fill->parsed()) {
            Composition mu = Composition::parse(mu_s);
            Perm pi = basement_s.empty() ? Perm::identity(1, mu.size()) : Perm::parse(basement_s);
            auto fillings = enumerate_naf(mu, pi);
            if (as_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const AugFilling& f : fillings) {
                    nlohmann::json j{{"values", f.cell_values()},
                                     {"basement", f.basement().str()}};
                    if (with_stats) {
                        FillingStats st = filling_stats(f);
                        j["stats"] = {{"maj", st.maj},           {"maj_prime", st.maj_prime},
                                      {"inv", st.inv},           {"coinv", st.coinv},
                                      {"coinv_prime", st.coinv_prime},
                                      {"inv_pairs", st.inv_set_size}};
                    }
                    arr.push_back(j);
                }
                std::cout << arr.dump() << "\n";
            } else {
                for (const AugFilling& f : fillings) {
                    if (as_latex)
                        std::cout << latex_tikz(f);
                    else
                        std::cout << f.str();
                    if (with_stats) {
                        FillingStats st = filling_stats(f);
                        std::cout << "maj=" << st.maj << " maj'=" << st.maj_prime
                                  << " |Inv|=" << st.inv_set_size << " inv=" << st.inv
                                  << " coinv=" << st.coinv << " coinv'=" << st.coinv_prime
                                  << "\n";
                    }
                    std::cout << "\n";
                }
                std::cout << fillings.size() << " filling(s)\n";
            }
            return 0;
        }
        if (v_cl->parsed())
            return report_exit(verify_cl(Composition::parse(lambda_s), Composition::parse(gamma_s),
                                         n_arg),
                               as_json);
        if (v_comp->parsed()) {
            Perm pi1 = pi1_s.empty() ? Perm() : Perm::parse(pi1_s);
            Perm pi2 = pi2_s.empty() ? Perm() : Perm::parse(pi2_s);
            if (pi2.empty() && !allow_empty_pi2)
                throw CLI::ValidationError("--pi2",
                                           "empty pi2 requires --allow-empty-pi2 (m = n case)");
            return report_exit(verify_complement(Composition::parse(mu_s), pi1, pi2), as_json);
        }
        if (v_kl->parsed())
            return report_exit(verify_kl(Composition::parse(lambda_s), Composition::parse(gamma_s),
                                         n_arg),
                               as_json);
        if (v_hhl->parsed()) {
            Composition mu = Composition::parse(mu_s);
            Perm pi = basement_s.empty() ? Perm::identity(1, mu.size()) : Perm::parse(basement_s);
            return report_exit(verify_hhl_vs_hecke(mu, pi), as_json);
        }
        if (v_eig->parsed())
            return report_exit(verify_eigen(Composition::parse(mu_s), m_arg), as_json);
        if (v_comb->parsed())
            return report_exit(verify_combinatorial(Composition::parse(mu_s), m_arg), as_json);
        if (suite->parsed()) {
            if (basement_mode == "all")
                bounds.basement_mode = SweepBounds::BasementMode::all;
            else if (basement_mode == "concatenated")
                bounds.basement_mode = SweepBounds::BasementMode::concatenated_only;
            else if (basement_mode == "sampled")
                bounds.basement_mode = SweepBounds::BasementMode::sampled;
            else
                throw CLI::ValidationError("--basements", "expected all|concatenated|sampled");
            SuiteSummary summary = run_suite(bounds, &std::cout, inject_fault);
            std::cerr << "suite: " << summary.total_instances << " instances, "
                      << summary.total_failures << " failures, " << summary.elapsed_seconds
                      << " s\n";
            return summary.exit_code();
        }
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

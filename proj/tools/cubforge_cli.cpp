// cubforge: exact construction, transformation, reduction, and verification
// of positive symmetric cubature rules on the simplex and the sphere.
//
// Exit codes: 0 success/verified, 1 verification or positivity failure,
// 2 input error.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cubforge/constructor.hpp"
#include "cubforge/design.hpp"
#include "cubforge/embedding.hpp"
#include "cubforge/identity.hpp"
#include "cubforge/report.hpp"
#include "cubforge/rule_io.hpp"
#include "cubforge/threading.hpp"
#include "cubforge/verification.hpp"
#include "cubforge/victoir.hpp"

using namespace cubforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;

WeightExponent parse_gamma(const std::string& text) {
    return WeightExponent(parse_rational(text));
}

std::string default_data_dir() {
    if (const char* env = std::getenv("CUBFORGE_DATA")) return env;
    return "data";
}

void print_solution(const SolveResult& result) {
    std::cout << "a = " << result.a.str() << "\n";
    for (std::size_t i = 0; i < result.lambdas.size(); ++i)
        std::cout << "lambda_" << (i + 1) << " = " << result.lambdas[i].str() << "\n";
    if (result.rule) {
        std::cout << "nodes: " << result.rule->node_count().get_str() << "\n";
        std::cout << "positivity: positive (zero-weight orbits dropped)\n";
    } else {
        std::cout << "positivity: NOT positive; negative weight slots:";
        for (int slot : result.negative_slots) std::cout << " " << slot;
        std::cout << "\n";
    }
}

// orbits whose shape a design of block size k on v = d+1 points can replace
std::vector<std::size_t> matching_orbits(const CubatureRule& rule, int block_size) {
    std::vector<std::size_t> matches;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        const auto& classes = rule.nodes()[i].point.value_classes();
        if (classes.size() > 2) continue;
        for (const auto& c : classes)
            if (c.count == block_size && !c.value.is_zero()) {
                matches.push_back(i);
                break;
            }
    }
    return matches;
}

std::vector<std::size_t> matching_sign_orbits(const CubatureRule& rule, int columns) {
    std::vector<std::size_t> matches;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        const auto& point = rule.nodes()[i].point;
        if (is_signed_group(point.group()) && !is_podal_group(point.group()) &&
            point.tau() == columns)
            matches.push_back(i);
    }
    return matches;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact positive cubature rules on the simplex and sphere"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: hardware)");

    // --- construct ---
    auto* construct = app.add_subcommand("construct", "solve a weight system");
    int degree = 4, c_d = 3, c_p = -1, c_m = -1;
    std::string c_gamma = "0", c_a, c_family, c_out;
    std::vector<int> c_ks;
    bool c_float = false;
    construct->add_option("--degree", degree, "4 or 5")->check(CLI::IsMember({4, 5}));
    construct->add_option("--gamma", c_gamma, "weight exponent, e.g. 0 or -1/2");
    construct->add_option("--d", c_d, "simplex dimension d")->required();
    construct->add_option("--k", c_ks, "orbit classes k_1,k_2,...")->delimiter(',');
    construct->add_option("--p", c_p, "number of unit entries in the off-family point");
    construct->add_option("--a", c_a, "free parameter (exact scalar string)");
    construct->add_option("--family", c_family, "closed-form parameter family id");
    construct->add_option("--m", c_m, "family parameter m (last orbit class)");
    construct->add_option("--out", c_out, "write the rule file here");
    construct->add_flag("--float", c_float, "add approximate decimal weights");

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "check exactness of a rule file");
    std::string v_file;
    int v_at = -1;
    bool v_monomials = false, v_partitions = false;
    verify->add_option("rule", v_file, "rule file")->required();
    verify->add_option("--at", v_at, "check at this exactness instead of the stated one");
    verify->add_flag("--monomials", v_monomials, "force the full monomial basis");
    verify->add_flag("--partitions", v_partitions, "force the invariant route");

    // --- to-sphere / to-simplex ---
    auto* tosphere = app.add_subcommand("to-sphere", "lift a simplex rule to the sphere");
    std::string ts_file, ts_out;
    tosphere->add_option("rule", ts_file)->required();
    tosphere->add_option("--out", ts_out)->required();
    auto* tosimplex =
        app.add_subcommand("to-simplex", "project a sign-invariant sphere rule back");
    std::string tx_file, tx_out;
    tosimplex->add_option("rule", tx_file)->required();
    tosimplex->add_option("--out", tx_out)->required();

    // --- reduce ---
    auto* reduce = app.add_subcommand("reduce", "node reductions");
    std::string r_file, r_out;
    std::vector<std::string> r_designs, r_oas;
    bool r_antipodal = false;
    long r_orbit = -1;
    reduce->add_option("rule", r_file)->required();
    reduce->add_option("--design", r_designs, "design file to substitute");
    reduce->add_option("--oa", r_oas, "orthogonal array file to substitute");
    reduce->add_flag("--antipodal", r_antipodal, "halve a centrally symmetric rule");
    reduce->add_option("--orbit", r_orbit, "assign to this orbit index only");
    reduce->add_option("--out", r_out, "write the reduced rule here");

    // --- embed ---
    auto* embed = app.add_subcommand("embed", "extract the isometric embedding");
    std::string e_file;
    embed->add_option("rule", e_file)->required();

    // --- identity ---
    auto* identity = app.add_subcommand("identity", "power-sum identities");
    std::string i_check, i_from_rule, i_out;
    identity->add_option("--check", i_check, "built-in name or identity file");
    identity->add_option("--from-rule", i_from_rule, "derive from an index-2t rule file");
    identity->add_option("--out", i_out, "write the identity file here");

    // --- obstruct ---
    auto* obstruct = app.add_subcommand("obstruct", "index-6 obstruction report");
    std::string o_gamma = "0";
    obstruct->add_option("--gamma", o_gamma, "weight exponent");

    // --- search ---
    auto* search = app.add_subcommand("search", "survey positive rules");
    int s_degree = 4, s_dmin = 3, s_dmax = 17;
    std::string s_gamma = "0";
    std::vector<std::string> s_families, s_grid;
    search->add_option("--degree", s_degree)->check(CLI::IsMember({4, 5}));
    search->add_option("--gamma", s_gamma);
    search->add_option("--dmin", s_dmin);
    search->add_option("--dmax", s_dmax);
    search->add_option("--families", s_families)->delimiter(',');
    search->add_option("--a-grid", s_grid, "extra parameter values")->delimiter(',');

    // --- report ---
    auto* report_cmd = app.add_subcommand("report", "run the full reproduction report");
    std::string rp_out, rp_data = default_data_dir();
    report_cmd->add_option("--out", rp_out, "also write the report here");
    report_cmd->add_option("--data", rp_data, "bundled data directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            WeightExponent gamma = parse_gamma(c_gamma);
            if (c_p < 0) c_p = c_d;  // the surveys default to p = d
            std::vector<int> ks = c_ks;
            if (ks.empty()) {
                if (c_m < 0) throw std::invalid_argument("need --k or --m");
                // families over the (d+1,1,3,m) classes carry a "u3-" prefix
                int third = c_family.rfind("u3-", 0) == 0 ? 3 : 2;
                ks = degree == 4 ? std::vector<int>{c_d + 1, 1, third, c_m}
                                 : std::vector<int>{c_d + 1, 1, 2, 3, c_m};
            }
            SolveResult result;
            if (degree == 4) {
                if (ks.size() != 4) throw std::invalid_argument("degree 4 needs 4 classes");
                ExactScalar a;
                if (!c_a.empty())
                    a = ExactScalar::parse(c_a);
                else if (!c_family.empty())
                    a = candidate_a(c_family, c_d, c_m < 0 ? ks[3] : c_m, c_p);
                else
                    throw std::invalid_argument("need --a or --family");
                result = solve_degree4({c_d, gamma, {ks[0], ks[1], ks[2], ks[3]}, c_p, a});
            } else {
                if (ks.size() != 5) throw std::invalid_argument("degree 5 needs 5 classes");
                result = solve_degree5(
                    {c_d, gamma, {ks[0], ks[1], ks[2], ks[3], ks[4]}, c_p});
            }
            print_solution(result);
            if (!result.rule) return kExitVerifyFailure;
            VerifyReport check = verify_rule(*result.rule, VerifyMethod::Auto, threads);
            std::cout << "verification: " << check.summary() << "\n";
            if (!c_out.empty()) {
                save_rule(*result.rule, c_out, c_float);
                std::cout << "wrote " << c_out << "\n";
            }
            return check.pass ? kExitOk : kExitVerifyFailure;
        }

        if (*verify) {
            CubatureRule rule = load_rule(v_file);
            VerifyMethod method = v_monomials ? VerifyMethod::Monomials
                                  : v_partitions ? VerifyMethod::Partitions
                                                 : VerifyMethod::Auto;
            VerifyReport check;
            if (v_at < 0) {
                check = verify_rule(rule, method, threads);
            } else if (rule.exactness().kind == Exactness::Kind::Index) {
                check = verify_index_exactness(rule, v_at, method, threads);
            } else {
                check = verify_degree_exactness(rule, v_at, method, threads);
            }
            std::cout << check.summary() << "\n";
            return check.pass ? kExitOk : kExitVerifyFailure;
        }

        if (*tosphere) {
            CubatureRule rule = load_rule(ts_file);
            if (rule.exactness().kind == Exactness::Kind::Degree)
                rule = degree_to_index(rule);
            CubatureRule sphere = simplex_to_sphere(rule);
            save_rule(sphere, ts_out);
            std::cout << "degree-" << sphere.exactness().value << " sphere rule with "
                      << sphere.node_count().get_str() << " nodes -> " << ts_out << "\n";
            return kExitOk;
        }

        if (*tosimplex) {
            CubatureRule sphere = load_rule(tx_file);
            CubatureRule rule = sphere_to_simplex(sphere);
            save_rule(rule, tx_out);
            std::cout << rule.exactness().str() << " simplex rule with "
                      << rule.node_count().get_str() << " nodes -> " << tx_out << "\n";
            return kExitOk;
        }

        if (*reduce) {
            CubatureRule rule = load_rule(r_file);
            if (r_antipodal) {
                rule = antipodal_reduce(rule);
                std::cout << "antipodal reduction: " << rule.node_count().get_str()
                          << " nodes, " << rule.exactness().str() << "\n";
            }
            for (const auto& path : r_designs) {
                CombinatorialDesign design = load_design(path);
                std::vector<std::size_t> targets =
                    r_orbit >= 0 ? std::vector<std::size_t>{static_cast<std::size_t>(r_orbit)}
                                 : matching_orbits(rule, design.k());
                if (targets.empty())
                    throw std::invalid_argument("no orbit matches block size " +
                                                std::to_string(design.k()));
                std::map<std::size_t, CombinatorialDesign> assignment;
                for (std::size_t t : targets) assignment.emplace(t, design);
                rule = victoir_simplex(rule, assignment);
                std::cout << "design " << path << ": " << rule.node_count().get_str()
                          << " nodes\n";
            }
            for (const auto& path : r_oas) {
                OrthogonalArray oa = load_oa(path);
                std::vector<std::size_t> targets =
                    r_orbit >= 0 ? std::vector<std::size_t>{static_cast<std::size_t>(r_orbit)}
                                 : matching_sign_orbits(rule, oa.columns());
                if (targets.empty())
                    throw std::invalid_argument("no sign orbit has tau = " +
                                                std::to_string(oa.columns()));
                std::map<std::size_t, OrthogonalArray> assignment;
                for (std::size_t t : targets) assignment.emplace(t, oa);
                rule = victoir_sphere(rule, assignment);
                std::cout << "array " << path << ": " << rule.node_count().get_str()
                          << " nodes\n";
            }
            if (!r_out.empty()) {
                save_rule(rule, r_out);
                std::cout << "wrote " << r_out << "\n";
            }
            return kExitOk;
        }

        if (*embed) {
            CubatureRule rule = load_rule(e_file);
            if (rule.exactness().kind == Exactness::Kind::Degree) {
                rule = antipodal_reduce(rule);
                std::cout << "reduced to " << rule.exactness().str() << " with "
                          << rule.node_count().get_str() << " nodes\n";
            }
            EmbeddingSpec spec = extract_embedding(rule);
            std::cout << spec.str() << "\n";
            for (const auto& form : spec.forms)
                std::cout << "  scale " << form.scale.str() << " on "
                          << form.point.str() << "\n";
            std::string witness = certify_embedding(spec);
            if (witness.empty()) {
                std::cout << "certificate: exact\n";
                return kExitOk;
            }
            std::cout << "certificate FAILED: " << witness << "\n";
            return kExitVerifyFailure;
        }

        if (*identity) {
            if (!i_check.empty()) {
                SymmetricIdentity id;
                try {
                    id = builtin_identity(i_check);
                } catch (const std::invalid_argument&) {
                    std::string path = i_check;
                    if (!std::filesystem::exists(path))
                        path = default_data_dir() + "/" + i_check + ".identity";
                    id = load_identity(path);
                }
                std::cout << id.str() << "\n";
                IdentityCheckResult result = identity_check(id);
                std::cout << "check: " << result.summary() << "\n";
                return result.pass ? kExitOk : kExitVerifyFailure;
            }
            if (!i_from_rule.empty()) {
                CubatureRule rule = load_rule(i_from_rule);
                if (rule.exactness().kind == Exactness::Kind::Degree)
                    rule = antipodal_reduce(rule);
                SymmetricIdentity id = rule_to_identity(rule);
                std::cout << id.str() << "\n";
                std::cout << "forms: " << id.form_count().get_str() << "\n";
                if (!i_out.empty()) {
                    save_identity(id, i_out);
                    std::cout << "wrote " << i_out << "\n";
                }
                return kExitOk;
            }
            throw std::invalid_argument("identity needs --check or --from-rule");
        }

        if (*obstruct) {
            ObstructionReport report = index6_obstruction(parse_gamma(o_gamma));
            std::cout << report.summary() << "\n";
            return kExitOk;
        }

        if (*search) {
            SearchOptions options;
            options.degree = s_degree;
            options.gamma = parse_gamma(s_gamma);
            options.d_low = s_dmin;
            options.d_high = s_dmax;
            options.families = s_families;
            options.threads = threads;
            for (const auto& text : s_grid)
                options.extra_a_grid.push_back(ExactScalar::parse(text));
            auto hits = search_positive(options);
            for (const auto& hit : hits) {
                std::cout << "d=" << hit.d << " family=" << hit.family << " m=" << hit.m
                          << " p=" << hit.p << " a=" << hit.a.str() << " nodes="
                          << hit.solution.rule->node_count().get_str() << "\n";
            }
            std::cout << hits.size() << " positive rules\n";
            return kExitOk;
        }

        if (*report_cmd) {
            ReportOptions options;
            options.threads = threads;
            if (std::filesystem::exists(rp_data)) options.data_dir = rp_data;
            ReproductionReport report = run_reproduction_report(options);
            std::string rendered = report.render();
            std::cout << rendered;
            if (!rp_out.empty()) {
                std::ofstream out(rp_out);
                out << rendered;
            }
            return report.all_pass() ? kExitOk : kExitVerifyFailure;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

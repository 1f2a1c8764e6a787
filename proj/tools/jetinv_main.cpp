#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jetinv/forms.hpp"
#include "jetinv/frames.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/suites.hpp"
#include "jetinv/sampling.hpp"
#include "jetinv/syzygy.hpp"

using namespace jetinv;

namespace {

std::vector<Rat> parse_alphas(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(rat_parse(tok));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_and_emit(SuiteConfig cfg, std::ostream& summary = std::cout) {
    Report rep = run_suite(cfg);
    if (!cfg.out_path.empty()) emit_report(rep, cfg.out_path);
    summary << "suite " << rep.suite << ": " << rep.records.size() << " records, "
            << rep.failure_count << " failures";
    if (rep.max_numeric_residual > 0)
        summary << ", max numeric residual " << fmt_float(rep.max_numeric_residual);
    summary << " (" << fmt_float(rep.wall_ms) << " ms)\n";
    return rep.failure_count == 0 ? 0 : 1;
}

void print_frame_data(const JetPoint& j) {
    int n = j.n();
    nlohmann::json out;
    EigenFrame fr = eigen_frame(j);
    auto lam = nlohmann::json::array();
    for (double l : fr.lambda) lam.push_back(fmt_float(l));
    out["lambda"] = lam;
    auto evecs = nlohmann::json::array();
    for (int k = 0; k < n; ++k) {
        auto col = nlohmann::json::array();
        for (int i = 0; i < n; ++i)
            col.push_back(
                fmt_float(fr.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]));
        evecs.push_back(col);
    }
    out["eigenvectors"] = evecs;
    auto vf = v_fields(n);
    auto vcoeff = nlohmann::json::array();
    for (const auto& f : vf) {
        auto row = nlohmann::json::array();
        for (const Rat& c : f.coeff_at(j)) row.push_back(rat_str(c));
        vcoeff.push_back(row);
    }
    out["v_coefficients"] = vcoeff;
    if (j.order() >= 3) {
        try {
            StructureConstants sc = structure_constants(vf, j);
            auto cs = nlohmann::json::object();
            for (int i = 0; i < n; ++i)
                for (int jj = 0; jj < n; ++jj)
                    for (int k = 0; k < n; ++k)
                        if (!is_zero(sc.at(i, jj, k)))
                            cs["c[" + std::to_string(i + 1) + "][" + std::to_string(jj + 1) +
                               "]^" + std::to_string(k + 1)] = rat_str(sc.at(i, jj, k));
            out["structure_constants"] = cs;
        } catch (const DegenerateFrame&) {
            out["structure_constants"] = "degenerate frame at this jet";
        }
    }
    std::cout << out.dump(2) << "\n";
}

void print_forms_data(int n, const std::vector<Rat>& alphas) {
    OmegaReport orep = omega_recursion(n, alphas);
    J1Algebra alg(n);
    nlohmann::json out;
    for (std::size_t k = 0; k < orep.omegas.size(); ++k)
        out["Omega_" + std::to_string(k + 1)] =
            nlohmann::json::parse(alg.to_json(orep.omegas[k]));
    if (n == 2) {
        ContactReport cr = contact_reduction_n2(Rat(1), {Rat(0), rat(1, 2), Rat(2)});
        nlohmann::json theta = nlohmann::json::object();
        static const char* names[3] = {"dx1", "dx2", "dt"};
        for (const auto& [key, c] : cr.theta.terms()) {
            std::string name;
            for (std::size_t i = 0; i < key.size(); ++i) {
                if (i) name += "^";
                name += names[key[i]];
            }
            theta[name] = c.str("t");
        }
        out["theta"] = theta;
    }
    if (n == 3) {
        SectionReport sr = section_forms_n3(alphas.size() > 1 ? alphas[1] : Rat(0));
        J1Algebra alg2(2);
        out["theta_prime_1"] = nlohmann::json::parse(alg2.to_json(sr.theta1));
        out["theta_prime_2"] = nlohmann::json::parse(alg2.to_json(sr.theta2));
    }
    std::cout << out.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jetinv: differential-invariant verification engine for the motion group"};
    app.require_subcommand(1);

    static const std::vector<std::string> suites = {"invariance", "counts", "syzygy",
                                                    "lowrel",     "eikonal", "compat",
                                                    "forms",      "tresse",  "frames"};

    struct SubState {
        SuiteConfig cfg;
        std::string alphas_csv, u0_str, jet_path;
        bool emit_data = false;
    };
    std::map<std::string, SubState> st;

    auto add_common = [](CLI::App* cmd, SubState& state) {
        cmd->add_option("--n", state.cfg.n, "dimension");
        cmd->add_option("--order", state.cfg.order, "jet order");
        cmd->add_option("--trials", state.cfg.trials, "number of cases");
        cmd->add_option("--seed", state.cfg.seed, "RNG seed");
        cmd->add_option("--tolerance", state.cfg.tolerance, "numeric tolerance");
        cmd->add_option("--alphas", state.alphas_csv, "comma-separated rational poles");
        cmd->add_option("--u0", state.u0_str, "sample point for spectrum identities");
        cmd->add_option("--s", state.cfg.s, "tensor degree for the syzygy suite");
        cmd->add_option("--out", state.cfg.out_path, "report output path");
    };

    for (const auto& name : suites) {
        auto* cmd = app.add_subcommand(name, "run the " + name + " suite");
        auto& state = st[name];
        state.cfg.suite = name;
        add_common(cmd, state);
        if (name == "frames")
            cmd->add_option("--jet", state.jet_path, "print frame data at this jet instead");
        if (name == "forms") {
            state.emit_data = true;
            cmd->add_flag("--no-emit{false}", state.emit_data,
                          "suppress the Omega/theta JSON payload");
        }
    }

    SubState verify_state;
    std::string verify_suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", verify_suite, "suite name")->required();
    add_common(verify_cmd, verify_state);

    std::string eval_jet_path, eval_invariant_name, eval_motion_path;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an invariant at a jet");
    eval_cmd->add_option("--jet", eval_jet_path, "jet JSON file")->required();
    eval_cmd->add_option("--invariant", eval_invariant_name, "e.g. I2_tr:1")->required();
    eval_cmd->add_option("--motion", eval_motion_path,
                         "optional motion JSON; the jet is moved before evaluation");

    // motion construction: from a Cayley parameter file or a seed
    std::string motion_cayley_path;
    std::uint64_t motion_seed = 0;
    bool motion_has_seed = false;
    int motion_n = 2;
    auto* motion_cmd = app.add_subcommand("motion", "print a rational motion as JSON");
    motion_cmd->add_option("--cayley", motion_cayley_path,
                           "skew parameter file {\"S\":[[..]],\"b\":[..]?}");
    auto* seed_opt = motion_cmd->add_option("--seed", motion_seed, "random rational motion seed");
    motion_cmd->add_option("--n", motion_n, "dimension (seed mode)");
    motion_cmd->callback([&] { motion_has_seed = seed_opt->count() > 0; });

    try {
        app.parse(argc, argv);

        auto fill = [&](SubState& state) {
            if (!state.alphas_csv.empty()) state.cfg.alphas = parse_alphas(state.alphas_csv);
            if (!state.u0_str.empty()) {
                state.cfg.u0 = rat_parse(state.u0_str);
                state.cfg.has_u0 = true;
            }
        };

        for (const auto& name : suites) {
            if (!app.get_subcommand(name)->parsed()) continue;
            SubState& state = st[name];
            fill(state);
            if (name == "frames" && !state.jet_path.empty()) {
                print_frame_data(JetPoint::from_json(read_file(state.jet_path)));
                return 0;
            }
            if (name == "forms") {
                std::vector<Rat> alphas = state.cfg.alphas;
                if (alphas.empty()) {
                    alphas.push_back(Rat(0));
                    if (state.cfg.n >= 3) alphas.push_back(Rat(1));
                }
                if (state.emit_data) print_forms_data(state.cfg.n, alphas);
                return run_and_emit(state.cfg, state.emit_data ? std::cerr : std::cout);
            }
            return run_and_emit(state.cfg);
        }

        if (verify_cmd->parsed()) {
            verify_state.cfg.suite = verify_suite;
            fill(verify_state);
            return run_and_emit(verify_state.cfg);
        }

        if (eval_cmd->parsed()) {
            JetPoint j = JetPoint::from_json(read_file(eval_jet_path));
            if (!eval_motion_path.empty())
                j = prolong_action(Motion::from_json(read_file(eval_motion_path)), j);
            InvariantId id = InvariantId::parse(eval_invariant_name);
            if (id.eigen_tagged()) {
                std::cout << fmt_float(eval_frame_invariant(id, j)) << "\n";
            } else {
                std::cout << rat_str(eval_invariant(id, j)) << "\n";
            }
            return 0;
        }

        if (motion_cmd->parsed()) {
            if (!motion_cayley_path.empty()) {
                nlohmann::json payload = nlohmann::json::parse(read_file(motion_cayley_path));
                QMat s;
                for (const auto& row : payload.at("S")) {
                    QVec rv;
                    for (const auto& v : row) rv.push_back(rat_parse(v.get<std::string>()));
                    s.push_back(std::move(rv));
                }
                Motion g = cayley_rotation(SkewParam(s));
                if (payload.contains("b")) {
                    QVec b;
                    for (const auto& v : payload.at("b")) b.push_back(rat_parse(v.get<std::string>()));
                    g = Motion(g.rotation(), std::move(b));
                }
                std::cout << g.to_json() << "\n";
            } else if (motion_has_seed) {
                Rng rng(motion_seed);
                std::cout << random_motion(rng, motion_n).to_json() << "\n";
            } else {
                std::cerr << "motion: need --cayley FILE or --seed S\n";
                return 2;
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const BadConfig& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

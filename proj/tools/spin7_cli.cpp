// spin7: evaluate the octonionic Spin(7) maps and run the verification suites.
//
//   spin7 verify [--backend exact|float] [--epsilon E] [--seed N] [--trials N]
//                [--suites a,b,...] [--out report.json]
//   spin7 eval f7|f5|f7xf5|h70|spin8 --plane e1,e2 --angle 0,1 [--w e4]
//                [--plane5 e4,e5] [--angle5 1,0] [--s e0] [--backend ...] [--out m.json]
//   spin7 table --plane e1,e2 [--w e4]
//   spin7 gen-frame [--seed N] [--subspace R7|R5]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or argument error.

#include "spin7/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace spin7;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::string backend = "exact";
    double epsilon = 1e-9;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--backend", opts.backend, "Arithmetic backend")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    cmd->add_option("--epsilon", opts.epsilon, "Float comparison tolerance")->capture_default_str();
    cmd->add_option("--out", opts.out, "Output file (stdout when omitted)");
}

void emit(const Json& doc, const std::string& path) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << text;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto pos = s.find(',', start);
        const auto item = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        if (!item.empty()) items.push_back(item);
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return items;
}

struct EvalArgs {
    std::string map;
    std::string plane = "e1,e2";
    std::string angle = "1,0";
    std::string w;
    std::string plane5 = "e4,e5";
    std::string angle5 = "1,0";
    std::string s = "e0";
};

template <Scalar S>
Json evaluate(const EvalArgs& a, Tolerance tol) {
    const auto plane = convert<S>(parse_plane(a.plane));
    const auto angle_q = parse_angle(a.angle);
    const CirclePoint<S> t{from_rational<S>(angle_q.c), from_rational<S>(angle_q.s)};
    const auto angle5_q = parse_angle(a.angle5);
    const CirclePoint<S> t5{from_rational<S>(angle5_q.c), from_rational<S>(angle5_q.s)};
    const auto plane5 = convert<S>(parse_plane(a.plane5));
    std::optional<Vector8<S>> w;
    if (!a.w.empty()) w = convert<S>(parse_vector(a.w));

    Json doc{{"map", a.map}};
    Matrix8<S> m;
    if (a.map == "f7") {
        m = f7(plane, t, w, tol);
    } else if (a.map == "f5") {
        m = f5(plane, t, w, tol);
    } else if (a.map == "f7xf5") {
        m = f7xf5(plane, t, plane5, t5, tol);
    } else if (a.map == "h70") {
        m = h70(plane, t, plane5, t5, tol);
    } else {
        const auto [g, s] = spin8_map(plane, t, plane5, t5, convert<S>(parse_vector(a.s)), tol);
        m = g;
        doc["s"] = to_json(s);
    }
    doc["matrix"] = to_json(m);
    doc["so_check"] = to_json(so_check(m, tol));
    const auto membership = verify_spin7(m, tol);
    doc["spin7"] = Json{{"is_member", membership.is_member},
                        {"g_in_SO7", membership.g_in_so7},
                        {"relation_failures", pairs_to_json(membership.relation_failures)}};
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Octonionic Spin(7) maps: evaluation and machine verification"};
    app.require_subcommand(1);

    CommonOptions verify_opts;
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::string suites;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    add_common(verify, verify_opts);
    verify->add_option("--seed", seed, "Random seed")->capture_default_str();
    verify->add_option("--trials", trials, "Base number of instances per claim")->capture_default_str();
    verify->add_option("--suites", suites, "Comma-separated suite names (default: all)");

    CommonOptions eval_opts;
    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate a map and export its matrix");
    add_common(eval, eval_opts);
    eval->add_option("map", eval_args.map, "Map to evaluate")
        ->required()
        ->check(CLI::IsMember({"f7", "f5", "f7xf5", "h70", "spin8"}));
    eval->add_option("--plane", eval_args.plane, "Oriented plane, e.g. e1,e2")->capture_default_str();
    eval->add_option("--angle", eval_args.angle, "Circle point 'c,s' or 'u=p/q'")->capture_default_str();
    eval->add_option("--w", eval_args.w, "Override the complementary vector w");
    eval->add_option("--plane5", eval_args.plane5, "Second plane (inside e1..e5)")->capture_default_str();
    eval->add_option("--angle5", eval_args.angle5, "Second circle point")->capture_default_str();
    eval->add_option("--s", eval_args.s, "Unit vector of the S^7 factor (spin8)")->capture_default_str();

    std::string table_plane = "e1,e2";
    std::string table_w;
    auto* table = app.add_subcommand("table", "Print the multiplication table of the frame (1,x,y,xy,w,wx,wy,w(xy))");
    table->add_option("--plane", table_plane, "Oriented plane")->capture_default_str();
    table->add_option("--w", table_w, "Complementary vector w (default: chosen automatically)");

    std::uint64_t frame_seed = 42;
    std::string subspace = "R7";
    auto* gen = app.add_subcommand("gen-frame", "Print a random exact orthonormal pair");
    gen->add_option("--seed", frame_seed, "Random seed")->capture_default_str();
    gen->add_option("--subspace", subspace, "R7 (Im O) or R5 (e1..e5)")
        ->check(CLI::IsMember({"R7", "R5"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            RunConfig cfg;
            cfg.backend = verify_opts.backend == "float" ? Backend::Float : Backend::Exact;
            cfg.epsilon = verify_opts.epsilon;
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.output_path = verify_opts.out;
            const VerifyRun run = run_verify_suite(cfg, split_list(suites));
            if (!cfg.output_path.empty()) {
                emit(run.to_json(), cfg.output_path);
                for (const auto& s : run.suites) {
                    for (const auto& c : s.claims) {
                        std::cout << (c.pass() ? "PASS " : "FAIL ") << s.name << "/" << c.id << " ("
                                  << c.instances << " instances)\n";
                    }
                }
            } else {
                emit(run.to_json(), "");
            }
            return run.pass() ? 0 : kExitFailure;
        }
        if (*eval) {
            if (eval_opts.backend == "float" && !(eval_opts.epsilon > 0)) throw ConfigError("epsilon must be positive");
            const Json doc = eval_opts.backend == "float" ? evaluate<double>(eval_args, Tolerance{eval_opts.epsilon})
                                                          : evaluate<Rational>(eval_args, Tolerance{});
            emit(doc, eval_opts.out);
            return 0;
        }
        if (*table) {
            const auto plane = parse_plane(table_plane);
            const auto w = table_w.empty() ? choose_w(plane) : parse_vector(table_w);
            const auto frame = basis_b(plane, w);
            Json elements = Json::array();
            for (const auto& e : frame.elements) elements.push_back(to_json(e));
            emit(Json{{"plane", to_json(plane)},
                      {"w", to_json(w)},
                      {"norm_w", to_string(frame.norm_w)},
                      {"frame", elements},
                      {"table", to_json(frame_table(frame))}},
                 "");
            return 0;
        }
        const auto plane = random_orthonormal_pair(frame_seed, subspace == "R5" ? Subspace::R5 : Subspace::R7);
        emit(Json{{"seed", frame_seed}, {"subspace", subspace}, {"plane", to_json(plane)}}, "");
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

// Command-line surface for exact zeta(2)-ring evaluation, symmetry orbits,
// identity verification, counter-example families and the relation search.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlab/identities.hpp"
#include "hyperlab/search.hpp"
#include "hyperlab/thomae.hpp"

namespace {

using namespace hyperlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

unsigned default_precision() {
    if (const char* env = std::getenv("HYPERLAB_PRECISION")) {
        long bits = std::atol(env);
        if (bits >= 32) return static_cast<unsigned>(bits);
    }
    return 128;
}

IntegralParams integral_of(const std::vector<long>& v) {
    return {v[0], v[1], v[2], v[3], v[4]};
}

F32Params series_of(const std::vector<std::string>& v) {
    return {{parse_rational(v[0]), parse_rational(v[1]), parse_rational(v[2])},
            {parse_rational(v[3]), parse_rational(v[4])}};
}

const std::vector<std::string>& parameter_names() {
    static const std::vector<std::string> names = {
        "alpha", "beta", "gamma", "delta", "a",  "b",  "c",  "d",  "e",  "a1", "a2",
        "b1",    "b2",   "c1",    "c2",    "A1", "A2", "A3", "B1", "B2", "z"};
    return names;
}

void print_report(const VerificationReport& report) {
    std::cout << render(report) << "\n";
    if (report.prefactor) std::cout << "  prefactor " << to_string(*report.prefactor) << "\n";
    std::cout << "  lhs " << report.lhs_value << "\n";
    std::cout << "  rhs " << report.rhs_value << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hypergeometric series and unit-square integrals in Q + Q*zeta(2)"};
    app.require_subcommand(1);
    unsigned precision = default_precision();
    app.add_option("--precision", precision, "working precision in bits (numeric mode)")
        ->check(CLI::Range(32u, 65536u));

    // eval-integral
    std::vector<long> integral_args;
    auto* eval_integral =
        app.add_subcommand("eval-integral", "exact value of the double integral");
    eval_integral->add_option("params", integral_args, "h i j k l")
        ->expected(5)
        ->check(CLI::NonNegativeNumber);

    // eval-3f2
    std::vector<std::string> series_args;
    auto* eval_series =
        app.add_subcommand("eval-3f2", "exact value of an integral-type 3F2 at 1");
    eval_series->add_option("params", series_args, "a b c d e")->expected(5);

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "symmetry orbit of a series or integral");
    std::vector<long> orbit_integral;
    std::vector<std::string> orbit_series;
    auto* orbit_int_opt =
        orbit_cmd->add_option("--integral", orbit_integral, "h i j k l")->expected(5);
    auto* orbit_ser_opt =
        orbit_cmd->add_option("--series", orbit_series, "a b c d e")->expected(5);
    orbit_int_opt->excludes(orbit_ser_opt);
    bool orbit_dedup = true;
    orbit_cmd->add_flag("--dedup,!--all", orbit_dedup,
                        "canonicalize by trivial symmetries (default; --all lists raw arrays)");
    bool flag_divergent = false;
    orbit_cmd->add_flag("--flag-divergent", flag_divergent,
                        "append a marker to members without an exact evaluation route");

    // related
    auto* related_cmd = app.add_subcommand("related", "symmetry-relatedness of two integrals");
    bool use_t = false, use_phi = false;
    auto* t_flag = related_cmd->add_flag("--t", use_t, "order-10 dihedral group");
    auto* phi_flag = related_cmd->add_flag("--phi", use_phi, "pair-sum multiset group");
    t_flag->excludes(phi_flag);
    std::vector<long> related_args;
    related_cmd->add_option("params", related_args, "h i j k l h' i' j' k' l'")
        ->expected(10)
        ->check(CLI::NonNegativeNumber);

    // rationality
    std::vector<long> rationality_args;
    auto* rationality_cmd =
        app.add_subcommand("rationality", "irrationality criterion and exact value");
    rationality_cmd->add_option("params", rationality_args, "h i j k l")
        ->expected(5)
        ->check(CLI::NonNegativeNumber);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a catalogued identity");
    std::string verify_id;
    verify_cmd->add_option("id", verify_id, "identity id")->required();
    std::map<std::string, std::string> raw_params;
    for (const auto& name : parameter_names()) {
        raw_params[name] = "";
        verify_cmd->add_option("--" + name, raw_params[name], "value for " + name);
    }
    bool force_numeric = false;
    verify_cmd->add_flag("--numeric", force_numeric, "force the numeric route");

    // sato
    app.add_subcommand("sato", "verify the six classical counter-example relations");

    // family
    auto* family_cmd = app.add_subcommand("family", "verify a counter-example family");
    std::string family_name;
    family_cmd->add_option("name", family_name, "A or B")->required()
        ->check(CLI::IsMember({"A", "B"}));
    long alpha_max = 0;
    family_cmd->add_option("--alpha-max", alpha_max, "largest parameter value")
        ->required()
        ->check(CLI::PositiveNumber);

    // search
    auto* search_cmd = app.add_subcommand("search", "grid search for rational-multiple pairs");
    std::string template_name;
    search_cmd->add_option("--template", template_name, "integral or 3f2")
        ->required()
        ->check(CLI::IsMember({"integral", "3f2"}));
    std::vector<long> max_bounds;
    search_cmd->add_option("--max", max_bounds, "inclusive upper bounds per coordinate")
        ->expected(1, 5)
        ->required();
    long emax = 0;
    search_cmd->add_option("--emax", emax, "3f2 template: cap on the lower parameter b+c");
    std::string out_path;
    search_cmd->add_option("--out", out_path, "records file destination");
    std::size_t budget = 1'000'000;
    search_cmd->add_option("--budget", budget, "maximum emitted pairs");
    unsigned threads = 1;
    search_cmd->add_option("--threads", threads, "evaluation threads");
    std::string format = "human";
    search_cmd->add_option("--format", format, "human or records")
        ->check(CLI::IsMember({"human", "records"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval_integral->parsed()) {
            std::cout << render(eval_integral_exact(integral_of(integral_args))) << "\n";
            return kExitPass;
        }
        if (eval_series->parsed()) {
            std::cout << render(eval_3f2_exact(series_of(series_args))) << "\n";
            return kExitPass;
        }
        if (orbit_cmd->parsed()) {
            if (orbit_integral.empty() == orbit_series.empty())
                throw CLI::ValidationError("orbit", "need exactly one of --integral/--series");
            XParams x = orbit_integral.empty()
                            ? x_of_f32(series_of(orbit_series))
                            : x_of_integral(integral_of(orbit_integral));
            for (const auto& member : orbit(x, orbit_dedup)) {
                std::cout << to_string(member.params);
                if (flag_divergent && !member.evaluable) std::cout << " !";
                std::cout << "\n";
            }
            return kExitPass;
        }
        if (related_cmd->parsed()) {
            if (use_t == use_phi)
                throw CLI::ValidationError("related", "need exactly one of --t/--phi");
            IntegralParams p = integral_of({related_args.begin(), related_args.begin() + 5});
            IntegralParams q = integral_of({related_args.begin() + 5, related_args.end()});
            bool related = use_t ? t_related(p, q) : phi_related(p, q);
            std::cout << (related ? "true" : "false") << "\n";
            return kExitPass;
        }
        if (rationality_cmd->parsed()) {
            IntegralParams p = integral_of(rationality_args);
            Zeta2Number value = eval_integral_exact(p);
            std::cout << (is_irrational(p) ? "irrational" : "rational") << ": "
                      << render(value) << "\n";
            return kExitPass;
        }
        if (verify_cmd->parsed()) {
            Assignment assignment;
            for (const auto& [name, text] : raw_params)
                if (!text.empty()) assignment[name] = parse_rational(text);
            VerificationReport report;
            if (force_numeric) {
                report = verify_numeric(verify_id, assignment, precision);
            } else {
                try {
                    report = verify_exact(verify_id, assignment);
                } catch (const InadmissibleInstance&) {
                    report = verify_numeric(verify_id, assignment, precision);
                }
            }
            print_report(report);
            return report.passed() ? kExitPass : kExitFail;
        }
        if (app.get_subcommand("sato")->parsed()) {
            bool all_pass = true;
            for (const auto& report : sato_suite()) {
                std::cout << render(report) << "  value " << report.lhs_value << "\n";
                all_pass = all_pass && report.passed();
            }
            return all_pass ? kExitPass : kExitFail;
        }
        if (family_cmd->parsed()) {
            bool all_pass = true;
            long start = family_name == "A" ? 1 : 2;
            for (long alpha = start; alpha <= alpha_max; ++alpha) {
                auto pair = family_name == "A" ? family_A(alpha) : family_B(alpha);
                auto report = verify_family(pair);
                std::cout << "family " << family_name << " alpha=" << alpha << " "
                          << to_string(pair.lhs) << " = " << to_string(pair.factor) << " * "
                          << to_string(pair.rhs) << " : " << to_string(report.verdict)
                          << "  value " << report.lhs_value << "\n";
                all_pass = all_pass && report.passed();
            }
            return all_pass ? kExitPass : kExitFail;
        }
        if (search_cmd->parsed()) {
            SearchSpec spec;
            spec.tmpl = template_name == "integral" ? GridTemplate::kIntegral
                                                    : GridTemplate::kF32;
            while (max_bounds.size() < 5) max_bounds.push_back(max_bounds.back());
            std::copy(max_bounds.begin(), max_bounds.end(), spec.max_bounds.begin());
            if (emax > 0) spec.max_lower_sum = emax;
            spec.pair_budget = budget;
            spec.threads = threads;
            auto result = grid_search(spec);
            if (result.budget_exhausted)
                std::cerr << "warning: pair budget exhausted, results truncated\n";
            if (!out_path.empty()) write_records_file(result.records, out_path);
            if (format == "records") {
                if (out_path.empty()) write_records(result.records, std::cout);
            } else {
                std::size_t exotic = 0;
                for (const auto& record : result.records)
                    if (record.classification == RelationClass::kExotic) ++exotic;
                std::cout << "evaluated " << result.tuples_evaluated << " tuples, emitted "
                          << result.records.size() << " pairs (" << exotic << " exotic)\n";
                for (const auto& record : result.records) {
                    if (record.classification != RelationClass::kExotic) continue;
                    std::cout << "exotic " << to_string(record.tmpl) << " ";
                    std::cout << "[" << record.p[0];
                    for (int i = 1; i < 5; ++i) std::cout << "," << record.p[i];
                    std::cout << "] = " << to_fraction_string(record.ratio) << " * ["
                              << record.q[0];
                    for (int i = 1; i < 5; ++i) std::cout << "," << record.q[i];
                    std::cout << "]\n";
                }
            }
            return kExitPass;
        }
        throw CLI::ValidationError("subcommand", "no subcommand matched");
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}

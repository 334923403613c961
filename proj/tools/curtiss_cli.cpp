// curtiss: exact Poincaré-multiplier toolkit.
//
// Subcommands: check, bound, opt, extremal, extend, explore, verify-paper.
// Exit codes: 0 success, 1 claim/verification failure, 2 invalid input.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "curtiss/bound.hpp"
#include "curtiss/extremal.hpp"
#include "curtiss/json_io.hpp"
#include "curtiss/multiplier.hpp"
#include "curtiss/positivity.hpp"

using namespace curtiss;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitBadInput = 2;

struct ClaimFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_input_json(const std::string& input) {
    if (std::filesystem::exists(input)) {
        std::ifstream in(input);
        if (!in) throw std::invalid_argument("cannot open " + input);
        return json::parse(in);
    }
    return json::parse(input);
}

std::vector<Rat> parse_rational_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(parse_rational(item));
    }
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

// "7/24,10/24" -> {(7,24), (10,24)}, each in (0, 1] as a multiple of pi
std::vector<std::pair<long, long>> parse_angle_list(const std::string& text) {
    std::vector<std::pair<long, long>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto slash = item.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("angle must be num/den (in units of pi): " + item);
        const long num = std::stol(item.substr(0, slash));
        const long den = std::stol(item.substr(slash + 1));
        if (num <= 0 || den <= 0 || num > den)
            throw std::invalid_argument("angle must lie in (0, 1] as a multiple of pi: " + item);
        out.emplace_back(num, den);
    }
    if (out.empty()) throw std::invalid_argument("empty angle list");
    return out;
}

bool needs_approx(const FactorSpec& spec) {
    for (const auto& a : spec.angle_factors)
        if (!niven_cosine(a.angle_num, a.angle_den)) return true;
    return false;
}

std::string join_rationals(const std::vector<Rat>& values, char sep = ';') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += to_string(values[i]);
    }
    return out;
}

void print_opt_result(const OptResult& result, std::ostream& os) {
    for (const auto& outcome : result.per_degree) {
        os << "  s = " << outcome.s << ": "
           << (outcome.feasible ? "feasible" : "infeasible");
        if (outcome.feasible && outcome.multiplier_g)
            os << ", g = " << outcome.multiplier_g->to_string();
        os << "\n";
    }
    os << "opt = " << result.opt << "\n";
    if (result.bound) os << "bound b = " << *result.bound << "\n";
    if (result.precision_digits)
        os << "note: input cosines rounded to " << *result.precision_digits
           << " decimal digits; opt is exact for the perturbed instance\n";
}

// ---------------------------------------------------------------- check

int cmd_check(const std::string& input, const std::string& coeffs, int digits) {
    Polynomial f;
    if (!coeffs.empty()) {
        f = Polynomial(parse_rational_list(coeffs));
    } else {
        const FactorSpec spec = spec_from_json(read_input_json(input));
        f = expand(spec, needs_approx(spec) ? PrecisionMode::approx(digits)
                                            : PrecisionMode::exact());
    }
    const auto verdict = is_positive(f);
    std::cout << "f = " << f.to_string() << "\n";
    if (verdict.positive) {
        std::cout << "positive on [0, inf)\n";
        return kExitOk;
    }
    std::cout << "not positive";
    if (verdict.witness_root_interval) {
        const auto& [lo, hi] = *verdict.witness_root_interval;
        std::cout << ": root or sign change inside [" << to_string(lo) << ", "
                  << to_string(hi) << "]";
    }
    std::cout << "\n";
    return kExitClaimFailed;
}

// ---------------------------------------------------------------- bound

int cmd_bound(const std::string& input) {
    const FactorSpec spec = spec_from_json(read_input_json(input));
    const BoundResult result = curtiss_bound_terms(spec);
    for (const auto& term : result.terms)
        std::cout << "factor " << term.source_index
                  << (term.from_angle_factor ? " (angle)" : " (cosine)")
                  << ": ceil(pi/theta) = " << term.ceil_value
                  << ", contribution " << term.contribution << "\n";
    std::cout << "b(f) = " << result.total << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- opt

int cmd_opt(const std::string& input, const std::string& coeffs,
            std::optional<int> max_degree, int digits, bool hull_check,
            const std::string& certificate_path) {
    Polynomial f;
    std::optional<int> bound;
    bool approximated = false;
    if (!coeffs.empty()) {
        if (!max_degree)
            throw std::invalid_argument("--max-degree is required with raw coefficients");
        f = Polynomial(parse_rational_list(coeffs));
    } else {
        const FactorSpec spec = spec_from_json(read_input_json(input));
        approximated = needs_approx(spec);
        f = expand(spec, approximated ? PrecisionMode::approx(digits)
                                      : PrecisionMode::exact());
        bound = curtiss_bound(spec);
    }
    const int cap = max_degree ? *max_degree : *bound;

    OptResult result = opt(f, cap);
    result.bound = bound;
    if (approximated) result.precision_digits = digits;
    print_opt_result(result, std::cout);

    if (!certificate_path.empty()) {
        json certs = json::array();
        for (const auto& outcome : result.per_degree)
            certs.push_back(outcome_to_json(outcome));
        std::ofstream out(certificate_path);
        out << certs.dump(2) << "\n";
        std::cout << "certificates written to " << certificate_path << "\n";
    }

    if (hull_check) {
        const bool below = result.opt == 0 || !hull_separation_test(f, result.opt - 1);
        const bool at = hull_separation_test(f, result.opt);
        std::cout << "hull cross-check: " << (below && at ? "agrees" : "DISAGREES")
                  << "\n";
        if (!(below && at)) return kExitClaimFailed;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- extremal

int cmd_extremal(const std::string& angles_text, int digits, const std::string& start,
                 const std::string& growth, int max_iter,
                 const std::string& output_path) {
    const auto angles = parse_angle_list(angles_text);
    int symbolic_bound = 0;
    std::vector<Rat> cosines;
    for (const auto& [num, den] : angles) {
        if (2 * num >= den)
            throw std::invalid_argument(
                "extremal construction needs quadrant-1 angles (num/den < 1/2)");
        symbolic_bound += ceil_pi_over_theta(num, den) - 2;
        const auto exact = niven_cosine(num, den);
        cosines.push_back(exact ? *exact : approx_cosine(num, den, digits));
    }
    std::sort(cosines.begin(), cosines.end(), std::greater<Rat>());

    const auto result = find_extremal_radius(cosines, parse_rational(start),
                                             parse_rational(growth), max_iter);
    for (const auto& rung : result.trail) {
        std::cout << "r_l = " << to_string(rung.radius)
                  << ": slope ordering " << (rung.slope_ordering ? "ok" : "not yet");
        if (rung.intersection_ok)
            std::cout << ", intersection " << (*rung.intersection_ok ? "ok" : "not yet");
        std::cout << ", opt = " << rung.opt_found << "\n";
    }
    std::cout << "radii = " << join_rationals(result.instance.radii, ',') << "\n";
    std::cout << "opt = " << result.verification.opt << " = s = " << result.s << "\n";
    if (result.s != symbolic_bound) {
        std::cout << "WARNING: rounded-cosine bound " << result.s
                  << " differs from symbolic bound " << symbolic_bound << "\n";
        return kExitClaimFailed;
    }
    std::cout << "verified: opt(f) = b(f) = " << symbolic_bound << "\n";

    if (!output_path.empty()) {
        std::ofstream out(output_path);
        out << spec_to_json(result.instance.to_spec()).dump(2) << "\n";
        std::cout << "spec written to " << output_path << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- extend

int cmd_extend(const std::string& input, const std::string& coeffs,
               std::optional<int> max_degree, int digits,
               const std::string& angle_text, const std::string& cos_phi_text,
               const std::string& start, const std::string& growth, int max_iter) {
    Polynomial f;
    std::optional<int> bound;
    if (!coeffs.empty()) {
        if (!max_degree)
            throw std::invalid_argument("--max-degree is required with raw coefficients");
        f = Polynomial(parse_rational_list(coeffs));
    } else {
        const FactorSpec spec = spec_from_json(read_input_json(input));
        f = expand(spec, needs_approx(spec) ? PrecisionMode::approx(digits)
                                            : PrecisionMode::exact());
        bound = curtiss_bound(spec);
    }
    const int opt_f = opt(f, max_degree ? *max_degree : *bound).opt;
    std::cout << "opt(f) = " << opt_f << "\n";

    std::optional<Rat> cos_phi;
    if (!angle_text.empty()) {
        const auto angles = parse_angle_list(angle_text);
        if (angles.size() != 1) throw std::invalid_argument("--angle takes one angle");
        const auto [num, den] = angles[0];
        if (num != den) {  // angle pi means a linear factor
            const auto exact = niven_cosine(num, den);
            cos_phi = exact ? *exact : approx_cosine(num, den, digits);
        }
    } else if (!cos_phi_text.empty()) {
        cos_phi = parse_rational(cos_phi_text);
    }

    const auto result = extend_quadrant2(f, opt_f, cos_phi, parse_rational(start),
                                         parse_rational(growth), max_iter);
    for (const auto& [radius, eps] : result.epsilon_trail)
        std::cout << "r = " << to_string(radius)
                  << ": separation at degree " << opt_f - 1 << " ~ " << eps << "\n";
    std::cout << "radius = " << to_string(result.radius) << "\n";
    std::cout << "opt(f*h) = " << result.verification.opt << " = opt(f)\n";
    return kExitOk;
}

// ---------------------------------------------------------------- explore

struct ExploreSample {
    std::vector<std::pair<long, long>> angles;  // ascending numerators, one den
};

struct ExploreRow {
    std::string angles, radii;
    int bound = 0, opt = 0;
    int precision = 0;
    long long wall_time_ms = 0;
};

std::string format_row(const ExploreRow& row) {
    std::ostringstream os;
    os << row.angles << ',' << row.radii << ',' << row.bound << ',' << row.opt << ','
       << (row.bound - row.opt) << ',' << row.precision << ',' << row.wall_time_ms;
    return os.str();
}

int cmd_explore(unsigned seed, int samples, int max_ell, int digits,
                const std::string& growth, int max_iter,
                const std::string& output_path) {
    static const int kDenominators[] = {24, 48, 96};
    std::mt19937 rng(seed);
    std::vector<ExploreSample> plan;
    for (int i = 0; i < samples; ++i) {
        std::uniform_int_distribution<int> den_pick(0, 2);
        const int den = kDenominators[den_pick(rng)];
        std::uniform_int_distribution<int> ell_pick(1, max_ell);
        const int ell = ell_pick(rng);
        // quadrant-1 numerators coprime to den, kept at angle >= pi/6 so the
        // per-factor bound contribution stays desk-scale (<= 4)
        std::vector<long> pool;
        for (long num = (den + 5) / 6; 2 * num < den; ++num)
            if (std::gcd(num, static_cast<long>(den)) == 1) pool.push_back(num);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(std::min<std::size_t>(ell, pool.size()));
        std::sort(pool.begin(), pool.end());
        ExploreSample sample;
        for (long num : pool) sample.angles.emplace_back(num, den);
        plan.push_back(std::move(sample));
    }

    // two rows per sample: unit radii, then extremal radii
    std::vector<ExploreRow> rows(2 * plan.size());
    const auto evaluate = [&](std::size_t index) {
        const auto& sample = plan[index];
        std::string angle_text;
        int bound = 0;
        std::vector<Rat> cosines;
        for (const auto& [num, den] : sample.angles) {
            if (!angle_text.empty()) angle_text += ';';
            angle_text += std::to_string(num) + "/" + std::to_string(den);
            bound += ceil_pi_over_theta(num, den) - 2;
            const auto exact = niven_cosine(num, den);
            cosines.push_back(exact ? *exact : approx_cosine(num, den, digits));
        }
        std::sort(cosines.begin(), cosines.end(), std::greater<Rat>());

        {
            const auto begin = std::chrono::steady_clock::now();
            const std::vector<Rat> radii(cosines.size(), Rat(1));
            const Polynomial f =
                expand(Quadrant1Instance::make(cosines, radii).to_spec(),
                       PrecisionMode::exact());
            const int opt_value = opt(f, bound).opt;
            const auto end = std::chrono::steady_clock::now();
            rows[2 * index] = {angle_text, join_rationals(radii), bound, opt_value,
                               digits,
                               std::chrono::duration_cast<std::chrono::milliseconds>(
                                   end - begin)
                                   .count()};
        }
        {
            const auto begin = std::chrono::steady_clock::now();
            const auto result =
                find_extremal_radius(cosines, Rat(1), parse_rational(growth), max_iter);
            const auto end = std::chrono::steady_clock::now();
            rows[2 * index + 1] = {
                angle_text, join_rationals(result.instance.radii), bound,
                result.verification.opt, digits,
                std::chrono::duration_cast<std::chrono::milliseconds>(end - begin)
                    .count()};
        }
    };

    // samples are independent; split across workers, rows land at fixed indices
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(plan.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < plan.size(); i += workers) evaluate(i);
        });
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "angles,radii,bound,opt,gap,precision,wall_time_ms\n";
    for (const auto& row : rows) {
        if (row.bound < row.opt)
            throw ClaimFailure("negative gap for angles " + row.angles);
        csv << format_row(row) << "\n";
    }
    if (output_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(output_path);
        out << csv.str();
        std::cout << "wrote " << rows.size() << " rows to " << output_path << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify-paper

FactorSpec quarter_angle_spec(std::vector<long> numerators, bool powers_of_ten,
                              std::optional<Rat> linear_p) {
    FactorSpec spec;
    Rat radius(1);
    for (long num : numerators) {
        spec.angle_factors.push_back({num, 24, radius});
        if (powers_of_ten) radius *= 10;
    }
    if (linear_p) spec.linear_factors.push_back({*linear_p});
    return spec;
}

int cmd_verify_paper() {
    const Polynomial f2({Rat(10), Rat(-2), Rat(-10), Rat(-1), Rat(1)});
    const Polynomial f3({Rat(10), Rat(-2), Rat(10), Rat(-1), Rat(1)});
    const PrecisionMode approx50 = PrecisionMode::approx(50);

    struct Claim {
        std::string name;
        std::function<bool()> run;
    };
    const std::vector<Claim> claims = {
        {"f2 is not positive on [0, inf)",
         [&] {
             const auto verdict = is_positive(f2);
             return !verdict.positive && verdict.witness_root_interval.has_value();
         }},
        {"opt(f3) = 1",
         [&] { return opt(f3, 4).opt == 1; }},
        {"(x + 1) f3 has nonnegative coefficients",
         [&] { return verify_multiplier(f3, Polynomial({Rat(1), Rat(1)})); }},
        {"(x^2 + x + 1) f3 = x^6 + 10x^4 + 7x^3 + 18x^2 + 8x + 10",
         [&] {
             const Polynomial expected(
                 {Rat(10), Rat(8), Rat(18), Rat(7), Rat(10), Rat(0), Rat(1)});
             return multiply(Polynomial({Rat(1), Rat(1), Rat(1)}), f3) == expected;
         }},
        {"bound terms for {7,10,11,14} pi/24 are 2+1+1+0 = 4",
         [&] {
             const auto result =
                 curtiss_bound_terms(quarter_angle_spec({7, 10, 11, 14}, false, Rat(1)));
             return result.terms.size() == 4 && result.terms[0].contribution == 2 &&
                    result.terms[1].contribution == 1 &&
                    result.terms[2].contribution == 1 &&
                    result.terms[3].contribution == 0 && result.total == 4;
         }},
        {"unit radii, p = 1: opt = 1",
         [&] {
             const auto spec = quarter_angle_spec({7, 10, 11, 14}, false, Rat(1));
             return opt(expand(spec, approx50), 4).opt == 1;
         }},
        {"radii 10^(i-1), p = 10^4: opt = 4 = b",
         [&] {
             const auto spec = quarter_angle_spec({7, 10, 11, 14}, true, Rat(10000));
             return opt(expand(spec, approx50), 4).opt == 4;
         }},
        {"three factors, 14pi/24 at r = 1: opt(f h) = 3",
         [&] {
             auto spec = quarter_angle_spec({7, 10, 11}, true, std::nullopt);
             spec.angle_factors.push_back({14, 24, Rat(1)});
             return opt(expand(spec, approx50), 4).opt == 3;
         }},
        {"three factors, 14pi/24 at r = 10^3: opt(f h) = 4 = b(f)",
         [&] {
             auto spec = quarter_angle_spec({7, 10, 11}, true, std::nullopt);
             spec.angle_factors.push_back({14, 24, Rat(1000)});
             return opt(expand(spec, approx50), 4).opt == 4;
         }},
        {"four factors, x + 1: opt(f h) = 3",
         [&] {
             const auto spec = quarter_angle_spec({7, 10, 11, 14}, true, Rat(1));
             return opt(expand(spec, approx50), 4).opt == 3;
         }},
        {"four factors, x + 10^4: opt(f h) = 4",
         [&] {
             const auto spec = quarter_angle_spec({7, 10, 11, 14}, true, Rat(10000));
             return opt(expand(spec, approx50), 4).opt == 4;
         }},
    };

    bool all_pass = true;
    for (const auto& claim : claims) {
        bool pass = false;
        std::string note;
        try {
            pass = claim.run();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        all_pass = all_pass && pass;
        std::cout << (pass ? "pass" : "FAIL") << "  " << claim.name << note << "\n";
    }
    std::cout << (all_pass ? "all claims verified" : "claim verification FAILED")
              << "\n";
    return all_pass ? kExitOk : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Poincare-multiplier degrees and Curtiss bounds"};
    app.require_subcommand(1);

    std::string input, coeffs, angles_text, cos_phi_text;
    std::string start = "1", growth = "10";
    std::string output_path, certificate_path;
    int digits = 50, max_iter = 12, samples = 20, max_ell = 3;
    unsigned seed = 0;
    std::optional<int> max_degree;
    bool hull_check = false;

    auto* check = app.add_subcommand("check", "decide positivity on [0, inf)");
    check->add_option("input", input, "spec JSON (path or inline)");
    check->add_option("--coeffs", coeffs, "raw coefficients, ascending, comma-separated");
    check->add_option("--precision", digits, "decimal digits for irrational cosines");

    auto* bound = app.add_subcommand("bound", "Curtiss degree bound b(f)");
    bound->add_option("input", input, "spec JSON (path or inline)")->required();

    auto* opt_cmd = app.add_subcommand("opt", "minimal multiplier degree opt(f)");
    opt_cmd->add_option("input", input, "spec JSON (path or inline)");
    opt_cmd->add_option("--coeffs", coeffs, "raw coefficients, ascending, comma-separated");
    opt_cmd->add_option("--max-degree", max_degree, "search cap (required for --coeffs)");
    opt_cmd->add_option("--precision", digits, "decimal digits for irrational cosines");
    opt_cmd->add_flag("--hull-check", hull_check, "run the hull-separation cross-check");
    opt_cmd->add_option("--emit-certificate", certificate_path,
                        "write per-degree multiplier/Farkas certificates as JSON");

    auto* extremal = app.add_subcommand("extremal", "construct radii with opt = b");
    extremal->add_option("--angles", angles_text, "angles in units of pi, e.g. 7/24,10/24")
        ->required();
    extremal->add_option("--precision", digits, "decimal digits for irrational cosines");
    extremal->add_option("--start", start, "first ladder radius");
    extremal->add_option("--growth", growth, "ladder growth factor");
    extremal->add_option("--max-iter", max_iter, "maximum ladder rungs");
    extremal->add_option("--output", output_path, "write the final spec JSON here");

    auto* extend = app.add_subcommand("extend", "quadrant-2 factor preserving opt");
    extend->add_option("input", input, "spec JSON (path or inline)");
    extend->add_option("--coeffs", coeffs, "raw coefficients, ascending, comma-separated");
    extend->add_option("--max-degree", max_degree, "search cap (required for --coeffs)");
    extend->add_option("--precision", digits, "decimal digits for irrational cosines");
    extend->add_option("--angle", angles_text, "angle phi in units of pi, 1/2 <= phi <= 1");
    extend->add_option("--cos-phi", cos_phi_text, "cos(phi) <= 0 (omit both for x + r)");
    extend->add_option("--start", start, "first ladder radius");
    extend->add_option("--growth", growth, "ladder growth factor");
    extend->add_option("--max-iter", max_iter, "maximum ladder rungs");

    auto* explore = app.add_subcommand("explore", "sampled gap sweep to CSV");
    explore->add_option("--seed", seed, "sampling seed");
    explore->add_option("--samples", samples, "number of angle tuples");
    explore->add_option("--max-ell", max_ell, "maximum factors per tuple");
    explore->add_option("--precision", digits, "decimal digits for irrational cosines");
    explore->add_option("--growth", growth, "ladder growth factor");
    explore->add_option("--max-iter", max_iter, "maximum ladder rungs");
    explore->add_option("--output", output_path, "CSV path (default: stdout)");

    auto* verify = app.add_subcommand("verify-paper", "run the golden claim table");
    (void)verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (check->parsed()) return cmd_check(input, coeffs, digits);
        if (bound->parsed()) return cmd_bound(input);
        if (opt_cmd->parsed())
            return cmd_opt(input, coeffs, max_degree, digits, hull_check,
                           certificate_path);
        if (extremal->parsed())
            return cmd_extremal(angles_text, digits, start, growth, max_iter,
                                output_path);
        if (extend->parsed())
            return cmd_extend(input, coeffs, max_degree, digits, angles_text,
                              cos_phi_text, start, growth, max_iter);
        if (explore->parsed())
            return cmd_explore(seed, samples, max_ell, digits, growth, max_iter,
                               output_path);
        if (verify->parsed()) return cmd_verify_paper();
    } catch (const ClaimFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClaimFailed;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClaimFailed;
    }
    return kExitBadInput;
}

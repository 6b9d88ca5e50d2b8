#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cifc/errors.hpp"
#include "cifc/gaussian.hpp"
#include "cifc/lda_bounds.hpp"
#include "cifc/lda_schemes.hpp"
#include "cifc/reports.hpp"
#include "cifc/serialization.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

// Reads {"section": {"option": value}} documents; nested objects become
// subcommand sections.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
        json out;
        for (const CLI::Option* opt : app->get_options({})) {
            if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
            const auto& name = opt->get_lnames().front();
            if (opt->count() > 0) {
                out[name] = opt->reduced_results().size() == 1 ? json(opt->reduced_results().front())
                                                                : json(opt->reduced_results());
            } else if (default_also && !opt->get_default_str().empty()) {
                out[name] = opt->get_default_str();
            }
        }
        return out.dump(2) + "\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        json document;
        try {
            input >> document;
        } catch (const json::exception& e) {
            throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
        }
        if (!document.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
        std::vector<CLI::ConfigItem> items;
        flatten(document, {}, items);
        return items;
    }

private:
    static std::string scalar(const json& value) {
        if (value.is_string()) return value.get<std::string>();
        if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
        return value.dump();
    }

    static void flatten(const json& object, const std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& out) {
        for (const auto& [key, value] : object.items()) {
            if (value.is_object()) {
                auto nested = parents;
                nested.push_back(key);
                flatten(value, nested, out);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const auto& v : value) item.inputs.push_back(scalar(v));
            } else {
                item.inputs.push_back(scalar(value));
            }
            out.push_back(std::move(item));
        }
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(what + " is not valid JSON: " + e.what());
    }
}

// "5,3,3;3,2,3;5,3,2" or "5,3,3/3,2,3/5,3,2"
cifc::LdaChannel parse_inline_gains(std::string text) {
    std::replace(text.begin(), text.end(), '/', ';');
    std::vector<std::vector<int>> gains;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<int> values;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                values.push_back(std::stoi(cell, &used));
                if (used != cell.size()) throw std::invalid_argument("trailing");
            } catch (const std::logic_error&) {
                throw std::invalid_argument("bad gain entry '" + cell + "' in --gains");
            }
        }
        gains.push_back(std::move(values));
    }
    return cifc::LdaChannel(std::move(gains));
}

cifc::LdaChannel load_channel(const std::string& file, const std::string& inline_gains) {
    if (!file.empty() && !inline_gains.empty()) throw std::invalid_argument("give either --channel or --gains");
    if (!inline_gains.empty()) return parse_inline_gains(inline_gains);
    if (file.empty()) throw std::invalid_argument("a channel is required (--channel FILE or --gains ROWS)");
    return cifc::channel_from_json(parse_json_text(read_file(file), "channel file"));
}

cifc::KnowledgeStructure load_knowledge(const std::string& spec, int users) {
    if (!spec.empty() && spec.front() == '{') return cifc::knowledge_from_json(parse_json_text(spec, "--knowledge"), users);
    if (std::filesystem::is_regular_file(spec)) {
        return cifc::knowledge_from_json(parse_json_text(read_file(spec), "knowledge file"), users);
    }
    return cifc::KnowledgeStructure::named(spec, users);
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
    return out;
}

std::string fmt(double value) { return cifc::format_number(value); }

// --- commands ---------------------------------------------------------------

int run_example(int which) {
    const auto ex = cifc::example_scheme(which);
    std::cout << "example " << which << "\n"
              << "channel: " << cifc::to_json_value(ex.channel).dump() << "\n"
              << "knowledge: " << cifc::to_json_value(ex.knowledge).dump() << "\n"
              << "scheme: " << cifc::to_json_value(ex.scheme).dump() << "\n"
              << ex.description << "\n";
    for (int rx = 0; rx < ex.channel.users(); ++rx) {
        const auto check = cifc::decode_check(ex.channel, ex.knowledge, ex.scheme, rx);
        std::cout << "Rx" << rx + 1 << ": bits=" << check.bits << " rank[all]=" << check.full_rank
                  << " rank[interference]=" << check.interference_rank << " -> "
                  << (check.decodable ? "decodable" : "NOT decodable") << "\n";
    }
    const auto rates = cifc::scheme_rates(ex.channel, ex.knowledge, ex.scheme);
    const auto bound = cifc::cms_outer_sum(ex.channel);
    if (!rates.feasible) {
        std::cout << "FAILED: Rx" << *rates.failing_receiver + 1 << " cannot decode\n";
        return kNegative;
    }
    std::cout << "rates: " << join_ints(rates.rates) << "\n"
              << "achieved sum: " << rates.sum() << " bits (stated " << ex.claimed_sum << ")\n"
              << "CMS outer bound on these gains: " << bound.value << " bits [" << bound.binding << "]\n";
    const bool verified = rates.sum() == ex.claimed_sum;
    std::cout << (verified ? "VERIFIED" : "MISMATCH") << "\n";

    if (bound.value != cifc::Rational(rates.sum())) {
        std::cout << "INCONSISTENT: stated sum-capacity " << ex.claimed_sum << " bits, but the outer bound on the printed "
                  << "gains is " << bound.value << " bits and the searches below beat " << ex.claimed_sum
                  << "; the printed gains or the stated value contain a typo.\n";
        for (const char* name : {"cms", "coms"}) {
            const auto knowledge = cifc::KnowledgeStructure::named(name, ex.channel.users());
            const auto best = cifc::brute_force_best(ex.channel, knowledge, 8);
            std::cout << "best one-shot linear scheme with " << name << " knowledge: " << best.sum() << " bits (rates "
                      << join_ints(best.rates) << ")\n";
        }
    }
    return verified ? kOk : kNegative;
}

int run_bound(const cifc::LdaChannel& channel) {
    std::cout << "channel: " << cifc::to_json_value(channel).dump() << "\n";
    if (channel.users() == 3) {
        const auto closed = cifc::cms_outer_sum(channel);
        std::cout << "cms_outer_sum: " << closed.value << " [" << closed.binding << "]\n";
    }
    const auto chain = cifc::cms_outer_rank(channel);
    std::cout << "cms_outer_rank: " << chain.value << " [" << chain.binding << "]\n";
    if (channel.users() == 3) {
        const auto coms = cifc::coms_outer_rank(channel);
        std::cout << "coms_outer_rank: " << coms.value << " [" << coms.binding << "]\n";
    }
    return kOk;
}

int run_oracle(const cifc::LdaChannel& channel, const cifc::KnowledgeStructure& knowledge, int budget) {
    const auto best = cifc::brute_force_best(channel, knowledge, budget);
    const json out{{"sum", best.sum()},
                   {"rates", best.rates},
                   {"allocations_checked", best.allocations_checked},
                   {"scheme", cifc::to_json_value(best.scheme)}};
    std::cout << out.dump(2) << "\n";
    return best.sum() > 0 || budget == 0 ? kOk : kNegative;
}

struct GaussOptions {
    int K = 3;
    double snr = 100.0;
    double alpha = 1.0;
    double beta = 0.5;
    double hkk = 1.0;
    double theta_i = 0.0;
    double theta_c = 0.0;
    bool literal_hkk = false;
    std::string rho_grid;
    bool all_rho = false;

    [[nodiscard]] cifc::GaussianSymParams params() const {
        return cifc::GaussianSymParams::from_snr(K, snr, alpha, beta, {hkk, 0.0}, theta_i, theta_c);
    }
    [[nodiscard]] cifc::RhoGrid grid() const {
        return rho_grid.empty() ? cifc::RhoGrid::from_env() : cifc::RhoGrid::parse(rho_grid);
    }
};

void print_strong(const cifc::StrongCheck& check) {
    std::cout << "|h33|^2 <= |hc|^2: " << (check.direct_link_ok ? "yes" : "no") << "\n"
              << "correlation grid " << check.grid.str() << ": " << check.points_checked << " triples, worst margin "
              << fmt(check.worst_margin) << "\n";
    if (check.witness) {
        const auto& w = *check.witness;
        std::cout << "worst triple: rho1=" << fmt(w.rho_1.real()) << (w.rho_1.imag() < 0 ? "" : "+")
                  << fmt(w.rho_1.imag()) << "j rho2=" << fmt(w.rho_2.real()) << (w.rho_2.imag() < 0 ? "" : "+")
                  << fmt(w.rho_2.imag()) << "j rho3=" << fmt(w.rho_3.real()) << (w.rho_3.imag() < 0 ? "" : "+")
                  << fmt(w.rho_3.imag()) << "j\n";
    }
    std::cout << (check.holds ? "strong conditions: certified at density " + check.grid.str()
                              : std::string("strong conditions: FAIL"))
              << "\n";
}

int run_gauss_bound(const GaussOptions& o) {
    const auto p = o.params();
    int code = kOk;
    if (p.K == 3) {
        const auto check = cifc::strong_conditions_hold(p, o.grid(), !o.all_rho);
        std::cout << "strong interference: " << (check.holds ? "certified at density " + check.grid.str() : "not certified")
                  << "\n"
                  << "sum_outer_strong: " << fmt(cifc::sum_outer_strong(p)) << "\n"
                  << "sum_inner_compound_mac: " << fmt(cifc::sum_inner_compound_mac(p)) << "\n"
                  << "strong gap: " << fmt(cifc::sum_outer_strong(p) - cifc::sum_inner_compound_mac(p)) << " (bound 3)\n";
    }
    std::cout << "k_user_outer: " << fmt(cifc::k_user_outer(p)) << "\n";
    const auto which = cifc::thm5_case(p, o.literal_hkk);
    std::cout << "power-split case: " << cifc::to_string(which) << "\n";
    if (which == cifc::Thm5Case::NotApplicable) return kNegative;
    const auto scheme = cifc::thm5_achievable(p, o.literal_hkk);
    std::cout << "rates:";
    for (double r : scheme.rates) std::cout << " " << fmt(r);
    const double gap = cifc::k_user_outer(p) - scheme.sum();
    std::cout << "\nachievable sum: " << fmt(scheme.sum()) << "\n"
              << "gap: " << fmt(gap) << " (bound " << fmt(cifc::thm5_gap_bound(p.K, which)) << ")\n";
    return code;
}

int run_strong_check(const GaussOptions& o) {
    const auto check = cifc::strong_conditions_hold(o.params(), o.grid(), !o.all_rho);
    print_strong(check);
    return check.holds ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sum-capacity bounds and linear schemes for K-user cognitive interference channels"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file mirroring the command-line flags (flags win)");

    // regime-map
    std::string alpha_max = "3";
    std::string beta_max = "3";
    std::string step = "1/24";
    bool n33_violated = false;
    std::string regime_out = "-";
    auto* regime = app.add_subcommand("regime-map", "classify a rational (alpha, beta) grid, CSV");
    regime->add_option("--alpha-max", alpha_max, "largest alpha (rational)")->capture_default_str();
    regime->add_option("--beta-max", beta_max, "largest beta (rational)")->capture_default_str();
    regime->add_option("--step", step, "grid step, e.g. 1/24")->capture_default_str();
    regime->add_flag("--n33-violated", n33_violated, "evaluate with n33 > max{n13, n23}");
    regime->add_option("--out", regime_out, "output file, - for stdout")->capture_default_str();

    // gdof
    std::vector<int> ks{2, 3, 4};
    std::vector<std::string> models{"cms", "bc", "ifc"};
    std::string gdof_alpha_max = "3";
    std::string gdof_step = "1/8";
    std::string gdof_out = "-";
    auto* gdof_cmd = app.add_subcommand("gdof", "gDoF curves, CSV");
    gdof_cmd->add_option("--k", ks, "user counts")->delimiter(',')->capture_default_str();
    gdof_cmd->add_option("--model", models, "cms, bc, ifc")->delimiter(',')->capture_default_str();
    gdof_cmd->add_option("--alpha-max", gdof_alpha_max, "largest alpha (rational)")->capture_default_str();
    gdof_cmd->add_option("--step", gdof_step, "alpha step (rational)")->capture_default_str();
    gdof_cmd->add_option("--out", gdof_out, "output file, - for stdout")->capture_default_str();

    // example
    int which = 1;
    auto* example = app.add_subcommand("example", "print and verify a worked example scheme");
    example->add_option("which", which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));

    // bound / oracle
    std::string bound_channel;
    std::string bound_gains;
    std::string oracle_channel;
    std::string oracle_gains;
    std::string knowledge_spec = "cms";
    int budget = 8;
    auto* bound = app.add_subcommand("bound", "LDA outer bounds of a channel");
    bound->add_option("--channel", bound_channel, "channel JSON file");
    bound->add_option("--gains", bound_gains, "inline gains, rows separated by ';' or '/'");
    auto* oracle = app.add_subcommand("oracle", "best one-shot linear scheme by exhaustive search");
    oracle->add_option("--channel", oracle_channel, "channel JSON file");
    oracle->add_option("--gains", oracle_gains, "inline gains, rows separated by ';' or '/'");
    oracle->add_option("--knowledge", knowledge_spec, "cms, coms, pms, ifc-cr, ifc, a JSON file or inline JSON")
        ->capture_default_str();
    oracle->add_option("--budget", budget, "largest total bit count to search")->capture_default_str();

    // gauss
    GaussOptions point;
    GaussOptions check;
    GaussOptions sweep_opts;
    std::string sweep_out = "-";
    auto* gauss = app.add_subcommand("gauss", "Gaussian bounds");
    gauss->require_subcommand(1);
    const auto add_channel_flags = [](CLI::App* cmd, GaussOptions& g) {
        cmd->add_option("--k", g.K, "number of users")->capture_default_str();
        cmd->add_option("--snr", g.snr, "|h_d|^2, linear")->capture_default_str();
        cmd->add_option("--alpha", g.alpha, "|h_i|^2 = snr^alpha")->capture_default_str();
        cmd->add_option("--beta", g.beta, "|h_c|^2 = snr^beta")->capture_default_str();
        cmd->add_option("--hkk", g.hkk, "|h_KK|, linear magnitude")->capture_default_str();
        cmd->add_option("--theta-i", g.theta_i, "phase of h_i (rad)")->capture_default_str();
        cmd->add_option("--theta-c", g.theta_c, "phase of h_c (rad)")->capture_default_str();
    };
    const auto add_grid_flags = [](CLI::App* cmd, GaussOptions& g) {
        cmd->add_option("--rho-grid", g.rho_grid, "correlation grid MxP (default 9x8 or $CIFC_RHO_GRID)");
        cmd->add_flag("--all-rho", g.all_rho, "also test correlation triples that are not jointly feasible");
    };
    auto* gauss_bound = gauss->add_subcommand("bound", "outer and inner sum-rate bounds at one point");
    add_channel_flags(gauss_bound, point);
    add_grid_flags(gauss_bound, point);
    gauss_bound->add_flag("--literal-hkk", point.literal_hkk, "compare unsquared |h_KK| with |h_c|^2");
    auto* strong = gauss->add_subcommand("strong-check", "certify the strong-interference conditions (K = 3)");
    add_channel_flags(strong, check);
    add_grid_flags(strong, check);
    auto* sweep = gauss->add_subcommand("gap-sweep", "gap of both Gaussian schemes over the default grid, CSV");
    add_grid_flags(sweep, sweep_opts);
    sweep->add_flag("--literal-hkk", sweep_opts.literal_hkk, "compare unsquared |h_KK| with |h_c|^2");
    sweep->add_option("--out", sweep_out, "output file, - for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (regime->parsed()) {
            const auto rows = cifc::regime_map(cifc::Rational::parse(alpha_max), cifc::Rational::parse(beta_max),
                                               cifc::Rational::parse(step), !n33_violated);
            write_output(regime_out, cifc::regime_map_csv(rows));
            return kOk;
        }
        if (gdof_cmd->parsed()) {
            std::vector<cifc::GdofModel> parsed;
            for (const auto& m : models) parsed.push_back(cifc::parse_gdof_model(m));
            const auto rows = cifc::gdof_curves(parsed, ks, cifc::Rational::parse(gdof_alpha_max),
                                                cifc::Rational::parse(gdof_step));
            write_output(gdof_out, cifc::gdof_csv(rows));
            return kOk;
        }
        if (example->parsed()) return run_example(which);
        if (bound->parsed()) return run_bound(load_channel(bound_channel, bound_gains));
        if (oracle->parsed()) {
            const auto channel = load_channel(oracle_channel, oracle_gains);
            return run_oracle(channel, load_knowledge(knowledge_spec, channel.users()), budget);
        }
        if (gauss_bound->parsed()) return run_gauss_bound(point);
        if (strong->parsed()) return run_strong_check(check);
        if (sweep->parsed()) {
            cifc::GapSweepSpec spec;
            spec.grid = sweep_opts.grid();
            spec.psd_only = !sweep_opts.all_rho;
            spec.literal_hkk = sweep_opts.literal_hkk;
            const auto rows = cifc::gap_sweep(spec);
            write_output(sweep_out, cifc::gap_sweep_csv(rows));
            for (const auto& r : rows) {
                if (r.evaluated() && !r.within()) return kNegative;
            }
            return kOk;
        }
    } catch (const cifc::BudgetError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

#include "phinewton/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "phinewton/criteria.hpp"
#include "phinewton/parser.hpp"
#include "phinewton/report.hpp"

namespace phinewton::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string render(const AnalysisReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return report_to_json(report).dump(2) + "\n";
        case OutputFormat::Svg:
            return render_svg(report);
        case OutputFormat::Text:
            break;
    }
    return render_text(report);
}

RunResult check_only(const IntPoly& f, const std::optional<IntPoly>& phi, const ValuationDomain& domain,
                     OutputFormat format) {
    RunResult res;
    nlohmann::ordered_json j;
    j["input"] = f.to_string();
    j["prime"] = domain.prime().get_str();
    std::ostringstream os;
    if (!f.is_monic()) throw Error("f must be monic");
    if (!phi) {
        const FactorizationFp fac = fp_factorize(FpPoly::reduce(f, domain.prime()));
        j["mode"] = "full";
        nlohmann::ordered_json factors = nlohmann::ordered_json::array();
        os << "f mod " << domain.prime().get_str() << " =";
        for (const auto& [g, k] : fac.factors) {
            factors.push_back({{"phi", g.to_string()}, {"multiplicity", k}});
            os << " (" << g.to_string() << ")^" << k;
        }
        os << "\nfull analysis applicable\n";
        j["factors_mod_p"] = std::move(factors);
        j["applicable"] = true;
    } else {
        j["mode"] = "single-phi";
        j["phi"] = phi->to_string();
        const bool phibar_irreducible = phi->is_monic() && fp_is_irreducible(FpPoly::reduce(*phi, domain.prime()));
        SingleSideHypothesis hyp;
        if (phibar_irreducible) hyp = check_single_side_hypothesis(phi_expand(f, *phi, domain));
        j["phi_mod_p_irreducible"] = phibar_irreducible;
        j["applicable"] = hyp.applicable;
        j["hypothesis_holds"] = hyp.holds;
        nlohmann::ordered_json viol = nlohmann::ordered_json::array();
        for (const auto& v : hyp.violations)
            viol.push_back({{"index", v.index}, {"required", v.required.to_string()}, {"actual", v.actual.to_string()}});
        j["violations"] = std::move(viol);
        if (!phibar_irreducible) {
            os << "phi mod p is not irreducible\n";
        } else if (!hyp.holds) {
            os << "single-side hypothesis fails" << (hyp.failure.empty() ? "" : ": " + hyp.failure) << "\n";
            for (const auto& v : hyp.violations)
                os << "  v(a_" << v.index << ") = " << v.actual.to_string() << " < " << v.required.to_string() << "\n";
        } else {
            os << "single-side hypothesis holds, lambda = " << hyp.lambda.to_string() << "\n";
        }
        if (!hyp.holds) res.exit_code = kExitInapplicable;
    }
    res.output = format == OutputFormat::Json ? j.dump(2) + "\n" : os.str();
    return res;
}

}  // namespace

RunResult run(const CliConfig& config) {
    RunResult res;
    try {
        if (config.prime < 2) throw Error("prime must be >= 2");
        const ValuationDomain domain(config.prime);
        const std::string text = config.input_is_file ? read_file(config.input) : config.input;
        const IntPoly f = parse_poly(text);
        std::optional<IntPoly> phi;
        if (config.phi) phi = parse_poly(*config.phi);

        if (config.check_only) return check_only(f, phi, domain, config.format);

        const AnalysisReport report =
            phi ? analyze_single_phi(f, *phi, domain, config.seed) : bound_full(f, domain, config.seed);
        res.output = render(report, config.format);
        if (phi && report.verdict == Verdict::Inapplicable) res.exit_code = kExitInapplicable;
    } catch (const ParseError& e) {
        res.exit_code = kExitInputError;
        res.error = "syntax error at " + std::string(e.what());
    } catch (const std::exception& e) {
        res.exit_code = kExitInputError;
        res.error = e.what();
    }
    return res;
}

CliConfig config_from_report(const nlohmann::ordered_json& report) {
    CliConfig c;
    c.input = report.at("input").get<std::string>();
    const auto& p = report.at("prime");
    c.prime = p.is_string() ? BigInt(p.get<std::string>()) : BigInt(p.get<long>());
    if (report.at("mode").get<std::string>() == "single-phi" && report.contains("phi") && !report.at("phi").is_null())
        c.phi = report.at("phi").get<std::string>();
    c.seed = report.at("seed").get<std::uint64_t>();
    c.format = OutputFormat::Json;
    return c;
}

int main(int argc, char** argv) {
    CLI::App app{"Newton polygon irreducibility criteria and factor-count bounds over Z_p"};
    CliConfig config;
    std::string expression, input_file, prime, phi, output;
    std::uint64_t seed = 0;
    std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"svg", OutputFormat::Svg}};

    app.add_option("expression", expression, "Monic polynomial in x, e.g. \"x^2 + 2x + 2\"");
    auto* file_opt = app.add_option("--input", input_file, "Read the polynomial from a UTF-8 file");
    app.add_option("-p,--prime", prime, "Prime p defining the valuation")->required();
    auto* phi_opt = app.add_option("--phi", phi, "Monic phi with phi mod p irreducible (single-phi mode)");
    app.add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized factorization (default 0)");
    app.add_flag("--check-only", config.check_only, "Only check the hypotheses");
    app.add_option("--output", output, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    const bool has_file = file_opt->count() > 0;
    if (has_file == !expression.empty()) {
        std::cerr << "error: give exactly one of an expression or --input <file>\n";
        return kExitInputError;
    }
    config.input_is_file = has_file;
    config.input = has_file ? input_file : expression;
    try {
        config.prime = BigInt(prime);
    } catch (const std::invalid_argument&) {
        std::cerr << "error: prime '" << prime << "' is not an integer\n";
        return kExitInputError;
    }
    if (phi_opt->count() > 0) config.phi = phi;
    if (seed_opt->count() > 0) {
        config.seed = seed;
    } else if (const char* env = std::getenv("PHINEWTON_SEED")) {
        try {
            config.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: PHINEWTON_SEED='" << env << "' is not an unsigned integer\n";
            return kExitInputError;
        }
    }

    const RunResult res = run(config);
    if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
    if (!res.output.empty()) {
        if (output.empty()) {
            std::cout << res.output;
        } else {
            std::ofstream out(output, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write '" << output << "'\n";
                return kExitInputError;
            }
            out << res.output;
        }
    }
    return res.exit_code;
}

}  // namespace phinewton::cli

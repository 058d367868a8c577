#include "polyneq/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyneq/interchange.hpp"

namespace polyneq::cli {

namespace {

std::string utc_now()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        parts.push_back(cur);
    return parts;
}

double parse_double(const std::string& s, const char* what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ContractError(std::string("cannot parse ") + what + " from '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v))
        throw ContractError(std::string("cannot parse ") + what + " from '" + s + "'");
    return v;
}

std::vector<double> parse_double_list(const std::string& s, const char* what)
{
    std::vector<double> out;
    for (const auto& part : split(s, ','))
        out.push_back(parse_double(part, what));
    if (out.empty())
        throw ContractError(std::string(what) + " list is empty");
    return out;
}

InequalityId parse_id(const std::string& s)
{
    const auto id = parse_inequality_id(s);
    if (!id)
        throw ContractError("unknown inequality id '" + s + "'");
    return *id;
}

struct Manifest {
    std::string command;
    Json flags = Json::object();
    std::string start;
    std::vector<std::string> outputs;

    Json to_json() const
    {
        Json j;
        j["command"] = command;
        j["flags"] = flags;
        j["version"] = kVersion;
        j["start"] = start;
        j["end"] = utc_now();
        j["outputs"] = outputs;
        return j;
    }
};

std::string csv_path_for(const std::string& json_path)
{
    std::filesystem::path p(json_path);
    p.replace_extension(".csv");
    return p.string();
}

void write_file(const std::string& path, const std::string& body)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ContractError("cannot open output file '" + path + "'");
    f << body;
}

// JSON document: manifest at the head, then the report body.
void emit_json(Manifest& m, const Json& body, const std::string& out_path, std::ostream& out,
               const std::string& csv = {})
{
    if (out_path.empty()) {
        Json doc;
        doc["manifest"] = m.to_json();
        doc["report"] = body;
        out << doc.dump(2) << '\n';
        return;
    }
    m.outputs.push_back(out_path);
    if (!csv.empty())
        m.outputs.push_back(csv_path_for(out_path));
    const Json manifest = m.to_json();
    Json doc;
    doc["manifest"] = manifest;
    doc["report"] = body;
    write_file(out_path, doc.dump(2) + '\n');
    if (!csv.empty())
        write_file(csv_path_for(out_path), "# " + manifest.dump() + '\n' + csv);
    out << manifest.dump() << '\n';
}

struct ConfigFlags {
    std::string id;
    int degree = 4;
    double k = 1.0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    std::string gamma_mode = "ones";
    std::string alpha_mode = "annulus";
    std::string alpha_grid;
    std::string zero_mode = "disk-uniform";
    double zero_radius_factor = 1.0;
    std::string out;

    void attach(CLI::App* app)
    {
        app->add_option("--id", id, "inequality id")->required();
        app->add_option("--degree,--n", degree, "polynomial degree");
        app->add_option("--k", k, "zero disk radius");
        app->add_option("--trials", trials, "number of sampled instances");
        app->add_option("--seed", seed, "ensemble seed");
        app->add_option("--gamma-mode", gamma_mode, "ones | uniform01 | exp1");
        app->add_option("--alpha-mode", alpha_mode, "none | radial | annulus");
        app->add_option("--alpha-grid", alpha_grid, "comma list of |alpha| for radial mode");
        app->add_option("--zero-mode", zero_mode, "disk-uniform | boundary | clustered");
        app->add_option("--zero-radius-factor", zero_radius_factor, "sample zeros in radius k * factor");
        app->add_option("--out", out, "write the report here instead of stdout");
    }

    EnsembleConfig config() const
    {
        EnsembleConfig c;
        c.degree = degree;
        c.k = k;
        c.trials = trials;
        c.seed = seed;
        const auto g = parse_gamma_mode(gamma_mode);
        const auto a = parse_alpha_mode(alpha_mode);
        const auto z = parse_zero_mode(zero_mode);
        if (!g)
            throw ContractError("unknown gamma mode '" + gamma_mode + "'");
        if (!a)
            throw ContractError("unknown alpha mode '" + alpha_mode + "'");
        if (!z)
            throw ContractError("unknown zero mode '" + zero_mode + "'");
        c.gamma_mode = *g;
        c.alpha_mode = *a;
        c.zero_mode = *z;
        if (!alpha_grid.empty())
            c.alpha_grid = parse_double_list(alpha_grid, "alpha grid");
        c.zero_radius_factor = zero_radius_factor;
        return c;
    }

    Json to_json() const
    {
        return Json{{"id", id},           {"degree", degree},         {"k", k},
                    {"trials", trials},   {"seed", seed},             {"gamma_mode", gamma_mode},
                    {"alpha_mode", alpha_mode}, {"alpha_grid", alpha_grid}, {"zero_mode", zero_mode},
                    {"zero_radius_factor", zero_radius_factor}, {"out", out}};
    }
};

int cmd_check(const std::string& poly_file, const std::string& id_name, double k, const std::string& gamma_flag,
              const std::string& alpha_flag, const std::string& alpha_mod_flag, const std::string& out_path,
              Manifest& m, std::ostream& out)
{
    const InequalityId id = parse_id(id_name);
    std::ifstream f(poly_file);
    if (!f)
        throw ParseError("cannot read '" + poly_file + "'");
    Json doc;
    try {
        doc = Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    const auto input = polynomial_input_from_json(doc);
    RootForm roots = std::holds_alternative<RootForm>(input) ? std::get<RootForm>(input)
                                                             : find_roots(std::get<Polynomial>(input));
    const int n = roots.degree();

    CheckInput in{roots, std::nullopt, std::nullopt, k};
    const CatalogEntry& e = catalog_entry(id);
    if (e.schema.uses_gamma) {
        if (gamma_flag == "ones") {
            in.gamma = GammaWeights::ones(n);
        } else {
            auto g = parse_double_list(gamma_flag, "gamma");
            if (static_cast<int>(g.size()) != n)
                throw ContractError("--gamma has " + std::to_string(g.size()) + " weights, degree is "
                                    + std::to_string(n));
            in.gamma = GammaWeights(std::move(g));
        }
    }
    if (e.schema.alpha != AlphaConstraint::NotUsed) {
        if (!alpha_flag.empty()) {
            const auto parts = parse_double_list(alpha_flag, "alpha");
            if (parts.size() != 2)
                throw ContractError("--alpha takes re,im");
            in.alpha = PolarPoint(Complex(parts[0], parts[1]));
        } else if (!alpha_mod_flag.empty()) {
            const double a = parse_double(alpha_mod_flag, "alpha modulus");
            if (!(a > 0.0))
                throw ContractError("--alpha-mod must be positive");
            in.alpha = PolarPoint(Complex(a, 0.0));
        } else {
            throw ContractError(std::string(to_string(id)) + " needs --alpha or --alpha-mod");
        }
    }
    const CheckReport rep = run_check(id, in);
    emit_json(m, to_json(rep), out_path, out);
    if (!rep.hypothesis_ok)
        return kExitHypothesis;
    return rep.violated() ? kExitViolation : kExitPass;
}

int cmd_scan(const ConfigFlags& flags, Manifest& m, std::ostream& out)
{
    const InequalityId id = parse_id(flags.id);
    const ScanReport rep = scan(id, flags.config());
    emit_json(m, to_json(rep), flags.out, out, scan_csv_header() + scan_csv_row(rep));
    return rep.violations == 0 ? kExitPass : kExitViolation;
}

int cmd_falsify(const ConfigFlags& flags, std::uint64_t budget, Manifest& m, std::ostream& out)
{
    const InequalityId id = parse_id(flags.id);
    const FalsifyResult res = falsify(id, flags.config(), budget);
    Json body = to_json(res.report);
    body["budget"] = budget;
    body["iterations"] = res.iterations;
    body["restarts"] = res.restarts;
    emit_json(m, body, flags.out, out, scan_csv_header() + scan_csv_row(res.report));
    return res.report.violations == 0 ? kExitPass : kExitViolation;
}

int cmd_sharpness(const std::string& id_name, const std::string& family_name, const std::string& n_list,
                  const std::string& k_list, const std::string& alpha_list, const std::string& out_path, Manifest& m,
                  std::ostream& out)
{
    const InequalityId id = parse_id(id_name);
    const auto family = parse_probe_family(family_name);
    if (!family)
        throw ContractError("unknown family '" + family_name + "'");
    std::vector<int> ns;
    for (const double v : parse_double_list(n_list, "degree")) {
        if (v < 1.0 || v != std::floor(v))
            throw ContractError("degrees must be positive integers");
        ns.push_back(static_cast<int>(v));
    }
    const auto ks = parse_double_list(k_list, "k");
    const auto alphas = alpha_list.empty() ? std::vector<double>{} : parse_double_list(alpha_list, "alpha");
    const auto reports = sharpness_probe(id, *family, ns, ks, alphas);

    Json rows = Json::array();
    bool any_violation = false;
    bool any_valid = false;
    for (const auto& r : reports) {
        rows.push_back(to_json(r));
        any_violation = any_violation || r.violated();
        any_valid = any_valid || r.hypothesis_ok;
    }
    Json body{{"id", std::string(to_string(id))}, {"family", std::string(to_string(*family))}, {"reports", rows}};
    emit_json(m, body, out_path, out);
    if (any_violation)
        return kExitViolation;
    return any_valid ? kExitPass : kExitHypothesis;
}

int cmd_catalog(const std::string& out_path, Manifest& m, std::ostream& out)
{
    if (out_path.empty()) {
        out << "# " << m.to_json().dump() << '\n' << catalog_csv();
        return kExitPass;
    }
    m.outputs.push_back(out_path);
    const Json manifest = m.to_json();
    write_file(out_path, "# " + manifest.dump() + '\n' + catalog_csv());
    out << manifest.dump() << '\n';
    return kExitPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"polyneq: derivative-type operators on complex polynomials and checks of max-modulus inequalities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Manifest manifest;
    manifest.start = utc_now();

    std::string poly_file, check_id, gamma_flag = "ones", alpha_flag, alpha_mod_flag, check_out;
    double check_k = 1.0;
    auto* check = app.add_subcommand("check", "run one inequality on one polynomial");
    check->add_option("--poly", poly_file, "polynomial or root-form JSON file")->required();
    check->add_option("--id", check_id, "inequality id")->required();
    check->add_option("--k", check_k, "zero disk radius");
    check->add_option("--gamma", gamma_flag, "ones | comma list of weights");
    auto* alpha_opt = check->add_option("--alpha", alpha_flag, "polar point re,im");
    check->add_option("--alpha-mod", alpha_mod_flag, "polar point on the positive real axis")->excludes(alpha_opt);
    check->add_option("--out", check_out, "write the report here instead of stdout");

    ConfigFlags scan_flags;
    auto* scan_cmd = app.add_subcommand("scan", "check an inequality over a random ensemble");
    scan_flags.attach(scan_cmd);

    ConfigFlags falsify_flags;
    std::uint64_t budget = 10000;
    auto* falsify_cmd = app.add_subcommand("falsify", "search for minimal-slack instances");
    falsify_flags.attach(falsify_cmd);
    falsify_cmd->add_option("--budget", budget, "descent iterations");

    std::string sharp_id, family = "binom_k", n_list = "4", k_list = "1", alpha_list, sharp_out;
    auto* sharp = app.add_subcommand("sharpness", "evaluate an inequality on an extremal family");
    sharp->add_option("--id", sharp_id, "inequality id")->required();
    sharp->add_option("--family", family, "binom_k | monomial | alpha_zn_beta");
    sharp->add_option("--n", n_list, "comma list of degrees");
    sharp->add_option("--k", k_list, "comma list of disk radii");
    sharp->add_option("--alpha", alpha_list, "comma list of |alpha|");
    sharp->add_option("--out", sharp_out, "write the report here instead of stdout");

    std::string catalog_out;
    auto* catalog = app.add_subcommand("catalog", "list every inequality as CSV");
    catalog->add_option("--out", catalog_out, "write the CSV here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            manifest.command = "check";
            manifest.flags = Json{{"poly", poly_file}, {"id", check_id},       {"k", check_k},
                                  {"gamma", gamma_flag}, {"alpha", alpha_flag}, {"alpha_mod", alpha_mod_flag},
                                  {"out", check_out}};
            return cmd_check(poly_file, check_id, check_k, gamma_flag, alpha_flag, alpha_mod_flag, check_out,
                             manifest, out);
        }
        if (scan_cmd->parsed()) {
            manifest.command = "scan";
            manifest.flags = scan_flags.to_json();
            return cmd_scan(scan_flags, manifest, out);
        }
        if (falsify_cmd->parsed()) {
            manifest.command = "falsify";
            manifest.flags = falsify_flags.to_json();
            manifest.flags["budget"] = budget;
            return cmd_falsify(falsify_flags, budget, manifest, out);
        }
        if (sharp->parsed()) {
            manifest.command = "sharpness";
            manifest.flags = Json{{"id", sharp_id}, {"family", family}, {"n", n_list},
                                  {"k", k_list},    {"alpha", alpha_list}, {"out", sharp_out}};
            return cmd_sharpness(sharp_id, family, n_list, k_list, alpha_list, sharp_out, manifest, out);
        }
        if (catalog->parsed()) {
            manifest.command = "catalog";
            manifest.flags = Json{{"out", catalog_out}};
            return cmd_catalog(catalog_out, manifest, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace polyneq::cli

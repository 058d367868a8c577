#include "polyneq/interchange.hpp"

#include <sstream>

namespace polyneq {

namespace {

Json optional_number(const std::optional<double>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

double number_at(const Json& j, const char* what)
{
    if (!j.is_number())
        throw ParseError(std::string("expected a number for ") + what);
    return j.get<double>();
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

Json to_json(Complex z)
{
    return Json::array({z.real(), z.imag()});
}

Json to_json(const Polynomial& p)
{
    Json coeffs = Json::array();
    for (const Complex c : p.coeffs())
        coeffs.push_back(to_json(c));
    return Json{{"coeffs", coeffs}};
}

Json to_json(const RootForm& r)
{
    Json roots = Json::array();
    for (const Complex z : r.roots())
        roots.push_back(to_json(z));
    return Json{{"leading", to_json(r.leading())}, {"roots", roots}};
}

Json to_json(const GammaWeights& g)
{
    return Json{{"gamma", Json(std::vector<double>(g.weights().begin(), g.weights().end()))}};
}

Json to_json(const PolarPoint& a)
{
    return Json{{"alpha", to_json(a.alpha)}};
}

Json to_json(const MaxModEstimate& e)
{
    return Json{{"value", e.value}, {"theta", e.arg_theta}, {"grid", e.grid_size}, {"rel_gap", e.rel_gap}};
}

Json to_json(const Witness& w)
{
    Json j = Json::object();
    if (w.roots)
        j["roots"] = to_json(*w.roots);
    if (w.gamma)
        j["gamma"] = to_json(*w.gamma)["gamma"];
    if (w.alpha)
        j["alpha"] = to_json(w.alpha->alpha);
    j["k"] = w.k;
    if (w.theta)
        j["theta"] = *w.theta;
    if (!w.x.empty())
        j["x"] = w.x;
    return j;
}

Json to_json(const CheckReport& r)
{
    Json j;
    j["id"] = std::string(to_string(r.id));
    j["sense"] = r.sense == Sense::Lower ? "lower" : "upper";
    j["hypothesis_ok"] = r.hypothesis_ok;
    if (r.hypothesis_ok) {
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["slack"] = r.slack;
        j["rel_slack"] = r.rel_slack;
        j["pass"] = r.pass.value_or(false);
        j["equality_sharp"] = r.equality_sharp;
        j["abs_tol"] = r.abs_tol;
    } else {
        j["hypothesis"] = r.hypothesis_message;
    }
    j["witness"] = to_json(r.witness);
    return j;
}

Json to_json(const EnsembleConfig& c)
{
    Json j;
    j["degree"] = c.degree;
    j["k"] = c.k;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["gamma_mode"] = std::string(to_string(c.gamma_mode));
    j["alpha_mode"] = std::string(to_string(c.alpha_mode));
    if (c.alpha_mode == AlphaMode::Radial)
        j["alpha_grid"] = c.alpha_grid;
    j["zero_mode"] = std::string(to_string(c.zero_mode));
    j["zero_radius_factor"] = c.zero_radius_factor;
    return j;
}

Json to_json(const ScanReport& r)
{
    Json j;
    j["id"] = std::string(to_string(r.id));
    j["config"] = to_json(r.config);
    j["checked"] = r.checked;
    j["violations"] = r.violations;
    j["min_slack"] = optional_number(r.min_slack);
    j["min_rel_slack"] = optional_number(r.min_rel_slack);
    j["equality_sharp_count"] = r.equality_sharp_count;
    j["worst_trial"] = r.worst_trial ? Json(*r.worst_trial) : Json(nullptr);
    j["worst_witness"] = r.worst ? to_json(*r.worst) : Json(nullptr);
    return j;
}

Complex complex_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError("complex value must be a [re, im] pair");
    const Complex z(number_at(j[0], "real part"), number_at(j[1], "imaginary part"));
    if (!is_finite(z))
        throw ParseError("complex value must be finite");
    return z;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
        throw ParseError("polynomial needs a non-empty \"coeffs\" array");
    std::vector<Complex> a;
    for (const auto& c : j["coeffs"])
        a.push_back(complex_from_json(c));
    Polynomial p(std::move(a));
    if (p.degenerate())
        throw ParseError("polynomial leading coefficient must be nonzero");
    return p;
}

RootForm root_form_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("leading") || !j.contains("roots") || !j["roots"].is_array())
        throw ParseError("root form needs \"leading\" and a \"roots\" array");
    const Complex c = complex_from_json(j["leading"]);
    if (c == Complex{})
        throw ParseError("root form leading coefficient must be nonzero");
    std::vector<Complex> roots;
    for (const auto& z : j["roots"])
        roots.push_back(complex_from_json(z));
    return RootForm(c, std::move(roots));
}

GammaWeights gamma_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("gamma") || !j["gamma"].is_array())
        throw ParseError("gamma weights need a \"gamma\" array");
    std::vector<double> g;
    for (const auto& v : j["gamma"])
        g.push_back(number_at(v, "gamma weight"));
    try {
        return GammaWeights(std::move(g));
    } catch (const ContractError& e) {
        throw ParseError(e.what());
    }
}

PolarPoint polar_point_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("alpha"))
        throw ParseError("polar point needs an \"alpha\" pair");
    return PolarPoint(complex_from_json(j["alpha"]));
}

std::variant<Polynomial, RootForm> polynomial_input_from_json(const Json& j)
{
    if (j.is_object() && j.contains("coeffs"))
        return polynomial_from_json(j);
    if (j.is_object() && j.contains("roots"))
        return root_form_from_json(j);
    throw ParseError("expected a polynomial {\"coeffs\": ...} or root form {\"leading\", \"roots\"}");
}

std::string catalog_csv()
{
    std::string out = "id,eq_label,k_range,alpha_constraint,formula\n";
    for (const CatalogEntry& e : catalog_table()) {
        out += csv_field(to_string(e.id)) + ',' + csv_field(e.eq_label) + ',' + csv_field(to_string(e.schema.k_range))
            + ',' + csv_field(to_string(e.schema.alpha)) + ',' + csv_field(e.formula) + '\n';
    }
    return out;
}

std::string scan_csv_header()
{
    return "id,n,k,trials,violations,min_slack,min_rel_slack\n";
}

std::string scan_csv_row(const ScanReport& r)
{
    auto opt = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
    return std::string(to_string(r.id)) + ',' + std::to_string(r.config.degree) + ',' + fmt(r.config.k) + ','
        + std::to_string(r.config.trials) + ',' + std::to_string(r.violations) + ',' + opt(r.min_slack) + ','
        + opt(r.min_rel_slack) + '\n';
}

} // namespace polyneq

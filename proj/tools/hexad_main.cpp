// hexad: command-line front end.  Every subcommand prints one JSON report
// (or a plain-text table with --pretty).  Exit codes: 0 pass, 1 a check
// failed, 2 bad usage or unreadable input.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hexad/galois.hpp"
#include "hexad/generation.hpp"
#include "hexad/json_io.hpp"
#include "hexad/picard.hpp"
#include "hexad/tilting.hpp"
#include "hexad/toric.hpp"
#include "hexad/vanishing.hpp"
#include "hexad/verify.hpp"

namespace {

using hexad::json::Json;
namespace hj = hexad::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Report
{
    explicit Report(std::string name = "") : command(std::move(name)) {}

    std::string command;
    Json inputs = Json::object();
    Json results;
    Json failures = Json::array();
    std::string text;   // --pretty rendering

    bool passed() const { return failures.empty(); }

    Json to_json() const
    {
        Json j;
        j["command"] = command;
        j["version"] = std::string("hexad ") + HEXAD_VERSION;
        j["inputs"] = inputs;
        j["results"] = results;
        j["summary"] = {{"passed", passed()}, {"failures", failures}};
        return j;
    }
};

std::string render_matrix(const hexad::IntMatrix& m, const std::vector<std::string>& labels)
{
    std::size_t w = 5;
    for (const auto& l : labels)
        w = std::max(w, l.size() + 1);
    std::ostringstream out;
    out << std::setw(static_cast<int>(w)) << "";
    for (const auto& l : labels)
        out << std::setw(static_cast<int>(w)) << l;
    out << '\n';
    for (std::size_t a = 0; a < m.size(); ++a)
    {
        out << std::setw(static_cast<int>(w)) << labels[a];
        for (hexad::Int x : m[a])
            out << std::setw(static_cast<int>(w)) << x;
        out << '\n';
    }
    return out.str();
}

std::vector<std::string> summand_labels()
{
    std::vector<std::string> out;
    for (const auto& s : hexad::tilting_summands().summands)
        out.push_back(s.label);
    return out;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try
    {
        return Json::parse(in);
    }
    catch (const Json::parse_error& e)
    {
        throw UsageError(path + " is not valid JSON: " + e.what());
    }
}

// Accepts a report written by this tool, a bare array, or a single object.
std::vector<Json> certificate_list(const Json& doc, const char* nested)
{
    Json list = doc;
    if (doc.is_object() && doc.contains("results"))
    {
        list = doc["results"];
        if (nested && list.is_object() && list.contains(nested))
            list = list[nested];
    }
    if (list.is_object())
        return {list};
    if (!list.is_array())
        throw UsageError("expected a certificate, an array of certificates or a report");
    return {list.begin(), list.end()};
}

// ---- subcommands -----------------------------------------------------------

Report cmd_cohomology(const std::string& expr)
{
    Report r("cohomology");
    r.inputs["expr"] = expr;
    hexad::PicClass d;
    try
    {
        d = hexad::class_of(expr);
    }
    catch (const hexad::ParseError& e)
    {
        throw UsageError(e.what());
    }
    const hexad::CohomologyTriple h = hexad::cohomology(d);
    r.results["class"] = hj::pic_class(d);
    r.results["name"] = hexad::describe(d);
    r.results["lift"] = hj::ray_divisor(hexad::ray_coefficients(d));
    r.results["h"] = hj::cohomology(h);
    r.results["chi"] = h.euler();
    if (h.euler() != hexad::euler_characteristic(d))
        r.failures.push_back("h0-h1+h2 differs from the Riemann-Roch value for " + hexad::describe(d));

    std::ostringstream t;
    const std::string name = hexad::describe(d);
    t << "class  " << (name == d.to_string() ? name : name + "  " + d.to_string()) << '\n'
      << "h      " << h.h0 << ' ' << h.h1 << ' ' << h.h2 << '\n'
      << "chi    " << h.euler() << '\n';
    r.text = t.str();
    return r;
}

Report cmd_ext_table(int i)
{
    Report r("ext-table");
    r.inputs["i"] = i;
    const hexad::IntMatrix m = hexad::ext_table(i);
    r.results["degree"] = i;
    r.results["labels"] = summand_labels();
    r.results["matrix"] = hj::int_matrix(m);
    r.text = "Ext^" + std::to_string(i) + "(T_a, T_b), rows a, columns b\n" + render_matrix(m, summand_labels());
    return r;
}

Report cmd_algebra()
{
    Report r("algebra");
    const hexad::TiltingBundle t = hexad::tilting_summands();
    const hexad::StructureConstantAlgebra alg = hexad::build_algebra();
    const hexad::CartanData c = hexad::cartan_and_k0(alg);
    const int gldim = hexad::global_dimension(alg);

    Json summands = Json::array();
    for (const auto& s : t.summands)
        summands.push_back({{"label", s.label},
                            {"class", hj::coeffs(s.divisor)},
                            {"multiplicity", s.multiplicity},
                            {"block", std::string(1, s.block)}});

    // Block classes: I = {H, H'}, J = three sums, O = trivial.
    const std::vector<std::pair<std::string, std::vector<std::size_t>>> blocks = {
        {"I", {0, 1}}, {"J", {2, 3, 4}}, {"O", {5}}};
    Json dims = Json::object();
    for (const auto& [tn, tc] : blocks)
        for (const auto& [sn, sc] : blocks)
            dims["Hom(" + sn + "," + tn + ")"] = alg.block_dimension(tc, sc);

    Json pd = Json::object();
    for (std::size_t k = 0; k < alg.class_count(); ++k)
        pd[alg.class_labels()[k]] = hexad::simple_projective_dimension(alg, k);

    r.results["summands"] = summands;
    r.results["dims-by-block"] = dims;
    r.results["total-dim"] = alg.dimension();
    r.results["cartan"] = hj::int_matrix(c.cartan);
    r.results["cartan_determinant"] = c.determinant;
    r.results["k0_rank"] = c.k0_rank;
    r.results["gldim"] = gldim;
    r.results["simple_projective_dimensions"] = pd;
    r.results["loewy_length"] = alg.loewy_length();
    r.results["associative"] = alg.check_associative();
    r.results["unital"] = alg.check_unital();

    if (!r.results["associative"].get<bool>())
        r.failures.push_back("algebra is not associative");
    if (!r.results["unital"].get<bool>())
        r.failures.push_back("algebra is not unital");
    if (gldim > 2)
        r.failures.push_back("global dimension exceeds 2");
    if (!hexad::is_upper_unitriangular(c.cartan))
        r.failures.push_back("Cartan matrix is not unitriangular");

    std::ostringstream o;
    o << "dimension " << alg.dimension() << ", gldim " << gldim << ", K0 rank " << c.k0_rank
      << ", Loewy length " << alg.loewy_length() << '\n';
    for (const auto& [name, v] : dims.items())
        o << "  " << name << " = " << v << '\n';
    o << "Cartan matrix\n" << render_matrix(c.cartan, alg.class_labels());
    r.text = o.str();
    return r;
}

Report cmd_certify_vanishing()
{
    Report r("certify-vanishing");
    r.results = Json::array();
    std::ostringstream o;
    for (const hexad::PicClass& d : hexad::difference_set())
    {
        const hexad::GoodnessCertificate cert = hexad::goodness_certificate(d);
        Json j = hj::goodness_certificate(cert);
        j["degree"] = hexad::degree(d);
        j["classification"] = hj::difference_class(hexad::classify_difference(d));
        r.results.push_back(j);
        const hexad::CertCheck ok = hexad::verify_certificate(cert);
        if (!ok)
            r.failures.push_back(hexad::describe(d) + ": " + std::string(hexad::reason_name(ok.reason)));
        o << std::setw(14) << hexad::describe(d) << "  degree " << std::setw(2) << hexad::degree(d) << "  base "
          << hexad::describe(cert.base) << "  lines";
        for (const auto& s : cert.steps)
            o << ' ' << hexad::line_name(s.line) << '(' << s.intersection << ')';
        o << '\n';
    }
    r.text = o.str();
    return r;
}

Report cmd_verify_cert(const std::string& path)
{
    Report r("verify-cert");
    r.inputs["file"] = path;
    r.results = Json::array();
    std::ostringstream o;
    for (const Json& j : certificate_list(read_json_file(path), nullptr))
    {
        Json entry;
        try
        {
            const hexad::GoodnessCertificate cert = hj::goodness_certificate_from(j);
            const hexad::CertCheck c = hexad::verify_certificate(cert);
            entry["target"] = hj::coeffs(cert.target);
            entry["ok"] = c.ok();
            entry["reason"] = std::string(hexad::reason_name(c.reason));
            entry["detail"] = c.detail;
            if (!c)
                r.failures.push_back(hexad::describe(cert.target) + ": " + std::string(hexad::reason_name(c.reason)));
            o << std::setw(14) << hexad::describe(cert.target) << "  " << hexad::reason_name(c.reason) << '\n';
        }
        catch (const std::invalid_argument& e)
        {
            entry["target"] = nullptr;
            entry["ok"] = false;
            entry["reason"] = "malformed";
            entry["detail"] = e.what();
            r.failures.push_back(std::string("malformed certificate: ") + e.what());
            o << "malformed: " << e.what() << '\n';
        }
        r.results.push_back(entry);
    }
    r.text = o.str();
    return r;
}

Report cmd_twists()
{
    Report r("twists");
    r.results = Json::array();
    std::ostringstream o;
    o << "order  conj  quadratic  cubic  invariant\n";
    for (const hexad::SubgroupReport& s : hexad::enumerate_subgroups())
    {
        r.results.push_back(hj::subgroup_report(s));
        if (!s.invariant)
            r.failures.push_back("subgroup of order " + std::to_string(s.order) + " moves the tilting bundle");
        auto degrees = [](const std::vector<int>& v) {
            std::string out;
            for (int x : v)
                out += (out.empty() ? "" : "+") + std::to_string(x);
            return out;
        };
        o << std::setw(5) << s.order << std::setw(6) << s.conjugacy_class_size << std::setw(11)
          << degrees(s.quadratic_center()) << std::setw(7) << degrees(s.cubic_center()) << std::setw(11)
          << (s.invariant ? "yes" : "no") << '\n';
    }
    r.text = o.str();
    return r;
}

Report cmd_generate(hexad::Int window)
{
    if (window < 0)
        throw UsageError("--window must be nonnegative");
    Report r("generate");
    r.inputs["window"] = window;
    const hexad::Closure cl = hexad::closure(window);
    Json missed = Json::array();
    Json certs = Json::array();
    std::size_t reached = 0;
    for (hexad::Int a = -window; a <= window; ++a)
        for (hexad::Int b = -window; b <= window; ++b)
            for (hexad::Int c = -window; c <= window; ++c)
                for (hexad::Int d = -window; d <= window; ++d)
                {
                    const hexad::PicClass p({a, b, c, d});
                    const hexad::Atom x = hexad::Atom::line_bundle(p);
                    if (!cl.contains(x))
                    {
                        missed.push_back(hj::coeffs(p));
                        continue;
                    }
                    ++reached;
                    certs.push_back(hj::generation_certificate(cl.certificate(x)));
                }
    r.results["window"] = window;
    r.results["reached"] = reached;
    r.results["missed"] = missed;
    r.results["closure_size"] = cl.size();
    r.results["rounds"] = cl.rounds();
    r.results["certificates"] = certs;
    if (!missed.empty())
        r.failures.push_back(std::to_string(missed.size()) + " classes not reached at window "
                             + std::to_string(window));
    std::ostringstream o;
    o << "window " << window << ": reached " << reached << ", missed " << missed.size() << ", closure "
      << cl.size() << " atoms in " << cl.rounds() << " rounds\n";
    r.text = o.str();
    return r;
}

Report cmd_verify_gen(const std::string& path)
{
    Report r("verify-gen");
    r.inputs["file"] = path;
    r.results = Json::array();
    std::size_t ok = 0;
    for (const Json& j : certificate_list(read_json_file(path), "certificates"))
    {
        Json entry;
        try
        {
            const hexad::GenerationCertificate cert = hj::generation_certificate_from(j);
            const hexad::GenCheck c = hexad::verify_generation_certificate(cert);
            entry["target"] = cert.target.to_string();
            entry["ok"] = c.ok();
            entry["reason"] = std::string(hexad::gen_reason_name(c.reason));
            entry["detail"] = c.detail;
            if (c)
                ++ok;
            else
                r.failures.push_back(cert.target.to_string() + ": " + std::string(hexad::gen_reason_name(c.reason))
                                     + ": " + c.detail);
        }
        catch (const std::invalid_argument& e)
        {
            entry["target"] = nullptr;
            entry["ok"] = false;
            entry["reason"] = "malformed";
            entry["detail"] = e.what();
            r.failures.push_back(std::string("malformed certificate: ") + e.what());
        }
        r.results.push_back(entry);
    }
    std::ostringstream o;
    o << ok << " of " << r.results.size() << " certificates replay\n";
    for (const auto& f : r.failures)
        o << "  " << f.get<std::string>() << '\n';
    r.text = o.str();
    return r;
}

Report cmd_verify_all(hexad::Int window)
{
    if (window < 0)
        throw UsageError("--window must be nonnegative");
    Report r("verify-all");
    r.inputs["window"] = window;
    r.results = Json::array();
    std::ostringstream o;
    for (const hexad::CheckResult& c : hexad::run_all_checks(window))
    {
        Json j;
        j["name"] = c.name;
        j["invariant"] = c.invariant;
        j["passed"] = c.passed;
        j["offender"] = c.offender;
        j["detail"] = c.detail;
        r.results.push_back(j);
        if (!c.passed)
            r.failures.push_back(c.name + ": " + c.invariant + " violated"
                                 + (c.offender.empty() ? "" : " at " + c.offender) + " (" + c.detail + ")");
        o << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << c.name << std::right << c.detail
          << (c.offender.empty() ? "" : "  [" + c.offender + "]") << '\n';
    }
    r.text = o.str();
    return r;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations on the degree-6 del Pezzo surface and its hexagon of lines"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("hexad ") + HEXAD_VERSION);

    bool pretty = false;
    std::string out_path;
    app.add_flag("--pretty", pretty, "Print a plain-text table instead of JSON");
    app.add_option("--out", out_path, "Write output to this file");

    std::string expr;
    auto* coh = app.add_subcommand("cohomology", "Sheaf cohomology of a line bundle");
    coh->add_option("expr", expr, "Divisor expression, e.g. \"L1+M2\" or \"2H'-K\"")->required();

    int degree = 0;
    auto* ext = app.add_subcommand("ext-table", "Ext^i between the tilting summands");
    ext->add_option("--i", degree, "Cohomological degree")->required()->check(CLI::Range(0, 2));

    auto* alg = app.add_subcommand("algebra", "Endomorphism algebra of the split tilting bundle");
    auto* cert = app.add_subcommand("certify-vanishing", "Descent certificates for all 31 differences");

    std::string file;
    auto* vcert = app.add_subcommand("verify-cert", "Check vanishing certificates from a file");
    vcert->add_option("file", file)->required();

    auto* twists = app.add_subcommand("twists", "Subgroups of the hexagon symmetries up to conjugacy");

    hexad::Int window = 2;
    auto* gen = app.add_subcommand("generate", "Generation certificates for line bundles in a window");
    gen->add_option("--window", window, "Bound on |basis coefficient|")->capture_default_str();

    auto* vgen = app.add_subcommand("verify-gen", "Replay generation certificates from a file");
    vgen->add_option("file", file)->required();

    auto* all = app.add_subcommand("verify-all", "Run every check");
    all->add_option("--window", window, "Generation window")->capture_default_str();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    Report report;
    try
    {
        if (coh->parsed())
            report = cmd_cohomology(expr);
        else if (ext->parsed())
            report = cmd_ext_table(degree);
        else if (alg->parsed())
            report = cmd_algebra();
        else if (cert->parsed())
            report = cmd_certify_vanishing();
        else if (vcert->parsed())
            report = cmd_verify_cert(file);
        else if (twists->parsed())
            report = cmd_twists();
        else if (gen->parsed())
            report = cmd_generate(window);
        else if (vgen->parsed())
            report = cmd_verify_gen(file);
        else if (all->parsed())
            report = cmd_verify_all(window);
    }
    catch (const UsageError& e)
    {
        std::cerr << "hexad: " << e.what() << '\n';
        return kUsage;
    }

    const std::string payload = pretty ? report.text : report.to_json().dump(2) + "\n";
    if (out_path.empty())
        std::cout << payload;
    else
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << payload))
        {
            std::cerr << "hexad: cannot write " << out_path << '\n';
            return kUsage;
        }
    }
    if (pretty && !report.passed())
        for (const auto& f : report.failures)
            std::cerr << "FAIL: " << f.get<std::string>() << '\n';
    return report.passed() ? kPass : kFail;
}

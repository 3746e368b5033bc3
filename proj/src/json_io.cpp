#include "hexad/json_io.hpp"

#include <stdexcept>

namespace hexad::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Int integer(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        bad(std::string(what) + " is not an integer");
    return j.get<Int>();
}

Json partition(const Partition& p)
{
    Json out = Json::array();
    for (const auto& part : p)
        out.push_back(part);
    return out;
}

}   // namespace

Json pic_class(const PicClass& d)
{
    Json j;
    j["basis"] = std::string(kPicBasisTag);
    j["coeffs"] = coeffs(d);
    return j;
}

PicClass pic_class_from(const Json& j)
{
    const Json& tag = field(j, "basis");
    if (!tag.is_string() || tag.get<std::string>() != kPicBasisTag)
        bad("unexpected basis tag");
    return coeffs_from(field(j, "coeffs"));
}

Json coeffs(const PicClass& d)
{
    Json out = Json::array();
    for (Int x : d.coeffs())
        out.push_back(x);
    return out;
}

PicClass coeffs_from(const Json& j)
{
    if (!j.is_array() || j.size() != 4)
        bad("class coefficients must be an array of 4 integers");
    std::array<Int, 4> c{};
    for (std::size_t i = 0; i < 4; ++i)
        c[i] = integer(j[i], "class coefficient");
    return PicClass(c);
}

Json ray_divisor(const RayDivisor& a)
{
    Json out = Json::array();
    for (Int x : a)
        out.push_back(x);
    return out;
}

Json character(const Character& m) { return Json::array({m.x, m.y}); }

Json cohomology(const CohomologyTriple& h) { return Json::array({h.h0, h.h1, h.h2}); }

Json int_matrix(const IntMatrix& m)
{
    Json out = Json::array();
    for (const auto& row : m)
        out.push_back(row);
    return out;
}

Json symmetry(const HexSymmetry& g)
{
    Json j;
    Json perm = Json::object();
    for (Line l : kLines)
        perm[std::string(line_name(l))] = std::string(line_name(g.apply(l)));
    j["permutation"] = perm;
    Json m = Json::array();
    for (const auto& row : g.matrix())
        m.push_back(Json(row));
    j["matrix"] = m;
    j["order"] = g.order();
    return j;
}

Line line_from(const Json& j)
{
    if (!j.is_string())
        bad("line name is not a string");
    auto l = parse_line(j.get<std::string>());
    if (!l)
        bad("unknown line \"" + j.get<std::string>() + "\"");
    return *l;
}

Json goodness_certificate(const GoodnessCertificate& c)
{
    Json j;
    j["target"] = pic_class(c.target);
    j["target_name"] = describe(c.target);
    j["base"] = pic_class(c.base);
    j["base_name"] = describe(c.base);
    Json steps = Json::array();
    for (const CertificateStep& s : c.steps)
    {
        Json step;
        step["line"] = std::string(line_name(s.line));
        step["intersection"] = s.intersection;
        steps.push_back(step);
    }
    j["steps"] = steps;
    return j;
}

GoodnessCertificate goodness_certificate_from(const Json& j)
{
    GoodnessCertificate c;
    c.target = pic_class_from(field(j, "target"));
    c.base = pic_class_from(field(j, "base"));
    const Json& steps = field(j, "steps");
    if (!steps.is_array())
        bad("steps is not an array");
    for (const Json& s : steps)
        c.steps.push_back({line_from(field(s, "line")), integer(field(s, "intersection"), "intersection")});
    return c;
}

Json difference_class(const DifferenceClass& c)
{
    Json j;
    j["tag"] = std::string(tag_name(c.tag));
    j["case"] = c.case_number;
    j["witness"] = c.witness;
    j["witness_class"] = coeffs(c.witness_class);
    return j;
}

Json atom(const Atom& a)
{
    Json j;
    if (a.is_line_bundle())
    {
        j["kind"] = "line-bundle";
        j["class"] = coeffs(a.divisor);
    }
    else
    {
        j["kind"] = "on-curve";
        j["curve"] = std::string(line_name(a.curve));
        j["twist"] = a.twist;
    }
    return j;
}

Atom atom_from(const Json& j)
{
    const Json& kind = field(j, "kind");
    if (kind == "line-bundle")
        return Atom::line_bundle(coeffs_from(field(j, "class")));
    if (kind == "on-curve")
        return Atom::on_curve(line_from(field(j, "curve")), integer(field(j, "twist"), "twist"));
    bad("unknown atom kind");
}

Json rule_params(const RuleParams& p)
{
    Json j;
    j["kind"] = std::string(rule_kind_name(p.kind));
    switch (p.kind)
    {
    case RuleKind::Restriction:
        j["divisor"] = coeffs(p.divisor);
        j["curve"] = std::string(line_name(p.first));
        break;
    case RuleKind::Koszul:
        j["divisor"] = coeffs(p.divisor);
        j["curve"] = std::string(line_name(p.first));
        j["second_curve"] = std::string(line_name(p.second));
        break;
    case RuleKind::Euler:
        j["curve"] = std::string(line_name(p.first));
        j["twist"] = p.twist;
        break;
    }
    return j;
}

RuleParams rule_params_from(const Json& j)
{
    const Json& kind = field(j, "kind");
    if (!kind.is_string())
        bad("rule kind is not a string");
    auto k = parse_rule_kind(kind.get<std::string>());
    if (!k)
        bad("unknown rule kind");
    RuleParams p;
    p.kind = *k;
    p.first = line_from(field(j, "curve"));
    switch (p.kind)
    {
    case RuleKind::Restriction:
        p.divisor = coeffs_from(field(j, "divisor"));
        break;
    case RuleKind::Koszul:
        p.divisor = coeffs_from(field(j, "divisor"));
        p.second = line_from(field(j, "second_curve"));
        break;
    case RuleKind::Euler:
        p.twist = integer(field(j, "twist"), "twist");
        break;
    }
    return p;
}

Json generation_certificate(const GenerationCertificate& c)
{
    Json j;
    j["target"] = atom(c.target);
    Json steps = Json::array();
    for (const GenerationStep& s : c.steps)
    {
        Json step;
        step["rule"] = rule_params(s.rule);
        step["derived_term"] = s.derived_term;
        Json terms = Json::array();
        for (const Term& t : s.terms)
        {
            Json term = Json::array();
            for (const Atom& a : t)
                term.push_back(atom(a));
            terms.push_back(term);
        }
        step["terms"] = terms;
        steps.push_back(step);
    }
    j["steps"] = steps;
    return j;
}

GenerationCertificate generation_certificate_from(const Json& j)
{
    GenerationCertificate c;
    c.target = atom_from(field(j, "target"));
    const Json& steps = field(j, "steps");
    if (!steps.is_array())
        bad("steps is not an array");
    for (const Json& s : steps)
    {
        GenerationStep step;
        step.rule = rule_params_from(field(s, "rule"));
        step.derived_term = static_cast<int>(integer(field(s, "derived_term"), "derived_term"));
        const Json& terms = field(s, "terms");
        if (!terms.is_array() || terms.size() != 3)
            bad("a step must have exactly three terms");
        for (std::size_t k = 0; k < 3; ++k)
        {
            if (!terms[k].is_array())
                bad("term is not an array");
            for (const Json& a : terms[k])
                step.terms[k].push_back(atom_from(a));
        }
        c.steps.push_back(std::move(step));
    }
    return c;
}

Json subgroup_report(const SubgroupReport& r)
{
    Json j;
    Json gens = Json::array();
    for (const HexSymmetry& g : r.generators)
        gens.push_back(g.to_string());
    j["generators"] = gens;
    j["order"] = r.order;
    j["conjugates"] = r.conjugacy_class_size;
    j["orbits_on_blowdowns"] = partition(r.orbits_on_blowdowns);
    j["orbits_on_jclasses"] = partition(r.orbits_on_jclasses);
    Json lines = Json::array();
    for (const auto& part : r.orbits_on_lines)
    {
        Json names = Json::array();
        for (std::size_t i : part)
            names.push_back(std::string(line_name(kLines[i])));
        lines.push_back(names);
    }
    j["orbits_on_lines"] = lines;
    j["quadratic_center_degrees"] = r.quadratic_center();
    j["cubic_center_degrees"] = r.cubic_center();
    j["invariant"] = r.invariant;
    return j;
}

}   // namespace hexad::json

#include <doctest.h>

#include "hexad/json_io.hpp"
#include "support.hpp"

using namespace hexad;
namespace hj = hexad::json;

TEST_CASE("pic class encoding")
{
    const hj::Json j = hj::pic_class(class_H_prime());
    CHECK(j.dump() == R"x({"basis":"b0=H;b1=M1,b2=M2,b3=M3;form=diag(1,-1,-1,-1)","coeffs":[2,-1,-1,-1]})x");
    CHECK(hj::pic_class_from(j) == class_H_prime());

    hj::Json wrong = j;
    wrong["basis"] = "other";
    CHECK_THROWS_AS(hj::pic_class_from(wrong), std::invalid_argument);
    CHECK_THROWS_AS(hj::coeffs_from(hj::Json::array({1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(hj::coeffs_from(hj::Json::array({1, 2, 3, "x"})), std::invalid_argument);
}

TEST_CASE("property: pic classes round-trip")
{
    for (int trial = 0; trial < 300; ++trial)
    {
        const PicClass d = testing::random_class(1000);
        CHECK(hj::pic_class_from(hj::Json::parse(hj::pic_class(d).dump())) == d);
    }
}

TEST_CASE("property: goodness certificates round-trip byte for byte")
{
    for (const PicClass& d : difference_set())
    {
        const GoodnessCertificate c = goodness_certificate(d);
        const std::string text = hj::goodness_certificate(c).dump();
        const GoodnessCertificate back = hj::goodness_certificate_from(hj::Json::parse(text));
        CHECK(back == c);
        CHECK(hj::goodness_certificate(back).dump() == text);
    }
}

TEST_CASE("property: generation certificates and atoms round-trip")
{
    const Closure c = closure(1);
    for (const Atom& a : c.atoms())
    {
        CHECK(hj::atom_from(hj::atom(a)) == a);
        const GenerationCertificate cert = c.certificate(a);
        const std::string text = hj::generation_certificate(cert).dump();
        const GenerationCertificate back = hj::generation_certificate_from(hj::Json::parse(text));
        CHECK(back.target == cert.target);
        CHECK(back.steps == cert.steps);
        CHECK(hj::generation_certificate(back).dump() == text);
    }
}

TEST_CASE("rule parameters round-trip")
{
    const std::vector<RuleParams> params = {{RuleKind::Restriction, class_H(), Line::M3, Line::L1, 0},
                                            {RuleKind::Koszul, class_of("L1+M2"), Line::L1, Line::L3, 0},
                                            {RuleKind::Euler, PicClass{}, Line::M2, Line::L1, -4}};
    for (const RuleParams& p : params)
        CHECK(hj::rule_params_from(hj::rule_params(p)) == p);
}

TEST_CASE("malformed certificates are rejected")
{
    hj::Json j = hj::goodness_certificate(goodness_certificate(class_H()));
    hj::Json missing = j;
    missing.erase("steps");
    CHECK_THROWS_AS(hj::goodness_certificate_from(missing), std::invalid_argument);
    hj::Json bad_line = j;
    bad_line["steps"][0]["line"] = "L7";
    CHECK_THROWS_AS(hj::goodness_certificate_from(bad_line), std::invalid_argument);
    CHECK_THROWS_AS(hj::atom_from(hj::Json{{"kind", "sheaf"}}), std::invalid_argument);
    CHECK_THROWS_AS(hj::rule_params_from(hj::Json{{"kind", "cone"}, {"curve", "L1"}}), std::invalid_argument);
}

TEST_CASE("symmetry and subgroup encodings are deterministic")
{
    const auto reports = enumerate_subgroups();
    std::string first, second;
    for (const auto& r : reports)
        first += hj::subgroup_report(r).dump();
    for (const auto& r : enumerate_subgroups())
        second += hj::subgroup_report(r).dump();
    CHECK(first == second);
    const hj::Json s = hj::symmetry(sigma());
    CHECK(s["order"] == 6);
    CHECK(s["permutation"]["L1"] == "M2");
}

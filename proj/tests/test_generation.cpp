#include <doctest.h>

#include <algorithm>
#include <set>

#include "hexad/generation.hpp"
#include "support.hpp"

using namespace hexad;

namespace {

const Closure& closure_at(Int w)
{
    static const Closure c1 = closure(1);
    static const Closure c2 = closure(2);
    return w == 1 ? c1 : c2;
}

Atom line_atom(const char* expr) { return Atom::line_bundle(class_of(expr)); }

// Alternating sum over a rule of (rank, first Chern class, Euler
// characteristic), counting multiplicities the way the sequence does.
struct KClass
{
    Int rank = 0;
    PicClass c1;
    Int chi = 0;
};

KClass k_of(const Atom& a)
{
    if (a.is_line_bundle())
        return {1, a.divisor, testing::riemann_roch(a.divisor)};
    return {0, line_class(a.curve), a.twist + 1};
}

void accumulate(KClass& acc, const Atom& a, Int sign)
{
    const KClass k = k_of(a);
    acc.rank += sign * k.rank;
    acc.c1 += sign * k.c1;
    acc.chi += sign * k.chi;
}

}   // namespace

TEST_CASE("rule examples")
{
    // restriction of H to M3 has twist 0
    const auto r = make_rule({RuleKind::Restriction, class_H(), Line::M3, Line::L1, 0});
    REQUIRE(r.has_value());
    CHECK(r->terms[0] == Term{Atom::line_bundle(class_H() - line_class(Line::M3))});
    CHECK(r->terms[1] == Term{Atom::line_bundle(class_H())});
    CHECK(r->terms[2] == Term{Atom::on_curve(Line::M3, 0)});

    // D = E gives O_E(E) with twist -1
    const auto self = make_rule({RuleKind::Restriction, line_class(Line::L2), Line::L2, Line::L1, 0});
    CHECK(self->terms[2] == Term{Atom::on_curve(Line::L2, -1)});

    // koszul needs disjoint lines
    CHECK(make_rule({RuleKind::Koszul, PicClass{}, Line::L1, Line::L3, 0}).has_value());
    CHECK(make_rule({RuleKind::Koszul, PicClass{}, Line::L1, Line::M1, 0}).has_value());
    CHECK_FALSE(make_rule({RuleKind::Koszul, PicClass{}, Line::L1, Line::M2, 0}).has_value());
    CHECK_FALSE(make_rule({RuleKind::Koszul, PicClass{}, Line::M2, Line::M2, 0}).has_value());

    const auto e = make_rule({RuleKind::Euler, PicClass{}, Line::M1, Line::L1, 3});
    CHECK(e->terms[0] == Term{Atom::on_curve(Line::M1, 1)});
    CHECK(e->terms[1] == Term{Atom::on_curve(Line::M1, 2)});
    CHECK(e->terms[2] == Term{Atom::on_curve(Line::M1, 3)});
}

TEST_CASE("rule instances respect the window")
{
    CHECK_THROWS_AS(rule_instances(-1), std::invalid_argument);
    for (Int w : {0, 1})
        for (const TriangleRule& r : rule_instances(w))
            for (const Term& t : r.terms)
                for (const Atom& a : t)
                {
                    if (a.is_line_bundle())
                        CHECK(a.divisor.max_abs() <= w);
                    else
                        CHECK(std::abs(a.twist) <= 3 * w);
                }
}

TEST_CASE("property: every rule instance balances rank, c1 and chi")
{
    for (const TriangleRule& r : rule_instances(1))
    {
        KClass acc;
        for (const Atom& a : r.terms[0])
            accumulate(acc, a, 1);
        const Int mid_mult = r.params.kind == RuleKind::Euler ? 2 : 1;
        for (const Atom& a : r.terms[1])
            accumulate(acc, a, -mid_mult);
        for (const Atom& a : r.terms[2])
            accumulate(acc, a, 1);
        CHECK(acc.rank == 0);
        CHECK(acc.c1.is_zero());
        CHECK(acc.chi == 0);
    }
}

TEST_CASE("seeds are in the closure with empty certificates")
{
    const auto seeds = tilting_seeds();
    CHECK(seeds.size() == 6);
    for (const Atom& s : seeds)
    {
        CHECK(closure_at(2).contains(s));
        CHECK(closure_at(2).depth(s) == 0);
        const GenerationCertificate c = closure_at(2).certificate(s);
        CHECK(c.steps.empty());
        CHECK(verify_generation_certificate(c).ok());
    }
    CHECK(generation_certificate(PicClass{}, 2).steps.empty());
}

TEST_CASE("the named intermediates of the hand derivation are reached")
{
    const Closure& c = closure_at(2);
    CHECK(c.contains(Atom::on_curve(Line::M3, 0)));
    CHECK(c.contains(line_atom("-M3")));
    for (Line m : {Line::M1, Line::M2, Line::M3})
    {
        CHECK(c.contains(Atom::line_bundle(line_class(m))));
        CHECK(c.contains(Atom::on_curve(m, -1)));   // O_M(M)
    }
    for (Line e : kLines)
        for (Int t = -6; t <= 6; ++t)
            CHECK(c.contains(Atom::on_curve(e, t)));
}

TEST_CASE("the certificate for -M3 is the two-step derivation")
{
    const GenerationCertificate c = generation_certificate(class_of("-M3"), 2);
    REQUIRE(c.steps.size() == 2);
    CHECK(c.steps[0].rule.kind == RuleKind::Restriction);
    CHECK(c.steps[0].rule.divisor == class_H());
    CHECK(c.steps[0].rule.first == Line::M3);
    CHECK(c.steps[0].derived_term == 2);
    CHECK(c.steps[0].terms[2] == Term{Atom::on_curve(Line::M3, 0)});
    CHECK(c.steps[1].rule.kind == RuleKind::Restriction);
    CHECK(c.steps[1].rule.divisor.is_zero());
    CHECK(c.steps[1].rule.first == Line::M3);
    CHECK(c.steps[1].derived_term == 0);
    CHECK(verify_generation_certificate(c).ok());
}

TEST_CASE("every line bundle in [-2,2]^4 is certified at window 2")
{
    const Closure& c = closure_at(2);
    std::size_t n = 0;
    for (Int a = -2; a <= 2; ++a)
        for (Int b = -2; b <= 2; ++b)
            for (Int x = -2; x <= 2; ++x)
                for (Int y = -2; y <= 2; ++y)
                {
                    const Atom t = Atom::line_bundle(PicClass({a, b, x, y}));
                    REQUIRE(c.contains(t));
                    const GenerationCertificate cert = c.certificate(t);
                    CHECK(cert.target == t);
                    CHECK(verify_generation_certificate(cert).ok());
                    ++n;
                }
    CHECK(n == 625);
}

TEST_CASE("property: soundness, every closure atom replays")
{
    for (Int w : {1, 2})
    {
        const Closure& c = closure_at(w);
        for (const Atom& a : c.atoms())
        {
            const GenerationCertificate cert = c.certificate(a);
            const GenCheck g = verify_generation_certificate(cert);
            CAPTURE(a.to_string());
            CHECK(g.ok());
            // steps are ordered by depth
            int last = 0;
            for (const GenerationStep& s : cert.steps)
            {
                int d = 0;
                for (const Atom& x : s.terms[static_cast<std::size_t>(s.derived_term)])
                    if (c.contains(x))
                        d = std::max(d, c.depth(x));
                CHECK(d >= last);
                last = std::max(last, d);
            }
        }
    }
}

TEST_CASE("property: closure is monotone in the window")
{
    const Closure c0 = closure(0);
    for (const Atom& a : c0.atoms())
        CHECK(closure_at(1).contains(a));
    for (const Atom& a : closure_at(1).atoms())
        CHECK(closure_at(2).contains(a));
    CHECK(c0.size() <= closure_at(1).size());
    CHECK(closure_at(1).size() <= closure_at(2).size());
}

TEST_CASE("window too small")
{
    CHECK_THROWS_AS(generation_certificate(PicClass({5, 0, 0, 0}), 2), WindowTooSmall);
    CHECK_THROWS_AS(closure_at(1).certificate(Atom::line_bundle(PicClass({2, 0, 0, 0}))), WindowTooSmall);
    CHECK_THROWS_AS(closure_at(1).depth(Atom::line_bundle(PicClass({9, 0, 0, 0}))), WindowTooSmall);
}

TEST_CASE("tampered generation certificates are rejected")
{
    const GenerationCertificate good = generation_certificate(class_of("-M3"), 2);

    SUBCASE("koszul citing lines that meet")
    {
        GenerationCertificate c = good;
        GenerationStep step;
        step.rule = {RuleKind::Koszul, PicClass{}, Line::L1, Line::M2, 0};
        step.derived_term = 0;
        const PicClass L1 = line_class(Line::L1), M2 = line_class(Line::M2);
        step.terms = {Term{Atom::line_bundle(-L1 - M2)},
                      Term{Atom::line_bundle(-L1), Atom::line_bundle(-M2)},
                      Term{Atom::line_bundle(PicClass{})}};
        std::sort(step.terms[1].begin(), step.terms[1].end());
        c.steps.insert(c.steps.begin(), step);
        CHECK(verify_generation_certificate(c).reason == GenReason::InvalidRule);
    }
    SUBCASE("shuffled step order")
    {
        GenerationCertificate c = good;
        std::reverse(c.steps.begin(), c.steps.end());
        CHECK(verify_generation_certificate(c).reason == GenReason::UsedBeforeKnown);
    }
    SUBCASE("claimed terms differ")
    {
        GenerationCertificate c = good;
        c.steps[0].terms[2] = Term{Atom::on_curve(Line::M3, 1)};
        CHECK(verify_generation_certificate(c).reason == GenReason::TermMismatch);
    }
    SUBCASE("derived index out of range")
    {
        GenerationCertificate c = good;
        c.steps[0].derived_term = 3;
        CHECK(verify_generation_certificate(c).reason == GenReason::InvalidRule);
    }
    SUBCASE("target never derived")
    {
        GenerationCertificate c = good;
        c.steps.pop_back();
        CHECK(verify_generation_certificate(c).reason == GenReason::TargetNotReached);
    }
}

TEST_CASE("names and parsing")
{
    CHECK(Atom::on_curve(Line::M3, 0).to_string() == "O_M3(0)");
    CHECK(Atom::line_bundle(PicClass({-1, 0, 0, 1})).to_string() == "O(-1; 0, 0, 1)");
    for (RuleKind k : {RuleKind::Restriction, RuleKind::Koszul, RuleKind::Euler})
        CHECK(parse_rule_kind(rule_kind_name(k)) == k);
    CHECK_FALSE(parse_rule_kind("cone").has_value());
    CHECK(gen_reason_name(GenReason::UsedBeforeKnown) == "used-before-known");
}

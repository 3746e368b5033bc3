#include "hexad/verify.hpp"

#include <exception>

#include "hexad/galois.hpp"
#include "hexad/generation.hpp"
#include "hexad/tilting.hpp"
#include "hexad/toric.hpp"
#include "hexad/vanishing.hpp"

namespace hexad {

namespace {

CheckResult fail(CheckResult r, std::string offender, std::string detail)
{
    r.passed = false;
    r.offender = std::move(offender);
    r.detail = std::move(detail);
    return r;
}

}   // namespace

CheckResult check_lattice_suite()
{
    CheckResult r{"lattice", "hexagon of (-1)-curves, rank-4 Pic, Li+Mj = Lj+Mi, fan matches Pic", true, "", ""};
    try
    {
        check_lattice();
        fan::validate();
    }
    catch (const std::exception& e)
    {
        return fail(r, "", e.what());
    }
    r.detail = "6 lines, form diag(1,-1,-1,-1)";
    return r;
}

CheckResult check_sigma_suite()
{
    CheckResult r{"sigma", "(1+sigma)(1-sigma^3) = 0 on Pic", true, "", ""};
    if (!verify_sigma_identity())
        return fail(r, sigma().to_string(), "matrix is nonzero");
    if (sigma().apply(class_H()) != class_H_prime())
        return fail(r, describe(class_H()), "sigma does not swap H and H'");
    r.detail = "sigma has order " + std::to_string(sigma().order());
    return r;
}

CheckResult check_differences_suite()
{
    CheckResult r{"differences", "each difference has degree in [-3,3], one case shape with witness, "
                                 "and a descent line unless degree is -3", true, "", ""};
    const auto& diffs = difference_set();
    for (const PicClass& d : diffs)
    {
        const Int deg = degree(d);
        if (deg < -3 || deg > 3)
            return fail(r, describe(d), "degree " + std::to_string(deg) + " out of range");
        try
        {
            const DifferenceClass c = classify_difference(d);
            if (c.witness_class != d || class_of(c.witness) != d)
                return fail(r, describe(d), "witness " + c.witness + " has a different class");
        }
        catch (const std::exception& e)
        {
            return fail(r, describe(d), e.what());
        }
        if (deg >= -2)
        {
            try
            {
                const Line e = find_descent_line(d);
                if (intersect(d, line_class(e)) < -1 || !in_difference_set(d - line_class(e)))
                    return fail(r, describe(d), "descent line " + std::string(line_name(e)) + " is invalid");
            }
            catch (const NoDescentLine& e)
            {
                return fail(r, describe(d), e.what());
            }
        }
    }
    r.detail = std::to_string(diffs.size()) + " differences classified";
    return r;
}

CheckResult check_goodness_suite()
{
    CheckResult r{"goodness", "h1 = h2 = 0 on every difference, and its descent certificate verifies", true, "", ""};
    for (const PicClass& d : difference_set())
    {
        const CohomologyTriple h = cohomology(d);
        if (!h.good())
            return fail(r, describe(d), "oracle reports h = [" + std::to_string(h.h0) + "," + std::to_string(h.h1)
                                            + "," + std::to_string(h.h2) + "]");
        const CertCheck c = verify_certificate(goodness_certificate(d));
        if (!c)
            return fail(r, describe(d), std::string(reason_name(c.reason)) + ": " + c.detail);
    }
    r.detail = std::to_string(difference_set().size()) + " classes good by both oracle and certificate";
    return r;
}

CheckResult check_ext_suite()
{
    CheckResult r{"ext", "Ext^1 and Ext^2 of the tilting bundle vanish", true, "", ""};
    const std::vector<PicClass> d = tilting_summands().divisors();
    for (int i : {1, 2})
    {
        const IntMatrix m = ext_table(i);
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = 0; b < m.size(); ++b)
                if (m[a][b] != 0)
                    return fail(r, describe(d[b] - d[a]),
                                "Ext^" + std::to_string(i) + " entry (" + std::to_string(a) + "," + std::to_string(b)
                                    + ") = " + std::to_string(m[a][b]));
    }
    r.detail = "6x6 tables zero in degrees 1 and 2";
    return r;
}

CheckResult check_algebra_suite()
{
    CheckResult r{"algebra", "associative unital algebra with triangular blocks, rad^3 = 0, gldim <= 2, "
                             "unitriangular Cartan matrix, K0 rank 6", true, "", ""};
    try
    {
        const StructureConstantAlgebra alg = build_algebra();
        for (const AlgebraBasisElement& e : alg.basis())
        {
            const std::size_t s = alg.vertex_class(e.source), t = alg.vertex_class(e.target);
            if (s != t && t > s)
                return fail(r, alg.class_labels()[s] + " -> " + alg.class_labels()[t],
                            "morphism below the block diagonal");
        }
        if (!alg.check_associative())
            return fail(r, "", "product is not associative");
        if (!alg.check_unital())
            return fail(r, "", "vertex idempotents do not sum to a unit");
        if (alg.loewy_length() > 3)
            return fail(r, "", "Loewy length " + std::to_string(alg.loewy_length()));
        const int gldim = global_dimension(alg);
        if (gldim > 2)
            return fail(r, "", "global dimension " + std::to_string(gldim));
        const CartanData c = cartan_and_k0(alg);
        if (!is_upper_unitriangular(c.cartan) || (c.determinant != 1 && c.determinant != -1))
            return fail(r, "", "Cartan matrix is not unitriangular");
        if (c.k0_rank != 6)
            return fail(r, "", "K0 rank " + std::to_string(c.k0_rank));

        const TiltingBundle t = tilting_summands();
        const IntMatrix hom = ext_table(0);
        std::size_t recount = 0;
        for (std::size_t a = 0; a < t.summands.size(); ++a)
            for (std::size_t b = 0; b < t.summands.size(); ++b)
                recount += static_cast<std::size_t>(hom[a][b] * t.summands[a].multiplicity * t.summands[b].multiplicity);
        if (recount != alg.dimension())
            return fail(r, "", "dimension " + std::to_string(alg.dimension()) + " but Hom recount gives "
                                   + std::to_string(recount));
        r.detail = "dim " + std::to_string(alg.dimension()) + ", gldim " + std::to_string(gldim) + ", det "
                   + std::to_string(c.determinant);
    }
    catch (const std::exception& e)
    {
        return fail(r, "", e.what());
    }
    return r;
}

CheckResult check_galois_suite()
{
    CheckResult r{"galois", "every hexagon symmetry fixes the tilting summand multiset and acts on the algebra",
                  true, "", ""};
    const auto summands = tilting_summands().summands;
    const StructureConstantAlgebra alg = build_algebra();
    for (const HexSymmetry& g : hexagon_symmetries())
    {
        if (!verify_invariance(summands, {g}))
            return fail(r, g.to_string(), "summand multiset moved");
        const auto perm = induced_basis_permutation(alg, g);
        if (!perm || !is_automorphism(alg, *perm))
            return fail(r, g.to_string(), "no induced algebra automorphism");
    }
    const auto subgroups = enumerate_subgroups();
    for (const SubgroupReport& s : subgroups)
        if (!s.invariant)
            return fail(r, s.generators.empty() ? "id" : s.generators.front().to_string(),
                        "subgroup of order " + std::to_string(s.order) + " moves the bundle");
    r.detail = std::to_string(hexagon_symmetries().size()) + " symmetries, "
               + std::to_string(subgroups.size()) + " subgroup classes";
    return r;
}

CheckResult check_generation_suite(Int window)
{
    CheckResult r{"generation", "every line bundle with coefficients in [-w,w] has a replayable certificate",
                  true, "", ""};
    const Closure cl = closure(window);
    std::size_t n = 0;
    for (Int a = -window; a <= window; ++a)
        for (Int b = -window; b <= window; ++b)
            for (Int c = -window; c <= window; ++c)
                for (Int d = -window; d <= window; ++d)
                {
                    const Atom x = Atom::line_bundle(PicClass({a, b, c, d}));
                    if (!cl.contains(x))
                        return fail(r, x.to_string(), "not reached at window " + std::to_string(window));
                    const GenCheck g = verify_generation_certificate(cl.certificate(x));
                    if (!g)
                        return fail(r, x.to_string(), std::string(gen_reason_name(g.reason)) + ": " + g.detail);
                    ++n;
                }
    r.detail = std::to_string(n) + " classes certified at window " + std::to_string(window);
    return r;
}

std::vector<CheckResult> run_all_checks(Int window)
{
    return {check_lattice_suite(),  check_sigma_suite(),   check_differences_suite(),
            check_goodness_suite(), check_ext_suite(),     check_algebra_suite(),
            check_galois_suite(),   check_generation_suite(window)};
}

}   // namespace hexad

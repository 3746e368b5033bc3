#include "hexad/vanishing.hpp"

#include <algorithm>

#include "hexad/toric.hpp"

namespace hexad {

const std::vector<PicClass>& divisor_list()
{
    static const std::vector<PicClass> list = {
        class_H(),
        class_H_prime(),
        class_of("L1+M2"),
        class_of("L2+M3"),
        class_of("L3+M1"),
        PicClass{},
    };
    return list;
}

const std::vector<PicClass>& difference_set()
{
    static const std::vector<PicClass> set = [] {
        std::vector<PicClass> out;
        for (const PicClass& a : divisor_list())
            for (const PicClass& b : divisor_list())
                out.push_back(a - b);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }();
    return set;
}

bool in_difference_set(const PicClass& d)
{
    const auto& s = difference_set();
    return std::binary_search(s.begin(), s.end(), d);
}

std::string_view tag_name(DifferenceTag t)
{
    switch (t)
    {
    case DifferenceTag::HType: return "H-type";
    case DifferenceTag::HPrimeType: return "H'-type";
    case DifferenceTag::SumOfTwoLines: return "sum-of-two-lines";
    case DifferenceTag::SingleLine: return "single-line";
    case DifferenceTag::ZeroDegreeForm: return "zero-degree-form";
    case DifferenceTag::NegativeLine: return "negative-line";
    case DifferenceTag::NegativeSum: return "negative-sum";
    case DifferenceTag::MinusHType: return "minus-H-type";
    }
    return "?";
}

namespace {

std::string name(Line l) { return std::string(line_name(l)); }
Line L(int i) { return kLines[static_cast<std::size_t>(i - 1)]; }
Line M(int i) { return kLines[static_cast<std::size_t>(i + 2)]; }

}   // namespace

std::vector<std::pair<std::string, PicClass>> candidate_shapes(DifferenceTag tag)
{
    std::vector<std::pair<std::string, PicClass>> out;
    auto lc = [](Line l) { return line_class(l); };
    switch (tag)
    {
    case DifferenceTag::HType:
        out.emplace_back("H", class_H());
        break;
    case DifferenceTag::HPrimeType:
        out.emplace_back("H'", class_H_prime());
        break;
    case DifferenceTag::SumOfTwoLines:
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j)
                    out.emplace_back(name(L(i)) + "+" + name(M(j)), lc(L(i)) + lc(M(j)));
        break;
    case DifferenceTag::SingleLine:
        for (Line l : kLines)
            out.emplace_back(name(l), lc(l));
        break;
    case DifferenceTag::ZeroDegreeForm:
        out.emplace_back("0", PicClass{});
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j)
                    out.emplace_back(name(L(i)) + "-" + name(L(j)), lc(L(i)) - lc(L(j)));
        for (int i = 1; i <= 3; ++i)
            out.emplace_back(name(L(i)) + "-" + name(M(i)), lc(L(i)) - lc(M(i)));
        for (int i = 1; i <= 3; ++i)
            out.emplace_back(name(M(i)) + "-" + name(L(i)), lc(M(i)) - lc(L(i)));
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j)
                    out.emplace_back(name(M(i)) + "-" + name(M(j)), lc(M(i)) - lc(M(j)));
        break;
    case DifferenceTag::NegativeLine:
        for (Line l : kLines)
            out.emplace_back("-" + name(l), -lc(l));
        break;
    case DifferenceTag::NegativeSum:
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j)
                    out.emplace_back("-" + name(L(i)) + "-" + name(M(j)), -lc(L(i)) - lc(M(j)));
        break;
    case DifferenceTag::MinusHType:
        out.emplace_back("-H", -class_H());
        out.emplace_back("-H'", -class_H_prime());
        break;
    }
    return out;
}

DifferenceClass classify_difference(const PicClass& d)
{
    if (!in_difference_set(d))
        throw NotADifference("not a difference of two tilting divisors: " + d.to_string());

    std::vector<DifferenceTag> tags;
    int case_number = 0;
    switch (degree(d))
    {
    case 3: tags = {DifferenceTag::HType, DifferenceTag::HPrimeType}; case_number = 3; break;
    case 2: tags = {DifferenceTag::SumOfTwoLines}; case_number = 2; break;
    case 1: tags = {DifferenceTag::SingleLine}; case_number = 1; break;
    case 0: tags = {DifferenceTag::ZeroDegreeForm}; case_number = 4; break;
    case -1: tags = {DifferenceTag::NegativeLine}; case_number = 5; break;
    case -2: tags = {DifferenceTag::NegativeSum}; case_number = 5; break;
    case -3: tags = {DifferenceTag::MinusHType}; case_number = 5; break;
    default:
        throw std::logic_error("difference of degree " + std::to_string(degree(d)) + " outside [-3, 3]");
    }
    for (DifferenceTag t : tags)
        for (auto& [expr, cls] : candidate_shapes(t))
            if (cls == d)
                return {t, case_number, expr, cls};
    throw std::logic_error("difference " + d.to_string() + " matches no case shape");
}

Line find_descent_line(const PicClass& d)
{
    if (degree(d) <= -3)
        throw NoDescentLine("degree " + std::to_string(degree(d)) + " class " + describe(d)
                            + " is a base case");
    for (Line e : kLines)
        if (intersect(d, line_class(e)) >= -1 && in_difference_set(d - line_class(e)))
            return e;
    throw NoDescentLine("no descent line for " + describe(d));
}

GoodnessCertificate goodness_certificate(const PicClass& d)
{
    if (!in_difference_set(d))
        throw NotADifference("not a difference of two tilting divisors: " + d.to_string());
    GoodnessCertificate cert{d, d, {}};
    PicClass current = d;
    while (degree(current) > -3)
    {
        const Line e = find_descent_line(current);
        cert.steps.push_back({e, intersect(current, line_class(e))});
        current -= line_class(e);
    }
    cert.base = current;
    std::reverse(cert.steps.begin(), cert.steps.end());
    return cert;
}

std::string_view reason_name(CertReason r)
{
    switch (r)
    {
    case CertReason::Ok: return "ok";
    case CertReason::BaseNotGood: return "base-not-good";
    case CertReason::ChainMismatch: return "chain-mismatch";
    case CertReason::IntersectionMismatch: return "intersection-mismatch";
    case CertReason::StepBelowMinusOne: return "step-below-minus-one";
    case CertReason::IntermediateNotGood: return "intermediate-not-good";
    }
    return "?";
}

CertCheck verify_certificate(const GoodnessCertificate& cert)
{
    if (!cohomology(cert.base).good())
        return {CertReason::BaseNotGood, "base " + describe(cert.base) + " has h1 or h2 nonzero"};

    PicClass current = cert.base;
    for (std::size_t k = 0; k < cert.steps.size(); ++k)
    {
        const CertificateStep& s = cert.steps[k];
        current += line_class(s.line);
        const std::string where = "step " + std::to_string(k) + " (" + std::string(line_name(s.line)) + ")";
        if (s.intersection < -1)
            return {CertReason::StepBelowMinusOne,
                    where + " records C.E = " + std::to_string(s.intersection)};
        const Int actual = intersect(current, line_class(s.line));
        if (actual != s.intersection)
            return {CertReason::IntersectionMismatch,
                    where + " records " + std::to_string(s.intersection) + " but C.E = " + std::to_string(actual)};
        if (!cohomology(current).good())
            return {CertReason::IntermediateNotGood, where + ": " + describe(current) + " is not good"};
    }
    if (current != cert.target)
        return {CertReason::ChainMismatch,
                "base plus steps is " + current.to_string() + ", target is " + cert.target.to_string()};
    return {};
}

}   // namespace hexad

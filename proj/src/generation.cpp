#include "hexad/generation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hexad/tilting.hpp"

namespace hexad {

std::string Atom::to_string() const
{
    if (kind == Kind::LineBundle)
        return "O" + divisor.to_string();
    return "O_" + std::string(line_name(curve)) + "(" + std::to_string(twist) + ")";
}

std::size_t AtomHash::operator()(const Atom& a) const noexcept
{
    std::size_t h = PicClassHash{}(a.divisor);
    h = h * 31 + static_cast<std::size_t>(a.kind);
    h = h * 31 + index_of(a.curve);
    h = h * 1000003u ^ std::hash<Int>{}(a.twist);
    return h;
}

std::string_view rule_kind_name(RuleKind k)
{
    switch (k)
    {
    case RuleKind::Restriction: return "restriction";
    case RuleKind::Koszul: return "koszul";
    case RuleKind::Euler: return "euler";
    }
    return "?";
}

std::optional<RuleKind> parse_rule_kind(std::string_view s)
{
    for (RuleKind k : {RuleKind::Restriction, RuleKind::Koszul, RuleKind::Euler})
        if (rule_kind_name(k) == s)
            return k;
    return std::nullopt;
}

namespace {

Term make_term(std::vector<Atom> atoms)
{
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

}   // namespace

std::optional<TriangleRule> make_rule(const RuleParams& p)
{
    TriangleRule r{p, {}};
    const PicClass E = line_class(p.first);
    switch (p.kind)
    {
    case RuleKind::Restriction:
        r.terms = {make_term({Atom::line_bundle(p.divisor - E)}),
                   make_term({Atom::line_bundle(p.divisor)}),
                   make_term({Atom::on_curve(p.first, intersect(p.divisor, E))})};
        return r;
    case RuleKind::Koszul:
    {
        const PicClass F = line_class(p.second);
        if (p.first == p.second || intersect(E, F) != 0)
            return std::nullopt;
        r.terms = {make_term({Atom::line_bundle(p.divisor - E - F)}),
                   make_term({Atom::line_bundle(p.divisor - E), Atom::line_bundle(p.divisor - F)}),
                   make_term({Atom::line_bundle(p.divisor)})};
        return r;
    }
    case RuleKind::Euler:
        r.terms = {make_term({Atom::on_curve(p.first, p.twist - 2)}),
                   make_term({Atom::on_curve(p.first, p.twist - 1)}),
                   make_term({Atom::on_curve(p.first, p.twist)})};
        return r;
    }
    return std::nullopt;
}

bool within_window(const Atom& a, Int window)
{
    if (a.is_line_bundle())
        return a.divisor.max_abs() <= window;
    return (a.twist < 0 ? -a.twist : a.twist) <= 3 * window;
}

std::vector<TriangleRule> rule_instances(Int window)
{
    if (window < 0)
        throw std::invalid_argument("window must be nonnegative");

    std::vector<TriangleRule> out;
    auto keep = [&](const RuleParams& p) {
        auto r = make_rule(p);
        if (!r)
            return;
        for (const Term& t : r->terms)
            for (const Atom& a : t)
                if (!within_window(a, window))
                    return;
        out.push_back(std::move(*r));
    };

    std::vector<PicClass> box;
    for (Int a = -window; a <= window; ++a)
        for (Int b = -window; b <= window; ++b)
            for (Int c = -window; c <= window; ++c)
                for (Int d = -window; d <= window; ++d)
                    box.emplace_back(std::array<Int, 4>{a, b, c, d});

    for (const PicClass& D : box)
        for (Line e : kLines)
            keep({RuleKind::Restriction, D, e, Line::L1, 0});
    for (const PicClass& X : box)
        for (Line e : kLines)
            for (Line f : kLines)
                if (index_of(e) < index_of(f))
                    keep({RuleKind::Koszul, X, e, f, 0});
    for (Line e : kLines)
        for (Int t = -3 * window; t <= 3 * window; ++t)
            keep({RuleKind::Euler, PicClass{}, e, Line::L1, t});
    return out;
}

std::vector<Atom> tilting_seeds()
{
    std::vector<Atom> out;
    for (const Summand& s : tilting_summands().summands)
        out.push_back(Atom::line_bundle(s.divisor));
    return out;
}

Closure::Closure(const std::vector<Atom>& seeds, std::vector<TriangleRule> rules) : rules_(std::move(rules))
{
    for (const Atom& s : seeds)
        depth_.emplace(s, 0);

    auto known_before = [&](const Term& t, int round) {
        for (const Atom& a : t)
        {
            auto it = depth_.find(a);
            if (it == depth_.end() || it->second >= round)
                return false;
        }
        return true;
    };

    for (int round = 1;; ++round)
    {
        bool grew = false;
        for (std::size_t i = 0; i < rules_.size(); ++i)
        {
            const auto& terms = rules_[i].terms;
            for (int k = 0; k < 3; ++k)
            {
                const Term& a = terms[static_cast<std::size_t>((k + 1) % 3)];
                const Term& b = terms[static_cast<std::size_t>((k + 2) % 3)];
                if (!known_before(a, round) || !known_before(b, round))
                    continue;
                for (const Atom& x : terms[static_cast<std::size_t>(k)])
                    if (depth_.emplace(x, round).second)
                    {
                        origin_.emplace(x, Origin{i, k});
                        grew = true;
                    }
            }
        }
        if (!grew)
        {
            rounds_ = round - 1;
            break;
        }
    }
}

int Closure::depth(const Atom& a) const
{
    auto it = depth_.find(a);
    if (it == depth_.end())
        throw WindowTooSmall(a.to_string() + " is not in the closure");
    return it->second;
}

std::vector<Atom> Closure::atoms() const
{
    std::vector<Atom> out;
    for (const auto& [a, d] : depth_)
        out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

GenerationCertificate Closure::certificate(const Atom& target) const
{
    if (!contains(target))
        throw WindowTooSmall(target.to_string() + " is not reached at this window");

    // (rule, term) -> (depth, least derived atom) for ordering.
    std::map<std::pair<std::size_t, int>, std::pair<int, Atom>> needed;
    std::vector<Atom> stack = {target};
    std::set<Atom> visited;
    while (!stack.empty())
    {
        const Atom a = stack.back();
        stack.pop_back();
        if (!visited.insert(a).second)
            continue;
        auto it = origin_.find(a);
        if (it == origin_.end())
            continue;   // seed
        const auto key = std::make_pair(it->second.rule, it->second.term);
        const auto& terms = rules_[key.first].terms;
        const int d = depth_.at(a);
        auto [slot, inserted] = needed.emplace(key, std::make_pair(d, a));
        if (!inserted)
        {
            slot->second.first = std::max(slot->second.first, d);
            slot->second.second = std::min(slot->second.second, a);
        }
        for (int k = 0; k < 3; ++k)
            if (k != key.second)
                for (const Atom& p : terms[static_cast<std::size_t>(k)])
                    stack.push_back(p);
    }

    std::vector<std::pair<std::pair<int, Atom>, std::pair<std::size_t, int>>> order;
    for (const auto& [key, rank] : needed)
        order.emplace_back(rank, key);
    std::sort(order.begin(), order.end());

    GenerationCertificate cert{target, {}};
    for (const auto& [rank, key] : order)
    {
        const TriangleRule& r = rules_[key.first];
        cert.steps.push_back({r.params, key.second, r.terms});
    }
    return cert;
}

Closure closure(Int window)
{
    return Closure(tilting_seeds(), rule_instances(window));
}

GenerationCertificate generation_certificate(const PicClass& d, Int window)
{
    if (d.max_abs() > window)
        throw WindowTooSmall(d.to_string() + " lies outside window " + std::to_string(window));
    return closure(window).certificate(Atom::line_bundle(d));
}

std::string_view gen_reason_name(GenReason r)
{
    switch (r)
    {
    case GenReason::Ok: return "ok";
    case GenReason::InvalidRule: return "invalid-rule";
    case GenReason::TermMismatch: return "term-mismatch";
    case GenReason::UsedBeforeKnown: return "used-before-known";
    case GenReason::TargetNotReached: return "target-not-reached";
    }
    return "?";
}

GenCheck verify_generation_certificate(const GenerationCertificate& cert)
{
    std::set<Atom> known;
    for (const Atom& s : tilting_seeds())
        known.insert(s);

    for (std::size_t i = 0; i < cert.steps.size(); ++i)
    {
        const GenerationStep& step = cert.steps[i];
        const std::string where = "step " + std::to_string(i) + " (" + std::string(rule_kind_name(step.rule.kind)) + ")";
        if (step.derived_term < 0 || step.derived_term > 2)
            return {GenReason::InvalidRule, where + ": derived term index out of range"};
        const auto rule = make_rule(step.rule);
        if (!rule)
            return {GenReason::InvalidRule, where + ": side condition fails"};
        if (rule->terms != step.terms)
            return {GenReason::TermMismatch, where + ": claimed terms differ from the rule"};
        for (int k = 0; k < 3; ++k)
        {
            if (k == step.derived_term)
                continue;
            for (const Atom& a : rule->terms[static_cast<std::size_t>(k)])
                if (!known.count(a))
                    return {GenReason::UsedBeforeKnown, where + ": " + a.to_string() + " is not yet known"};
        }
        for (const Atom& a : rule->terms[static_cast<std::size_t>(step.derived_term)])
            known.insert(a);
    }
    if (!known.count(cert.target))
        return {GenReason::TargetNotReached, cert.target.to_string() + " is never derived"};
    return {};
}

}   // namespace hexad

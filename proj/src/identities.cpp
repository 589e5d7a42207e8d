#include "nearmiss/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace nearmiss {

namespace {

// coeff * (-1)^(n alternating) * lambda1^(slot n), with n left symbolic.
struct Term {
    QuadElem coeff;
    int slot = 0;
    bool alternating = false;
};

using Series = std::vector<Term>;

Series product(const Series& lhs, const Series& rhs) {
    Series out;
    out.reserve(lhs.size() * rhs.size());
    for (const Term& u : lhs) {
        for (const Term& v : rhs) {
            out.push_back(Term{u.coeff * v.coeff, u.slot + v.slot, u.alternating != v.alternating});
        }
    }
    return out;
}

Series power(const Series& base, unsigned exponent) {
    Series out = base;
    for (unsigned i = 1; i < exponent; ++i) out = product(out, base);
    return out;
}

Series concat(Series lhs, const Series& rhs) {
    lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    return lhs;
}

ExpansionTable collect(const Series& series, const Integer& d) {
    ExpansionTable table;
    std::map<int, bool> seen;
    for (int slot : ExpansionTable::kSlots) {
        table.entries.emplace(slot, ExpansionSlot{QuadElem::zero(d), false});
    }
    for (const Term& t : series) {
        auto it = table.entries.find(t.slot);
        if (it == table.entries.end()) {
            throw std::logic_error("expansion produced non-canonical slot " +
                                   std::to_string(t.slot));
        }
        if (seen[t.slot] && it->second.alternating != t.alternating) {
            throw std::logic_error("slot " + std::to_string(t.slot) + " mixes parities");
        }
        seen[t.slot] = true;
        it->second.alternating = t.alternating;
        it->second.coeff += t.coeff;
    }
    return table;
}

void require(bool holds, const char* relation) {
    if (!holds) {
        throw std::invalid_argument(std::string("constants violate ") + relation +
                                    "; cannot expand in powers of lambda1");
    }
}

QuadElem embed(const Rational& r, const QuadElem& like) {
    return QuadElem(r, like.discriminant());
}

ExpansionTable make_table(QuadElem s4, QuadElem s2, QuadElem s0, QuadElem sm2,
                          QuadElem sm4) {
    ExpansionTable table;
    table.entries.emplace(4, ExpansionSlot{std::move(s4), false});
    table.entries.emplace(2, ExpansionSlot{std::move(s2), true});
    table.entries.emplace(0, ExpansionSlot{std::move(s0), false});
    table.entries.emplace(-2, ExpansionSlot{std::move(sm2), true});
    table.entries.emplace(-4, ExpansionSlot{std::move(sm4), false});
    return table;
}

IdentityCheck check(std::string name, QuadElem left, QuadElem right) {
    const bool equal = left == right;
    return IdentityCheck{std::move(name), std::move(left), std::move(right), equal};
}

} // namespace

bool ExpansionTable::well_formed() const {
    if (entries.size() != kSlots.size()) return false;
    return std::all_of(kSlots.begin(), kSlots.end(),
                       [this](int slot) { return entries.contains(slot); });
}

const ExpansionSlot& ExpansionTable::at(int slot) const {
    auto it = entries.find(slot);
    if (it == entries.end()) {
        throw std::invalid_argument("expansion table has no slot " + std::to_string(slot));
    }
    return it->second;
}

ExpansionTable expand_lhs(const ClosedFormConstants& k) {
    const Integer& d = k.lambda1.discriminant();
    require(k.lambda1 * k.lambda2 == QuadElem(Rational(-1), d), "lambda1 * lambda2 = -1");

    // lambda2^n = (-1)^n lambda1^-n
    const Series x{Term{k.a, 1, false}, Term{k.b, -1, true}};
    const Series y{Term{k.c, 1, false}, Term{k.d, -1, true}};
    const Series shift{Term{QuadElem(Rational(-kResidual), d), 0, false}};
    return collect(concat(concat(power(x, 4), power(y, 4)), shift), d);
}

ExpansionTable expand_rhs(const ClosedFormConstants& k) {
    const Integer& d = k.lambda1.discriminant();
    require(k.mu1 == k.lambda1 * k.lambda1, "mu1 = lambda1^2");
    require(k.mu1 * k.mu2 == QuadElem::one(d), "mu1 * mu2 = 1");

    const Series z{Term{k.e, 2, false}, Term{k.f, -2, false}, Term{embed(k.g, k.e), 0, true}};
    return collect(power(z, 2), d);
}

ExpansionTable stated_lhs(const ClosedFormConstants& k) {
    const QuadElem& a = k.a;
    const QuadElem& b = k.b;
    const QuadElem& c = k.c;
    const QuadElem& d = k.d;
    const Rational four(4);
    const Rational six(6);
    return make_table(pow(a, 4) + pow(c, 4),
                      four * pow(a, 3) * b + four * pow(c, 3) * d,
                      six * pow(a, 2) * pow(b, 2) + six * pow(c, 2) * pow(d, 2) +
                          Rational(-kResidual),
                      four * a * pow(b, 3) + four * c * pow(d, 3),
                      pow(b, 4) + pow(d, 4));
}

ExpansionTable stated_rhs(const ClosedFormConstants& k) {
    const Rational two(2);
    const QuadElem g = embed(k.g, k.e);
    return make_table(k.e * k.e,
                      two * k.e * g,
                      two * k.e * k.f + g * g,
                      two * k.f * g,
                      k.f * k.f);
}

bool tables_equal(const ExpansionTable& lhs, const ExpansionTable& rhs) {
    if (!lhs.well_formed() || !rhs.well_formed()) {
        throw std::invalid_argument("expansion table must hold exactly the slots 4, 2, 0, -2, -4");
    }
    return std::all_of(ExpansionTable::kSlots.begin(), ExpansionTable::kSlots.end(),
                       [&](int slot) { return lhs.at(slot) == rhs.at(slot); });
}

QuadElem evaluate(const ExpansionTable& table, std::size_t n, const QuadElem& lambda1) {
    QuadElem total = QuadElem::zero(lambda1.discriminant());
    const bool odd = n % 2 == 1;
    for (const auto& [slot, entry] : table.entries) {
        QuadElem term = entry.coeff * pow(lambda1, static_cast<std::int64_t>(slot) *
                                                       static_cast<std::int64_t>(n));
        if (entry.alternating && odd) term = -term;
        total += term;
    }
    return total;
}

std::vector<IdentityCheck> verify_five_identities(const ClosedFormConstants& k) {
    const ExpansionTable lhs = stated_lhs(k);
    const ExpansionTable rhs = stated_rhs(k);
    std::vector<IdentityCheck> out;
    out.push_back(check("e^2 = a^4 + c^4", rhs.at(4).coeff, lhs.at(4).coeff));
    out.push_back(check("f^2 = b^4 + d^4", rhs.at(-4).coeff, lhs.at(-4).coeff));
    out.push_back(check("2eg = 4a^3b + 4c^3d", rhs.at(2).coeff, lhs.at(2).coeff));
    out.push_back(check("2fg = 4ab^3 + 4cd^3", rhs.at(-2).coeff, lhs.at(-2).coeff));
    out.push_back(check("2ef + g^2 = 6a^2b^2 + 6c^2d^2 - 8", rhs.at(0).coeff, lhs.at(0).coeff));
    return out;
}

std::vector<IdentityCheck> verify_root_identities(const ClosedFormConstants& k) {
    const Integer& d = k.lambda1.discriminant();
    std::vector<IdentityCheck> out;
    out.push_back(check("lambda1*lambda2 = -1", k.lambda1 * k.lambda2, QuadElem(Rational(-1), d)));
    out.push_back(check("mu1 = lambda1^2", k.mu1, pow(k.lambda1, 2)));
    out.push_back(check("mu1*mu2 = 1", k.mu1 * k.mu2, QuadElem::one(d)));
    return out;
}

bool IdentityReport::all_passed() const {
    auto ok = [](const IdentityCheck& c) { return c.equal; };
    return std::all_of(five.begin(), five.end(), ok) && std::all_of(roots.begin(), roots.end(), ok) &&
           expansion_error.empty() && expansions_equal;
}

IdentityReport run_identity_suite(const ClosedFormConstants& k) {
    IdentityReport report;
    report.five = verify_five_identities(k);
    report.roots = verify_root_identities(k);
    try {
        report.lhs_table = expand_lhs(k);
        report.rhs_table = expand_rhs(k);
        report.expansions_equal = tables_equal(report.lhs_table, report.rhs_table);
    } catch (const std::invalid_argument& err) {
        report.expansion_error = err.what();
    }
    return report;
}

} // namespace nearmiss

#pragma once

// Exact verification that x_n^4 + y_n^4 - 8 = z_n^2 holds for every n.
//
// Both sides expand into five terms c * (+-1)^n * lambda1^(k n) with
// k in {4, 2, 0, -2, -4}. Matching the coefficient and the parity flag of
// every slot proves the identity for all n at once.

#include "nearmiss/quad.hpp"
#include "nearmiss/sequences.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace nearmiss {

struct ExpansionSlot {
    QuadElem coeff;
    /// The term carries an extra factor (-1)^n.
    bool alternating = false;

    friend bool operator==(const ExpansionSlot&, const ExpansionSlot&) = default;
};

struct ExpansionTable {
    static constexpr std::array<int, 5> kSlots{4, 2, 0, -2, -4};

    /// slot k -> coefficient of lambda1^(k n).
    std::map<int, ExpansionSlot> entries;

    /// Exactly the five canonical slots are present.
    bool well_formed() const;

    const ExpansionSlot& at(int slot) const;
};

/// x_n^4 + y_n^4 - 8 by multiplying out (a l1^n + b l2^n)^4 and
/// (c l1^n + d l2^n)^4 term by term, rewriting l2^n = (-1)^n l1^-n.
/// Throws std::invalid_argument if lambda1 * lambda2 != -1, since the
/// rewrite is then invalid.
ExpansionTable expand_lhs(const ClosedFormConstants& k);

/// z_n^2 by squaring e mu1^n + f mu2^n + (-1)^n g with mu1 = l1^2 and
/// mu2 = l1^-2. Throws std::invalid_argument if those relations fail.
ExpansionTable expand_rhs(const ClosedFormConstants& k);

/// The left table assembled directly from the coefficient formulas
/// a^4 + c^4, 4a^3b + 4c^3d, 6a^2b^2 + 6c^2d^2 - 8, 4ab^3 + 4cd^3, b^4 + d^4.
ExpansionTable stated_lhs(const ClosedFormConstants& k);

/// The right table from e^2, 2eg, 2ef + g^2, 2fg, f^2.
ExpansionTable stated_rhs(const ClosedFormConstants& k);

/// Slot-by-slot equality of coefficients and parity flags. Throws
/// std::invalid_argument if either table is not well formed.
bool tables_equal(const ExpansionTable& lhs, const ExpansionTable& rhs);

/// Sums the table at index n: sum of coeff * (-1)^(n alt) * lambda1^(k n).
QuadElem evaluate(const ExpansionTable& table, std::size_t n, const QuadElem& lambda1);

struct IdentityCheck {
    std::string name;
    QuadElem left;
    QuadElem right;
    bool equal = false;
};

/// e^2 = a^4 + c^4, f^2 = b^4 + d^4, 2eg = 4a^3b + 4c^3d,
/// 2fg = 4ab^3 + 4cd^3, 2ef + g^2 = 6a^2b^2 + 6c^2d^2 - 8, in that order.
std::vector<IdentityCheck> verify_five_identities(const ClosedFormConstants& k);

/// lambda1 lambda2 = -1, mu1 = lambda1^2, mu1 mu2 = 1, in that order.
std::vector<IdentityCheck> verify_root_identities(const ClosedFormConstants& k);

struct IdentityReport {
    std::vector<IdentityCheck> five;
    std::vector<IdentityCheck> roots;
    /// Set when the formal expansion could not be built (bad root relations).
    std::string expansion_error;
    ExpansionTable lhs_table;
    ExpansionTable rhs_table;
    bool expansions_equal = false;

    bool all_passed() const;
};

IdentityReport run_identity_suite(const ClosedFormConstants& k);

} // namespace nearmiss

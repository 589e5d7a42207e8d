#pragma once

// The family of near-solutions x^4 + y^4 - 8 = z^2.
//
// x and y follow u(n) = 48 u(n-1) + u(n-2); z follows
// z(n) = 2306 z(n-1) - z(n-2) + (-1)^n 192. Indexing starts at n = 0 with
// (22, 23, 717), and the sign of the forcing term is taken at the index
// being produced. Closed forms live in Q(sqrt(577)).

#include "nearmiss/integer.hpp"
#include "nearmiss/quad.hpp"
#include "nearmiss/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nearmiss {

inline constexpr long long kDiscriminant = 577;
inline constexpr long long kResidual = 8;

struct Triplet {
    std::size_t n = 0;
    Integer x;
    Integer y;
    Integer z;

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// The two leading triplets consumed by the recurrences.
struct Seeds {
    Triplet first;
    Triplet second;

    /// (22, 23, 717) at n = 0 and (1058, 1103, 1653213) at n = 1.
    static Seeds standard();
};

/// Triplets for n = 0 .. count-1. Throws std::invalid_argument for count == 0.
std::vector<Triplet> gen_recurrence(std::size_t count, const Seeds& seeds = Seeds::standard());

/// x^4 + y^4 - 8 - z^2, exactly.
Integer residual(const Integer& x, const Integer& y, const Integer& z);

struct ClosedFormConstants {
    QuadElem lambda1;
    QuadElem lambda2;
    QuadElem mu1;
    QuadElem mu2;
    QuadElem a;
    QuadElem b;
    QuadElem c;
    QuadElem d;
    QuadElem e;
    QuadElem f;
    Rational g;

    /// lambda1 = 24 + sqrt(577), a = 11 + 265/sqrt(577),
    /// c = 23/2 + 551/(2 sqrt(577)), e = 413661/1154 + 17221/1154 sqrt(577),
    /// g = 48/577; the second member of each pair is the conjugate and
    /// mu1 = 1153 + 48 sqrt(577).
    static ClosedFormConstants standard();
};

/// Raised when a closed form fails to land on an integer. The algebra
/// guarantees exact cancellation, so this always means a bug or bad constants.
class ClosedFormInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Every intermediate of the closed-form evaluation at one index.
struct ClosedFormTrace {
    std::size_t n = 0;
    QuadElem lambda1_pow;  // lambda1^n
    QuadElem lambda2_pow;  // lambda2^n
    QuadElem a_term;       // a lambda1^n
    QuadElem b_term;       // b lambda2^n
    QuadElem c_term;       // c lambda1^n
    QuadElem d_term;       // d lambda2^n
    QuadElem x_exact;      // a_term + b_term
    QuadElem y_exact;      // c_term + d_term
    QuadElem mu1_pow;
    QuadElem mu2_pow;
    QuadElem e_term;
    QuadElem f_term;
    Rational g_term;       // (-1)^n g
    QuadElem z_exact;
    Integer x;
    Integer y;
    Integer z;
};

ClosedFormTrace closed_form_trace(std::size_t n,
                                  const ClosedFormConstants& k = ClosedFormConstants::standard());

std::pair<Integer, Integer> closed_form_xy(
    std::size_t n, const ClosedFormConstants& k = ClosedFormConstants::standard());

Integer closed_form_z(std::size_t n,
                      const ClosedFormConstants& k = ClosedFormConstants::standard());

struct VerifyRow {
    std::size_t n = 0;
    Integer residual;
    bool residual_ok = false;
    /// Recurrence and closed form agree on x, y and z.
    bool closed_form_ok = false;
    /// Empty unless the closed form threw ClosedFormInconsistency.
    std::string closed_form_error;

    bool ok() const noexcept { return residual_ok && closed_form_ok; }
};

/// Checks the residual and closed-form agreement for n < count.
std::vector<VerifyRow> verify_family(std::size_t count, const Seeds& seeds = Seeds::standard(),
                                     const ClosedFormConstants& k = ClosedFormConstants::standard());

} // namespace nearmiss

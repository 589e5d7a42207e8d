#include "nearmiss/sequences.hpp"

#include <string>

namespace nearmiss {

namespace {

Integer exact_integer(const QuadElem& value, const char* what, std::size_t n) {
    if (!value.is_rational()) {
        throw ClosedFormInconsistency(std::string(what) + "(" + std::to_string(n) +
                                      ") has a non-vanishing sqrt part: " + value.to_string());
    }
    if (!value.rational_part().is_integer()) {
        throw ClosedFormInconsistency(std::string(what) + "(" + std::to_string(n) +
                                      ") is not an integer: " + value.to_string());
    }
    return value.rational_part().num();
}

Integer fourth(const Integer& v) {
    Integer sq = v * v;
    return sq * sq;
}

} // namespace

Seeds Seeds::standard() {
    return Seeds{Triplet{0, 22, 23, 717}, Triplet{1, 1058, 1103, 1653213}};
}

std::vector<Triplet> gen_recurrence(std::size_t count, const Seeds& seeds) {
    if (count == 0) throw std::invalid_argument("count must be at least 1");

    std::vector<Triplet> out;
    out.reserve(count);
    out.push_back(seeds.first);
    out.back().n = 0;
    if (count == 1) return out;
    out.push_back(seeds.second);
    out.back().n = 1;

    const Integer xy_step = 48;
    const Integer z_step = 2306;
    const Integer forcing = 192;
    for (std::size_t n = 2; n < count; ++n) {
        const Triplet& prev = out[n - 1];
        const Triplet& prev2 = out[n - 2];
        Triplet next;
        next.n = n;
        next.x = xy_step * prev.x + prev2.x;
        next.y = xy_step * prev.y + prev2.y;
        next.z = z_step * prev.z - prev2.z;
        if (n % 2 == 0) {
            next.z += forcing;
        } else {
            next.z -= forcing;
        }
        out.push_back(std::move(next));
    }
    return out;
}

Integer residual(const Integer& x, const Integer& y, const Integer& z) {
    return fourth(x) + fourth(y) - Integer(kResidual) - z * z;
}

ClosedFormConstants ClosedFormConstants::standard() {
    const Integer d = kDiscriminant;
    QuadElem lambda1(Rational(24), Rational(1), d);
    QuadElem mu1(Rational(1153), Rational(48), d);
    // Denominators are rationalized: 265/sqrt(577) = (265/577) sqrt(577),
    // 551/(2 sqrt(577)) = (551/1154) sqrt(577).
    QuadElem a(Rational(11), Rational(265, 577), d);
    QuadElem c(Rational(23, 2), Rational(551, 1154), d);
    QuadElem e(Rational(413661, 1154), Rational(17221, 1154), d);
    return ClosedFormConstants{
        lambda1, conj(lambda1), mu1, conj(mu1), a, conj(a), c, conj(c), e, conj(e),
        Rational(48, 577),
    };
}

ClosedFormTrace closed_form_trace(std::size_t n, const ClosedFormConstants& k) {
    const auto exponent = static_cast<std::int64_t>(n);
    QuadElem lambda1_pow = pow(k.lambda1, exponent);
    QuadElem lambda2_pow = pow(k.lambda2, exponent);
    QuadElem a_term = k.a * lambda1_pow;
    QuadElem b_term = k.b * lambda2_pow;
    QuadElem c_term = k.c * lambda1_pow;
    QuadElem d_term = k.d * lambda2_pow;
    QuadElem x_exact = a_term + b_term;
    QuadElem y_exact = c_term + d_term;
    QuadElem mu1_pow = pow(k.mu1, exponent);
    QuadElem mu2_pow = pow(k.mu2, exponent);
    QuadElem e_term = k.e * mu1_pow;
    QuadElem f_term = k.f * mu2_pow;
    Rational g_term = n % 2 == 0 ? k.g : -k.g;
    QuadElem z_exact = e_term + f_term + g_term;

    Integer x = exact_integer(x_exact, "x", n);
    Integer y = exact_integer(y_exact, "y", n);
    Integer z = exact_integer(z_exact, "z", n);
    if (z.sign() <= 0) {
        throw ClosedFormInconsistency("z(" + std::to_string(n) + ") is not positive: " +
                                      z.to_string());
    }
    return ClosedFormTrace{n,      lambda1_pow, lambda2_pow, a_term,  b_term,  c_term,
                           d_term, x_exact,     y_exact,     mu1_pow, mu2_pow, e_term,
                           f_term, g_term,      z_exact,     x,       y,       z};
}

std::pair<Integer, Integer> closed_form_xy(std::size_t n, const ClosedFormConstants& k) {
    const auto exponent = static_cast<std::int64_t>(n);
    const QuadElem l1 = pow(k.lambda1, exponent);
    const QuadElem l2 = pow(k.lambda2, exponent);
    return {exact_integer(k.a * l1 + k.b * l2, "x", n),
            exact_integer(k.c * l1 + k.d * l2, "y", n)};
}

Integer closed_form_z(std::size_t n, const ClosedFormConstants& k) {
    const auto exponent = static_cast<std::int64_t>(n);
    const Rational sign_g = n % 2 == 0 ? k.g : -k.g;
    Integer z = exact_integer(k.e * pow(k.mu1, exponent) + k.f * pow(k.mu2, exponent) + sign_g,
                              "z", n);
    if (z.sign() <= 0) {
        throw ClosedFormInconsistency("z(" + std::to_string(n) + ") is not positive: " +
                                      z.to_string());
    }
    return z;
}

std::vector<VerifyRow> verify_family(std::size_t count, const Seeds& seeds,
                                     const ClosedFormConstants& k) {
    const std::vector<Triplet> family = gen_recurrence(count, seeds);
    std::vector<VerifyRow> rows;
    rows.reserve(family.size());
    for (const Triplet& t : family) {
        VerifyRow row;
        row.n = t.n;
        row.residual = residual(t.x, t.y, t.z);
        row.residual_ok = row.residual.is_zero();
        try {
            const auto [x, y] = closed_form_xy(t.n, k);
            row.closed_form_ok = x == t.x && y == t.y && closed_form_z(t.n, k) == t.z;
        } catch (const ClosedFormInconsistency& err) {
            row.closed_form_error = err.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace nearmiss

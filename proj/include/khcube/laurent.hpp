#pragma once

#include <map>
#include <string>
#include <vector>

#include "khcube/chromhom.hpp"
#include "khcube/errors.hpp"
#include "khcube/linkdiag.hpp"

namespace khcube {

/// Exact Laurent polynomial in q with integer coefficients. No zero
/// coefficient is ever stored; equality is coefficient-wise.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long long coeff, int exponent);

    void add_term(int exponent, long long coeff);
    long long coeff(int exponent) const;
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, long long>& coeffs() const { return coeffs_; }

    /// Substitutes q -> q^-1 (negates every exponent).
    LaurentPoly inverted() const;

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator-(const LaurentPoly& p);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Terms by descending exponent, `c*q^e` with q^0 and unit coefficients
    /// elided, e.g. `1 + q^-2 + q^-4 + q^-6`.
    std::string str() const;

private:
    std::map<int, long long> coeffs_;
};

enum class LpOp { add, multiply, negate_first };

LaurentPoly lp_arith(const LaurentPoly& p, const LaurentPoly& q, LpOp op);

/// Ordinary polynomial in t, coefficients lowest degree first; the trailing
/// coefficient is nonzero unless the polynomial is zero.
struct IntPoly {
    std::vector<long long> coeffs;

    void normalize();
    long long eval(long long t) const;
    std::string str() const;
    friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

/// Graded Euler characteristic of the Khovanov complex evaluated directly as
/// the state sum over all smoothings, without building the complex. Serves
/// as the independent check on the homology pipeline.
LaurentPoly jones_state_sum(const LinkDiagram& d);

/// Chromatic polynomial P_G(t) via the edge-subset state sum.
IntPoly chromatic_state_sum(const AbstractGraph& g);

/// Brute-force count of proper t-colorings; guarded at t^|V| <= 10^7.
long long count_proper_colorings(const AbstractGraph& g, long long t);

/// P(1+q) as a Laurent polynomial, for Euler-characteristic cross-checks.
LaurentPoly eval_at_one_plus_q(const IntPoly& p);

} // namespace khcube

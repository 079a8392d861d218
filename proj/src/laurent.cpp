#include "khcube/laurent.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>

namespace khcube {

LaurentPoly LaurentPoly::monomial(long long coeff, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

void LaurentPoly::add_term(int exponent, long long coeff) {
    if (coeff == 0)
        return;
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end()) {
        coeffs_.emplace(exponent, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

long long LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        r.coeffs_.emplace(-e, c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    for (const auto& [e, c] : q.coeffs_)
        r.add_term(e, c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r;
    for (const auto& [e1, c1] : p.coeffs_)
        for (const auto& [e2, c2] : q.coeffs_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.coeffs_)
        r.coeffs_.emplace(e, -c);
    return r;
}

namespace {

std::string render_terms(const std::map<int, long long>& coeffs, const std::string& var) {
    if (coeffs.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        const auto [e, c] = *it;
        const long long mag = std::llabs(c);
        std::string piece;
        if (e == 0) {
            piece = std::to_string(mag);
        } else {
            if (mag != 1)
                piece = std::to_string(mag) + "*";
            piece += (e == 1) ? var : var + "^" + std::to_string(e);
        }
        if (first) {
            out += (c < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

} // namespace

std::string LaurentPoly::str() const { return render_terms(coeffs_, "q"); }

LaurentPoly lp_arith(const LaurentPoly& p, const LaurentPoly& q, LpOp op) {
    switch (op) {
    case LpOp::add:
        return p + q;
    case LpOp::multiply:
        return p * q;
    case LpOp::negate_first:
        return -p;
    }
    throw contract_error("lp_arith: unknown operation");
}

void IntPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

long long IntPoly::eval(long long t) const {
    long long acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

std::string IntPoly::str() const {
    std::map<int, long long> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0)
            terms[static_cast<int>(k)] = coeffs[k];
    return render_terms(terms, "t");
}

LaurentPoly jones_state_sum(const LinkDiagram& d) {
    require_valid(d);
    const auto signs = crossing_signs(d);
    const int n = static_cast<int>(d.crossings.size());
    if (n > 30)
        throw guard_error("jones_state_sum: more than 30 crossings");

    // (q + q^-1)^k cached by circle count
    LaurentPoly loop;
    loop.add_term(1, 1);
    loop.add_term(-1, 1);
    std::vector<LaurentPoly> loop_pow{LaurentPoly::monomial(1, 0)};

    LaurentPoly total;
    std::vector<int> alpha(n, 0);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        for (int k = 0; k < n; ++k)
            alpha[k] = (bits >> k) & 1;
        const int weight = std::popcount(bits);
        const int circles = resolve(d, alpha).circle_count;
        while (static_cast<int>(loop_pow.size()) <= circles)
            loop_pow.push_back(loop_pow.back() * loop);

        const int sign = ((weight - signs.n_minus) % 2 + 2) % 2 == 0 ? 1 : -1;
        const int shift = weight + signs.n_plus - 2 * signs.n_minus;
        total = total + LaurentPoly::monomial(sign, shift) * loop_pow[circles];
    }
    return total;
}

IntPoly chromatic_state_sum(const AbstractGraph& g) {
    require_valid(g, /*reject_loops=*/true);
    const int n = static_cast<int>(g.edges.size());
    if (n > 30)
        throw guard_error("chromatic_state_sum: more than 30 edges");

    IntPoly p;
    p.coeffs.assign(g.vertex_count + 1, 0);
    std::vector<int> subset;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        subset.clear();
        for (int k = 0; k < n; ++k)
            if ((bits >> k) & 1)
                subset.push_back(k);
        const int k = spanning_components(g, subset);
        p.coeffs[k] += (subset.size() % 2 == 0) ? 1 : -1;
    }
    p.normalize();
    return p;
}

long long count_proper_colorings(const AbstractGraph& g, long long t) {
    require_valid(g, /*reject_loops=*/false);
    if (t < 0)
        throw contract_error("count_proper_colorings: t must be nonnegative");
    if (g.vertex_count == 0)
        return 1;
    if (t == 0)
        return 0;

    double budget = 1.0;
    for (int v = 0; v < g.vertex_count; ++v)
        budget *= static_cast<double>(t);
    if (budget > 1e7)
        throw guard_error("count_proper_colorings: t^|V| exceeds 10^7");

    std::vector<long long> color(g.vertex_count, 0);
    long long count = 0;
    while (true) {
        bool proper = true;
        for (const auto& [u, v] : g.edges)
            if (color[u] == color[v]) {
                proper = false;
                break;
            }
        if (proper)
            ++count;
        int pos = 0;
        while (pos < g.vertex_count && ++color[pos] == t)
            color[pos++] = 0;
        if (pos == g.vertex_count)
            break;
    }
    return count;
}

LaurentPoly eval_at_one_plus_q(const IntPoly& p) {
    LaurentPoly one_plus_q;
    one_plus_q.add_term(0, 1);
    one_plus_q.add_term(1, 1);
    LaurentPoly acc;
    LaurentPoly power = LaurentPoly::monomial(1, 0);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        if (p.coeffs[k] != 0)
            acc = acc + LaurentPoly::monomial(p.coeffs[k], 0) * power;
        power = power * one_plus_q;
    }
    return acc;
}

} // namespace khcube

// Exact Laurent polynomials in one variable over arbitrary-precision
// integers, together with the three ring symmetries used throughout:
//
//   bar            v |-> v^{-1}
//   sigma          v |-> -v^{-1}
//   subst_neg_inv  v |-> -t^{-1}   (result read as a polynomial in t)
//
// Coefficients are never reduced mod p; characteristic only ever enters
// through the choice of input tables elsewhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>

namespace mixhecke {

using Int = boost::multiprecision::cpp_int;

class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(Int c) { return monomial(std::move(c), 0); }

    static LaurentPoly monomial(Int coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.coeffs_.emplace(exp, std::move(coeff));
        return p;
    }

    // The variable v itself.
    static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return coeffs_.empty(); }

    // Zero for absent exponents.
    Int coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    // Support bounds; only meaningful on nonzero polynomials.
    int min_exp() const { return coeffs_.begin()->first; }
    int max_exp() const { return coeffs_.rbegin()->first; }

    const std::map<int, Int>& terms() const { return coeffs_; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend LaurentPoly operator*(const Int& k, const LaurentPoly& a) {
        LaurentPoly r;
        if (k == 0) return r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_.emplace(e, k * c);
        return r;
    }

    void add_term(int exp, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    // Substitute v = 1.
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    bool has_nonnegative_coeffs() const {
        for (const auto& [e, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    // All exponents congruent to `parity` mod 2.
    bool supported_in_parity(int parity) const {
        for (const auto& [e, c] : coeffs_)
            if (((e - parity) % 2 + 2) % 2 != 0) return false;
        return true;
    }

    // Canonical text form: `c*v^k` terms joined by `+`, exponents ascending.
    // This is also the CSV cell format.
    std::string to_string(const char* var = "v") const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : coeffs_) {
            if (!s.empty()) s += '+';
            s += c.str();
            s += '*';
            s += var;
            s += '^';
            s += std::to_string(e);
        }
        return s;
    }

  private:
    std::map<int, Int> coeffs_; // exponent -> nonzero coefficient
};

// v |-> v^{-1}; matches Verdier duality on Tate twists.
inline LaurentPoly bar(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
    return r;
}

// v |-> -v; auxiliary sign twist.
inline LaurentPoly negate_variable(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, (e % 2 != 0) ? Int(-c) : c);
    return r;
}

// v |-> -v^{-1}; the involution induced by exchanging the internal shift
// with the Tate twist.
inline LaurentPoly sigma(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(-e, (e % 2 != 0) ? Int(-c) : c);
    return r;
}

// v |-> -t^{-1}; bridges Euler pairings to graded Hom dimensions. The
// result is a Laurent polynomial in the new variable t (same
// representation, different reading).
inline LaurentPoly subst_neg_inv(const LaurentPoly& p) { return sigma(p); }

} // namespace mixhecke

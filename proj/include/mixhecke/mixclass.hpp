// Character classes of the six object families living on a flag variety
// and its Langlands-dual partner, and the operators connecting them:
// twists, duality, convolution, projection to/from partial flag varieties,
// Koszul self-duality kappa, Ringel duality, the reciprocity solve for
// simple characters, the parity-perversity criterion, graded Hom Hilbert
// series, and degrading to the group algebra.
//
// Convention ledger (fixed once, calibrated by the SL(2) oracle in the
// homotopy module):
//
//   ch(std_w) = H_w,   <1> -> v,   [1] -> -1,   {1} -> -v^{-1},
//   Verdier duality -> bar,   parity_class(w) = sigma(table entry w).
//
// A MixedContext couples a Coxeter system with its dual, one Hecke algebra
// on each side, and a p-canonical table on each side (synthesized from the
// KL algorithm in characteristic 0).  Both sides share one element
// enumeration: the dual system has the same Coxeter matrix, hence the same
// normal forms at the same indices; this is checked at construction.
#pragma once

#include "hecke.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <vector>

namespace mixhecke {

enum class Side { primal, dual };

inline Side opposite(Side s) { return s == Side::primal ? Side::dual : Side::primal; }

class MixedContext;

// A class in the Grothendieck group of the mixed category on one side of
// the duality, i.e. a Hecke algebra element tagged with its context.
struct ObjectClass {
    const MixedContext* ctx = nullptr;
    Side side = Side::primal;
    HeckeElement h;

    bool operator==(const ObjectClass& o) const {
        return ctx == o.ctx && side == o.side && h == o.h;
    }
    bool operator!=(const ObjectClass& o) const { return !(*this == o); }

    ObjectClass& operator+=(const ObjectClass& o) {
        require_compatible(o);
        h += o.h;
        return *this;
    }
    ObjectClass& operator-=(const ObjectClass& o) {
        require_compatible(o);
        h -= o.h;
        return *this;
    }
    friend ObjectClass operator+(ObjectClass a, const ObjectClass& b) { return a += b; }
    friend ObjectClass operator-(ObjectClass a, const ObjectClass& b) { return a -= b; }
    friend ObjectClass operator*(const LaurentPoly& p, ObjectClass a) {
        a.h *= p;
        return a;
    }

    void require_compatible(const ObjectClass& o) const {
        if (ctx != o.ctx || side != o.side)
            throw SystemMismatchError("object classes live in different contexts");
    }
};

// ch(F<n>) = v^n ch(F)
inline ObjectClass tate_twist(ObjectClass c, int n) {
    c.h *= LaurentPoly::v(n);
    return c;
}
// ch(F[n]) = (-1)^n ch(F)
inline ObjectClass homological_shift(ObjectClass c, int n) {
    if (n % 2 != 0) c.h *= LaurentPoly::constant(-1);
    return c;
}
// ch(F{n}) = (-v^{-1})^n ch(F), forced by <n> = {-n}[n]
inline ObjectClass internal_shift(ObjectClass c, int n) {
    c.h *= LaurentPoly::monomial((n % 2 != 0) ? -1 : 1, -n);
    return c;
}

// Image of a class under specialization v = 1 (the decategorified
// degrading functor); lives in the integral group ring of W.
struct GroupAlgebraElement {
    const CoxeterSystem* sys = nullptr;
    std::map<ElemId, Int> coeffs;

    bool operator==(const GroupAlgebraElement& o) const {
        return sys == o.sys && coeffs == o.coeffs;
    }
    bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }
};

// Result of pushing a standard/costandard class to a partial flag variety:
// the coset label (its minimal-length representative) and the Laurent
// scalar carried by the class.
struct ParabolicPush {
    WeylElement coset_min;
    LaurentPoly scalar;
};

// Certificate for the parity-perversity criterion: the list of dual
// costandard multiplicities (T-dual_{w^{-1}} : costd_u<n>) with n > 0 that
// should have vanished.
struct PerversityViolation {
    WeylElement u; // element of the dual side
    int twist = 0; // the offending n > 0
    Int multiplicity;
};

struct PerversityReport {
    bool perverse = false;
    std::vector<PerversityViolation> violations;
};

// Diagonal bigraded Hilbert series of the endomorphism dg-algebra of a sum
// of parity objects; off-diagonal entries vanish structurally.
struct BigradedDiagonalSeries {
    LaurentPoly total; // in t
    Int dim(int i, int j) const { return i == j ? total.coeff(i) : Int(0); }
};

class MixedContext {
  public:
    explicit MixedContext(CartanType type, int characteristic = 0)
        : sys_(type),
          dual_sys_(type.dual()),
          alg_(sys_),
          dual_alg_(dual_sys_),
          characteristic_(characteristic) {
        if (sys_.size() != dual_sys_.size())
            throw Error("dual system size mismatch");
        for (ElemId x = 0; x < sys_.size(); ++x)
            if (sys_.word(x) != dual_sys_.word(x))
                throw Error("dual system enumeration mismatch");
        if (characteristic_ == 0) {
            pcan_ = PCanTable::characteristic_zero(alg_);
            pcan_dual_ = PCanTable::characteristic_zero(dual_alg_);
        }
    }

    MixedContext(const MixedContext&) = delete;
    MixedContext& operator=(const MixedContext&) = delete;

    const CoxeterSystem& system(Side s = Side::primal) const {
        return s == Side::primal ? sys_ : dual_sys_;
    }
    const HeckeAlgebra& algebra(Side s = Side::primal) const {
        return s == Side::primal ? alg_ : dual_alg_;
    }
    int characteristic() const { return characteristic_; }

    const PCanTable& table(Side s = Side::primal) const {
        const auto& t = (s == Side::primal) ? pcan_ : pcan_dual_;
        if (!t)
            throw MissingEntryError("no p-canonical table installed for " +
                                    system(s).type().to_string());
        return *t;
    }

    // Install a table for one side; it is validated first.
    void install_table(Side s, PCanTable t) {
        if (t.sys != &system(s)) throw SystemMismatchError("table bound to a foreign system");
        if (t.characteristic != characteristic_)
            throw ValidationError("characteristic-label", t.sys->type().to_string());
        t.validate(algebra(s));
        ((s == Side::primal) ? pcan_ : pcan_dual_) = std::move(t);
    }

    // Same element id on the other side (enumerations agree).
    WeylElement transport(const WeylElement& w, Side to) const {
        return system(to).element(w.id());
    }

    ObjectClass make(Side s, HeckeElement h) const { return ObjectClass{this, s, std::move(h)}; }

    // --- the six object families -------------------------------------

    ObjectClass std_class(const WeylElement& w, Side s = Side::primal) const {
        check(w, s);
        return make(s, algebra(s).basis(w.id()));
    }

    ObjectClass costd_class(const WeylElement& w, Side s = Side::primal) const {
        check(w, s);
        return make(s, algebra(s).bar_basis(w.id()));
    }

    // sigma applied coefficient-wise to the table entry.
    ObjectClass parity_class(const WeylElement& w, Side s = Side::primal) const {
        check(w, s);
        const HeckeElement& entry = table(s).entry(w.id());
        HeckeElement r(&system(s));
        for (const auto& [y, c] : entry.terms()) r.add_term(y, sigma(c));
        return make(s, r);
    }

    // Transported from the dual parity table: the standard coefficients of
    // the dual entry at w^{-1}, re-indexed by inversion.  Equals
    // kappa(dual parity_class(w^{-1})).
    ObjectClass tilting_class(const WeylElement& w, Side s = Side::primal) const {
        check(w, s);
        const CoxeterSystem& W = system(s);
        const HeckeElement& entry = table(opposite(s)).entry(W.inverse(w.id()));
        HeckeElement r(&W);
        for (const auto& [y, c] : entry.terms()) r.add_term(W.inverse(y), c);
        return make(s, r);
    }

    ObjectClass projective_class(const WeylElement& w, Side s = Side::primal) const {
        check(w, s);
        const CoxeterSystem& W = system(s);
        return ringel(tilting_class(W.element(W.mult(w.id(), W.w0_id())), s));
    }

    ObjectClass simple_class(const WeylElement& w, Side s = Side::primal) const {
        check(w, s);
        return make(s, simple_family(s)[w.id()]);
    }

    // --- operators ----------------------------------------------------

    ObjectClass convolve(const ObjectClass& a, const ObjectClass& b) const {
        a.require_compatible(b);
        if (a.ctx != this) throw SystemMismatchError("class from a different context");
        return make(a.side, algebra(a.side).mul(a.h, b.h));
    }

    // sigma-semilinear standard-basis transport to the other side,
    // H_w -> H-dual_{w^{-1}}.  Involutive across sides; interchanges the
    // Tate twist and the internal shift.
    ObjectClass kappa(const ObjectClass& c) const {
        if (c.ctx != this) throw SystemMismatchError("class from a different context");
        Side to = opposite(c.side);
        const CoxeterSystem& W = system(to);
        HeckeElement r(&W);
        for (const auto& [w, a] : c.h.terms()) r.add_term(W.inverse(w), sigma(a));
        return make(to, r);
    }

    // Right convolution with the standard (resp. costandard) class of w0.
    ObjectClass ringel(const ObjectClass& c) const {
        if (c.ctx != this) throw SystemMismatchError("class from a different context");
        const HeckeAlgebra& A = algebra(c.side);
        return make(c.side, A.mul(c.h, A.basis(system(c.side).w0_id())));
    }

    ObjectClass ringel_inv(const ObjectClass& c) const {
        if (c.ctx != this) throw SystemMismatchError("class from a different context");
        const HeckeAlgebra& A = algebra(c.side);
        return make(c.side, A.mul(c.h, A.bar_basis(system(c.side).w0_id())));
    }

    // Push of the standard class along the projection to the partial flag
    // variety of the single reflection s, in the normalization that
    // commutes with duality (pi^s-dagger = pi^s_* {1}): label and scalar.
    ParabolicPush pi_push_std(const WeylElement& w, int gen, Side s = Side::primal) const {
        check(w, s);
        require_gen(gen, s);
        WeylElement m = min_coset_rep(w, {gen});
        int shift = m.length() + 1 - w.length(); // {.} exponent
        return {m, LaurentPoly::monomial((shift % 2 != 0) ? -1 : 1, -shift)};
    }

    // Class of the pullback of the standard class of a coset; with w the
    // maximal representative and ws the minimal one this is the middle
    // term of the triangle std_w -> pull -> std_{ws}{1}.
    ObjectClass pi_pull_std(const WeylElement& coset, int gen, Side s = Side::primal) const {
        check(coset, s);
        require_gen(gen, s);
        const CoxeterSystem& W = system(s);
        ElemId lo = W.min_coset_rep_id(coset.id(), {gen});
        ElemId hi = W.rmult(lo, gen);
        HeckeElement r(&W);
        r.add_term(hi, LaurentPoly::constant(1));
        r.add_term(lo, LaurentPoly::monomial(-1, -1));
        return make(s, r);
    }

    // Plain proper pushforward pi^I_* of standard / costandard classes for
    // a general parabolic: scalar (-v^{-1})^{l(min rep) - l(w)} resp. its
    // bar, from the relative-dimension bookkeeping of the orbit closure.
    ParabolicPush parabolic_push_std(const WeylElement& w, const std::vector<int>& gens,
                                     Side s = Side::primal) const {
        check(w, s);
        for (int g : gens) require_gen(g, s);
        WeylElement m = min_coset_rep(w, gens);
        int shift = m.length() - w.length();
        return {m, LaurentPoly::monomial((shift % 2 != 0) ? -1 : 1, -shift)};
    }

    ParabolicPush parabolic_push_costd(const WeylElement& w, const std::vector<int>& gens,
                                       Side s = Side::primal) const {
        ParabolicPush p = parabolic_push_std(w, gens, s);
        p.scalar = bar(p.scalar);
        return p;
    }

    // Criterion: the parity object of w is perverse iff the dual tilting
    // class of w^{-1} has no costandard multiplicity in a positive twist.
    PerversityReport is_parity_perverse(const WeylElement& w, Side s = Side::primal) const {
        check(w, s);
        Side d = opposite(s);
        const CoxeterSystem& W = system(d);
        ObjectClass t = tilting_class(W.element(system(s).inverse(w.id())), d);
        HeckeElement b = algebra(d).bar_involution(t.h);
        PerversityReport rep;
        rep.perverse = true;
        for (const auto& [u, q] : b.terms()) {
            LaurentPoly mult = bar(q); // (T : costd_u<n>) = coeff of v^n
            for (const auto& [n, c] : mult.terms())
                if (n > 0) {
                    rep.perverse = false;
                    rep.violations.push_back({W.element(u), n, c});
                }
        }
        return rep;
    }

    // Graded dimension of Hom^*(E_x, E_y) as a polynomial in t.
    LaurentPoly hom_hilbert(const WeylElement& x, const WeylElement& y,
                            Side s = Side::primal) const {
        return subst_neg_inv(
            algebra(s).euler_pairing(parity_class(x, s).h, parity_class(y, s).h));
    }

    // Diagonal Hilbert series of End(⊕_{w in ws} E_w).
    BigradedDiagonalSeries ext_algebra_hilbert(const std::vector<WeylElement>& ws,
                                               Side s = Side::primal) const {
        BigradedDiagonalSeries out;
        for (const auto& x : ws)
            for (const auto& y : ws) out.total += hom_hilbert(x, y, s);
        return out;
    }

    GroupAlgebraElement degrade(const ObjectClass& c) const {
        if (c.ctx != this) throw SystemMismatchError("class from a different context");
        GroupAlgebraElement g;
        g.sys = &system(c.side);
        for (const auto& [w, p] : c.h.terms()) {
            Int val = p.eval_at_one();
            if (val != 0) g.coeffs.emplace(w, val);
        }
        return g;
    }

  private:
    CoxeterSystem sys_;
    CoxeterSystem dual_sys_;
    HeckeAlgebra alg_;
    HeckeAlgebra dual_alg_;
    int characteristic_;
    std::optional<PCanTable> pcan_;
    std::optional<PCanTable> pcan_dual_;

    mutable std::optional<std::vector<HeckeElement>> simples_[2];
    mutable std::mutex mutex_;

    void check(const WeylElement& w, Side s) const {
        if (&w.system() != &system(s))
            throw SystemMismatchError("element does not belong to the requested side");
    }
    void require_gen(int g, Side s) const {
        if (g < 0 || g >= system(s).rank()) throw ParseError("not a generator index");
    }

    // Solve the reciprocity system: from the standard coefficients of the
    // projective classes p_{t,s} (= Delta-filtration multiplicities of
    // P_s), the costandard decomposition matrix is bar(p), and
    //   costd(t) = sum_s bar(p_{t,s}) * simple(s)
    // is unitriangular along the enumeration order.
    const std::vector<HeckeElement>& simple_family(Side s) const {
        int idx = (s == Side::primal) ? 0 : 1;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (simples_[idx]) return *simples_[idx];
        }
        const CoxeterSystem& W = system(s);
        const HeckeAlgebra& A = algebra(s);
        const std::size_t n = W.size();

        std::vector<HeckeElement> proj;
        proj.reserve(n);
        for (ElemId x = 0; x < n; ++x) proj.push_back(projective_class(W.element(x), s).h);

        std::vector<HeckeElement> L(n, HeckeElement(&W));
        for (ElemId t = 0; t < n; ++t) {
            if (proj[t].coeff(t) != LaurentPoly::constant(1))
                throw SingularSystemError("reciprocity system has non-unit diagonal at w=" +
                                          W.element(t).to_string());
            for (ElemId u = t + 1; u < n; ++u)
                if (!proj[u].coeff(t).is_zero())
                    throw SingularSystemError("reciprocity system is not triangular at w=" +
                                              W.element(t).to_string());
            HeckeElement acc = A.bar_basis(t);
            for (ElemId u = 0; u < t; ++u) {
                LaurentPoly m = bar(proj[u].coeff(t));
                if (!m.is_zero()) acc.add_scaled(L[u], -m);
            }
            L[t] = std::move(acc);
        }
        std::lock_guard<std::mutex> lock(mutex_);
        if (!simples_[idx]) simples_[idx] = std::move(L);
        return *simples_[idx];
    }
};

} // namespace mixhecke

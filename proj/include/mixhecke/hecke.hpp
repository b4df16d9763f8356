// The Hecke algebra of a finite Weyl group over integer Laurent
// polynomials, in the normalization with quadratic relation
//
//   H_s^2 = H_e + (v^{-1} - v) H_s,      b_s = H_s + v H_e,
//
// so that Kazhdan--Lusztig polynomials live in vZ[v].  Elements are
// finitely supported maps {standard basis H_w} -> LaurentPoly.
//
// The algebra object owns per-group memo tables: bar(H_w) and the KL
// basis elements b_w.  p-canonical bases are input data (PCanTable),
// validated against their structural invariants; in characteristic 0 the
// table is synthesized from the KL algorithm.
#pragma once

#include "coxeter.hpp"
#include "laurent.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace mixhecke {

class HeckeElement {
  public:
    HeckeElement() = default;
    explicit HeckeElement(const CoxeterSystem* sys) : sys_(sys) {}

    const CoxeterSystem* system() const { return sys_; }
    const std::map<ElemId, LaurentPoly>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    LaurentPoly coeff(ElemId w) const {
        auto it = c_.find(w);
        return it == c_.end() ? LaurentPoly() : it->second;
    }
    LaurentPoly coeff(const WeylElement& w) const { return coeff(w.id()); }

    void add_term(ElemId w, const LaurentPoly& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = c_.emplace(w, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    void set_term(ElemId w, LaurentPoly p) {
        if (p.is_zero()) c_.erase(w);
        else c_[w] = std::move(p);
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        for (const auto& [w, p] : o.c_) add_term(w, p);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        for (const auto& [w, p] : o.c_) add_term(w, -p);
        return *this;
    }
    // Scale by a Laurent polynomial (the module structure).
    HeckeElement& operator*=(const LaurentPoly& p) {
        if (p.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& [w, q] : c_) q *= p;
        return *this;
    }
    void add_scaled(const HeckeElement& o, const LaurentPoly& p) {
        for (const auto& [w, q] : o.c_) add_term(w, q * p);
    }

    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(const LaurentPoly& p, HeckeElement a) { return a *= p; }
    friend HeckeElement operator-(const HeckeElement& a) {
        HeckeElement r(a.sys_);
        for (const auto& [w, p] : a.c_) r.c_.emplace(w, -p);
        return r;
    }

    bool operator==(const HeckeElement& o) const { return sys_ == o.sys_ && c_ == o.c_; }
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [w, p] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + p.to_string() + ")*H[" + sys_->element(w).to_string() + "]";
        }
        return s;
    }

  private:
    const CoxeterSystem* sys_ = nullptr;
    std::map<ElemId, LaurentPoly> c_;
};

class HeckeAlgebra {
  public:
    explicit HeckeAlgebra(const CoxeterSystem& sys)
        : sys_(sys), bar_basis_(sys.size()), kl_(sys.size()) {}

    HeckeAlgebra(const HeckeAlgebra&) = delete;
    HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

    const CoxeterSystem& system() const { return sys_; }

    HeckeElement zero() const { return HeckeElement(&sys_); }

    HeckeElement unit() const { return basis(0); }

    HeckeElement basis(ElemId w) const {
        HeckeElement r(&sys_);
        r.add_term(w, LaurentPoly::constant(1));
        return r;
    }
    HeckeElement basis(const WeylElement& w) const {
        check(w);
        return basis(w.id());
    }

    // a * H_s, from the quadratic relation.
    HeckeElement rmul_gen(const HeckeElement& a, int s) const {
        HeckeElement r(&sys_);
        const LaurentPoly q = LaurentPoly::v(-1) - LaurentPoly::v();
        for (const auto& [w, c] : a.terms()) {
            ElemId ws = sys_.rmult(w, s);
            r.add_term(ws, c);
            if (sys_.length(ws) < sys_.length(w)) r.add_term(w, c * q);
        }
        return r;
    }

    HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const {
        check(a);
        check(b);
        HeckeElement r(&sys_);
        for (const auto& [w, c] : b.terms()) {
            HeckeElement t = a;
            for (int s : sys_.word(w)) t = rmul_gen(t, s);
            r.add_scaled(t, c);
        }
        return r;
    }

    // The bar involution: v -> v^{-1}, H_w -> (H_{w^{-1}})^{-1}.
    HeckeElement bar_involution(const HeckeElement& a) const {
        check(a);
        HeckeElement r(&sys_);
        for (const auto& [w, c] : a.terms()) r.add_scaled(bar_basis(w), bar(c));
        return r;
    }

    // bar(H_w), memoized; bar(H_s) = H_s + (v - v^{-1}) H_e.
    HeckeElement bar_basis(ElemId w) const {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (bar_basis_[w]) return *bar_basis_[w];
        }
        HeckeElement r;
        if (w == 0) {
            r = unit();
        } else {
            int s = sys_.word(w).back();
            HeckeElement prev = bar_basis(sys_.rmult(w, s));
            r = rmul_gen(prev, s);
            r.add_scaled(prev, LaurentPoly::v() - LaurentPoly::v(-1));
        }
        std::lock_guard<std::mutex> lock(mutex_);
        if (!bar_basis_[w]) bar_basis_[w] = r;
        return r;
    }

    // Kazhdan--Lusztig basis element b_w = H_w + sum_{y<w} h_{y,w} H_y,
    // h_{y,w} in vZ[v], computed by the classical recursion: multiply
    // b_{ws} by b_s and strip lower KL terms flagged by degree-0
    // coefficients.
    HeckeElement kl_basis(ElemId w) const {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (kl_[w]) return *kl_[w];
        }
        HeckeElement c;
        if (w == 0) {
            c = unit();
        } else {
            int s = sys_.word(w).back();
            HeckeElement bu = kl_basis(sys_.rmult(w, s));
            c = rmul_gen(bu, s);
            c.add_scaled(bu, LaurentPoly::v());
            while (true) {
                ElemId y = 0;
                Int mu = 0;
                bool found = false;
                for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
                    if (it->first == w) continue;
                    Int m = it->second.coeff(0);
                    if (m != 0) {
                        y = it->first;
                        mu = m;
                        found = true;
                        break;
                    }
                }
                if (!found) break;
                c.add_scaled(kl_basis(y), LaurentPoly::constant(-mu));
            }
        }
        std::lock_guard<std::mutex> lock(mutex_);
        if (!kl_[w]) kl_[w] = c;
        return c;
    }
    HeckeElement kl_basis(const WeylElement& w) const {
        check(w);
        return kl_basis(w.id());
    }

    // Seed the KL memo table (e.g. from a validated disk cache).  Entries
    // are trusted as-is; callers are responsible for integrity checks.
    void preload_kl(const std::map<ElemId, HeckeElement>& entries) const {
        std::lock_guard<std::mutex> lock(mutex_);
        for (const auto& [w, b] : entries)
            if (w < kl_.size() && !kl_[w]) kl_[w] = b;
    }

    // <a, b> = sum_w a_w * bar(b)_w: linear in a, bar-semilinear in b.
    // Decategorifies the alternating sum of graded Hom dimensions between
    // classes; standard against costandard classes gives delta_{x,y}.
    LaurentPoly euler_pairing(const HeckeElement& a, const HeckeElement& b) const {
        check(a);
        check(b);
        HeckeElement bb = bar_involution(b);
        LaurentPoly r;
        for (const auto& [w, c] : a.terms()) r += c * bb.coeff(w);
        return r;
    }

  private:
    const CoxeterSystem& sys_;
    mutable std::vector<std::optional<HeckeElement>> bar_basis_;
    mutable std::vector<std::optional<HeckeElement>> kl_;
    mutable std::mutex mutex_;

    void check(const HeckeElement& a) const {
        if (a.system() != &sys_)
            throw SystemMismatchError("Hecke element belongs to a different system");
    }
    void check(const WeylElement& w) const {
        if (&w.system() != &sys_)
            throw SystemMismatchError("Weyl element belongs to a different system");
    }
};

// Expansion of a triangular element in the KL basis, by peeling maximal
// support terms.  Returns {y -> coefficient}.
inline std::map<ElemId, LaurentPoly> kl_expansion(const HeckeAlgebra& alg, const HeckeElement& a) {
    std::map<ElemId, LaurentPoly> out;
    HeckeElement r = a;
    while (!r.is_zero()) {
        auto it = r.terms().rbegin();
        ElemId y = it->first;
        LaurentPoly c = it->second;
        out.emplace(y, c);
        HeckeElement by = alg.kl_basis(y);
        for (const auto& [z, q] : by.terms()) r.add_term(z, -(q * c));
    }
    return out;
}

// Characters of indecomposable parity objects: the modular input datum.
// Invariants (validate()): each entry is H_w + lower Bruhat terms, is
// bar-invariant, and has a nonnegative KL expansion; a characteristic-0
// table must be exactly the KL basis.
struct PCanTable {
    const CoxeterSystem* sys = nullptr;
    int characteristic = 0; // 0 or a prime
    std::map<ElemId, HeckeElement> entries;

    bool has_entry(ElemId w) const { return entries.count(w) != 0; }

    const HeckeElement& entry(ElemId w) const {
        auto it = entries.find(w);
        if (it == entries.end()) {
            std::string which =
                (sys && w < sys->size()) ? sys->element(w).to_string() : std::to_string(w);
            throw MissingEntryError("p-canonical table has no entry for w=" + which);
        }
        return it->second;
    }

    // The defined characteristic-0 fallback: the KL basis itself.
    static PCanTable characteristic_zero(const HeckeAlgebra& alg) {
        PCanTable t;
        t.sys = &alg.system();
        t.characteristic = 0;
        for (ElemId w = 0; w < alg.system().size(); ++w) t.entries.emplace(w, alg.kl_basis(w));
        return t;
    }

    // Throws ValidationError naming the failed check and the offending w.
    void validate(const HeckeAlgebra& alg) const {
        if (&alg.system() != sys) throw SystemMismatchError("table/system mismatch");
        for (const auto& [w, h] : entries) {
            std::string where = sys->element(w).to_string();
            if (h.coeff(w) != LaurentPoly::constant(1))
                throw ValidationError("triangularity", where);
            for (const auto& [y, c] : h.terms())
                if (y != w && !sys->bruhat_leq_id(y, w))
                    throw ValidationError("triangularity", where);
            if (alg.bar_involution(h) != h) throw ValidationError("bar-invariance", where);
            for (const auto& [y, c] : kl_expansion(alg, h))
                if (!c.has_nonnegative_coeffs())
                    throw ValidationError("kl-nonnegativity", where);
            if (characteristic == 0 && h != alg.kl_basis(w))
                throw ValidationError("char0-kl-equality", where);
        }
    }
};

} // namespace mixhecke

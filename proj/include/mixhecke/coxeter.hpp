// Finite Weyl groups.
//
// A CoxeterSystem is built from a Cartan type (A..G + rank) by total
// enumeration in the integer reflection representation: an element is the
// integer matrix of its action on the simple-root basis, and the BFS that
// discovers the group assigns each element its ShortLex-minimal reduced
// word as normal form.  Element handles (WeylElement) are indices into the
// enumeration tables, ordered by length and then lexicographically by
// normal form — an order several downstream modules rely on.
//
// Right descents are read off root signs (w(alpha_s) < 0), Bruhat order
// uses the subword/lifting property on the stored normal form of the
// larger element, memoized per pair.
#pragma once

#include "errors.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

namespace mixhecke {

using ElemId = std::uint32_t;
using Word = std::vector<int>; // generator indices, 0-based

struct CartanType {
    char letter = 'A';
    int rank = 1;

    static CartanType parse(const std::string& s) {
        if (s.size() < 2) throw ParseError("bad Cartan type: " + s);
        CartanType t;
        t.letter = s[0];
        try {
            t.rank = std::stoi(s.substr(1));
        } catch (const std::exception&) {
            throw ParseError("bad Cartan type: " + s);
        }
        t.validate();
        return t;
    }

    void validate() const {
        bool ok = false;
        switch (letter) {
            case 'A': ok = rank >= 1; break;
            case 'B':
            case 'C': ok = rank >= 2; break;
            case 'D': ok = rank >= 4; break;
            case 'E': ok = rank >= 6 && rank <= 8; break;
            case 'F': ok = rank == 4; break;
            case 'G': ok = rank == 2; break;
            default: ok = false;
        }
        if (!ok)
            throw ParseError("unsupported Cartan type: " + std::string(1, letter) + std::to_string(rank));
    }

    // Langlands dual type: B_n <-> C_n, everything else fixed.  The
    // generator correspondence is index-preserving.
    CartanType dual() const {
        CartanType t = *this;
        if (letter == 'B') t.letter = 'C';
        else if (letter == 'C') t.letter = 'B';
        return t;
    }

    std::string to_string() const { return std::string(1, letter) + std::to_string(rank); }

    bool operator==(const CartanType& o) const { return letter == o.letter && rank == o.rank; }
    bool operator!=(const CartanType& o) const { return !(*this == o); }

    // |W| from the classification.
    std::uint64_t weyl_order() const {
        auto fact = [](int n) {
            std::uint64_t f = 1;
            for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
            return f;
        };
        switch (letter) {
            case 'A': return fact(rank + 1);
            case 'B':
            case 'C': return fact(rank) << rank;
            case 'D': return fact(rank) << (rank - 1);
            case 'G': return 12;
            case 'F': return 1152;
            case 'E':
                if (rank == 6) return 51840;
                if (rank == 7) return 2903040;
                return 696729600;
        }
        throw ParseError("unsupported Cartan type");
    }

    // Cartan matrix a[s][t] = <alpha_s^vee, alpha_t>, Bourbaki numbering.
    std::vector<std::vector<int>> cartan_matrix() const {
        int n = rank;
        std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) a[i][i] = 2;
        auto bond = [&](int i, int j, int aij, int aji) {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        auto path = [&](int from, int to) {
            for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
        };
        switch (letter) {
            case 'A': path(0, n - 1); break;
            case 'B': // alpha_n short
                path(0, n - 2);
                bond(n - 2, n - 1, -2, -1);
                break;
            case 'C': // alpha_n long
                path(0, n - 2);
                bond(n - 2, n - 1, -1, -2);
                break;
            case 'D':
                path(0, n - 3);
                bond(n - 3, n - 2, -1, -1);
                bond(n - 3, n - 1, -1, -1);
                break;
            case 'E': // node 2 hangs off node 4 (1-based Bourbaki)
                bond(0, 2, -1, -1);
                bond(1, 3, -1, -1);
                for (int i = 2; i < n - 1; ++i) bond(i, i + 1, -1, -1);
                break;
            case 'F':
                bond(0, 1, -1, -1);
                bond(1, 2, -2, -1);
                bond(2, 3, -1, -1);
                break;
            case 'G': bond(0, 1, -3, -1); break;
        }
        return a;
    }
};

class WeylElement; // below

class CoxeterSystem {
  public:
    explicit CoxeterSystem(CartanType type) : type_(type), cartan_(type.cartan_matrix()) {
        type_.validate();
        build_coxeter_matrix();
        enumerate();
    }
    explicit CoxeterSystem(const std::string& type) : CoxeterSystem(CartanType::parse(type)) {}

    CoxeterSystem(const CoxeterSystem&) = delete;
    CoxeterSystem& operator=(const CoxeterSystem&) = delete;

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }
    std::size_t size() const { return words_.size(); }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    int coxeter_m(int s, int t) const { return coxeter_[s][t]; }

    int length(ElemId x) const { return static_cast<int>(words_[x].size()); }
    const Word& word(ElemId x) const { return words_[x]; }
    ElemId rmult(ElemId x, int s) const { return rmult_[x][s]; }
    ElemId inverse(ElemId x) const { return inv_[x]; }
    ElemId w0_id() const { return w0_; }

    // xs < x
    bool right_descent(ElemId x, int s) const { return length(rmult_[x][s]) < length(x); }
    // sx < x
    bool left_descent(int s, ElemId x) const { return right_descent(inv_[x], s); }

    ElemId mult_word(ElemId x, const Word& w) const {
        for (int s : w) x = rmult_[x][s];
        return x;
    }
    ElemId mult(ElemId a, ElemId b) const { return mult_word(a, words_[b]); }

    ElemId id_from_word(const Word& w) const {
        ElemId x = 0;
        for (int s : w) {
            if (s < 0 || s >= rank())
                throw ParseError("generator index out of range for " + type_.to_string());
            x = rmult_[x][s];
        }
        return x;
    }

    // Unique maximal-length element of the parabolic subgroup W_I.
    ElemId longest_element_id(const std::vector<int>& gens) const {
        ElemId x = 0;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int s : gens) {
                if (s < 0 || s >= rank()) throw ParseError("generator index out of range");
                if (!right_descent(x, s)) {
                    x = rmult_[x][s];
                    moved = true;
                }
            }
        }
        return x;
    }

    // Unique x in w W_I of minimal length; l(x u) = l(x) + l(u) for u in W_I.
    ElemId min_coset_rep_id(ElemId w, const std::vector<int>& gens) const {
        bool moved = true;
        while (moved) {
            moved = false;
            for (int s : gens) {
                if (s < 0 || s >= rank()) throw ParseError("generator index out of range");
                if (right_descent(w, s)) {
                    w = rmult_[w][s];
                    moved = true;
                }
            }
        }
        return w;
    }

    // Bruhat order, via the lifting property applied to the last letter of
    // the stored normal form of b.
    bool bruhat_leq_id(ElemId a, ElemId b) const {
        if (a == 0) return true;
        if (length(a) > length(b)) return false;
        if (a == b) return true;
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        {
            std::lock_guard<std::mutex> lock(bruhat_mutex_);
            auto it = bruhat_memo_.find(key);
            if (it != bruhat_memo_.end()) return it->second;
        }
        int s = words_[b].back();
        ElemId bs = rmult_[b][s];
        bool r = right_descent(a, s) ? bruhat_leq_id(rmult_[a][s], bs) : bruhat_leq_id(a, bs);
        {
            std::lock_guard<std::mutex> lock(bruhat_mutex_);
            bruhat_memo_.emplace(key, r);
        }
        return r;
    }

    WeylElement identity() const;
    WeylElement element(ElemId id) const;
    WeylElement from_word(const Word& w) const;
    WeylElement longest_element(const std::vector<int>& gens) const;
    WeylElement w0() const;

  private:
    CartanType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> coxeter_;

    std::vector<Word> words_;               // ShortLex normal forms
    std::vector<std::vector<ElemId>> rmult_;
    std::vector<ElemId> inv_;
    ElemId w0_ = 0;

    mutable std::unordered_map<std::uint64_t, bool> bruhat_memo_;
    mutable std::mutex bruhat_mutex_;

    void build_coxeter_matrix() {
        int n = rank();
        coxeter_.assign(n, std::vector<int>(n, 2));
        for (int s = 0; s < n; ++s) {
            coxeter_[s][s] = 1;
            for (int t = 0; t < n; ++t) {
                if (s == t) continue;
                switch (cartan_[s][t] * cartan_[t][s]) {
                    case 0: coxeter_[s][t] = 2; break;
                    case 1: coxeter_[s][t] = 3; break;
                    case 2: coxeter_[s][t] = 4; break;
                    case 3: coxeter_[s][t] = 6; break;
                    default: throw ParseError("Cartan matrix is not of finite Weyl type");
                }
            }
        }
    }

    // Matrices act on the root lattice in the simple-root basis; we store
    // the r columns w(alpha_0), ..., w(alpha_{r-1}) flattened.  Right
    // multiplication by s replaces col_j by col_j - a[s][j] * col_s.
    using Key = std::vector<std::int32_t>;

    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ull;
            for (auto x : k) {
                h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    void enumerate() {
        const int n = rank();
        const std::uint64_t order = type_.weyl_order();

        Key ident(static_cast<std::size_t>(n) * n, 0);
        for (int j = 0; j < n; ++j) ident[static_cast<std::size_t>(j) * n + j] = 1;

        std::unordered_map<Key, ElemId, KeyHash> ids;
        std::vector<Key> mats;
        ids.emplace(ident, 0);
        mats.push_back(ident);
        words_.push_back({});
        rmult_.push_back(std::vector<ElemId>(n, 0));

        auto col_positive = [n](const Key& m, int s) {
            for (int i = 0; i < n; ++i)
                if (m[static_cast<std::size_t>(s) * n + i] < 0) return false;
            return true;
        };

        for (ElemId x = 0; x < mats.size(); ++x) {
            for (int s = 0; s < n; ++s) {
                const Key& m = mats[x];
                if (!col_positive(m, s)) continue; // descent: edge already set
                Key m2 = m;
                for (int j = 0; j < n; ++j) {
                    int a_sj = cartan_[s][j];
                    if (a_sj == 0) continue;
                    for (int i = 0; i < n; ++i)
                        m2[static_cast<std::size_t>(j) * n + i] -=
                            a_sj * m[static_cast<std::size_t>(s) * n + i];
                }
                auto [it, inserted] = ids.emplace(std::move(m2), static_cast<ElemId>(mats.size()));
                ElemId y = it->second;
                if (inserted) {
                    if (mats.size() >= order)
                        throw Error("enumeration exceeded the Weyl order of " + type_.to_string());
                    mats.push_back(it->first);
                    Word w = words_[x];
                    w.push_back(s);
                    words_.push_back(std::move(w));
                    rmult_.push_back(std::vector<ElemId>(n, 0));
                }
                rmult_[x][s] = y;
                rmult_[y][s] = x;
            }
        }
        if (mats.size() != order)
            throw Error("enumeration of " + type_.to_string() + " found " +
                        std::to_string(mats.size()) + " elements, expected " + std::to_string(order));

        inv_.resize(size());
        for (ElemId x = 0; x < size(); ++x) {
            Word rev(words_[x].rbegin(), words_[x].rend());
            inv_[x] = mult_word(0, rev);
        }

        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        w0_ = longest_element_id(all);
    }
};

// Value handle for a group element: a Coxeter system plus an index into
// its tables.  Cheap to copy; all operations are pure.
class WeylElement {
  public:
    WeylElement() = default;
    WeylElement(const CoxeterSystem* sys, ElemId id) : sys_(sys), id_(id) {}

    const CoxeterSystem& system() const { return *sys_; }
    ElemId id() const { return id_; }
    int length() const { return sys_->length(id_); }
    bool is_identity() const { return id_ == 0; }
    const Word& word() const { return sys_->word(id_); }

    std::vector<int> word_1based() const {
        std::vector<int> w;
        w.reserve(word().size());
        for (int s : word()) w.push_back(s + 1);
        return w;
    }

    // "1.2.1", identity rendered as "e".
    std::string to_string() const {
        if (id_ == 0) return "e";
        std::string s;
        for (int g : word()) {
            if (!s.empty()) s += '.';
            s += std::to_string(g + 1);
        }
        return s;
    }

    WeylElement inverse() const { return {sys_, sys_->inverse(id_)}; }
    WeylElement times_gen(int s) const { return {sys_, sys_->rmult(id_, s)}; }
    bool right_descent(int s) const { return sys_->right_descent(id_, s); }
    bool left_descent(int s) const { return sys_->left_descent(s, id_); }

    bool operator==(const WeylElement& o) const { return sys_ == o.sys_ && id_ == o.id_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    // Length-then-ShortLex, the enumeration order.
    bool operator<(const WeylElement& o) const { return id_ < o.id_; }

  private:
    const CoxeterSystem* sys_ = nullptr;
    ElemId id_ = 0;
};

inline WeylElement CoxeterSystem::identity() const { return {this, 0}; }
inline WeylElement CoxeterSystem::element(ElemId id) const { return {this, id}; }
inline WeylElement CoxeterSystem::from_word(const Word& w) const { return {this, id_from_word(w)}; }
inline WeylElement CoxeterSystem::longest_element(const std::vector<int>& gens) const {
    return {this, longest_element_id(gens)};
}
inline WeylElement CoxeterSystem::w0() const { return {this, w0_}; }

inline void require_same_system(const WeylElement& a, const WeylElement& b) {
    if (&a.system() != &b.system())
        throw SystemMismatchError("elements belong to different Coxeter systems");
}

inline WeylElement multiply(const WeylElement& a, const WeylElement& b) {
    require_same_system(a, b);
    return {&a.system(), a.system().mult(a.id(), b.id())};
}

inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return multiply(a, b); }

inline bool bruhat_leq(const WeylElement& a, const WeylElement& b) {
    require_same_system(a, b);
    return a.system().bruhat_leq_id(a.id(), b.id());
}

inline WeylElement min_coset_rep(const WeylElement& w, const std::vector<int>& gens) {
    return {&w.system(), w.system().min_coset_rep_id(w.id(), gens)};
}

} // namespace mixhecke

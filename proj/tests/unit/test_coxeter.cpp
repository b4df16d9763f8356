#include "mixhecke/coxeter.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace mixhecke;

namespace {

// Independent Bruhat oracle: a <= b iff some subword of the fixed normal
// form of b multiplies out to a (subword property, checked by brute force
// over all 2^l subsets).
bool bruhat_leq_bruteforce(const WeylElement& a, const WeylElement& b) {
    const auto& sys = b.system();
    const Word& w = b.word();
    int l = static_cast<int>(w.size());
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
        Word sub;
        for (int i = 0; i < l; ++i)
            if (mask & (1u << i)) sub.push_back(w[i]);
        if (sys.id_from_word(sub) == a.id()) return true;
    }
    return false;
}

} // namespace

TEST_CASE("cartan type parsing and duality") {
    auto b3 = CartanType::parse("B3");
    CHECK(b3.letter == 'B');
    CHECK(b3.rank == 3);
    CHECK(b3.dual().to_string() == "C3");
    CHECK(CartanType::parse("C3").dual().to_string() == "B3");
    CHECK(CartanType::parse("A2").dual().to_string() == "A2");
    CHECK(CartanType::parse("G2").dual().to_string() == "G2");
    CHECK_THROWS_AS(CartanType::parse("H3"), ParseError);
    CHECK_THROWS_AS(CartanType::parse("B1"), ParseError);
    CHECK_THROWS_AS(CartanType::parse("Q"), ParseError);
}

TEST_CASE("enumeration matches Weyl group orders") {
    CHECK(CoxeterSystem("A1").size() == 2);
    CHECK(CoxeterSystem("A2").size() == 6);
    CHECK(CoxeterSystem("A3").size() == 24);
    CHECK(CoxeterSystem("B2").size() == 8);
    CHECK(CoxeterSystem("B3").size() == 48);
    CHECK(CoxeterSystem("C3").size() == 48);
    CHECK(CoxeterSystem("G2").size() == 12);
}

TEST_CASE("normal forms are distinct and reduced") {
    CoxeterSystem sys("B3");
    std::set<Word> seen;
    for (ElemId x = 0; x < sys.size(); ++x) {
        const Word& w = sys.word(x);
        CHECK(sys.id_from_word(w) == x);
        CHECK(static_cast<int>(w.size()) == sys.length(x));
        seen.insert(w);
    }
    CHECK(seen.size() == sys.size());
}

TEST_CASE("multiplication in A2") {
    CoxeterSystem sys("A2");
    auto s1 = sys.from_word({0}), s2 = sys.from_word({1});
    CHECK(s1 * s1 == sys.identity());
    // braid relation: s1 s2 s1 = s2 s1 s2
    CHECK(sys.from_word({0, 1, 0}) == sys.from_word({1, 0, 1}));
    CHECK((s1 * s2).length() == 2);
}

TEST_CASE("longest elements") {
    CoxeterSystem a2("A2");
    CHECK(a2.longest_element({0}).length() == 1);
    CHECK(a2.w0().length() == 3);

    CoxeterSystem b2("B2");
    CHECK(b2.w0().length() == 4);
    CHECK(b2.from_word({0, 1, 0, 1}) == b2.w0());

    // w_I is an involution, and l(w w0) = l(w0) - l(w)
    CoxeterSystem b3("B3");
    CHECK(b3.w0() * b3.w0() == b3.identity());
    for (ElemId x = 0; x < b3.size(); ++x) {
        auto w = b3.element(x);
        CHECK((w * b3.w0()).length() == b3.w0().length() - w.length());
        CHECK(w.inverse().length() == w.length());
    }
}

TEST_CASE("bruhat order against brute-force subword oracle") {
    CoxeterSystem a2("A2");
    auto s1 = a2.from_word({0}), s2 = a2.from_word({1});
    CHECK(!bruhat_leq(s1, s2));
    CHECK(bruhat_leq(s1, s1 * s2));
    for (ElemId x = 0; x < a2.size(); ++x) {
        CHECK(bruhat_leq(a2.identity(), a2.element(x)));
        CHECK(bruhat_leq(a2.element(x), a2.w0()));
    }

    CoxeterSystem b2("B2");
    for (ElemId x = 0; x < b2.size(); ++x)
        for (ElemId y = 0; y < b2.size(); ++y)
            CHECK(bruhat_leq(b2.element(x), b2.element(y)) ==
                  bruhat_leq_bruteforce(b2.element(x), b2.element(y)));

    CoxeterSystem a3("A3");
    for (ElemId x = 0; x < a3.size(); ++x)
        for (ElemId y = 0; y < a3.size(); ++y)
            CHECK(bruhat_leq(a3.element(x), a3.element(y)) ==
                  bruhat_leq_bruteforce(a3.element(x), a3.element(y)));
}

TEST_CASE("bruhat order is a partial order refined by length") {
    CoxeterSystem b2("B2");
    for (ElemId x = 0; x < b2.size(); ++x)
        for (ElemId y = 0; y < b2.size(); ++y) {
            auto a = b2.element(x), b = b2.element(y);
            if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
            if (bruhat_leq(a, b) && a != b) CHECK(a.length() < b.length());
        }
}

TEST_CASE("minimal coset representatives") {
    CoxeterSystem a2("A2");
    auto s1 = a2.from_word({0}), s2 = a2.from_word({1});

    // w in W_I -> e
    CHECK(min_coset_rep(s2, {1}) == a2.identity());
    // (s2 s1) W_{s2}: min of {s2s1, s2s1s2} is s2s1
    CHECK(min_coset_rep(s2 * s1, {1}) == s2 * s1);
    // (s1 s2) W_{s2}: min of {s1s2, s1} is s1
    CHECK(min_coset_rep(s1 * s2, {1}) == s1);

    // x = min rep, u in W_I with x u = w and additive lengths
    CoxeterSystem b3("B3");
    std::vector<int> I = {0, 2};
    for (ElemId wid = 0; wid < b3.size(); ++wid) {
        auto w = b3.element(wid);
        auto x = min_coset_rep(w, I);
        auto u = x.inverse() * w;
        CHECK(x * u == w);
        CHECK(x.length() + u.length() == w.length());
        // u lies in W_I
        for (int s : u.word()) CHECK((s == 0 || s == 2));
    }
}

TEST_CASE("element serialization round trip") {
    CoxeterSystem b2("B2");
    auto w = b2.from_word({0, 1, 0});
    CHECK(w.word_1based() == std::vector<int>{1, 2, 1});
    CHECK(w.to_string() == "1.2.1");
    CHECK(b2.identity().to_string() == "e");
    CHECK_THROWS_AS(b2.from_word({5}), ParseError);
}

TEST_CASE("mismatched systems are rejected") {
    CoxeterSystem a2("A2"), b2("B2");
    CHECK_THROWS_AS(multiply(a2.identity(), b2.identity()), SystemMismatchError);
    CHECK_THROWS_AS(bruhat_leq(a2.identity(), b2.identity()), SystemMismatchError);
}

TEST_CASE("dual system has the same Coxeter matrix") {
    CoxeterSystem b3("B3");
    CoxeterSystem c3(b3.type().dual());
    REQUIRE(c3.rank() == b3.rank());
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) CHECK(b3.coxeter_m(s, t) == c3.coxeter_m(s, t));
    // identical enumeration order: same normal forms at the same ids
    REQUIRE(b3.size() == c3.size());
    for (ElemId x = 0; x < b3.size(); ++x) CHECK(b3.word(x) == c3.word(x));
}

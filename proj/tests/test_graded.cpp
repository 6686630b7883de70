#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "linfty/linalg.hpp"

using namespace linf;

TEST_CASE("koszul_sign examples") {
    const int id[] = {0, 1};
    const int swap[] = {1, 0};
    const int d12[] = {1, 2};
    const int d11[] = {1, 1};
    CHECK(koszul_sign(id, d12) == 1);
    CHECK(koszul_sign(swap, d11) == 1);
    CHECK(koszul_sign(swap, d12) == -1);
    const int bad[] = {0, 0};
    CHECK_THROWS_AS(koszul_sign(bad, d12), InputError);
    const int d1[] = {1};
    CHECK_THROWS_AS(koszul_sign(swap, d1), InputError);
}

TEST_CASE("canonicalize_word examples") {
    auto s = make_space({{"a", 0}, {"b", 1}});
    auto ba = canonicalize_word(*s, {"b", "a"});
    REQUIRE(ba);
    CHECK(ba->word == Word{0, 1});
    CHECK(ba->sign == -1);
    CHECK_FALSE(canonicalize_word(*s, {"a", "a"}));
    auto bb = canonicalize_word(*s, {"b", "b"});
    REQUIRE(bb);
    CHECK(bb->word == Word{1, 1});
    CHECK(bb->sign == 1);
    CHECK_THROWS_AS(canonicalize_word(*s, {"c"}), InputError);
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = fixtures::random_space(rng, 4);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(s->dimension()) - 1);
        Word t(static_cast<std::size_t>(1 + trial % 5));
        for (auto& x : t) x = pick(rng);
        auto c = canonicalize(*s, t);
        if (!c) continue;
        auto again = canonicalize(*s, c->word);
        REQUIRE(again);
        CHECK(again->sign == 1);
        CHECK(again->word == c->word);
    }
}

namespace {

// Exhaustive enumeration oracle: all non-decreasing index tuples, minus those repeating an even element.
std::vector<Word> enumerate_words(const GradedSpace& s, int n) {
    std::vector<Word> out;
    Word w;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(w.size()) == n) {
            out.push_back(w);
            return;
        }
        for (int i = from; i < static_cast<int>(s.dimension()); ++i) {
            if (!w.empty() && w.back() == i && s.degree(i) % 2 == 0) continue;
            w.push_back(i);
            self(self, i);
            w.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Coefficient of x^n in prod_even (1 + x) prod_odd 1/(1 - x).
long series_count(const GradedSpace& s, int n) {
    std::vector<long> c(static_cast<std::size_t>(n + 1), 0);
    c[0] = 1;
    for (const auto& b : s.basis()) {
        if (b.degree % 2 == 0) {
            for (int k = n; k >= 1; --k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - 1)];
        } else {
            for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - 1)];
        }
    }
    return c[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("wedge_basis") {
    auto s = make_space({{"a", 0}, {"b", 1}});
    CHECK(wedge_basis(*s, 1) == std::vector<Word>{{0}, {1}});
    CHECK(wedge_basis(*s, 2) == std::vector<Word>{{0, 1}, {1, 1}});
    CHECK(wedge_basis(*s, 3) == std::vector<Word>{{0, 1, 1}, {1, 1, 1}});
    CHECK_THROWS_AS(wedge_basis(*s, 0), InputError);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto sp = fixtures::random_space(rng, 3, -2, 3);
        for (int n = 1; n <= 5; ++n) {
            auto got = wedge_basis(*sp, n);
            CHECK(got == enumerate_words(*sp, n));
            CHECK(static_cast<long>(got.size()) == series_count(*sp, n));
        }
    }
}

TEST_CASE("koszul_sign is multiplicative") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 6;
        std::vector<int> deg(static_cast<std::size_t>(n));
        std::uniform_int_distribution<int> dd(-2, 3);
        for (auto& d : deg) d = dd(rng);
        std::vector<int> tau(static_cast<std::size_t>(n)), sigma(static_cast<std::size_t>(n));
        std::iota(tau.begin(), tau.end(), 0);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(tau.begin(), tau.end(), rng);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::vector<int> moved(static_cast<std::size_t>(n)), composite(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            moved[static_cast<std::size_t>(k)] = deg[static_cast<std::size_t>(tau[static_cast<std::size_t>(k)])];
            composite[static_cast<std::size_t>(k)] = tau[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])];
        }
        CHECK(koszul_sign(composite, deg) == koszul_sign(sigma, moved) * koszul_sign(tau, deg));
    }
}

TEST_CASE("MultiMap evaluation is antisymmetric") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 1000; ++trial) {
        auto s = fixtures::random_space(rng, 3);
        const int n = 2 + trial % 3;
        auto m = fixtures::random_multimap(rng, s, s, n, 2 - n, 0.7);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(s->dimension()) - 1);
        Word t(static_cast<std::size_t>(n));
        for (auto& x : t) x = pick(rng);
        std::uniform_int_distribution<int> pos(0, n - 2);
        const auto k = static_cast<std::size_t>(pos(rng));
        Word u = t;
        std::swap(u[k], u[k + 1]);
        const int sign = transposition_sign(s->degree(t[k]), s->degree(t[k + 1]));
        const Element a = m.evaluate(t);
        const Element b = m.evaluate(u);
        CHECK(b == (sign == 1 ? a : -a));
    }
}

TEST_CASE("MultiMap rejects wrong degrees") {
    auto s = make_space({{"x", 1}, {"z", 2}});
    MultiMap m(s, s, 1, 1);
    CHECK_NOTHROW(m.set({0}, parse_element(s, "1*z")));
    CHECK_THROWS_AS(m.set({1}, parse_element(s, "1*x")), StructuralError);
    MultiMap q2(s, s, 2, 0);
    CHECK_THROWS(q2.set({1, 1}, parse_element(s, "1*z")));
}

TEST_CASE("apply with repeated blocks matches expanded evaluation") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = fixtures::random_space(rng, 3);
        const int n = 1 + trial % 3;
        auto m = fixtures::random_multimap(rng, s, s, n, 0, 0.8);
        const int d = s->degree(0);
        Element v(s, d);
        for (int i : s->indices_of_degree(d)) v.add_term(i, fixtures::small_rational(rng));
        std::vector<Element> args(static_cast<std::size_t>(n), v);
        const ArgBlock<Rational> block{&v, n};
        Element blocked = apply_map(m, std::span<const ArgBlock<Rational>>(&block, 1));
        CHECK(blocked == apply_map(m, std::span<const Element>(args)));
    }
}

TEST_CASE("elements parse and print") {
    auto s = make_space({{"x", 1}, {"y", 1}, {"z", 2}});
    auto v = parse_element(s, "1*x - 1/2*y");
    CHECK(to_string(v) == "1*x - 1/2*y");
    CHECK(to_string(parse_element(s, "x + -1/2*y + 0*x")) == "1*x - 1/2*y");
    CHECK(to_string(parse_element(s, "0", 1)) == "0");
    CHECK_THROWS_AS(parse_element(s, "1*x + 1*z"), InputError);
    CHECK_THROWS_AS(parse_element(s, "1*q"), InputError);
    CHECK_THROWS_AS(parse_element(s, "1/0*x"), InputError);
}

TEST_CASE("exact rank") {
    Matrix m(3, 3);
    int v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = v[r][c];
    CHECK(rank(m) == 2);
    CHECK(nullspace(m).size() == 1);
    m(2, 2) = Rational(1, 3);
    CHECK(rank(m) == 2);
}

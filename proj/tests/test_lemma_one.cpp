#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "linfty/lemma_one.hpp"
#include "oracles.hpp"

using namespace linf;
using fixtures::multimap;

TEST_CASE("worked example on the two-term complex") {
    auto T = fixtures::two_term(3);
    auto F = MorphismComponents::identity(T);
    auto H = multimap(T.space(), T.space(), 2, -2, {{{"b", "b"}, "1*a"}});
    auto out = perturb({F, 2, H});
    const auto& Ft = out.morphism;
    CHECK(Ft.component(1) == F.component(1));
    CHECK(Ft.component(2).evaluate(Word{1, 1}) == parse_element(T.space(), "1*b"));
    CHECK(Ft.component(2).evaluate(Word{0, 1}) == -H.evaluate(Word{1, 1}));
    CHECK(check_morphism(Ft).pass());
    CHECK(is_quasi_iso(Ft).verdict);
}

TEST_CASE("H = 0 leaves F unchanged") {
    auto H3 = fixtures::heisenberg(3);
    auto F = MorphismComponents::identity(H3);
    auto out = perturb({F, 2, MultiMap(H3.space(), H3.space(), 2, -2)});
    CHECK(out.morphism == F);
}

TEST_CASE("n = 1 is a chain homotopy") {
    auto s = make_space({{"a", 0}, {"b", 1}, {"c", 1}, {"d", 2}});
    auto L = make_linfty(s, {fixtures::qmap(s, 1, {{{"a"}, "1*b"}, {{"c"}, "1*d"}})}, 2);
    auto F = MorphismComponents::identity(L);
    auto H = multimap(s, s, 1, -1, {{{"b"}, "2*a"}, {{"d"}, "1*c"}, {{"c"}, "3*a"}});
    auto out = perturb({F, 1, H});
    for (const Word& w : wedge_basis(*s, 1))
        CHECK(out.morphism.component(1).evaluate(w) == F.component(1).evaluate(w) + oracles::perturbation_oracle(L, L, H, w));
    CHECK(check_morphism(out.morphism).pass());
    CHECK(is_quasi_iso(out.morphism).verdict);
}

TEST_CASE("input validation") {
    auto T = fixtures::two_term(3);
    auto F = MorphismComponents::identity(T);
    CHECK_THROWS_AS(perturb({F, 2, MultiMap(T.space(), T.space(), 2, -1)}), InputError);
    CHECK_THROWS_AS(perturb({F, 3, MultiMap(T.space(), T.space(), 3, -3)}), InputError);
    MorphismComponents bad(T, T);
    bad.set_component(multimap(T.space(), T.space(), 1, 0, {{{"a"}, "1*a"}}));
    CHECK_THROWS_AS(perturb({bad, 1, MultiMap(T.space(), T.space(), 1, -1)}), InputError);
}

TEST_CASE("filtration estimates along the flow") {
    auto T = fixtures::two_term(4);
    auto U = build_convolution(T, T);
    std::mt19937 rng(50);
    for (int n = 1; n <= 3; ++n) {
        auto F = MorphismComponents::identity(T);
        auto H = fixtures::random_multimap(rng, T.space(), T.space(), n, -n, 0.8);
        auto out = perturb(U, {F, n, H});
        const Element alpha = U.to_u(morphism_to_mc(F));
        const Element end = evaluate(out.flow.path, Rational(1));
        CHECK(U.from_u(end - alpha).filtration_level() >= n);
        const Element xi = U.to_u(gauge_parameter(F, H));
        const Element args[] = {xi};
        const Element linear = apply_map(U.structure().map(1), std::span<const Element>(args));
        CHECK(U.from_u(end - alpha - linear).filtration_level() >= n + 1);
    }
}

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "linfty/convolution.hpp"
#include "linfty/maurer_cartan.hpp"

using namespace linf;
using fixtures::multimap;
using fixtures::qmap;

namespace {

// Weight-graded comparison of the MC residual in U with the morphism residual.
int mismatches(const ConvolutionAlgebra& U, const HomElement& alpha) {
    const auto F = mc_to_morphism(alpha, U.source(), U.target());
    const Element mc = mc_residual(U.structure(), U.to_u(alpha)).residual;
    HomElement psi(U.source().space(), U.target().space(), U.cap(), 2);
    for (int n = 1; n <= U.cap(); ++n)
        for (const Word& w : wedge_basis(*U.source().space(), n)) {
            Element r = morphism_residual(F, w);
            if (!r.zero()) psi.components().set(n, w, r);
        }
    const Element expected = U.to_u(psi);
    return mc == expected ? 0 : 1;
}

}  // namespace

TEST_CASE("convolution algebra satisfies the relations") {
    std::vector<std::pair<LInftyStructure, LInftyStructure>> pairs{
        {fixtures::two_term(4), fixtures::two_term(4)},
        {fixtures::heisenberg(3), fixtures::heisenberg(3)},
        {fixtures::gauge_example(3), fixtures::two_term(3)},
        {fixtures::two_term(3), fixtures::gauge_example(3)},
        {fixtures::sl2(3), fixtures::sl2(3)},
    };
    for (const auto& [a, b] : pairs) {
        auto U = build_convolution(a, b);
        CHECK(U.check_relations().pass());
    }
}

TEST_CASE("morphism and Maurer-Cartan conversions") {
    auto T = fixtures::two_term();
    auto id = MorphismComponents::identity(T);
    auto alpha = morphism_to_mc(id);
    CHECK(alpha.u_degree() == 1);
    CHECK(alpha.filtration_level() == 1);
    CHECK(mc_to_morphism(alpha, T, T) == id);
    auto U = build_convolution(T, T);
    CHECK(mc_residual(U.structure(), U.to_u(alpha)).pass());
    CHECK(U.from_u(U.to_u(alpha)) == alpha);

    MorphismComponents F(T, T);
    F.set_component(multimap(T.space(), T.space(), 2, -1, {{{"b", "b"}, "1*b"}}));
    CHECK(morphism_to_mc(F).filtration_level() == 2);
    CHECK(morphism_to_mc(MorphismComponents(T, T)).filtration_level() == T.cap() + 1);

    HomElement wrong(T.space(), T.space(), T.cap(), 0);
    CHECK_THROWS_AS(mc_to_morphism(wrong, T, T), InputError);

    HomElement xi(T.space(), T.space(), T.cap(), 0);
    xi.components().set(2, {1, 1}, parse_element(T.space(), "1*a"));
    CHECK(xi.filtration_level() == 2);
    CHECK(U.to_u(xi).degree() == 0);
}

TEST_CASE("correspondence between morphisms and Maurer-Cartan elements") {
    std::mt19937 rng(40);
    std::vector<std::pair<LInftyStructure, LInftyStructure>> pairs{
        {fixtures::two_term(4), fixtures::two_term(4)},
        {fixtures::heisenberg(3), fixtures::heisenberg(3)},
        {fixtures::gauge_example(3), fixtures::gauge_example(3)},
    };
    for (const auto& [a, b] : pairs) {
        auto U = build_convolution(a, b);
        int failing = 0;
        for (int i = 0; i < static_cast<int>(U.space()->dimension()); ++i) {
            if (U.space()->degree(i) != 1) continue;
            const auto alpha = U.from_u(Element::basis(U.space(), i));
            CHECK(mismatches(U, alpha) == 0);
            if (!check_morphism(mc_to_morphism(alpha, a, b)).pass()) ++failing;
        }
        CHECK(failing > 0);
        for (int trial = 0; trial < 10; ++trial) {
            Element v(U.space(), 1);
            for (int i : U.space()->indices_of_degree(1))
                if (rng() % 3 == 0) v.add_term(i, fixtures::small_rational(rng));
            CHECK(mismatches(U, U.from_u(v)) == 0);
        }
    }
}

TEST_CASE("iterated coproduct") {
    auto s = make_space({{"a", 0}, {"b", 1}});
    CHECK(iterated_coproduct(*s, CoChain{{Word{0}, Rational(1)}}, 2).empty());
    CHECK(iterated_coproduct(*s, CoChain{{Word{0, 1}, Rational(1)}}, 3).empty());
    auto d = iterated_coproduct(*s, CoChain{{Word{0, 1}, Rational(1)}}, 2);
    REQUIRE(d.size() == 2);
    const Rational ab = d.at({Word{0}, Word{1}});
    const Rational ba = d.at({Word{1}, Word{0}});
    CHECK(abs(ab) == 1);
    CHECK(ab == ba);
}

TEST_CASE("defect is rebuilt from its projection") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = fixtures::random_structure(rng, 3, 3, 0.3);
        auto b = fixtures::random_structure(rng, 3, 3, 0.3);
        MorphismComponents F(a, b);
        for (int n = 1; n <= 3; ++n)
            F.set_component(fixtures::random_multimap(rng, a.space(), b.space(), n, 1 - n, 0.5));
        for (int n = 1; n <= 3; ++n)
            for (const Word& w : wedge_basis(*a.space(), n)) CHECK(reconstruct_defect(F, w) == morphism_defect(F, w));
    }
    auto T = fixtures::two_term();
    auto id = MorphismComponents::identity(T);
    ComponentMap zero(T.space(), T.space(), T.cap(), 1);
    CHECK(partial_derivation(zero, id.components(), {{0}, {1}}).empty());
    ComponentMap b(T.space(), T.space(), T.cap(), 1);
    b.set(1, {0}, parse_element(T.space(), "1*b"));
    CHECK(partial_derivation(b, id.components(), {{0}}) == CoChain{{Word{1}, Rational(1)}});
}

TEST_CASE("Q^U respects the weight filtration") {
    auto U = build_convolution(fixtures::two_term(4), fixtures::two_term(4));
    const auto& Q = U.structure();
    for (int n = 1; n <= U.cap(); ++n) {
        for (const auto& [uw, value] : Q.map(n).values()) {
            int levels = 0;
            for (int i : uw) levels += U.weight(i);
            for (const auto& [j, c] : value.terms()) CHECK(U.weight(j) >= levels - (n - 1));
        }
    }
}

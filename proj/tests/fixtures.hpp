#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "linfty/structure.hpp"

namespace fixtures {

using namespace linf;

struct Entry {
    std::vector<std::string> args;
    std::string value;
};

inline MultiMap multimap(const SpacePtr& source, const SpacePtr& target, int weight, int degree,
                         const std::vector<Entry>& entries) {
    MultiMap m(source, target, weight, degree);
    for (const auto& e : entries) {
        Word w;
        for (const auto& a : e.args) w.push_back(source->index(a));
        m.set(w, parse_element(target, e.value));
    }
    return m;
}

inline MultiMap qmap(const SpacePtr& s, int weight, const std::vector<Entry>& entries) {
    return multimap(s, s, weight, 2 - weight, entries);
}

inline LInftyStructure abelian(int cap = 4) { return make_linfty(make_space({{"x", 1}}), {}, cap); }

inline LInftyStructure heisenberg(int cap = 4) {
    auto s = make_space({{"x", 1}, {"y", 1}, {"z", 2}});
    return make_linfty(s, {qmap(s, 2, {{{"x", "y"}, "1*z"}})}, cap);
}

inline LInftyStructure two_term(int cap = 4) {
    auto s = make_space({{"a", 0}, {"b", 1}});
    return make_linfty(s, {qmap(s, 1, {{{"a"}, "1*b"}})}, cap);
}

inline LInftyStructure gauge_example(int cap = 4) {
    auto s = make_space({{"w", 0}, {"x", 1}, {"y", 1}});
    return make_linfty(s, {qmap(s, 2, {{{"w", "x"}, "1*y"}})}, cap);
}

inline LInftyStructure non_nilpotent(int cap = 4) {
    auto s = make_space({{"w", 0}, {"v", 1}});
    return make_linfty(s, {qmap(s, 2, {{{"w", "v"}, "1*v"}})}, cap);
}

/// e and f act nilpotently on the odd part; d p = c. Lower central depth 4.
inline LInftyStructure filiform(int cap = 3) {
    auto s = make_space({{"e", 0}, {"f", 0}, {"p", 0}, {"a", 1}, {"b", 1}, {"c", 1}});
    return from_dgla(s, qmap(s, 1, {{{"p"}, "1*c"}}),
                     qmap(s, 2, {{{"e", "a"}, "1*b"}, {{"e", "b"}, "1*c"}, {{"f", "a"}, "1*c"}}), cap);
}

/// sl2 in degree 0: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LInftyStructure sl2(int cap = 3) {
    auto s = make_space({{"e", 0}, {"f", 0}, {"h", 0}});
    return from_dgla(s, MultiMap(s, s, 1, 1),
                     qmap(s, 2, {{{"h", "e"}, "2*e"}, {{"h", "f"}, "-2*f"}, {{"e", "f"}, "1*h"}}), cap);
}

inline Rational small_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline SpacePtr random_space(std::mt19937& rng, int max_dim, int lo = -1, int hi = 2) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<int> deg(lo, hi);
    std::vector<BasisElement> basis;
    const int n = dim(rng);
    for (int i = 0; i < n; ++i) basis.push_back({std::string(1, static_cast<char>('a' + i)), deg(rng)});
    return make_space(basis);
}

/// Random sparse map of the given weight and degree; each output coefficient is
/// nonzero with probability `density`.
inline MultiMap random_multimap(std::mt19937& rng, const SpacePtr& source, const SpacePtr& target, int weight,
                                int degree, double density = 0.4) {
    MultiMap m(source, target, weight, degree);
    std::bernoulli_distribution keep(density);
    for (const Word& w : wedge_basis(*source, weight)) {
        const int d = word_degree(*source, w) + degree;
        Element v(target, d);
        for (int i : target->indices_of_degree(d))
            if (keep(rng)) v.add_term(i, small_rational(rng));
        if (!v.zero()) m.set(w, v);
    }
    return m;
}

inline LInftyStructure random_structure(std::mt19937& rng, int max_dim, int cap, double density = 0.4) {
    auto s = random_space(rng, max_dim);
    std::vector<MultiMap> maps;
    for (int n = 1; n <= cap; ++n) maps.push_back(random_multimap(rng, s, s, n, 2 - n, density));
    return make_linfty(s, maps, cap);
}

}  // namespace fixtures

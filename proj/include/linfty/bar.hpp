#pragma once

// The reduced bar coalgebra S^c(s^{-1}L): symmetric words in the shifted
// generators s^{-1}g of degree |g| - 1, with ordinary Koszul signs. Every
// coalgebra-level computation (lifts, coproducts, convolution products) runs
// here; the public API speaks the antisymmetric "wedge" convention and converts
// with decalage_sign().

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "linfty/components.hpp"
#include "linfty/graded.hpp"

namespace linf {

/// Linear combination of canonical words (possibly of mixed weight).
using CoChain = std::map<Word, Rational>;

namespace bar {

/// Koszul sign for swapping shifted generators of unshifted degrees p and q.
inline int swap_sign(int p, int q) { return (((p - 1) * (q - 1)) % 2 == 0) ? 1 : -1; }

/// Total shifted degree sum(|g_i| - 1).
int degree(const GradedSpace& space, std::span<const int> word);

std::optional<SignedWord> sort(const GradedSpace& space, Word tuple);

/// Sign relating the wedge presentation to the bar presentation of a tuple:
/// (-1)^{sum_i (n - i)(|g_i| + 1)}. Wedge value = decalage_sign * bar value.
int decalage_sign(const GradedSpace& space, std::span<const int> tuple);

/// Adds c * (tuple) to `chain`, sorting with bar signs and dropping vanishing words.
void add(CoChain& chain, const GradedSpace& space, const Word& tuple, const Rational& c);

/// Converts coefficients between the wedge and bar presentations (an involution).
CoChain convert(const GradedSpace& space, const CoChain& chain);

/// Value of component f_{|word|} on a canonical word, in the bar convention.
Element component_value(const ComponentMap& f, const Word& word);

/// Ordered splittings of `word` into k nonempty blocks (the reduced iterated
/// coproduct). `emit(blocks, sign)` receives the blocks and the Koszul sign.
void for_each_splitting(const GradedSpace& space, const Word& word, int k,
                        const std::function<void(const std::vector<Word>&, int)>& emit);

/// Unordered set partitions of `word`, blocks ordered by first position.
void for_each_partition(const GradedSpace& space, const Word& word,
                        const std::function<void(const std::vector<Word>&, int)>& emit);

/// Product of target elements in the symmetric coalgebra.
CoChain product(const GradedSpace& space, std::span<const Element> factors);

/// Coderivation extending the components q (acting on the front).
CoChain coderivation(const ComponentMap& q, const CoChain& x);

/// Coalgebra map extending degree-0 components f.
CoChain coalgebra_map(const ComponentMap& f, const CoChain& x);

/// pr o (map with components f) applied to x: sum of f_{|y|}(y).
Element project(const ComponentMap& f, const CoChain& x, int output_degree);

/// Weight-1 part of a chain as an element of the given degree.
Element weight_one(const SpacePtr& space, const CoChain& x, int degree);

CoChain scaled(CoChain x, const Rational& c);
CoChain difference(CoChain a, const CoChain& b);
void add_into(CoChain& a, const CoChain& b, const Rational& c = 1);

}  // namespace bar
}  // namespace linf

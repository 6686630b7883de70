#pragma once

// Independent evaluators used to cross-check the library. They work directly
// with the antisymmetric convention and never touch the bar model.

#include <vector>

#include "linfty/structure.hpp"

namespace oracles {

using namespace linf;

/// All (i, n-i) unshuffles of positions 0..n-1: increasing first block, increasing rest.
inline std::vector<std::vector<int>> unshuffles(int n, int i) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != i) continue;
        std::vector<int> perm;
        for (int p = 0; p < n; ++p)
            if ((mask >> p) & 1u) perm.push_back(p);
        for (int p = 0; p < n; ++p)
            if (!((mask >> p) & 1u)) perm.push_back(p);
        out.push_back(perm);
    }
    return out;
}

/// sum_{i+j=n+1} sum_sigma chi(sigma) (-1)^{j-1} Q_j(Q_i(g_sigma(1..i)), g_sigma(i+1..n)).
inline Element unshuffle_residual(const LInftyStructure& L, const Word& word) {
    const SpacePtr& s = L.space();
    const int n = static_cast<int>(word.size());
    Element out(s, word_degree(*s, word) + 3 - n);
    std::vector<int> degrees;
    for (int g : word) degrees.push_back(s->degree(g));
    for (int i = 1; i <= n; ++i) {
        const int j = n + 1 - i;
        if (i > L.cap() || j > L.cap()) continue;
        for (const auto& perm : unshuffles(n, i)) {
            const int chi = koszul_sign(perm, degrees);
            std::vector<int> inner;
            for (int p = 0; p < i; ++p) inner.push_back(word[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])]);
            Element first = L.map(i).evaluate(inner);
            if (first.zero()) continue;
            std::vector<Element> args{first};
            for (int p = i; p < n; ++p)
                args.push_back(Element::basis(s, word[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])]));
            Element term = apply_map(L.map(j), std::span<const Element>(args));
            const int sign = chi * ((j - 1) % 2 == 0 ? 1 : -1);
            out += sign == 1 ? term : -term;
        }
    }
    return out;
}

}  // namespace oracles

namespace oracles {

/// Weight-n correction of the perturbation, written out term by term:
/// Q°_1 H(g) - sum_i (-1)^{n + k_1 + ... + k_{i-1}} H(g_1, ..., Q_1 g_i, ..., g_n).
inline Element perturbation_oracle(const LInftyStructure& source, const LInftyStructure& target,
                                   const MultiMap& H, const Word& word) {
    const int n = static_cast<int>(word.size());
    Element hv = H.evaluate(word);
    const Element first[] = {hv};
    Element out = apply_map(target.map(1), std::span<const Element>(first));
    int prefix = 0;
    for (int i = 0; i < n; ++i) {
        std::vector<Element> args;
        for (int p = 0; p < n; ++p) {
            const Element g = Element::basis(source.space(), word[static_cast<std::size_t>(p)]);
            if (p == i) {
                const Element one[] = {g};
                args.push_back(apply_map(source.map(1), std::span<const Element>(one)));
            } else {
                args.push_back(g);
            }
        }
        Element term = apply_map(H, std::span<const Element>(args));
        const int sign = ((n + prefix) % 2 == 0) ? 1 : -1;
        if (sign == 1)
            out -= term;
        else
            out += term;
        prefix += source.space()->degree(word[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace oracles

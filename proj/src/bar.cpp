#include "linfty/bar.hpp"

namespace linf::bar {

int degree(const GradedSpace& space, std::span<const int> word) {
    int d = 0;
    for (int i : word) d += space.degree(i) - 1;
    return d;
}

std::optional<SignedWord> sort(const GradedSpace& space, Word tuple) {
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
            sign *= swap_sign(space.degree(tuple[j - 1]), space.degree(tuple[j]));
            std::swap(tuple[j - 1], tuple[j]);
        }
    }
    for (std::size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i] == tuple[i - 1] && space.degree(tuple[i]) % 2 == 0) return std::nullopt;
    return SignedWord{std::move(tuple), sign};
}

int decalage_sign(const GradedSpace& space, std::span<const int> tuple) {
    const std::size_t n = tuple.size();
    long e = 0;
    for (std::size_t i = 0; i < n; ++i) e += static_cast<long>(n - 1 - i) * (space.degree(tuple[i]) + 1);
    return (e % 2 == 0) ? 1 : -1;
}

void add(CoChain& chain, const GradedSpace& space, const Word& tuple, const Rational& c) {
    if (is_zero(c)) return;
    auto s = sort(space, tuple);
    if (!s) return;
    auto [it, inserted] = chain.try_emplace(s->word, Rational(0));
    if (s->sign == 1)
        it->second += c;
    else
        it->second -= c;
    if (is_zero(it->second)) chain.erase(it);
}

CoChain convert(const GradedSpace& space, const CoChain& chain) {
    CoChain out;
    for (const auto& [w, c] : chain) out.emplace(w, decalage_sign(space, w) == 1 ? c : Rational(-c));
    return out;
}

Element component_value(const ComponentMap& f, const Word& word) {
    const int n = static_cast<int>(word.size());
    const MultiMap& m = f.component(n);
    const Element* v = m.stored(word);
    if (v == nullptr) return m.zero_output(word);
    return decalage_sign(*f.source(), word) == 1 ? *v : -*v;
}

namespace {

// Koszul sign of rearranging `word` so that positions with smaller block label come first.
int regroup_sign(const GradedSpace& space, const Word& word, const std::vector<int>& label) {
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (label[i] > label[j]) sign *= swap_sign(space.degree(word[i]), space.degree(word[j]));
    return sign;
}

std::vector<Word> blocks_of(const Word& word, const std::vector<int>& label, int k) {
    std::vector<Word> blocks(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < word.size(); ++i) blocks[static_cast<std::size_t>(label[i])].push_back(word[i]);
    return blocks;
}

}  // namespace

void for_each_splitting(const GradedSpace& space, const Word& word, int k,
                        const std::function<void(const std::vector<Word>&, int)>& emit) {
    const int m = static_cast<int>(word.size());
    if (k < 1 || k > m) return;
    std::vector<int> label(word.size(), 0);
    std::vector<int> used(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int nonempty) -> void {
        if (k - nonempty > m - pos) return;
        if (pos == m) {
            emit(blocks_of(word, label, k), regroup_sign(space, word, label));
            return;
        }
        for (int b = 0; b < k; ++b) {
            label[static_cast<std::size_t>(pos)] = b;
            const bool fresh = used[static_cast<std::size_t>(b)]++ == 0;
            self(self, pos + 1, nonempty + (fresh ? 1 : 0));
            --used[static_cast<std::size_t>(b)];
        }
    };
    rec(rec, 0, 0);
}

void for_each_partition(const GradedSpace& space, const Word& word,
                        const std::function<void(const std::vector<Word>&, int)>& emit) {
    const int m = static_cast<int>(word.size());
    if (m == 0) return;
    std::vector<int> label(word.size(), 0);
    // restricted growth strings
    auto rec = [&](auto&& self, int pos, int blocks) -> void {
        if (pos == m) {
            emit(blocks_of(word, label, blocks), regroup_sign(space, word, label));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[static_cast<std::size_t>(pos)] = b;
            self(self, pos + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    label[0] = 0;
    rec(rec, 1, 1);
}

CoChain product(const GradedSpace& space, std::span<const Element> factors) {
    CoChain out;
    Word tuple;
    auto rec = [&](auto&& self, std::size_t i, const Rational& c) -> void {
        if (i == factors.size()) {
            add(out, space, tuple, c);
            return;
        }
        for (const auto& [idx, r] : factors[i].terms()) {
            tuple.push_back(idx);
            self(self, i + 1, Rational(c * r));
            tuple.pop_back();
        }
    };
    rec(rec, 0, Rational(1));
    return out;
}

CoChain coderivation(const ComponentMap& q, const CoChain& x) {
    const GradedSpace& space = *q.source();
    CoChain out;
    for (const auto& [word, c] : x) {
        const int m = static_cast<int>(word.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> label(word.size());
            Word front, rest;
            for (int i = 0; i < m; ++i) {
                const bool in = (mask >> i) & 1u;
                label[static_cast<std::size_t>(i)] = in ? 0 : 1;
                (in ? front : rest).push_back(word[static_cast<std::size_t>(i)]);
            }
            if (static_cast<int>(front.size()) > q.cap()) continue;
            const Element v = component_value(q, front);
            if (v.zero()) continue;
            const Rational coef = c * regroup_sign(space, word, label);
            for (const auto& [idx, r] : v.terms()) {
                Word tuple{idx};
                tuple.insert(tuple.end(), rest.begin(), rest.end());
                add(out, *q.target(), tuple, coef * r);
            }
        }
    }
    return out;
}

CoChain coalgebra_map(const ComponentMap& f, const CoChain& x) {
    if (f.degree() != 0) throw InputError("coalgebra maps have degree 0");
    const GradedSpace& space = *f.source();
    CoChain out;
    for (const auto& [word, c] : x) {
        for_each_partition(space, word, [&](const std::vector<Word>& blocks, int sign) {
            std::vector<Element> factors;
            factors.reserve(blocks.size());
            for (const auto& b : blocks) {
                if (static_cast<int>(b.size()) > f.cap()) return;
                factors.push_back(component_value(f, b));
                if (factors.back().zero()) return;
            }
            add_into(out, product(*f.target(), factors), Rational(c * sign));
        });
    }
    return out;
}

Element project(const ComponentMap& f, const CoChain& x, int output_degree) {
    Element out(f.target(), output_degree);
    for (const auto& [word, c] : x) {
        if (static_cast<int>(word.size()) > f.cap()) continue;
        Element v = component_value(f, word);
        if (v.zero()) continue;
        v *= c;
        out += v;
    }
    return out;
}

Element weight_one(const SpacePtr& space, const CoChain& x, int degree) {
    Element out(space, degree);
    for (const auto& [word, c] : x)
        if (word.size() == 1) out.add_term(word[0], c);
    return out;
}

CoChain scaled(CoChain x, const Rational& c) {
    if (is_zero(c)) return {};
    for (auto& [w, v] : x) v *= c;
    return x;
}

void add_into(CoChain& a, const CoChain& b, const Rational& c) {
    for (const auto& [w, v] : b) {
        auto [it, inserted] = a.try_emplace(w, Rational(0));
        it->second += c * v;
        if (is_zero(it->second)) a.erase(it);
    }
}

CoChain difference(CoChain a, const CoChain& b) {
    add_into(a, b, Rational(-1));
    return a;
}

}  // namespace linf::bar

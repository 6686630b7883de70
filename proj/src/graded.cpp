#include "linfty/graded.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace linf {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name.empty()) throw InputError("empty basis name");
        if (!lookup_.emplace(basis_[i].name, static_cast<int>(i)).second)
            throw InputError("duplicate basis name '" + basis_[i].name + "'");
    }
}

std::optional<int> GradedSpace::find(std::string_view name) const {
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

int GradedSpace::index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw InputError("unknown basis name '" + std::string(name) + "'");
    return *i;
}

std::vector<int> GradedSpace::indices_of_degree(int degree) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].degree == degree) out.push_back(static_cast<int>(i));
    return out;
}

std::map<int, int> GradedSpace::dimensions() const {
    std::map<int, int> dims;
    for (const auto& b : basis_) ++dims[b.degree];
    return dims;
}

SpacePtr make_space(std::vector<BasisElement> basis) {
    return std::make_shared<const GradedSpace>(std::move(basis));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

std::string to_string(const Element& v) {
    if (v.zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : v.terms()) {
        Rational mag = abs(c);
        if (first) {
            out += (sgn(c) < 0 ? "-" : "");
        } else {
            out += (sgn(c) < 0 ? " - " : " + ");
        }
        out += format_rational(mag) + "*" + v.space()->name(i);
        first = false;
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Element parse_element(const SpacePtr& space, std::string_view text, std::optional<int> degree) {
    const std::string_view body = trim(text);
    if (body.empty()) throw InputError("empty linear combination");
    // Terms are "[signs] [coef*]name"; names and unsigned coefficients contain
    // no '+'/'-', so every sign after the start of a term separates terms.
    std::vector<std::pair<int, std::string>> terms;
    std::size_t pos = 0;
    while (pos < body.size()) {
        int sign = 1;
        while (pos < body.size() && (body[pos] == '+' || body[pos] == '-' || std::isspace(static_cast<unsigned char>(body[pos])))) {
            if (body[pos] == '-') sign = -sign;
            ++pos;
        }
        const std::size_t begin = pos;
        while (pos < body.size() && body[pos] != '+' && body[pos] != '-') ++pos;
        const std::string_view t = trim(body.substr(begin, pos - begin));
        if (t.empty()) throw InputError("malformed linear combination '" + std::string(text) + "'");
        terms.emplace_back(sign, std::string(t));
    }

    std::vector<std::pair<int, Rational>> parsed;
    for (const auto& [s, term] : terms) {
        const auto star = term.find('*');
        Rational coef = 1;
        std::string_view name = term;
        if (star != std::string::npos) {
            coef = parse_rational(trim(std::string_view(term).substr(0, star)));
            name = trim(std::string_view(term).substr(star + 1));
        }
        if (name == "0" && star == std::string::npos) continue;
        parsed.emplace_back(space->index(name), coef * s);
    }
    if (!degree) {
        if (parsed.empty()) throw InputError("cannot infer the degree of the zero vector '" + std::string(text) + "'");
        degree = space->degree(parsed.front().first);
    }
    Element v(space, *degree);
    for (const auto& [i, c] : parsed) v.add_term(i, c);
    return v;
}

int koszul_sign(std::span<const int> permutation, std::span<const int> degrees) {
    const std::size_t n = permutation.size();
    if (degrees.size() != n) throw InputError("permutation and degree vector differ in length");
    std::vector<bool> seen(n, false);
    for (int p : permutation) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
            throw InputError("not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    int sign = 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const int i = permutation[a];
            const int j = permutation[b];
            if (i > j) sign *= transposition_sign(degrees[static_cast<std::size_t>(i)], degrees[static_cast<std::size_t>(j)]);
        }
    return sign;
}

std::optional<SignedWord> canonicalize(const GradedSpace& space, Word tuple) {
    int sign = 1;
    // Insertion sort; each adjacent swap of distinct entries contributes its sign.
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
            sign *= transposition_sign(space.degree(tuple[j - 1]), space.degree(tuple[j]));
            std::swap(tuple[j - 1], tuple[j]);
        }
    }
    for (std::size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i] == tuple[i - 1] && space.degree(tuple[i]) % 2 == 0) return std::nullopt;
    return SignedWord{std::move(tuple), sign};
}

std::optional<SignedWord> canonicalize_word(const GradedSpace& space, const std::vector<std::string>& names) {
    Word tuple;
    tuple.reserve(names.size());
    for (const auto& n : names) tuple.push_back(space.index(n));
    return canonicalize(space, std::move(tuple));
}

std::vector<Word> wedge_basis(const GradedSpace& space, int weight) {
    if (weight < 1) throw InputError("weight must be at least 1 (the coalgebra has no weight-0 part)");
    std::vector<Word> out;
    Word w;
    const int dim = static_cast<int>(space.dimension());
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(w.size()) == weight) {
            out.push_back(w);
            return;
        }
        for (int i = from; i < dim; ++i) {
            w.push_back(i);
            // even-degree elements may not repeat
            self(self, space.degree(i) % 2 == 0 ? i + 1 : i);
            w.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

int word_degree(const GradedSpace& space, const Word& word) {
    int d = 0;
    for (int i : word) d += space.degree(i);
    return d;
}

std::string word_to_string(const GradedSpace& space, const Word& word) {
    std::string out = "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ",";
        out += space.name(word[i]);
    }
    return out + ")";
}

MultiMap::MultiMap(SpacePtr source, SpacePtr target, int weight, int degree)
    : source_(std::move(source)), target_(std::move(target)), weight_(weight), degree_(degree) {
    if (weight_ < 1) throw InputError("multilinear maps have weight >= 1");
}

void MultiMap::check_value(const Word& tuple, const Element& value) const {
    if (static_cast<int>(tuple.size()) != weight_)
        throw InputError("word of weight " + std::to_string(tuple.size()) + " given to a weight-" +
                         std::to_string(weight_) + " map");
    if (!same_space(value.space(), target_)) throw InputError("value lives in the wrong space");
    for (int i : tuple)
        if (i < 0 || static_cast<std::size_t>(i) >= source_->dimension()) throw InputError("basis index out of range");
    if (!value.zero() && value.degree() != word_degree(*source_, tuple) + degree_)
        throw StructuralError(weight_, "value on " + word_to_string(*source_, tuple) + " has degree " +
                                           std::to_string(value.degree()) + ", expected " +
                                           std::to_string(word_degree(*source_, tuple) + degree_) +
                                           " for a map of weight " + std::to_string(weight_) + " and degree " +
                                           std::to_string(degree_));
}

void MultiMap::set(const Word& tuple, const Element& value) {
    check_value(tuple, value);
    auto canon = canonicalize(*source_, tuple);
    if (!canon) {
        if (!value.zero())
            throw InputError("word " + word_to_string(*source_, tuple) + " vanishes identically (repeated even-degree entry)");
        return;
    }
    values_.erase(canon->word);
    if (value.zero()) return;
    values_.emplace(canon->word, canon->sign == 1 ? value : -value);
}

void MultiMap::add(const Word& tuple, const Element& value) {
    check_value(tuple, value);
    if (value.zero()) return;
    auto canon = canonicalize(*source_, tuple);
    if (!canon)
        throw InputError("word " + word_to_string(*source_, tuple) + " vanishes identically (repeated even-degree entry)");
    auto it = values_.find(canon->word);
    Element v = canon->sign == 1 ? value : -value;
    if (it == values_.end()) {
        values_.emplace(canon->word, std::move(v));
    } else {
        it->second += v;
        if (it->second.zero()) values_.erase(it);
    }
}

Element MultiMap::evaluate(std::span<const int> tuple) const {
    Word w(tuple.begin(), tuple.end());
    if (static_cast<int>(w.size()) != weight_) throw InputError("wrong number of arguments");
    Element out(target_, word_degree(*source_, w) + degree_);
    auto canon = canonicalize(*source_, w);
    if (!canon) return out;
    const Element* v = stored(canon->word);
    if (v == nullptr) return out;
    return canon->sign == 1 ? *v : -*v;
}

const Element* MultiMap::stored(const Word& canonical) const {
    auto it = values_.find(canonical);
    return it == values_.end() ? nullptr : &it->second;
}

bool operator==(const MultiMap& a, const MultiMap& b) {
    return a.weight_ == b.weight_ && a.degree_ == b.degree_ && same_space(a.source_, b.source_) &&
           same_space(a.target_, b.target_) && a.values_ == b.values_;
}

Element apply_map(const MultiMap& f, std::span<const Element> args) {
    std::vector<ArgBlock<Rational>> blocks;
    blocks.reserve(args.size());
    for (const auto& a : args) blocks.push_back({&a, 1});
    return apply_map(f, std::span<const ArgBlock<Rational>>(blocks));
}

}  // namespace linf

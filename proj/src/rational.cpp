#include "linfty/rational.hpp"

#include <algorithm>
#include <cctype>

#include "linfty/errors.hpp"

namespace linf {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw InputError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(zn, zd);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

Rational factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

Poly::Poly(const Rational& c) {
    if (!is_zero(c)) coeffs_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int power) {
    Poly p;
    if (is_zero(c)) return p;
    p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
    p.coeffs_.back() = c;
    return p;
}

Rational Poly::coefficient(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational Poly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::derivative() const {
    Poly d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.coeffs_.push_back(coeffs_[i] * static_cast<long>(i));
    d.trim();
    return d;
}

Poly Poly::integral() const {
    Poly r;
    if (zero()) return r;
    r.coeffs_.push_back(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_.push_back(coeffs_[i] / static_cast<long>(i + 1));
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (is_zero(c)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.zero() || b.zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

std::string Poly::to_string() const {
    if (zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (is_zero(coeffs_[i])) continue;
        if (!out.empty()) out += " + ";
        out += format_rational(coeffs_[i]);
        if (i > 0) out += "*t^" + std::to_string(i);
    }
    return out;
}

void Poly::trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
}

}  // namespace linf

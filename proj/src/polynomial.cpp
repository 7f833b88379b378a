#include "weylcoinv/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace weylcoinv {

namespace {

void require_same_arity(int a, int b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": arity mismatch");
}

}  // namespace

Polynomial Polynomial::constant(int arity, const Rational& c) {
    Polynomial p(arity);
    if (c != 0) p.terms_.emplace(Exponent(arity, 0), c);
    return p;
}

Polynomial Polynomial::monomial(Exponent e, const Rational& c) {
    Polynomial p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

Polynomial Polynomial::variable(int arity, int i, int power) {
    if (i < 0 || i >= arity) throw std::invalid_argument("Polynomial::variable: index out of range");
    Exponent e(arity, 0);
    e[i] = power;
    return monomial(std::move(e), Rational(1));
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponent& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rational Polynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != arity_)
        throw std::invalid_argument("Polynomial::add_term: arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(arity_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_arity(arity_, o.arity_, "Polynomial::operator+=");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_arity(arity_, o.arity_, "Polynomial::operator-=");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_arity(arity_, o.arity_, "Polynomial::operator*");
    Polynomial out(arity_);
    Exponent e(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(arity_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

Polynomial Polynomial::operator/(const Rational& c) const {
    if (c == 0) throw std::invalid_argument("Polynomial::operator/: division by zero");
    return *this * (1 / c);
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial result = constant(arity_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

int Polynomial::min_total_degree() const {
    if (terms_.empty()) return 0;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
    return d;
}

bool Polynomial::all_exponents_nonnegative() const {
    for (const auto& [e, c] : terms_)
        for (int v : e)
            if (v < 0) return false;
    return true;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

Polynomial Polynomial::homogeneous_component(int d) const {
    Polynomial out(arity_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != arity_)
        throw std::invalid_argument("Polynomial::substitute: wrong image count");
    if (!all_exponents_nonnegative())
        throw std::domain_error("Polynomial::substitute: negative exponent");
    int target = arity_ == 0 ? 0 : images[0].arity();
    for (const auto& im : images) require_same_arity(im.arity(), target, "Polynomial::substitute");
    // Lazily extended power tables keep repeated exponents cheap.
    std::vector<std::vector<Polynomial>> pows(images.size());
    auto power = [&](int i, int k) -> const Polynomial& {
        auto& table = pows[i];
        if (table.empty()) table.push_back(constant(target, 1));
        while (static_cast<int>(table.size()) <= k) table.push_back(table.back() * images[i]);
        return table[k];
    };
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(target, c);
        for (int i = 0; i < arity_; ++i)
            if (e[i] != 0) term = term * power(i, e[i]);
        out += term;
    }
    return out;
}

Polynomial Polynomial::act_additive(const IntMatrix& s) const {
    if (static_cast<int>(s.size()) != arity_)
        throw std::invalid_argument("Polynomial::act_additive: matrix size mismatch");
    std::vector<Polynomial> images;
    images.reserve(arity_);
    for (int i = 0; i < arity_; ++i) {
        Polynomial im(arity_);
        for (int l = 0; l < arity_; ++l)
            if (s[l][i] != 0) im.add_term([&] {
                Exponent e(arity_, 0);
                e[l] = 1;
                return e;
            }(), Rational(s[l][i]));
        images.push_back(std::move(im));
    }
    return substitute(images);
}

Polynomial Polynomial::act_multiplicative(const IntMatrix& s) const {
    if (static_cast<int>(s.size()) != arity_)
        throw std::invalid_argument("Polynomial::act_multiplicative: matrix size mismatch");
    Polynomial out(arity_);
    Exponent img(arity_);
    for (const auto& [e, c] : terms_) {
        for (int l = 0; l < arity_; ++l) {
            long v = 0;
            for (int i = 0; i < arity_; ++i) v += s[l][i] * e[i];
            img[l] = static_cast<int>(v);
        }
        out.add_term(img, c);
    }
    return out;
}

Polynomial Polynomial::euler_derive(int i) const {
    if (i < 0 || i >= arity_) throw std::invalid_argument("Polynomial::euler_derive: bad index");
    Polynomial out(arity_);
    for (const auto& [e, c] : terms_)
        if (e[i] != 0) out.terms_.emplace(e, c * Rational(e[i]));
    return out;
}

Polynomial Polynomial::partial_derive(int i) const {
    if (i < 0 || i >= arity_) throw std::invalid_argument("Polynomial::partial_derive: bad index");
    if (!all_exponents_nonnegative())
        throw std::domain_error("Polynomial::partial_derive: negative exponent");
    Polynomial out(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent d = e;
        d[i] -= 1;
        out.terms_.emplace(std::move(d), c * Rational(e[i]));
    }
    return out;
}

Polynomial Polynomial::embed() const {
    Polynomial out(2 * arity_);
    for (const auto& [e, c] : terms_) {
        Exponent split(2 * arity_, 0);
        for (int i = 0; i < arity_; ++i) {
            if (e[i] >= 0)
                split[i] = e[i];
            else
                split[arity_ + i] = -e[i];
        }
        out.terms_.emplace(std::move(split), c);
    }
    return out;
}

Polynomial Polynomial::retract() const {
    if (arity_ % 2 != 0) throw std::invalid_argument("Polynomial::retract: odd arity");
    int n = arity_ / 2;
    Polynomial out(n);
    Exponent e(n);
    for (const auto& [split, c] : terms_) {
        for (int i = 0; i < n; ++i) e[i] = split[i] - split[n + i];
        out.add_term(e, c);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("Polynomial::evaluate: wrong point size");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0 && e[i] < 0)
                throw std::domain_error("Polynomial::evaluate: zero at negative exponent");
            Rational base = e[i] > 0 ? point[i] : Rational(1 / point[i]);
            for (int k = 0; k < std::abs(e[i]); ++k) term *= base;
        }
        total += term;
    }
    return total;
}

Rational Polynomial::evaluate_at_ones() const {
    Rational total(0);
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(1);
    Integer num(0), den(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num, den);
    content.canonicalize();
    return content;
}

Polynomial Polynomial::primitive_part() const { return *this / content(); }

std::vector<std::pair<Exponent, Rational>> Polynomial::sorted_terms(const MonomialOrder& ord) const {
    std::vector<std::pair<Exponent, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
    return out;
}

Exponent Polynomial::leading_exponent(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("leading_exponent of zero polynomial");
    const Exponent* best = &terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (ord.greater(e, *best)) best = &e;
    return *best;
}

Rational Polynomial::leading_coeff(const MonomialOrder& ord) const {
    return terms_.at(leading_exponent(ord));
}

std::string Polynomial::to_string(const std::vector<std::string>& varnames) const {
    if (terms_.empty()) return "0";
    auto name = [&](int i) {
        if (i < static_cast<int>(varnames.size())) return varnames[i];
        return "x" + std::to_string(i + 1);
    };
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms(MonomialOrder::natural(OrderKind::Grevlex, arity_))) {
        Rational a = c < 0 ? Rational(-c) : c;
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        std::string mono;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += name(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << rational_to_string(a);
        } else {
            if (a != 1) out << rational_to_string(a) << "*";
            out << mono;
        }
    }
    return out.str();
}

std::optional<Rational> proportionality_scalar(const Polynomial& a, const Polynomial& b) {
    if (a.arity() != b.arity()) return std::nullopt;
    if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(Rational(1)) : std::nullopt;
    if (a.is_zero()) return std::nullopt;
    if (a.term_count() != b.term_count()) return std::nullopt;
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    Rational scalar = ita->second / itb->second;
    for (; ita != a.terms().end(); ++ita, ++itb) {
        if (ita->first != itb->first) return std::nullopt;
        if (ita->second != scalar * itb->second) return std::nullopt;
    }
    return scalar;
}

}  // namespace weylcoinv

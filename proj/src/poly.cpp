#include "ipl/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ipl {

Poly Poly::constant(int nvars, Rational c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Expo(static_cast<std::size_t>(nvars), 0)] = std::move(c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("Poly::variable index");
    Poly p(nvars);
    Expo e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_[e] = 1;
    return p;
}

int Poly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

Rational Poly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::linear_coeff(int var) const {
    Expo e(static_cast<std::size_t>(nvars_), 0);
    e[static_cast<std::size_t>(var)] = 1;
    return coeff(e);
}

Rational Poly::constant_term() const { return coeff(Expo(static_cast<std::size_t>(nvars_), 0)); }

void Poly::add_term(const Expo& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e(static_cast<std::size_t>(nvars_));
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(nvars_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Expo d = e;
        d[v] -= 1;
        r.add_term(d, c * static_cast<long>(e[v]));
    }
    return r;
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(var)]));
    return d;
}

namespace {

double pow_int(double x, unsigned k) {
    double r = 1.0;
    while (k) {
        if (k & 1u) r *= x;
        x *= x;
        k >>= 1u;
    }
    return r;
}

} // namespace

double Poly::eval(std::span<const double> values) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = to_double(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= pow_int(values[i], e[i]);
        s += m;
    }
    return s;
}

double Poly::eval_abs_sum(std::span<const double> values) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = to_double(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= pow_int(values[i], e[i]);
        s += std::abs(m);
    }
    return s;
}

Rational Poly::eval_exact(std::span<const Rational> values) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) m *= values[i];
        s += m;
    }
    return s;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Descending lex puts the leading variable's monomials first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(static_cast<int>(e[i]));
        }
        if (mono.empty()) {
            out += rational_string(a);
        } else {
            if (a != 1) out += rational_string(a) + "*";
            out += mono;
        }
    }
    return out;
}

} // namespace ipl

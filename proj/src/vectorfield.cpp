#include "ipl/vectorfield.hpp"

#include <stdexcept>

namespace ipl {

VectorField VectorField::zero(int n) {
    VectorField f;
    f.n = n;
    f.comp.assign(static_cast<std::size_t>(n + 1), Poly(n + 1));
    return f;
}

VectorField VectorField::make2(Poly xi1, Poly xi2, Poly eta) {
    VectorField f;
    f.n = 2;
    f.comp = {std::move(xi1), std::move(xi2), std::move(eta)};
    for (const auto& c : f.comp)
        if (c.nvars() != 3) throw std::invalid_argument("VectorField::make2: components must be in (x,y,u)");
    return f;
}

Poly VectorField::apply(const Poly& p) const {
    Poly r(p.nvars());
    for (int k = 0; k <= n; ++k) r += comp[static_cast<std::size_t>(k)] * p.derivative(k);
    return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
    if (n != o.n) throw std::invalid_argument("VectorField: dimension mismatch");
    VectorField r = *this;
    for (std::size_t k = 0; k < comp.size(); ++k) r.comp[k] += o.comp[k];
    return r;
}

VectorField VectorField::operator*(const Rational& c) const {
    VectorField r = *this;
    for (auto& p : r.comp) p = p * c;
    return r;
}

bool VectorField::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

std::string VectorField::to_string() const {
    std::vector<std::string> names;
    if (n == 2) {
        names = {"x", "y", "u"};
    } else {
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        names.push_back("u");
    }
    std::string s;
    for (int k = 0; k <= n; ++k) {
        if (comp[static_cast<std::size_t>(k)].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + comp[static_cast<std::size_t>(k)].to_string(names) + ")*d/d" + names[static_cast<std::size_t>(k)];
    }
    return s.empty() ? "0" : s;
}

VectorField bracket(const VectorField& a, const VectorField& b) {
    if (a.n != b.n) throw std::invalid_argument("bracket: dimension mismatch");
    VectorField r = VectorField::zero(a.n);
    for (int k = 0; k <= a.n; ++k)
        r.comp[static_cast<std::size_t>(k)] =
            a.apply(b.comp[static_cast<std::size_t>(k)]) - b.apply(a.comp[static_cast<std::size_t>(k)]);
    return r;
}

Poly p2_x() { return Poly::variable(3, 0); }
Poly p2_y() { return Poly::variable(3, 1); }
Poly p2_u() { return Poly::variable(3, 2); }
Poly p2_const(Rational c) { return Poly::constant(3, std::move(c)); }

} // namespace ipl

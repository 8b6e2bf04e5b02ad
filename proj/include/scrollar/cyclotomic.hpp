#pragma once

#include <vector>

#include "scrollar/numeric.hpp"

namespace scrollar {

/// The field Q(zeta_e), elements reduced modulo the e-th cyclotomic
/// polynomial (so the representation is a field, which exact linear algebra
/// needs). One shared immutable instance per order.
class CyclotomicField {
public:
    static const CyclotomicField& of(int order);

    int order() const { return order_; }          // e
    int degree() const { return static_cast<int>(phi_.size()) - 1; }  // phi(e)
    const std::vector<Rat>& modulus() const { return phi_; }

    /// Reduces an arbitrary coefficient vector modulo Phi_e.
    std::vector<Rat> reduce(std::vector<Rat> poly) const;

private:
    explicit CyclotomicField(int order);
    int order_;
    std::vector<Rat> phi_;  // monic, ascending coefficients
};

/// An element of Q(zeta_e).
class Cyclo {
public:
    Cyclo() : field_(nullptr) {}
    explicit Cyclo(const CyclotomicField& field, std::vector<Rat> coeffs = {});
    static Cyclo rational(const CyclotomicField& field, const Rat& value);
    static Cyclo zeta_power(const CyclotomicField& field, long k);

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const;  // ConsistencyError when not rational
    const std::vector<Rat>& coeffs() const { return c_; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const Rat& s) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }

    bool operator==(const Cyclo& o) const;

private:
    const CyclotomicField* field_;
    std::vector<Rat> c_;  // size = field degree
};

}  // namespace scrollar

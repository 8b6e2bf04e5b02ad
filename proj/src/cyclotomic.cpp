#include "scrollar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace scrollar {

namespace {

// remainder of a by monic b, both ascending
std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    long db = static_cast<long>(b.size()) - 1;
    while (!a.empty() && static_cast<long>(a.size()) - 1 >= db) {
        Rat q = a.back();  // b is monic
        long shift = static_cast<long>(a.size()) - 1 - db;
        for (long j = 0; j <= db; ++j)
            a[static_cast<size_t>(shift + j)] -= q * b[static_cast<size_t>(j)];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// exact quotient of a by monic b
std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
    long db = static_cast<long>(b.size()) - 1;
    long dq = static_cast<long>(a.size()) - 1 - db;
    if (dq < 0) throw ConsistencyError("cyclotomic division underflow");
    std::vector<Rat> q(static_cast<size_t>(dq) + 1, Rat(0));
    for (long k = dq; k >= 0; --k) {
        Rat c = a[static_cast<size_t>(k + db)];
        q[static_cast<size_t>(k)] = c;
        if (c == 0) continue;
        for (long j = 0; j <= db; ++j) a[static_cast<size_t>(k + j)] -= c * b[static_cast<size_t>(j)];
    }
    for (const auto& r : a)
        if (r != 0) throw ConsistencyError("inexact cyclotomic division");
    return q;
}

std::vector<Rat> cyclotomic_polynomial(int e) {
    // x^e - 1 divided by the product of Phi_d over proper divisors d of e
    std::vector<Rat> num(static_cast<size_t>(e) + 1, Rat(0));
    num[0] = -1;
    num.back() = 1;
    for (int d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order), phi_(cyclotomic_polynomial(order)) {
    if (order < 1) throw ValidationError("cyclotomic order must be positive");
}

const CyclotomicField& CyclotomicField::of(int order) {
    static std::map<int, std::unique_ptr<CyclotomicField>> fields;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = fields.find(order);
    if (it == fields.end())
        it = fields.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order)))
                 .first;
    return *it->second;
}

std::vector<Rat> CyclotomicField::reduce(std::vector<Rat> poly) const {
    auto r = poly_mod(std::move(poly), phi_);
    r.resize(static_cast<size_t>(degree()), Rat(0));
    for (auto& x : r) x.canonicalize();
    return r;
}

Cyclo::Cyclo(const CyclotomicField& field, std::vector<Rat> coeffs) : field_(&field) {
    c_ = field.reduce(std::move(coeffs));
}

Cyclo Cyclo::rational(const CyclotomicField& field, const Rat& value) {
    return Cyclo(field, {value});
}

Cyclo Cyclo::zeta_power(const CyclotomicField& field, long k) {
    long r = ((k % field.order()) + field.order()) % field.order();
    std::vector<Rat> v(static_cast<size_t>(r) + 1, Rat(0));
    v.back() = 1;
    return Cyclo(field, std::move(v));
}

bool Cyclo::is_zero() const {
    if (!field_) return true;
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    if (!field_) return true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_part() const {
    if (!is_rational()) throw ConsistencyError("cyclotomic value is not rational");
    return field_ && !c_.empty() ? c_[0] : Rat(0);
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    if (!field_) return o;
    if (!o.field_) return *this;
    std::vector<Rat> v = c_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
    Cyclo out;
    out.field_ = field_;
    out.c_ = std::move(v);
    return out;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    return *this + o * Rat(-1);
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    if (!field_ || !o.field_) return Cyclo();
    std::vector<Rat> v(c_.size() + o.c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return Cyclo(*field_, std::move(v));
}

Cyclo Cyclo::operator*(const Rat& s) const {
    if (!field_) return Cyclo();
    Cyclo out;
    out.field_ = field_;
    out.c_ = c_;
    for (auto& x : out.c_) {
        x *= s;
        x.canonicalize();
    }
    return out;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (!field_ || !o.field_) return false;
    return c_ == o.c_;
}

}  // namespace scrollar

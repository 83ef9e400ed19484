/*
 * exponent.hpp
 * ------------
 * ExponentQ: affine-linear combinations over Q of formal parameters, the
 * common home of characteristic exponents.
 *
 * ExpClass: the formal value e(x) = exp(2*pi*i*x), compared modulo 1 in the
 * constant part. Parameters are treated generically: e(x) = e(y) only when
 * the linear parts agree exactly and the constants differ by an integer, so
 * e(alpha) is never the unit class for a formal parameter alpha.
 */
#pragma once

#include <complex>
#include <map>
#include <string>

#include "polyscalar.hpp"

namespace weylzeta {

class ExponentQ {
public:
    ExponentQ() = default;
    ExponentQ(const Rational& c) : constant_(c) {}
    ExponentQ(long long c) : constant_(Rational(c)) {}

    static ExponentQ parameter(const std::string& name, const Rational& coeff = Rational(1)) {
        ExponentQ x;
        if (!coeff.is_zero()) x.linear_[name] = coeff;
        return x;
    }

    const Rational& constant() const { return constant_; }
    const std::map<std::string, Rational>& linear() const { return linear_; }
    bool is_constant() const { return linear_.empty(); }
    bool is_zero() const { return linear_.empty() && constant_.is_zero(); }
    bool is_integer() const { return linear_.empty() && constant_.is_integer(); }

    ExponentQ operator+(const ExponentQ& o) const {
        ExponentQ r = *this;
        r.constant_ += o.constant_;
        for (const auto& [name, c] : o.linear_) {
            auto it = r.linear_.find(name);
            if (it == r.linear_.end()) {
                if (!c.is_zero()) r.linear_[name] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.linear_.erase(it);
            }
        }
        return r;
    }
    ExponentQ operator-() const {
        ExponentQ r;
        r.constant_ = -constant_;
        for (const auto& [name, c] : linear_) r.linear_[name] = -c;
        return r;
    }
    ExponentQ operator-(const ExponentQ& o) const { return *this + (-o); }
    ExponentQ scaled(const Rational& q) const {
        ExponentQ r;
        if (q.is_zero()) return r;
        r.constant_ = constant_ * q;
        for (const auto& [name, c] : linear_) r.linear_[name] = c * q;
        return r;
    }
    ExponentQ shifted(const Rational& q) const {
        ExponentQ r = *this;
        r.constant_ += q;
        return r;
    }

    bool operator==(const ExponentQ& o) const {
        return constant_ == o.constant_ && linear_ == o.linear_;
    }
    bool operator!=(const ExponentQ& o) const { return !(*this == o); }
    bool operator<(const ExponentQ& o) const {
        if (linear_ != o.linear_)
            return std::lexicographical_compare(
                linear_.begin(), linear_.end(), o.linear_.begin(), o.linear_.end(),
                [](const auto& a, const auto& b) {
                    if (a.first != b.first) return a.first < b.first;
                    return a.second < b.second;
                });
        return constant_ < o.constant_;
    }

    PolyScalar to_polyscalar() const {
        PolyScalar p(constant_);
        for (const auto& [name, c] : linear_) p += PolyScalar::parameter(name) * c;
        return p;
    }

    Rational eval_rational(const std::map<std::string, Rational>& assignment) const {
        Rational total = constant_;
        for (const auto& [name, c] : linear_) {
            auto it = assignment.find(name);
            if (it == assignment.end()) throw std::domain_error("unassigned parameter: " + name);
            total += c * it->second;
        }
        return total;
    }

    std::complex<double> eval_complex(
        const std::map<std::string, std::complex<double>>& assignment) const {
        std::complex<double> total(constant_.to_double(), 0.0);
        for (const auto& [name, c] : linear_) {
            auto it = assignment.find(name);
            if (it == assignment.end()) throw std::domain_error("unassigned parameter: " + name);
            total += c.to_double() * it->second;
        }
        return total;
    }

    // Canonical text form, e.g. "-3*alpha + 1/2"; parseable by parse_exponent.
    std::string str() const {
        std::string out;
        bool first = true;
        auto emit = [&](const Rational& coeff, const std::string& body) {
            Rational c = coeff;
            if (first) {
                if (c.is_negative()) { out += "-"; c = -c; }
            } else {
                out += c.is_negative() ? " - " : " + ";
                if (c.is_negative()) c = -c;
            }
            if (body.empty()) out += c.str();
            else if (c == Rational(1)) out += body;
            else out += c.str() + "*" + body;
            first = false;
        };
        for (const auto& [name, c] : linear_) emit(c, name);
        if (!constant_.is_zero() || first) emit(constant_, "");
        return out;
    }

private:
    Rational constant_;
    std::map<std::string, Rational> linear_; // no zero coefficients
};

inline ExponentQ exp_add(const ExponentQ& a, const ExponentQ& b) { return a + b; }
inline ExponentQ exp_scale(const Rational& q, const ExponentQ& a) { return a.scaled(q); }

class ExpClass {
public:
    ExpClass() = default; // the unit class e(0)
    explicit ExpClass(const ExponentQ& x) : exponent_(reduce(x)) {}

    static ExpClass one() { return ExpClass(); }
    static ExpClass minus_one() { return ExpClass(ExponentQ(Rational(1, 2))); }

    // Canonical representative: constant part in [0,1).
    const ExponentQ& exponent() const { return exponent_; }

    bool is_unity() const { return exponent_.is_zero(); }

    ExpClass inverse() const { return ExpClass(-exponent_); }
    ExpClass operator*(const ExpClass& o) const { return ExpClass(exponent_ + o.exponent_); }
    ExpClass pow(long long n) const {
        return ExpClass(exponent_.scaled(Rational(n)));
    }
    ExpClass negated() const { return ExpClass(exponent_.shifted(Rational(1, 2))); }

    bool operator==(const ExpClass& o) const { return exponent_ == o.exponent_; }
    bool operator!=(const ExpClass& o) const { return !(*this == o); }
    bool operator<(const ExpClass& o) const { return exponent_ < o.exponent_; }

    std::complex<double> eval(
        const std::map<std::string, std::complex<double>>& assignment) const {
        const std::complex<double> two_pi_i(0.0, 2.0 * 3.14159265358979323846);
        return std::exp(two_pi_i * exponent_.eval_complex(assignment));
    }

    std::string str() const { return "e(" + exponent_.str() + ")"; }

private:
    static ExponentQ reduce(const ExponentQ& x) {
        return x.shifted(-Rational(x.constant().floor()));
    }

    ExponentQ exponent_; // constant normalized to [0,1)
};

inline bool class_eq(const ExpClass& a, const ExpClass& b) { return a == b; }
inline ExpClass class_inverse(const ExpClass& a) { return a.inverse(); }
inline ExpClass class_mul(const ExpClass& a, const ExpClass& b) { return a * b; }
inline std::complex<double> eval_class(
    const ExpClass& x, const std::map<std::string, std::complex<double>>& assignment) {
    return x.eval(assignment);
}

} // namespace weylzeta

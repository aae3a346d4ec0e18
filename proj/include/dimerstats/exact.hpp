// Exact arithmetic for coupling-function values: rationals, Gaussian
// rationals, and sparse polynomials over the two value rings
//   lozenge: Q[t],  t = sqrt(3)/(2*pi)
//   domino:  Q[i][p], p = 1/pi
// No floating point enters any computation here; numeric evaluation
// happens only at the output boundary (eval(), via MPFR).
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace dimer {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

// Gaussian rational a + b*i with exact field operations.
struct GaussRat {
    Rational re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rational r) : re(std::move(r)), im(0) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r) : re(r), im(0) {}

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }
    bool isImaginary() const { return re == 0 && im != 0; }
    GaussRat conj() const { return {re, -im}; }
    Rational normSq() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        if (b.isZero()) throw std::domain_error("GaussRat: division by zero");
        Rational n = b.normSq();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // multiplication by the imaginary unit
    GaussRat timesI() const { return {-im, re}; }

    std::string str() const;
};

inline GaussRat gauss(long re, long im = 0) { return {Rational(re), Rational(im)}; }

// Which irrational the polynomial variable stands for.
enum class Basis : std::uint8_t {
    Tau,    // t = sqrt(3)/(2*pi), real; coefficients stay real
    InvPi,  // p = 1/pi; Gaussian-rational coefficients
};

// Sparse polynomial sum_k c_k * X^k over the chosen basis, canonical form
// (zero coefficients never stored).  Value domain of all exact
// probabilities and coupling values.
class ExactValue {
public:
    ExactValue() : basis_(Basis::Tau) {}
    explicit ExactValue(Basis b) : basis_(b) {}
    ExactValue(Basis b, GaussRat constant) : basis_(b) { setCoeff(0, std::move(constant)); }

    static ExactValue zero(Basis b) { return ExactValue(b); }
    static ExactValue one(Basis b) { return ExactValue(b, GaussRat(1L)); }
    static ExactValue constant(Basis b, Rational q) { return ExactValue(b, GaussRat(std::move(q))); }
    // c * X^k
    static ExactValue term(Basis b, GaussRat c, int power) {
        ExactValue v(b);
        v.setCoeff(power, std::move(c));
        return v;
    }

    Basis basis() const { return basis_; }
    bool isZero() const { return coeff_.empty(); }
    bool isReal() const;
    bool isImaginary() const;  // nonzero and purely imaginary
    int degree() const { return coeff_.empty() ? -1 : coeff_.rbegin()->first; }

    GaussRat coeff(int power) const {
        auto it = coeff_.find(power);
        return it == coeff_.end() ? GaussRat() : it->second;
    }
    const std::map<int, GaussRat>& coeffs() const { return coeff_; }

    ExactValue operator-() const;
    friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator-(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
    ExactValue& operator+=(const ExactValue& o) { return *this = *this + o; }
    ExactValue& operator-=(const ExactValue& o) { return *this = *this - o; }
    ExactValue& operator*=(const ExactValue& o) { return *this = *this * o; }
    friend bool operator==(const ExactValue& a, const ExactValue& b) {
        if (a.coeff_.empty() && b.coeff_.empty()) return true;  // zero regardless of basis
        return a.basis_ == b.basis_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

    ExactValue timesI() const;
    ExactValue conj() const;  // Gaussian conjugation, coefficient-wise
    ExactValue scaled(const GaussRat& c) const;

    // Exact quotient; throws if the division leaves a remainder.  Used by
    // fraction-free elimination, where divisibility is guaranteed.
    ExactValue divExact(const ExactValue& divisor) const;

    // Numeric evaluation with absolute error below tol (MPFR working
    // precision chosen from tol; rationals converted exactly).
    std::complex<double> eval(double tol = 1e-12) const;
    double evalReal(double tol = 1e-12) const;

    // Canonical string form, e.g. "2/9 - (1/3)*t" or "1/4 - (1/1)*ip^1".
    std::string str() const;

private:
    void setCoeff(int power, GaussRat c) {
        if (c.isZero())
            coeff_.erase(power);
        else
            coeff_[power] = std::move(c);
    }
    static void requireSameBasis(const ExactValue& a, const ExactValue& b);

    Basis basis_;
    std::map<int, GaussRat> coeff_;
};

// |v| as an exact value when representable in the ring (v real, or purely
// imaginary coefficient-wise); otherwise nullopt and callers fall back to
// the numeric modulus.
std::optional<ExactValue> exactModulus(const ExactValue& v);

std::string ratStr(const Rational& q);

}  // namespace dimer

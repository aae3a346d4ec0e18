#include "dimerstats/exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <mpfr.h>

namespace dimer {

std::string ratStr(const Rational& q) {
    // always num/den, matching the documented coefficient grammar
    std::ostringstream os;
    os << q.get_num().get_str() << "/" << q.get_den().get_str();
    return os.str();
}

std::string GaussRat::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    if (im == 0) return ratStr(re);
    if (re == 0) return "(" + ratStr(im) + ")*i";
    os << ratStr(re) << (im < 0 ? " - (" : " + (") << ratStr(abs(im)) << ")*i";
    return os.str();
}

void ExactValue::requireSameBasis(const ExactValue& a, const ExactValue& b) {
    // an exact zero carries no basis commitment
    if (a.basis_ != b.basis_ && !a.isZero() && !b.isZero())
        throw std::invalid_argument("ExactValue: mixing lozenge (t) and domino (p) values");
}

bool ExactValue::isReal() const {
    return std::all_of(coeff_.begin(), coeff_.end(),
                       [](const auto& kv) { return kv.second.im == 0; });
}

bool ExactValue::isImaginary() const {
    return !coeff_.empty() && std::all_of(coeff_.begin(), coeff_.end(),
                                          [](const auto& kv) { return kv.second.re == 0; });
}

ExactValue ExactValue::operator-() const {
    ExactValue r(basis_);
    for (const auto& [k, c] : coeff_) r.coeff_.emplace(k, -c);
    return r;
}

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
    ExactValue::requireSameBasis(a, b);
    ExactValue r = a;
    for (const auto& [k, c] : b.coeff_) r.setCoeff(k, r.coeff(k) + c);
    return r;
}

ExactValue operator-(const ExactValue& a, const ExactValue& b) {
    ExactValue::requireSameBasis(a, b);
    ExactValue r = a;
    for (const auto& [k, c] : b.coeff_) r.setCoeff(k, r.coeff(k) - c);
    return r;
}

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
    ExactValue::requireSameBasis(a, b);
    ExactValue r(a.basis_);
    for (const auto& [ka, ca] : a.coeff_)
        for (const auto& [kb, cb] : b.coeff_)
            r.setCoeff(ka + kb, r.coeff(ka + kb) + ca * cb);
    return r;
}

ExactValue ExactValue::timesI() const {
    ExactValue r(basis_);
    for (const auto& [k, c] : coeff_) r.coeff_.emplace(k, c.timesI());
    return r;
}

ExactValue ExactValue::conj() const {
    ExactValue r(basis_);
    for (const auto& [k, c] : coeff_) r.coeff_.emplace(k, c.conj());
    return r;
}

ExactValue ExactValue::scaled(const GaussRat& c) const {
    ExactValue r(basis_);
    if (c.isZero()) return r;
    for (const auto& [k, v] : coeff_) r.coeff_.emplace(k, v * c);
    return r;
}

ExactValue ExactValue::divExact(const ExactValue& divisor) const {
    requireSameBasis(*this, divisor);
    if (divisor.isZero()) throw std::domain_error("ExactValue: division by zero");
    if (isZero()) return ExactValue(basis_);

    // ordinary long division over the (field) coefficient ring
    ExactValue rem = *this;
    ExactValue quot(basis_);
    const int dDeg = divisor.degree();
    const GaussRat dLead = divisor.coeff(dDeg);
    const int dLow = divisor.coeff_.begin()->first;
    const int rLow = rem.coeff_.begin()->first;
    if (rLow < dLow)
        throw std::domain_error("ExactValue::divExact: quotient not a polynomial");

    while (!rem.isZero() && rem.degree() >= dDeg) {
        GaussRat q = rem.coeff(rem.degree()) / dLead;
        int shift = rem.degree() - dDeg;
        if (shift + dLow < 0)
            throw std::domain_error("ExactValue::divExact: inexact division");
        ExactValue t = term(basis_, q, shift);
        quot += t;
        rem -= t * divisor;
    }
    if (!rem.isZero())
        throw std::domain_error("ExactValue::divExact: inexact division");
    return quot;
}

namespace {

// mpq -> mpfr exactly at the working precision
void setRational(mpfr_t out, const Rational& q) {
    mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN);
}

}  // namespace

std::complex<double> ExactValue::eval(double tol) const {
    if (coeff_.empty()) return {0.0, 0.0};
    if (!(tol > 0)) throw std::invalid_argument("eval: tolerance must be positive");
    mpfr_prec_t prec = 256;
    if (tol < 1e-60) prec = static_cast<mpfr_prec_t>(-std::log2(tol)) + 96;

    mpfr_t base, pw, acc_re, acc_im, tmp;
    mpfr_inits2(prec, base, pw, acc_re, acc_im, tmp, static_cast<mpfr_ptr>(nullptr));

    // basis value: t = sqrt(3)/(2 pi)  or  p = 1/pi
    mpfr_const_pi(base, MPFR_RNDN);
    if (basis_ == Basis::Tau) {
        mpfr_sqrt_ui(tmp, 3, MPFR_RNDN);
        mpfr_mul_ui(base, base, 2, MPFR_RNDN);
        mpfr_div(base, tmp, base, MPFR_RNDN);
    } else {
        mpfr_ui_div(base, 1, base, MPFR_RNDN);
    }

    mpfr_set_zero(acc_re, 1);
    mpfr_set_zero(acc_im, 1);
    for (const auto& [k, c] : coeff_) {
        mpfr_pow_si(pw, base, k, MPFR_RNDN);
        setRational(tmp, c.re);
        mpfr_mul(tmp, tmp, pw, MPFR_RNDN);
        mpfr_add(acc_re, acc_re, tmp, MPFR_RNDN);
        if (c.im != 0) {
            setRational(tmp, c.im);
            mpfr_mul(tmp, tmp, pw, MPFR_RNDN);
            mpfr_add(acc_im, acc_im, tmp, MPFR_RNDN);
        }
    }
    std::complex<double> out(mpfr_get_d(acc_re, MPFR_RNDN), mpfr_get_d(acc_im, MPFR_RNDN));
    mpfr_clears(base, pw, acc_re, acc_im, tmp, static_cast<mpfr_ptr>(nullptr));
    return out;
}

double ExactValue::evalReal(double tol) const {
    std::complex<double> z = eval(tol);
    if (std::abs(z.imag()) > tol + 1e-15 * std::abs(z.real()))
        throw std::domain_error("evalReal: value has a nonzero imaginary part");
    return z.real();
}

std::string ExactValue::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& q, const std::string& sym) {
        if (q == 0) return;
        Rational a = abs(q);
        bool neg = q < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (sym.empty())
            os << ratStr(a);
        else
            os << "(" << ratStr(a) << ")*" << sym;
    };
    for (const auto& [k, c] : coeff_) {
        std::string var;
        if (basis_ == Basis::Tau) {
            if (k == 1) var = "t";
            else if (k != 0) var = "t^" + std::to_string(k);
            emit(c.re, var);
            emit(c.im, var.empty() ? "i" : "i" + var);  // not expected for lozenge values
        } else {
            std::string pk = (k == 0) ? "" : "p^" + std::to_string(k);
            emit(c.re, pk);
            emit(c.im, pk.empty() ? "i" : "i" + pk);
        }
    }
    return os.str();
}

std::optional<ExactValue> exactModulus(const ExactValue& v) {
    if (v.isZero()) return ExactValue::zero(v.basis());
    ExactValue w = v;
    if (v.isImaginary()) w = v.timesI().scaled(GaussRat(-1L));  // -i*v, real
    if (!w.isReal()) return std::nullopt;
    // sign via high-precision evaluation; exact zero already handled
    double x = w.eval(1e-30).real();
    if (x < 0) return -w;
    return w;
}

}  // namespace dimer

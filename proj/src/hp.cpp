#include "abc/hp.hpp"

#include <vector>

namespace abc::hp {

namespace {
thread_local int g_precision = 200;
}

int working_precision() { return g_precision; }
void set_working_precision(int bits) { g_precision = bits < 64 ? 64 : bits; }

Real::Real() { mpfr_init2(v_, g_precision); mpfr_set_zero(v_, 1); }

Real::Real(long long v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& b) {
    mpfr_add(v_, v_, b.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& b) {
    mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
    return *this;
}

Real sqrt(const Real& a) {
    Real r;
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

int Real::sign() const { return mpfr_sgn(v_); }

std::string Real::to_string(int digits) const {
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Real edge_weight(long long x, long long y) {
    Real xr(x), yr(y);
    return sqrt((xr + yr - Real(2)) / (xr * yr));
}

}  // namespace abc::hp

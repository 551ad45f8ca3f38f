#pragma once

#include <mpfr.h>

#include <string>

namespace abc::hp {

// Thread-local working precision in bits.  200 bits covers the 50-digit
// re-certification policy with headroom; doubling is used for stability
// spot checks.
int working_precision();
void set_working_precision(int bits);

// Small value wrapper around mpfr_t with the handful of operations the
// sweep expressions need.  Every value carries the precision that was
// active when it was created.
class Real {
  public:
    Real();
    Real(long long v);  // NOLINT: implicit by design, mirrors double
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real& operator+=(const Real& b);
    Real& operator-=(const Real& b);

    friend Real sqrt(const Real& a);

    double to_double() const;
    int sign() const;  // -1, 0, +1
    std::string to_string(int digits = 50) const;

  private:
    mpfr_t v_;
};

// f(x,y) in extended precision.
Real edge_weight(long long x, long long y);

}  // namespace abc::hp

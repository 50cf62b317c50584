#include "interval.hpp"

#include <mpfr.h>

namespace conclab::detail {
namespace {

class Real {
 public:
  explicit Real(unsigned prec) { mpfr_init2(v_, static_cast<mpfr_prec_t>(prec)); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

}  // namespace

Enclosure enclose_circle_x(const Rational& t, unsigned prec) {
  // arg in [2 pi_lo t, 2 pi_hi t]; cos is decreasing on [0, pi].
  Real pi_lo(prec), pi_hi(prec), arg_lo(prec), arg_hi(prec), c_lo(prec), c_hi(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_q(arg_lo.get(), pi_lo.get(), t.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_2ui(arg_lo.get(), arg_lo.get(), 1, MPFR_RNDD);
  mpfr_mul_q(arg_hi.get(), pi_hi.get(), t.get_mpq_t(), MPFR_RNDU);
  mpfr_mul_2ui(arg_hi.get(), arg_hi.get(), 1, MPFR_RNDU);

  if (mpfr_cmp(arg_hi.get(), pi_lo.get()) >= 0) {
    mpfr_set_si(c_lo.get(), -1, MPFR_RNDD);
  } else {
    mpfr_cos(c_lo.get(), arg_hi.get(), MPFR_RNDD);
  }
  if (mpfr_sgn(arg_lo.get()) <= 0) {
    mpfr_set_si(c_hi.get(), 1, MPFR_RNDU);
  } else {
    mpfr_cos(c_hi.get(), arg_lo.get(), MPFR_RNDU);
  }
  return {2 * c_lo.to_rational(), 2 * c_hi.to_rational()};
}

Enclosure enclose_circle_t(const Rational& x_lo, const Rational& x_hi, unsigned prec) {
  // acos is decreasing, so the upper x end gives the lower t end.
  Real h_lo(prec), h_hi(prec), a_lo(prec), a_hi(prec), pi_lo(prec), pi_hi(prec);
  Rational half_lo = x_lo / 2;
  Rational half_hi = x_hi / 2;
  mpfr_set_q(h_lo.get(), half_lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h_hi.get(), half_hi.get_mpq_t(), MPFR_RNDU);
  if (mpfr_cmp_si(h_lo.get(), -1) < 0) mpfr_set_si(h_lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(h_hi.get(), 1) > 0) mpfr_set_si(h_hi.get(), 1, MPFR_RNDU);
  mpfr_acos(a_lo.get(), h_hi.get(), MPFR_RNDD);
  mpfr_acos(a_hi.get(), h_lo.get(), MPFR_RNDU);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_2ui(pi_lo.get(), pi_lo.get(), 1, MPFR_RNDD);
  mpfr_mul_2ui(pi_hi.get(), pi_hi.get(), 1, MPFR_RNDU);
  mpfr_div(a_lo.get(), a_lo.get(), pi_hi.get(), MPFR_RNDD);
  mpfr_div(a_hi.get(), a_hi.get(), pi_lo.get(), MPFR_RNDU);
  return {a_lo.to_rational(), a_hi.to_rational()};
}

}  // namespace conclab::detail

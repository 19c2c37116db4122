#include "padic/scalar.hpp"

#include <algorithm>
#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

namespace {

void require_same_context(const PadicScalar& x, const PadicScalar& y) {
  if (!same_context(x.context(), y.context())) {
    throw InvalidInput("p-adic scalars from different contexts");
  }
}

// 2|w| < p^N
bool fits_symmetric(const mpz_class& w, const PadicContext& ctx) {
  return mpz_class(2 * abs(w)) < ctx.modulus();
}

mpz_class mod_power(const mpz_class& w, const PadicContext& ctx, int k) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), w.get_mpz_t(), ctx.power(k).get_mpz_t());
  return r;
}

} // namespace

std::int64_t remove_prime_factors(mpz_class& n, std::int64_t prime) {
  if (n == 0) {
    throw std::logic_error("remove_prime_factors: zero has infinite valuation");
  }
  const mpz_class p = static_cast<long>(prime);
  return static_cast<std::int64_t>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

PadicScalar PadicScalar::zero(ContextPtr ctx) {
  if (!ctx) {
    throw InvalidInput("p-adic scalar requires a context");
  }
  PadicScalar z(std::move(ctx));
  z.digits_ = z.ctx_->precision();
  z.exact_ = true;
  return z;
}

PadicScalar PadicScalar::big_o(std::int64_t v, ContextPtr ctx) {
  PadicScalar r(std::move(ctx));
  r.valuation_ = v;
  r.unit_ = 1;
  r.digits_ = 0;
  r.exact_ = false;
  return r;
}

PadicScalar PadicScalar::from_scaled_integer(mpz_class w, std::int64_t shift, bool exact_source,
                                             ContextPtr ctx) {
  const std::int64_t t = remove_prime_factors(w, ctx->prime());
  PadicScalar r(std::move(ctx));
  const PadicContext& c = *r.ctx_;
  r.valuation_ = shift + t;
  r.exact_ = exact_source && fits_symmetric(w, c);
  r.unit_ = mod_power(w, c, c.precision());
  r.digits_ = c.precision();
  return r;
}

PadicScalar PadicScalar::from_integer(const mpz_class& n, ContextPtr ctx) {
  if (!ctx) {
    throw InvalidInput("p-adic scalar requires a context");
  }
  if (n == 0) {
    return zero(std::move(ctx));
  }
  return from_scaled_integer(n, 0, true, std::move(ctx));
}

PadicScalar PadicScalar::from_rational(const mpz_class& num, const mpz_class& den, ContextPtr ctx) {
  if (den == 0) {
    throw InvalidInput("rational with zero denominator");
  }
  return from_rational(mpq_class(num, den), std::move(ctx));
}

PadicScalar PadicScalar::from_rational(const mpq_class& q_in, ContextPtr ctx) {
  if (!ctx) {
    throw InvalidInput("p-adic scalar requires a context");
  }
  mpq_class q = q_in;
  q.canonicalize();
  if (q == 0) {
    return zero(std::move(ctx));
  }
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  const std::int64_t vden = remove_prime_factors(den, ctx->prime());
  if (den == 1) {
    return from_scaled_integer(std::move(num), -vden, true, std::move(ctx));
  }
  const std::int64_t vnum = remove_prime_factors(num, ctx->prime());
  PadicScalar r(std::move(ctx));
  const PadicContext& c = *r.ctx_;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), c.modulus().get_mpz_t());
  r.valuation_ = vnum - vden;
  r.unit_ = mod_power(num * inv, c, c.precision());
  r.digits_ = c.precision();
  r.exact_ = false;
  return r;
}

PadicScalar PadicScalar::prime_power(std::int64_t v, ContextPtr ctx) {
  if (!ctx) {
    throw InvalidInput("p-adic scalar requires a context");
  }
  PadicScalar r(std::move(ctx));
  r.valuation_ = v;
  r.unit_ = 1;
  r.digits_ = r.ctx_->precision();
  r.exact_ = r.ctx_->modulus() > 2;
  return r;
}

const mpz_class& PadicScalar::unit() const {
  if (is_zero()) {
    throw std::logic_error("PadicScalar::unit() on zero");
  }
  return unit_;
}

ExtInt PadicScalar::absolute_precision() const {
  if (exact_ || is_zero()) {
    return ExtInt::pos_inf();
  }
  return valuation_ + ExtInt(digits_);
}

mpz_class PadicScalar::lift() const {
  const mpz_class& m = ctx_->power(digits_);
  if (2 * unit_ < m) {
    return unit_;
  }
  return unit_ - m;
}

mpq_class PadicScalar::representative() const {
  if (is_zero()) {
    return 0;
  }
  const std::int64_t v = valuation_.value();
  mpz_class pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(ctx_->prime()),
                static_cast<unsigned long>(v < 0 ? -v : v));
  mpq_class r = v >= 0 ? mpq_class(lift() * pv) : mpq_class(lift(), pv);
  r.canonicalize();
  return r;
}

std::string PadicScalar::to_rational_string() const {
  const mpq_class r = representative();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string PadicScalar::to_string() const {
  if (is_zero()) {
    return "0";
  }
  return std::to_string(ctx_->prime()) + "^" + std::to_string(valuation_.value()) + " * " +
         unit_.get_str() + " (" + std::to_string(digits_) + " digits)";
}

PadicScalar operator+(const PadicScalar& x, const PadicScalar& y) {
  require_same_context(x, y);
  if (x.is_zero()) {
    return y;
  }
  if (y.is_zero()) {
    return x;
  }
  const PadicContext& ctx = *x.ctx_;
  const int n = ctx.precision();
  const std::int64_t vx = x.valuation_.value();
  const std::int64_t vy = y.valuation_.value();
  const std::int64_t vmin = std::min(vx, vy);

  if (x.exact_ && y.exact_ && std::max(vx, vy) - vmin <= n) {
    mpz_class w = x.lift() * ctx.power(static_cast<int>(vx - vmin)) +
                  y.lift() * ctx.power(static_cast<int>(vy - vmin));
    if (w == 0) {
      return PadicScalar::zero(x.ctx_);
    }
    return PadicScalar::from_scaled_integer(std::move(w), vmin, true, x.ctx_);
  }

  // Relative digits available above vmin.
  const ExtInt abs_prec = min(x.absolute_precision(), y.absolute_precision());
  const ExtInt rel = abs_prec - ExtInt(vmin);
  const int r = rel >= ExtInt(n) ? n : static_cast<int>(rel.value());
  if (r == 0) {
    return PadicScalar::big_o(vmin, x.ctx_);
  }
  mpz_class s = 0;
  for (const PadicScalar* term : {&x, &y}) {
    const std::int64_t shift = term->valuation_.value() - vmin;
    if (shift < r) {
      s += term->unit_ * ctx.power(static_cast<int>(shift));
    }
  }
  s = mod_power(s, ctx, r);
  if (s == 0) {
    return PadicScalar::big_o(vmin + r, x.ctx_);
  }
  const std::int64_t t = remove_prime_factors(s, ctx.prime());
  PadicScalar out(x.ctx_);
  out.valuation_ = vmin + t;
  out.unit_ = std::move(s);
  out.digits_ = r - static_cast<int>(t);
  out.exact_ = false;
  return out;
}

PadicScalar PadicScalar::operator-() const {
  if (is_zero() || digits_ == 0) {
    return *this;
  }
  PadicScalar out = *this;
  out.unit_ = ctx_->power(digits_) - unit_;
  return out;
}

PadicScalar neg(const PadicScalar& x) { return -x; }

PadicScalar operator-(const PadicScalar& x, const PadicScalar& y) { return x + (-y); }

PadicScalar operator*(const PadicScalar& x, const PadicScalar& y) {
  require_same_context(x, y);
  if (x.is_zero() || y.is_zero()) {
    return PadicScalar::zero(x.ctx_);
  }
  const std::int64_t v = x.valuation_.value() + y.valuation_.value();
  if (x.exact_ && y.exact_) {
    return PadicScalar::from_scaled_integer(x.lift() * y.lift(), v, true, x.ctx_);
  }
  const int k = std::min(x.digits_, y.digits_);
  if (k == 0) {
    return PadicScalar::big_o(v, x.ctx_);
  }
  PadicScalar out(x.ctx_);
  out.valuation_ = v;
  out.unit_ = mod_power(x.unit_ * y.unit_, *x.ctx_, k);
  out.digits_ = k;
  out.exact_ = false;
  return out;
}

PadicScalar operator/(const PadicScalar& x, const PadicScalar& y) {
  require_same_context(x, y);
  if (y.is_zero()) {
    throw ArithmeticError("p-adic division by zero");
  }
  if (y.digits_ == 0) {
    throw ArithmeticError("p-adic division by a value with no certified digits");
  }
  if (x.is_zero()) {
    return x;
  }
  const std::int64_t v = x.valuation_.value() - y.valuation_.value();
  if (x.exact_ && y.exact_) {
    const mpz_class ly = y.lift();
    if (ly == 1 || ly == -1) {
      return PadicScalar::from_scaled_integer(x.lift() * ly, v, true, x.ctx_);
    }
  }
  const int k = std::min(x.digits_, y.digits_);
  if (k == 0) {
    return PadicScalar::big_o(v, x.ctx_);
  }
  const mpz_class& mod = x.ctx_->power(k);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), y.unit_.get_mpz_t(), mod.get_mpz_t());
  PadicScalar out(x.ctx_);
  out.valuation_ = v;
  out.unit_ = mod_power(x.unit_ * inv, *x.ctx_, k);
  out.digits_ = k;
  out.exact_ = false;
  return out;
}

bool certified_equal(const PadicScalar& x, const PadicScalar& y) {
  require_same_context(x, y);
  if (x.is_zero() || y.is_zero()) {
    return x.is_zero() && y.is_zero();
  }
  if (x.valuation_ != y.valuation_) {
    return false;
  }
  const int k = std::min(x.digits_, y.digits_);
  const mpz_class& mod = x.ctx_->power(k);
  mpz_class a, b;
  mpz_mod(a.get_mpz_t(), x.unit_.get_mpz_t(), mod.get_mpz_t());
  mpz_mod(b.get_mpz_t(), y.unit_.get_mpz_t(), mod.get_mpz_t());
  return a == b;
}

} // namespace padic

#include "slicefloer/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "slicefloer/errors.hpp"

namespace slicefloer {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw InternalError("laurent: int64 overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InternalError("laurent: int64 overflow in multiplication");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(int min_degree, std::vector<std::int64_t> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::constant(std::int64_t c) {
  return LaurentPoly(0, {c});
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int degree) {
  return LaurentPoly(degree, {c});
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_degree_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1] == 0) --tail;
  coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + lead, coeffs_.begin() + tail);
  min_degree_ += static_cast<int>(lead);
}

int LaurentPoly::max_degree() const {
  if (is_zero()) return 0;
  return min_degree_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::span() const {
  return is_zero() ? 0 : max_degree() - min_degree_;
}

std::int64_t LaurentPoly::coeff(int degree) const {
  if (is_zero()) return 0;
  int idx = degree - min_degree_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[idx];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(min_degree_, o.min_degree_);
  int hi = std::max(max_degree(), o.max_degree());
  std::vector<std::int64_t> c(hi - lo + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[min_degree_ - lo + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    c[o.min_degree_ - lo + i] = checked_add(c[o.min_degree_ - lo + i], o.coeffs_[i]);
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<std::int64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  return LaurentPoly(min_degree_ + o.min_degree_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return zero();
  return LaurentPoly(min_degree_ + k, coeffs_);
}

LaurentPoly LaurentPoly::reciprocal() const {
  if (is_zero()) return zero();
  std::vector<std::int64_t> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-max_degree(), std::move(c));
}

std::int64_t LaurentPoly::evaluate(std::int64_t t) const {
  if (is_zero()) return 0;
  if (t == 0) throw InternalError("laurent: cannot evaluate Laurent polynomial at 0");
  // Negative exponents contribute t^|k| in the denominator; only exact
  // integer evaluations are supported, which covers t = +-1.
  if (t != 1 && t != -1 && min_degree_ < 0)
    throw InternalError("laurent: evaluate at |t| != 1 with negative exponents");
  // For t = +-1, t^-k == t^k, so powering by |degree| is exact.
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    int deg = min_degree_ + static_cast<int>(i);
    std::int64_t p = 1;
    for (int k = 0; k < (deg >= 0 ? deg : -deg); ++k) p = checked_mul(p, t);
    acc = checked_add(acc, checked_mul(coeffs_[i], p));
  }
  return acc;
}

bool LaurentPoly::is_palindromic() const {
  return *this == reciprocal();
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("laurent: division by zero");
  if (is_zero()) return zero();
  // Long division from the top degree. Exactness is required.
  std::vector<std::int64_t> rem = coeffs_;
  int rem_min = min_degree_;
  std::int64_t dlead = divisor.coeffs_.back();
  int ddeg = divisor.max_degree();
  std::vector<std::int64_t> quot;
  int out_top = (rem_min + static_cast<int>(rem.size()) - 1) - ddeg;
  int out_bot = rem_min - divisor.min_degree_;
  if (out_top < out_bot) throw InternalError("laurent: non-exact division (degree)");
  quot.assign(out_top - out_bot + 1, 0);
  for (int qd = out_top; qd >= out_bot; --qd) {
    int rem_top_idx = static_cast<int>(rem.size()) - 1;
    while (rem_top_idx >= 0 && rem[rem_top_idx] == 0) --rem_top_idx;
    if (rem_top_idx < 0) break;  // remainder already zero
    int rem_top_deg = rem_min + rem_top_idx;
    if (rem_top_deg != qd + ddeg) continue;  // this quotient degree is zero
    std::int64_t lead = rem[rem_top_idx];
    if (lead % dlead != 0) throw InternalError("laurent: non-exact division (leading term)");
    std::int64_t q = lead / dlead;
    quot[qd - out_bot] = q;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
      int deg = divisor.min_degree_ + static_cast<int>(j) + qd;
      int idx = deg - rem_min;
      rem[idx] = checked_add(rem[idx], checked_mul(-q, divisor.coeffs_[j]));
    }
  }
  for (std::int64_t r : rem)
    if (r != 0) throw InternalError("laurent: non-exact division (remainder)");
  return LaurentPoly(out_bot, std::move(quot));
}

std::string LaurentPoly::serialize() const {
  std::ostringstream os;
  os << min_degree_ << ":";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i];
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UserError("laurent: expected \"min:c0,c1,...\", got \"" + text + "\"");
  int min_deg = 0;
  {
    const char* b = text.data();
    auto [p, ec] = std::from_chars(b, b + colon, min_deg);
    if (ec != std::errc() || p != b + colon)
      throw UserError("laurent: bad min degree in \"" + text + "\"");
  }
  std::vector<std::int64_t> coeffs;
  std::size_t pos = colon + 1;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::int64_t c = 0;
    const char* b = text.data() + pos;
    const char* e = text.data() + comma;
    auto [p, ec] = std::from_chars(b, e, c);
    if (ec != std::errc() || p != e)
      throw UserError("laurent: bad coefficient in \"" + text + "\"");
    coeffs.push_back(c);
    pos = comma + 1;
  }
  return LaurentPoly(min_deg, std::move(coeffs));
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) throw InternalError("alexander: zero polynomial cannot be normalized");
  int total = p.min_degree() + p.max_degree();
  if (total % 2 != 0)
    throw InternalError("alexander: support cannot be centered (odd degree sum)");
  LaurentPoly centered = p.shifted(-total / 2);
  if (!centered.is_palindromic())
    throw InternalError("alexander: centered polynomial is not symmetric");
  std::int64_t at_one = centered.evaluate(1);
  if (at_one == 1) return centered;
  if (at_one == -1) return -centered;
  throw InternalError("alexander: polynomial evaluates to " + std::to_string(at_one) +
                      " at t=1; expected +-1");
}

}  // namespace slicefloer

#include "core/trigpoly.hpp"

#include <cmath>
#include <cstdlib>

namespace trikite::trigpoly {

TrigPoly TrigPoly::constant(const Rational& value) {
  TrigPoly p;
  p.add_cos(0, 0, value);
  return p;
}

TrigPoly TrigPoly::cosine(int m, int l, const Rational& coef) {
  TrigPoly p;
  p.add_cos(m, l, coef);
  return p;
}

TrigPoly TrigPoly::sine(int m, int l, const Rational& coef) {
  TrigPoly p;
  p.add_sin(m, l, coef);
  return p;
}

int TrigPoly::degree() const {
  int d = -1;
  for (const auto& [key, term] : terms_) d = std::max(d, key.order());
  return d;
}

void TrigPoly::prune(const FreqKey& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second.cos_c == 0 && it->second.sin_c == 0) terms_.erase(it);
}

void TrigPoly::add_cos(int m, int l, const Rational& coef) {
  if (coef == 0) return;
  FreqKey key{m, l};
  if (m < 0 || (m == 0 && l < 0)) key = {-m, -l};  // cos is even
  terms_[key].cos_c += coef;
  prune(key);
}

void TrigPoly::add_sin(int m, int l, const Rational& coef) {
  if (coef == 0) return;
  if (m == 0 && l == 0) return;  // sin(0) = 0
  FreqKey key{m, l};
  Rational c = coef;
  if (m < 0 || (m == 0 && l < 0)) {
    key = {-m, -l};  // sin is odd
    c = -c;
  }
  terms_[key].sin_c += c;
  prune(key);
}

double TrigPoly::eval(double alpha, double beta) const {
  double acc = 0.0;
  for (const auto& [key, term] : terms_) {
    double arg = key.m * alpha + key.l * beta;
    if (term.cos_c != 0) acc += term.cos_c.convert_to<double>() * std::cos(arg);
    if (term.sin_c != 0) acc += term.sin_c.convert_to<double>() * std::sin(arg);
  }
  return acc;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  for (const auto& [key, term] : other.terms_) {
    add_cos(key.m, key.l, term.cos_c);
    add_sin(key.m, key.l, term.sin_c);
  }
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
  for (const auto& [key, term] : other.terms_) {
    add_cos(key.m, key.l, -term.cos_c);
    add_sin(key.m, key.l, -term.sin_c);
  }
  return *this;
}

TrigPoly TrigPoly::scaled(const Rational& factor) const {
  TrigPoly out;
  if (factor == 0) return out;
  for (const auto& [key, term] : terms_) {
    out.add_cos(key.m, key.l, term.cos_c * factor);
    out.add_sin(key.m, key.l, term.sin_c * factor);
  }
  return out;
}

TrigPoly tp_mul(const TrigPoly& a, const TrigPoly& b) {
  static const Rational half(1, 2);
  TrigPoly out;
  for (const auto& [ka, ta] : a.terms()) {
    for (const auto& [kb, tb] : b.terms()) {
      int sm = ka.m + kb.m, sl = ka.l + kb.l;  // X + Y
      int dm = ka.m - kb.m, dl = ka.l - kb.l;  // X - Y
      if (ta.cos_c != 0 && tb.cos_c != 0) {
        Rational c = half * ta.cos_c * tb.cos_c;
        out.add_cos(dm, dl, c);
        out.add_cos(sm, sl, c);
      }
      if (ta.cos_c != 0 && tb.sin_c != 0) {
        Rational c = half * ta.cos_c * tb.sin_c;
        out.add_sin(sm, sl, c);
        out.add_sin(dm, dl, -c);
      }
      if (ta.sin_c != 0 && tb.cos_c != 0) {
        Rational c = half * ta.sin_c * tb.cos_c;
        out.add_sin(sm, sl, c);
        out.add_sin(dm, dl, c);
      }
      if (ta.sin_c != 0 && tb.sin_c != 0) {
        Rational c = half * ta.sin_c * tb.sin_c;
        out.add_cos(dm, dl, c);
        out.add_cos(sm, sl, -c);
      }
    }
  }
  return out;
}

double tp_eval(const TrigPoly& p, double alpha, double beta) { return p.eval(alpha, beta); }

namespace {

int dyadic_exponent_of(const Rational& r, bool& ok) {
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return 0;
  if ((den & (den - 1)) != 0) {
    ok = false;
    return 0;
  }
  return static_cast<int>(boost::multiprecision::msb(den));
}

}  // namespace

int dyadic_exponent(const TrigPoly& p) {
  int k = 0;
  bool ok = true;
  for (const auto& [key, term] : p.terms()) {
    k = std::max(k, dyadic_exponent_of(term.cos_c, ok));
    k = std::max(k, dyadic_exponent_of(term.sin_c, ok));
    if (!ok) return -1;
  }
  return k;
}

std::string rational_to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational: '" + text + "'");
  }
}

EvalPlan::EvalPlan(const TrigPoly& p) {
  for (const auto& [key, term] : p.terms()) {
    PlanTerm t;
    t.m = key.m;  // canonical keys have m >= 0
    t.abs_l = std::abs(key.l);
    t.l_sign = key.l < 0 ? -1.0 : 1.0;
    t.cos_c = term.cos_c.convert_to<double>();
    t.sin_c = term.sin_c.convert_to<double>();
    max_m_ = std::max(max_m_, t.m);
    max_l_ = std::max(max_l_, t.abs_l);
    terms_.push_back(t);
  }
  ca_.resize(max_m_ + 1);
  sa_.resize(max_m_ + 1);
  cb_.resize(max_l_ + 1);
  sb_.resize(max_l_ + 1);
}

void EvalPlan::fill_tables(double angle, int up_to, std::vector<double>& c,
                           std::vector<double>& s) {
  c[0] = 1.0;
  s[0] = 0.0;
  if (up_to == 0) return;
  double c1 = std::cos(angle), s1 = std::sin(angle);
  c[1] = c1;
  s[1] = s1;
  for (int k = 2; k <= up_to; ++k) {
    c[k] = 2 * c1 * c[k - 1] - c[k - 2];
    s[k] = 2 * c1 * s[k - 1] - s[k - 2];
  }
}

double EvalPlan::eval(double alpha, double beta) const {
  fill_tables(alpha, max_m_, ca_, sa_);
  fill_tables(beta, max_l_, cb_, sb_);
  double acc = 0.0;
  for (const PlanTerm& t : terms_) {
    double cm = ca_[t.m], sm = sa_[t.m];
    double cl = cb_[t.abs_l], sl = t.l_sign * sb_[t.abs_l];
    // cos(m a + l b), sin(m a + l b) by the addition formulas.
    double c = cm * cl - sm * sl;
    double s = sm * cl + cm * sl;
    acc += t.cos_c * c + t.sin_c * s;
  }
  return acc;
}

}  // namespace trikite::trigpoly

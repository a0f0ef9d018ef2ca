#include "mclat/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mclat {

namespace {

void check_same_arity(int a, int b, const char* op) {
  if (a != b)
    throw std::invalid_argument(std::string(op) + ": arity mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

ExactPoly::ExactPoly(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("ExactPoly: arity must be >= 1");
}

ExactPoly ExactPoly::zero(int arity) { return ExactPoly(arity); }

ExactPoly ExactPoly::constant(int arity, const Int& c) {
  ExactPoly p(arity);
  p.add_term(Exps(static_cast<std::size_t>(arity), Int(0)), c);
  return p;
}

ExactPoly ExactPoly::monomial(Exps exps, const Int& coeff) {
  ExactPoly p(static_cast<int>(exps.size()));
  p.add_term(exps, coeff);
  return p;
}

ExactPoly ExactPoly::term1(const Int& coeff, const Int& exp) {
  return monomial({exp}, coeff);
}

ExactPoly ExactPoly::term2(const Int& coeff, const Int& e1, const Int& e2) {
  return monomial({e1, e2}, coeff);
}

void ExactPoly::add_term(const Exps& exps, const Int& coeff) {
  if (static_cast<int>(exps.size()) != arity_)
    throw std::invalid_argument("add_term: exponent vector has wrong length");
  for (const Int& e : exps)
    if (e < 0) throw std::invalid_argument("add_term: negative exponent");
  if (coeff == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
  check_same_arity(arity_, o.arity_, "poly add");
  ExactPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  check_same_arity(arity_, o.arity_, "poly add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
  check_same_arity(arity_, o.arity_, "poly sub");
  ExactPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
  check_same_arity(arity_, o.arity_, "poly mul");
  ExactPoly r(arity_);
  Exps sum(static_cast<std::size_t>(arity_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < arity_; ++i) sum[static_cast<std::size_t>(i)] = ea[i] + eb[i];
      r.add_term(sum, ca * cb);
    }
  }
  return r;
}

bool ExactPoly::operator==(const ExactPoly& o) const {
  return arity_ == o.arity_ && terms_ == o.terms_;
}

ExactPoly ExactPoly::scaled(const Int& c) const {
  ExactPoly r(arity_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

ExactPoly ExactPoly::pow(unsigned long e) const {
  ExactPoly r = constant(arity_, 1);
  ExactPoly base = *this;
  while (e > 0) {
    if (e & 1UL) r = r * base;
    base = base * base;
    e >>= 1UL;
  }
  return r;
}

Int ExactPoly::coeff_sum() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Int ExactPoly::eval(const std::vector<Int>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("eval: point has wrong dimension");
  Int s = 0;
  for (const auto& [e, c] : terms_) {
    Int t = c;
    for (int i = 0; i < arity_; ++i)
      t *= int_pow(point[static_cast<std::size_t>(i)],
                   to_ulong_checked(e[static_cast<std::size_t>(i)], "eval exponent"));
    s += t;
  }
  return s;
}

ExactPoly ExactPoly::substitute(const std::vector<ExactPoly>& images) const {
  if (static_cast<int>(images.size()) != arity_)
    throw std::invalid_argument("substitute: wrong number of images");
  int out_arity = images.empty() ? 1 : images[0].arity();
  for (const auto& im : images) check_same_arity(im.arity(), out_arity, "substitute");
  ExactPoly r(out_arity);
  for (const auto& [e, c] : terms_) {
    ExactPoly t = ExactPoly::constant(out_arity, c);
    for (int i = 0; i < arity_; ++i) {
      unsigned long k =
          to_ulong_checked(e[static_cast<std::size_t>(i)], "substitute exponent");
      if (k > 0) t = t * images[static_cast<std::size_t>(i)].pow(k);
    }
    r += t;
  }
  return r;
}

std::string ExactPoly::to_string() const {
  return to_string([this](int i) -> std::string {
    if (arity_ == 1) return "x";
    if (arity_ == 2) return i == 0 ? "x" : "y";
    return "v" + std::to_string(i);
  });
}

std::string ExactPoly::to_string(const std::function<std::string(int)>& var_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending exponent-vector order matches the usual display order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    Int ac = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < arity_; ++i) {
      const Int& e = it->first[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      mono += var_name(i);
      if (e != 1) mono += "^" + e.get_str();
    }
    if (mono.empty()) {
      out << ac.get_str();
    } else {
      if (ac != 1) out << ac.get_str();
      out << mono;
    }
  }
  return out.str();
}

QSeries::QSeries(long precision_quarters) : prec_(precision_quarters) {
  if (precision_quarters < 0)
    throw std::invalid_argument("QSeries: precision must be >= 0");
}

QSeries QSeries::one(long precision_quarters) {
  QSeries s(precision_quarters);
  s.add_at(0, 1);
  return s;
}

void QSeries::add_at(long quarters, const Int& v) {
  if (quarters < 0) throw std::invalid_argument("QSeries: negative exponent");
  if (quarters > prec_ || v == 0) return;
  auto it = coeffs_.find(quarters);
  if (it == coeffs_.end()) {
    coeffs_.emplace(quarters, v);
  } else {
    it->second += v;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Int QSeries::coeff_at(long quarters) const {
  auto it = coeffs_.find(quarters);
  return it == coeffs_.end() ? Int(0) : it->second;
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries r(std::min(prec_, o.prec_));
  for (const auto& [k, v] : coeffs_) r.add_at(k, v);
  for (const auto& [k, v] : o.coeffs_) r.add_at(k, v);
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  if (prec_ != o.prec_)
    throw std::invalid_argument("series mul: precision mismatch (" +
                                std::to_string(prec_) + " vs " + std::to_string(o.prec_) + ")");
  QSeries r(prec_);
  for (const auto& [ka, va] : coeffs_) {
    if (ka > prec_) break;
    for (const auto& [kb, vb] : o.coeffs_) {
      if (ka + kb > prec_) break;
      r.add_at(ka + kb, va * vb);
    }
  }
  return r;
}

QSeries QSeries::pow(unsigned long e) const {
  QSeries r = one(prec_);
  QSeries base = *this;
  while (e > 0) {
    if (e & 1UL) r = r * base;
    base = base * base;
    e >>= 1UL;
  }
  return r;
}

QSeries QSeries::scaled(const Int& c) const {
  QSeries r(prec_);
  if (c == 0) return r;
  for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
  return r;
}

QSeries QSeries::stretch2() const {
  QSeries r(2 * prec_);
  for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(2 * k, v);
  return r;
}

QSeries QSeries::truncated(long precision_quarters) const {
  QSeries r(precision_quarters);
  for (const auto& [k, v] : coeffs_) r.add_at(k, v);
  return r;
}

bool QSeries::operator==(const QSeries& o) const {
  long common = std::min(prec_, o.prec_);
  for (long k = 0; k <= common; ++k)
    if (coeff_at(k) != o.coeff_at(k)) return false;
  return true;
}

std::string QSeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : coeffs_) {
    Int av = abs(v);
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << av.get_str();
      continue;
    }
    if (av != 1) out << av.get_str();
    if (k % 4 == 0) {
      out << "q";
      if (k / 4 != 1) out << "^" << (k / 4);
    } else if (k % 2 == 0) {
      out << "q^(" << (k / 2) << "/2)";
    } else {
      out << "q^(" << k << "/4)";
    }
  }
  return out.str();
}

}  // namespace mclat

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgen {

using Int = boost::multiprecision::cpp_int;

/// Dense polynomial in q over arbitrary-precision integers.
///
/// Coefficients are stored ascending by exponent and kept canonical: the
/// highest stored coefficient is nonzero and the zero polynomial stores an
/// empty sequence.  Equality is structural, so canonical form makes every
/// identity test exact.  Values are immutable in spirit: all operations
/// return fresh polynomials and never mutate shared state.
class QPoly {
public:
  QPoly() = default;
  QPoly(long long c) {
    if (c != 0) coeffs_.emplace_back(c);
  }
  QPoly(Int c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPoly from_coeffs(std::initializer_list<long long> cs) {
    std::vector<Int> v;
    v.reserve(cs.size());
    for (long long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
  }

  /// coeff * q^exp
  static QPoly monomial(int exp, Int coeff = Int(1)) {
    if (exp < 0) throw std::invalid_argument("QPoly::monomial: negative exponent");
    QPoly p;
    if (coeff != 0) {
      p.coeffs_.assign(static_cast<size_t>(exp) + 1, Int(0));
      p.coeffs_.back() = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Smallest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int low_degree() const {
    for (size_t e = 0; e < coeffs_.size(); ++e)
      if (coeffs_[e] != 0) return static_cast<int>(e);
    return -1;
  }

  const std::vector<Int>& coeffs() const { return coeffs_; }

  const Int& coeff(int e) const {
    static const Int kZero{0};
    if (e < 0 || e > degree()) return kZero;
    return coeffs_[static_cast<size_t>(e)];
  }

  Int eval_at_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
  }

  bool has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
  }

  QPoly operator-() const {
    QPoly r = *this;
    for (Int& c : r.coeffs_) c = -c;
    return r;
  }

  QPoly& operator+=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] += o.coeffs_[e];
    trim();
    return *this;
  }

  QPoly& operator-=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] -= o.coeffs_[e];
    trim();
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        r[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return QPoly(std::move(r));
  }

  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// this * q^e
  QPoly shifted_up(int e) const {
    if (e < 0) throw std::invalid_argument("QPoly::shifted_up: negative shift");
    if (is_zero() || e == 0) return *this;
    std::vector<Int> r(coeffs_.size() + static_cast<size_t>(e), Int(0));
    std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + e);
    return QPoly(std::move(r));
  }

  /// this / q^e; requires the e lowest coefficients to vanish.
  QPoly shifted_down_exact(int e) const {
    if (e < 0) throw std::invalid_argument("QPoly::shifted_down_exact: negative shift");
    if (is_zero() || e == 0) return *this;
    if (degree() < e)
      throw std::logic_error("QPoly::shifted_down_exact: polynomial not divisible by q^" + std::to_string(e));
    for (int i = 0; i < e; ++i)
      if (coeffs_[static_cast<size_t>(i)] != 0)
        throw std::logic_error("QPoly::shifted_down_exact: polynomial not divisible by q^" + std::to_string(e));
    return QPoly(std::vector<Int>(coeffs_.begin() + e, coeffs_.end()));
  }

  /// Exact quotient a / b over Z[q].  Throws std::logic_error if b does not
  /// divide a; an unexpected failure inside an elimination step therefore
  /// surfaces as an internal-consistency fault rather than a wrong answer.
  static QPoly div_exact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::logic_error("QPoly::div_exact: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("QPoly::div_exact: not divisible (degree)");
    std::vector<Int> rem = a.coeffs_;
    const int dq = a.degree() - b.degree();
    std::vector<Int> quot(static_cast<size_t>(dq) + 1, Int(0));
    const Int& lead = b.coeffs_.back();
    for (int k = dq; k >= 0; --k) {
      Int& top = rem[static_cast<size_t>(k + b.degree())];
      if (top == 0) continue;
      if (top % lead != 0) throw std::logic_error("QPoly::div_exact: not divisible (leading coefficient)");
      Int f = top / lead;
      for (size_t t = 0; t < b.coeffs_.size(); ++t) rem[static_cast<size_t>(k) + t] -= f * b.coeffs_[t];
      quot[static_cast<size_t>(k)] = std::move(f);
    }
    for (const Int& c : rem)
      if (c != 0) throw std::logic_error("QPoly::div_exact: not divisible (remainder)");
    return QPoly(std::move(quot));
  }

  /// Text form "1 + 2q + 3q^2"; zero terms omitted, zero polynomial is "0".
  std::string str(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = 0; e <= degree(); ++e) {
      const Int& c = coeffs_[static_cast<size_t>(e)];
      if (c == 0) continue;
      Int mag = c < 0 ? Int(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const bool unit = (mag == 1);
      if (e == 0 || !unit) out += mag.str();
      if (e >= 1) {
        out += var;
        if (e >= 2) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  /// Coefficients as decimal strings ascending in degree (the JSON payload).
  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const Int& c : coeffs_) out.push_back(c.str());
    return out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

inline Int eval_at_one(const QPoly& p) { return p.eval_at_one(); }

/// q-integer [n] = 1 + q + ... + q^{n-1};  [0] = 0.
inline QPoly qint(int n) {
  if (n < 0) throw std::invalid_argument("qint: negative argument");
  return QPoly(std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

namespace detail {

// Rows of the Gaussian binomial table, filled by the Pascal-type recurrence
//   [m,n] = [m-1,n-1] + q^n [m-1,n],
// which stays inside Z[q] (no q-factorial quotients).  The cache is
// thread-local so concurrent callers never need a lock.
inline const std::vector<QPoly>& qbinom_row(int m) {
  thread_local std::vector<std::vector<QPoly>> rows;
  if (rows.empty()) rows.push_back({QPoly(1)});
  while (static_cast<int>(rows.size()) <= m) {
    const std::vector<QPoly>& prev = rows.back();
    const int pm = static_cast<int>(rows.size()) - 1;
    std::vector<QPoly> row(static_cast<size_t>(pm) + 2);
    row[0] = QPoly(1);
    for (int n = 1; n <= pm; ++n)
      row[static_cast<size_t>(n)] = prev[static_cast<size_t>(n - 1)] + prev[static_cast<size_t>(n)].shifted_up(n);
    row[static_cast<size_t>(pm) + 1] = prev[static_cast<size_t>(pm)];  // [m,m] = [m-1,m-1] = 1
    rows.push_back(std::move(row));
  }
  return rows[static_cast<size_t>(m)];
}

}  // namespace detail

/// Gaussian binomial coefficient [m, n]_q; 0 when n > m, 1 when n = 0 or n = m.
inline QPoly qbinom(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("qbinom: negative argument");
  if (n > m) return {};
  return detail::qbinom_row(m)[static_cast<size_t>(n)];
}

}  // namespace qgen

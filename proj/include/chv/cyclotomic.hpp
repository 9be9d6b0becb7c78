// Exact arithmetic in Q(zeta_N): rationals over int64 with checked
// products, and cyclotomic numbers as rational vectors over the power
// basis modulo the N-th cyclotomic polynomial.  No floating point.
#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chv {

struct Rat {
  long long num = 0, den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    Rat r;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    r.num = checked(n / g);
    r.den = checked(d / g);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num) * b.num;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    Rat r;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    r.num = checked(n / g);
    r.den = checked(d / g);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("division by zero");
    return a * Rat(b.den, b.num);
  }
  Rat operator-() const { return Rat(-num, den); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  bool is_zero() const { return num == 0; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
};

inline std::vector<long long> cyclotomic_polynomial(int n) {
  // x^n - 1 = prod_{d | n} Phi_d; divide out recursively, exactly.
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long long> phi_d = cyclotomic_polynomial(d);
    // exact polynomial division poly /= phi_d
    std::vector<long long> q(poly.size() - phi_d.size() + 1, 0);
    std::vector<long long> rem = poly;
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
      long long c = rem[i + phi_d.size() - 1] / phi_d.back();
      q[i] = c;
      for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= c * phi_d[j];
    }
    for (long long r : rem)
      if (r != 0) throw std::logic_error("cyclotomic division not exact");
    poly = q;
  }
  return poly;
}

// Shared per-N context: Phi_N and reductions of x^k for k up to 2 deg - 2.
class CycField {
 public:
  explicit CycField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
    deg_ = static_cast<int>(phi_.size()) - 1;
    // x^k mod Phi for k < 2*deg
    red_.assign(2 * deg_, std::vector<Rat>(deg_, Rat(0)));
    for (int k = 0; k < deg_; ++k) red_[k][k] = Rat(1);
    for (int k = deg_; k < 2 * deg_; ++k) {
      // x^k = x * x^{k-1} then reduce the overflow coordinate
      std::vector<Rat> v(deg_ + 1, Rat(0));
      for (int i = 0; i < deg_; ++i) v[i + 1] = red_[k - 1][i];
      Rat top = v[deg_];
      std::vector<Rat> out(deg_);
      for (int i = 0; i < deg_; ++i)
        out[i] = v[i] - top * Rat(phi_[i], phi_[deg_]);
      red_[k] = out;
    }
  }

  int n() const { return n_; }
  int degree() const { return deg_; }
  const std::vector<Rat>& power(int k) const { return red_[k]; }

 private:
  int n_, deg_;
  std::vector<long long> phi_;
  std::vector<std::vector<Rat>> red_;
};

class Cyc {
 public:
  Cyc() = default;
  Cyc(const CycField* f, Rat constant) : f_(f), c_(f->degree(), Rat(0)) { c_[0] = constant; }

  static Cyc zero(const CycField* f) { return Cyc(f, Rat(0)); }
  static Cyc one(const CycField* f) { return Cyc(f, Rat(1)); }
  static Cyc rational(const CycField* f, Rat r) { return Cyc(f, r); }

  // zeta_N^k
  static Cyc zeta_pow(const CycField* f, long long k) {
    k %= f->n();
    if (k < 0) k += f->n();
    Cyc v;
    v.f_ = f;
    v.c_.assign(f->degree(), Rat(0));
    // x^k with k possibly >= deg: reduce via repeated table steps
    std::vector<Rat> cur(f->degree(), Rat(0));
    cur[0] = Rat(1);
    // multiply by x, k times (N is small)
    for (long long i = 0; i < k; ++i) cur = mul_x(f, cur);
    v.c_ = cur;
    return v;
  }

  const CycField* field() const { return f_; }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    Cyc r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    Cyc r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    const CycField* f = a.f_;
    int d = f->degree();
    std::vector<Rat> conv(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (b.c_[j].is_zero()) continue;
        conv[i + j] = conv[i + j] + a.c_[i] * b.c_[j];
      }
    }
    Cyc r;
    r.f_ = f;
    r.c_.assign(d, Rat(0));
    for (int k = 0; k < 2 * d - 1; ++k) {
      if (conv[k].is_zero()) continue;
      const auto& pw = f->power(k);
      for (int i = 0; i < d; ++i) r.c_[i] = r.c_[i] + conv[k] * pw[i];
    }
    return r;
  }
  Cyc operator-() const {
    Cyc r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  bool is_zero() const {
    for (const Rat& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  // complex conjugation: zeta -> zeta^{N-1}
  Cyc conj() const {
    Cyc r = Cyc::zero(f_);
    for (int i = 0; i < f_->degree(); ++i) {
      if (c_[i].is_zero()) continue;
      Cyc term = zeta_pow(f_, (static_cast<long long>(f_->n()) - i) % f_->n());
      for (auto& v : term.c_) v = v * c_[i];
      r = r + term;
    }
    return r;
  }

  bool is_real() const { return *this == conj(); }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  Rat rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return c_[0];
  }

  std::string str() const {
    if (is_rational()) return c_[0].str();
    // recognise +- zeta^k, preferring the positive form
    for (int k = 1; k < f_->n(); ++k)
      if (*this == zeta_pow(f_, k)) return zname(k);
    for (int k = 1; k < f_->n(); ++k)
      if (*this == -zeta_pow(f_, k)) return "-" + zname(k);
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += "+";
      s += c_[i].str() + "*z^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::string zname(int k) const {
    int n = f_->n();
    int g = std::gcd(k, n);
    int order = n / g;
    int e = k / g;
    if (order == 4 && e == 1) return "i";
    if (order == 4 && e == 3) return "-i";
    std::string s = "z" + std::to_string(order);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  }

  static std::vector<Rat> mul_x(const CycField* f, const std::vector<Rat>& v) {
    int d = f->degree();
    std::vector<Rat> out(d, Rat(0));
    for (int i = 0; i < d; ++i) {
      if (v[i].is_zero()) continue;
      const auto& pw = f->power(i + 1);
      for (int j = 0; j < d; ++j) out[j] = out[j] + v[i] * pw[j];
    }
    return out;
  }

  const CycField* f_ = nullptr;
  std::vector<Rat> c_;
};

}  // namespace chv

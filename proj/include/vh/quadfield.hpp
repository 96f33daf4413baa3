#pragma once

#include <algorithm>
#include <memory>
#include <sstream>
#include <vector>

#include "vh/linalg.hpp"
#include "vh/rational.hpp"

namespace vh {

// Exact arithmetic in real multiquadratic fields Q(sqrt(g_1), ..., sqrt(g_k)),
// g_i squarefree integers > 1 that stay multiplicatively independent modulo
// squares (enforced by adjoin_sqrt). Towers grow append-only, so a field embeds
// into any extension of it by zero-padding coefficient masks.
struct QuadTower {
  std::vector<long long> gens;
  std::vector<std::vector<long long>> gen_primes;  // prime support per generator
};

using TowerPtr = std::shared_ptr<const QuadTower>;

inline const TowerPtr& trivial_tower() {
  static const TowerPtr t = std::make_shared<QuadTower>();
  return t;
}

class QNum {
 public:
  QNum() : QNum(Rat(0)) {}
  QNum(int v) : QNum(Rat(v)) {}
  QNum(const Rat& v) : tw_(trivial_tower()), c_{v} {}
  QNum(TowerPtr tw, std::vector<Rat> c) : tw_(std::move(tw)), c_(std::move(c)) {}

  const TowerPtr& tower() const { return tw_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Rat& v : c_)
      if (v != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t m = 1; m < c_.size(); ++m)
      if (c_[m] != 0) return false;
    return true;
  }
  const Rat& rational_part() const { return c_[0]; }

  QNum lifted(const TowerPtr& tw) const {
    if (tw_->gens == tw->gens) return *this;
    if (tw_->gens.size() > tw->gens.size() ||
        !std::equal(tw_->gens.begin(), tw_->gens.end(), tw->gens.begin()))
      throw Error("QNum: incompatible towers (not a prefix extension)");
    std::vector<Rat> c(size_t(1) << tw->gens.size(), Rat(0));
    for (size_t m = 0; m < c_.size(); ++m) c[m] = c_[m];
    return QNum(tw, std::move(c));
  }

  friend QNum operator-(const QNum& a) {
    QNum r = a;
    for (Rat& v : r.c_) v = -v;
    return r;
  }
  friend QNum operator+(const QNum& a, const QNum& b) {
    auto [x, y] = align(a, b);
    for (size_t m = 0; m < x.c_.size(); ++m) x.c_[m] += y.c_[m];
    return x;
  }
  friend QNum operator-(const QNum& a, const QNum& b) { return a + (-b); }
  friend QNum operator*(const QNum& a, const QNum& b) {
    auto [x, y] = align(a, b);
    const auto& gens = x.tw_->gens;
    std::vector<Rat> out(x.c_.size(), Rat(0));
    for (size_t m1 = 0; m1 < x.c_.size(); ++m1) {
      if (x.c_[m1] == 0) continue;
      for (size_t m2 = 0; m2 < y.c_.size(); ++m2) {
        if (y.c_[m2] == 0) continue;
        Rat term = x.c_[m1] * y.c_[m2];
        size_t common = m1 & m2;
        for (size_t k = 0; k < gens.size(); ++k)
          if (common & (size_t(1) << k)) term *= gens[k];
        out[m1 ^ m2] += term;
      }
    }
    return QNum(x.tw_, std::move(out));
  }
  friend QNum operator/(const QNum& a, const QNum& b) { return a * b.inverse(); }
  friend bool operator==(const QNum& a, const QNum& b) { return (a - b).is_zero(); }

  QNum inverse() const {
    if (is_zero()) throw Error("QNum: division by zero");
    if (is_rational()) return QNum(Rat(1) / c_[0]).lifted(tw_);
    // Solve (multiplication-by-this) v = e_0 in the rational basis.
    const size_t n = c_.size();
    Mat<Rat> mult(n, Vec<Rat>(n, Rat(0)));
    const auto& gens = tw_->gens;
    for (size_t m1 = 0; m1 < n; ++m1) {
      if (c_[m1] == 0) continue;
      for (size_t m2 = 0; m2 < n; ++m2) {
        Rat term = c_[m1];
        size_t common = m1 & m2;
        for (size_t k = 0; k < gens.size(); ++k)
          if (common & (size_t(1) << k)) term *= gens[k];
        mult[m1 ^ m2][m2] += term;
      }
    }
    Vec<Rat> e0(n, Rat(0));
    e0[0] = 1;
    auto sol = solve(mult, e0);
    if (!sol) throw Error("QNum: tower is degenerate (dependent radicands)");
    return QNum(tw_, std::move(*sol));
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t m = 0; m < c_.size(); ++m) {
      if (c_[m] == 0) continue;
      if (!first) os << (c_[m] > 0 ? "+" : "");
      first = false;
      if (m == 0) {
        os << c_[m].str();
        continue;
      }
      long long rad = 1;
      for (size_t k = 0; k < tw_->gens.size(); ++k)
        if (m & (size_t(1) << k)) rad *= tw_->gens[k];
      if (c_[m] == 1)
        ;
      else if (c_[m] == -1)
        os << "-";
      else
        os << c_[m].str() << "*";
      os << "sqrt(" << rad << ")";
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static std::pair<QNum, QNum> align(const QNum& a, const QNum& b) {
    if (a.tw_->gens == b.tw_->gens) return {a, b};
    if (a.tw_->gens.size() >= b.tw_->gens.size()) return {a, b.lifted(a.tw_)};
    return {a.lifted(b.tw_), b};
  }

  TowerPtr tw_;
  std::vector<Rat> c_;
};

namespace detail {

inline std::vector<std::pair<long long, int>> factorize(BigInt n) {
  std::vector<std::pair<long long, int>> fac;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fac.emplace_back(static_cast<long long>(p), e);
  }
  if (n > 1) fac.emplace_back(static_cast<long long>(n), 1);
  return fac;
}

}  // namespace detail

// Returns (tower', s) with s^2 = v exactly, extending the tower only when v is
// not already a square times a product of existing radicands.
inline std::pair<TowerPtr, QNum> adjoin_sqrt(TowerPtr tw, const Rat& v) {
  if (v < 0) throw Error("adjoin_sqrt: negative radicand");
  if (v == 0) return {tw, QNum(0)};
  BigInt p = numerator(v), q = denominator(v);
  Rat scale = Rat(1) / Rat(q);
  BigInt n = p * q;
  BigInt sq = 1, m = 1;
  std::vector<long long> mprimes;
  for (auto [prime, e] : detail::factorize(n)) {
    for (int k = 0; k < e / 2; ++k) sq *= prime;
    if (e % 2) {
      m *= prime;
      mprimes.push_back(prime);
    }
  }
  scale *= Rat(sq);
  if (m == 1) return {tw, QNum(scale)};

  // GF(2) search for a subset of existing radicands with the same odd support.
  std::vector<long long> primes = mprimes;
  for (const auto& gp : tw->gen_primes) primes.insert(primes.end(), gp.begin(), gp.end());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const size_t np = primes.size(), ng = tw->gens.size();
  auto prime_index = [&](long long pr) {
    return static_cast<size_t>(std::lower_bound(primes.begin(), primes.end(), pr) - primes.begin());
  };
  // rows: primes, columns: generators, augmented with the target support.
  std::vector<std::vector<int>> g2(np, std::vector<int>(ng + 1, 0));
  for (size_t k = 0; k < ng; ++k)
    for (long long pr : tw->gen_primes[k]) g2[prime_index(pr)][k] = 1;
  for (long long pr : mprimes) g2[prime_index(pr)][ng] = 1;
  std::vector<int> pivot_col(np, -1);
  size_t row = 0;
  for (size_t col = 0; col < ng && row < np; ++col) {
    size_t sel = row;
    while (sel < np && g2[sel][col] == 0) ++sel;
    if (sel == np) continue;
    std::swap(g2[row], g2[sel]);
    for (size_t i = 0; i < np; ++i)
      if (i != row && g2[i][col])
        for (size_t j = col; j <= ng; ++j) g2[i][j] ^= g2[row][j];
    pivot_col[row] = static_cast<int>(col);
    ++row;
  }
  bool solvable = true;
  for (size_t i = row; i < np; ++i)
    if (g2[i][ng]) solvable = false;
  if (solvable) {
    size_t mask = 0;
    for (size_t i = 0; i < row; ++i)
      if (g2[i][ng]) mask |= size_t(1) << pivot_col[i];
    BigInt prod = 1;
    for (size_t k = 0; k < ng; ++k)
      if (mask & (size_t(1) << k)) prod *= tw->gens[k];
    // prod / m is a perfect square k^2, and sqrt(m) = sqrt(prod)/k.
    BigInt ratio = prod / m, k = boost::multiprecision::sqrt(ratio);
    std::vector<Rat> c(size_t(1) << ng, Rat(0));
    c[mask] = scale / Rat(k);
    return {tw, QNum(tw, std::move(c))};
  }
  auto ext = std::make_shared<QuadTower>(*tw);
  ext->gens.push_back(static_cast<long long>(m));
  ext->gen_primes.push_back(mprimes);
  std::vector<Rat> c(size_t(1) << ext->gens.size(), Rat(0));
  c[size_t(1) << ng] = scale;
  return {TowerPtr(ext), QNum(ext, std::move(c))};
}

// Complex numbers over a multiquadratic field; with the trivial tower these are
// plain Gaussian rationals.
struct QC {
  QNum re, im;

  QC() = default;
  QC(int v) : re(v) {}
  QC(const Rat& v) : re(v) {}
  QC(QNum r) : re(std::move(r)) {}
  QC(QNum r, QNum i) : re(std::move(r)), im(std::move(i)) {}
  static QC gauss(const Rat& r, const Rat& i) { return QC(QNum(r), QNum(i)); }
  static QC imaginary_unit() { return QC(QNum(0), QNum(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  QC conj() const { return QC(re, -im); }

  friend QC operator-(const QC& a) { return QC(-a.re, -a.im); }
  friend QC operator+(const QC& a, const QC& b) { return QC(a.re + b.re, a.im + b.im); }
  friend QC operator-(const QC& a, const QC& b) { return QC(a.re - b.re, a.im - b.im); }
  friend QC operator*(const QC& a, const QC& b) {
    return QC(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend QC operator/(const QC& a, const QC& b) {
    QNum n = (b.re * b.re + b.im * b.im).inverse();
    QC c = a * b.conj();
    return QC(c.re * n, c.im * n);
  }
  friend bool operator==(const QC& a, const QC& b) { return (a - b).is_zero(); }

  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string s = re.is_zero() ? "" : re.str();
    std::string i = im.str();
    if (!s.empty() && !i.empty() && i[0] != '-') s += "+";
    return s + i + "i";
  }
};

}  // namespace vh

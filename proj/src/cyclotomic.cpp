#include "mckay/cyclotomic.hpp"

#include "mckay/exact.hpp"

#include <map>
#include <mutex>
#include <ostream>

namespace mckay {

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Quotient of polynomial division num / den over Z, den monic; exact.
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const long dn = static_cast<long>(num.size()) - 1;
  const long dd = static_cast<long>(den.size()) - 1;
  std::vector<Int> quot(dn - dd + 1, Int(0));
  for (long i = dn; i >= dd; --i) {
    Int c = num[i];
    if (c.is_zero()) continue;
    quot[i - dd] = c;
    for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (!c.is_zero()) throw InternalCheckFailed("cyclotomic polynomial division not exact");
  return quot;
}

std::map<long, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<Int> compute_cyclotomic(long n) {
  // x^n - 1 divided by the product of Phi_d over proper divisors d | n
  std::vector<Int> poly(n + 1, Int(0));
  poly[0] = -1;
  poly[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    poly = poly_divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
  }
  std::vector<Int> value = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return g_phi_cache.emplace(n, std::move(value)).first->second;
}

namespace {

// Reduces a coefficient vector (any length) mod Phi_N down to phi(N) terms.
VecQ reduce_mod_phi(std::vector<Rat> c, long n) {
  const std::vector<Int>& phi = cyclotomic_polynomial(n);
  const long deg = static_cast<long>(phi.size()) - 1;
  for (long i = static_cast<long>(c.size()) - 1; i >= deg; --i) {
    Rat lead = c[i];
    if (lead.is_zero()) continue;
    c[i] = 0;
    for (long j = 0; j < deg; ++j) c[i - deg + j] -= lead * Rat(phi[j]);
  }
  VecQ out = VecQ::Zero(deg);
  for (long j = 0; j < deg && j < static_cast<long>(c.size()); ++j) out(j) = c[j];
  return out;
}

// zeta_N^k as a reduced coefficient vector.
VecQ zeta_power(long n, long k) {
  long e = mod_pos(k, n);
  std::vector<Rat> c(e + 1, Rat(0));
  c[e] = 1;
  return reduce_mod_phi(std::move(c), n);
}

}  // namespace

CycNum CycNum::root_of_unity(long n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: order must be positive");
  return from_coeffs(n, zeta_power(n, k));
}

CycNum CycNum::from_coeffs(long order, VecQ coeffs) {
  if (coeffs.size() != euler_phi(order))
    throw std::invalid_argument("CycNum: coefficient length must be phi(order)");
  CycNum x;
  x.order_ = order;
  x.coeffs_ = std::move(coeffs);
  return x;
}

bool CycNum::is_zero() const {
  for (long i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_(i).is_zero()) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (long i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_(i).is_zero()) return false;
  return true;
}

Rat CycNum::as_rational() const {
  if (!is_rational()) throw Error("CycNum: not rational");
  return coeffs_(0);
}

CycNum CycNum::embedded(long l) const {
  if (l == order_) return *this;
  if (l % order_) throw std::invalid_argument("embedded: order must divide target");
  const long step = l / order_;
  CycNum out;
  out.order_ = l;
  out.coeffs_ = VecQ::Zero(euler_phi(l));
  for (long j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_(j).is_zero()) continue;
    VecQ p = zeta_power(l, j * step);
    out.coeffs_ += (coeffs_(j) * p).eval();
  }
  return out;
}

namespace {

std::pair<CycNum, CycNum> to_common_order(const CycNum& a, const CycNum& b) {
  long l = std::lcm(a.order(), b.order());
  return {a.embedded(l), b.embedded(l)};
}

}  // namespace

CycNum operator+(const CycNum& a, const CycNum& b) {
  auto [x, y] = to_common_order(a, b);
  return CycNum::from_coeffs(x.order(), x.coeffs() + y.coeffs());
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  auto [x, y] = to_common_order(a, b);
  return CycNum::from_coeffs(x.order(), x.coeffs() - y.coeffs());
}

CycNum operator-(const CycNum& a) {
  return CycNum::from_coeffs(a.order(), (-a.coeffs()).eval());
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  auto [x, y] = to_common_order(a, b);
  const long deg = x.coeffs().size();
  std::vector<Rat> prod(2 * deg - 1, Rat(0));
  for (long i = 0; i < deg; ++i) {
    if (x.coeffs()(i).is_zero()) continue;
    for (long j = 0; j < deg; ++j) {
      if (y.coeffs()(j).is_zero()) continue;
      prod[i + j] += x.coeffs()(i) * y.coeffs()(j);
    }
  }
  return CycNum::from_coeffs(x.order(), reduce_mod_phi(std::move(prod), x.order()));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const long deg = coeffs_.size();
  // multiplication-by-*this matrix in the power basis; invert on e_0
  MatQ m(deg, deg);
  CycNum basis_product = *this;
  for (long j = 0; j < deg; ++j) {
    if (j > 0) basis_product = basis_product * root_of_unity(order_, 1);
    m.col(j) = basis_product.coeffs_;
  }
  VecQ e0 = VecQ::Zero(deg);
  e0(0) = 1;
  auto sol = solve_linear<Rat>(m, e0);
  if (!sol) throw InternalCheckFailed("cyclotomic inverse: singular multiplication matrix");
  return from_coeffs(order_, std::move(*sol));
}

CycNum operator/(const CycNum& a, const CycNum& b) {
  auto [x, y] = to_common_order(a, b);
  return x * y.inverse();
}

CycNum CycNum::pow(long k) const {
  CycNum base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1ul : static_cast<unsigned long>(k);
  CycNum acc(Rat(1));
  while (e) {
    if (e & 1ul) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order() == b.order()) return a.coeffs() == b.coeffs();
  auto [x, y] = to_common_order(a, b);
  return x.coeffs() == y.coeffs();
}

CycNum conj(const CycNum& a) {
  const long n = a.order();
  if (n <= 2) return a;
  VecQ out = VecQ::Zero(euler_phi(n));
  for (long j = 0; j < a.coeffs().size(); ++j) {
    if (a.coeffs()(j).is_zero()) continue;
    out += (a.coeffs()(j) * zeta_power(n, -j)).eval();
  }
  return CycNum::from_coeffs(n, std::move(out));
}

int CycNum::compare_key(const CycNum& a, const CycNum& b) {
  long l = std::lcm(a.order(), b.order());
  CycNum x = a.embedded(l), y = b.embedded(l);
  for (long i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_(i) < y.coeffs_(i)) return -1;
    if (y.coeffs_(i) < x.coeffs_(i)) return 1;
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) {
  if (a.is_rational()) return os << a.as_rational();
  os << "(";
  bool first = true;
  for (long j = 0; j < a.coeffs().size(); ++j) {
    if (a.coeffs()(j).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << a.coeffs()(j);
    if (j > 0) os << "*z" << a.order() << "^" << j;
  }
  return os << ")";
}

long multiplicative_order(const CycNum& a, long bound) {
  CycNum p = a;
  const CycNum one(Rat(1));
  for (long m = 1; m <= bound; ++m) {
    if (p == one) return m;
    p = p * a;
  }
  return 0;
}

}  // namespace mckay

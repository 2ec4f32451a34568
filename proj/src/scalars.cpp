#include "verlinde/scalars.hpp"

#include "verlinde/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace verlinde {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (a % n == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, g = 1;
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      g = std::gcd(x > y ? x - y : y - x, n);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  for (u64 q : {2, 3, 5, 7, 11, 13}) {
    while (n % q == 0) {
      out.push_back(q);
      n /= q;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 f = pollard_rho(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

// Dense polynomials over F_p, ascending, used only for field construction.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, int p) {
  // f monic
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const int c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<int>(((a[shift + i] - static_cast<long long>(c) * f[i]) % p + p) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly a, u64 e, const Poly& f, int p) {
  Poly r{1};
  r = poly_mod(r, f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, f, p);
    a = poly_mulmod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

int inverse_mod(int a, int p) { return static_cast<int>(powmod(static_cast<u64>(a), p - 2, p)); }

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    const int inv = inverse_mod(b.back(), p);
    for (int& c : b) c = static_cast<int>(static_cast<long long>(c) * inv % p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// x^{p^k} mod f
Poly frobenius_power_of_x(const Poly& f, int p, int k) {
  Poly h = poly_mod(Poly{0, 1}, f, p);
  for (int i = 0; i < k; ++i) h = poly_powmod(h, static_cast<u64>(p), f, p);
  return h;
}

bool is_irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 1) return true;
  Poly x = poly_mod(Poly{0, 1}, f, p);
  if (frobenius_power_of_x(f, p, d) != x) return false;
  std::set<u64> primes;
  for (u64 r : factorize(static_cast<u64>(d))) primes.insert(r);
  for (u64 r : primes) {
    Poly h = frobenius_power_of_x(f, p, d / static_cast<int>(r));
    h.resize(std::max(h.size(), std::size_t{2}), 0);
    h[1] = (h[1] - 1 + p) % p;
    if (poly_gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  return miller_rabin(n);
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  std::vector<u64> out;
  if (n > 1) factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

int multiplicative_order(std::uint64_t p, std::uint64_t m) {
  require(m >= 1 && std::gcd(p, m) == 1, "multiplicative_order: p must be a unit mod m");
  if (m == 1) return 1;
  u64 x = p % m;
  int d = 1;
  while (x != 1) {
    x = mulmod(x, p, m);
    ++d;
  }
  return d;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const GaloisField> GaloisField::create(int p, int degree) {
  require(is_prime(static_cast<u64>(p)), "GaloisField: p must be prime");
  require(degree >= 1, "GaloisField: degree must be positive");
  u64 q = 1;
  for (int i = 0; i < degree; ++i) {
    require(q < (u64{1} << 62) / static_cast<u64>(p), "GaloisField: field too large");
    q *= static_cast<u64>(p);
  }
  for (u64 code = 0; code < q; ++code) {
    Poly f(degree + 1, 0);
    u64 c = code;
    for (int i = 0; i < degree; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[degree] = 1;
    if (is_irreducible(f, p))
      return std::shared_ptr<const GaloisField>(new GaloisField(p, degree, std::move(f), q));
  }
  throw ConsistencyError("GaloisField: no irreducible polynomial found");
}

FieldScalar GaloisField::zero() const { return FieldScalar(shared_from_this(), std::vector<int>(d_, 0)); }

FieldScalar GaloisField::one() const { return from_int(1); }

FieldScalar GaloisField::from_int(long long v) const {
  std::vector<int> c(d_, 0);
  c[0] = static_cast<int>(((v % p_) + p_) % p_);
  return FieldScalar(shared_from_this(), std::move(c));
}

FieldScalar GaloisField::element(std::vector<int> coords) const {
  require(static_cast<int>(coords.size()) == d_, "GaloisField::element: wrong number of coordinates");
  for (int& c : coords) c = ((c % p_) + p_) % p_;
  return FieldScalar(shared_from_this(), std::move(coords));
}

FieldScalar GaloisField::from_code(std::uint64_t code) const {
  std::vector<int> c(d_, 0);
  for (int i = 0; i < d_; ++i) {
    c[i] = static_cast<int>(code % static_cast<u64>(p_));
    code /= static_cast<u64>(p_);
  }
  return FieldScalar(shared_from_this(), std::move(c));
}

FieldScalar GaloisField::primitive_element() const {
  std::set<u64> primes;
  for (u64 r : factorize(q_ - 1)) primes.insert(r);
  for (u64 code = 1; code < q_; ++code) {
    FieldScalar g = from_code(code);
    bool generates = true;
    for (u64 r : primes)
      if (g.pow(static_cast<long long>((q_ - 1) / r)).is_one()) {
        generates = false;
        break;
      }
    if (generates) return g;
  }
  throw ConsistencyError("GaloisField: no primitive element");
}

std::vector<int> GaloisField::multiply(const std::vector<int>& a, const std::vector<int>& b) const {
  Poly r = poly_mulmod(a, b, modulus_, p_);
  r.resize(d_, 0);
  return r;
}

// ---------------------------------------------------------------------------

FieldScalar::FieldScalar(std::shared_ptr<const GaloisField> f, std::vector<int> coords)
    : field_(std::move(f)), c_(std::move(coords)) {}

void FieldScalar::check_same(const FieldScalar& o) const {
  ensure(field_ && o.field_, "FieldScalar: uninitialised scalar");
  ensure(field_ == o.field_ || (field_->characteristic() == o.field_->characteristic() &&
                                field_->modulus() == o.field_->modulus()),
         "FieldScalar: mixing elements of different fields");
}

bool FieldScalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool FieldScalar::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](int x) { return x == 0; });
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  check_same(o);
  const int p = field_->characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p;
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  check_same(o);
  const int p = field_->characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] - o.c_[i] + p) % p;
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  check_same(o);
  c_ = field_->multiply(c_, o.c_);
  return *this;
}

FieldScalar FieldScalar::operator-() const { return field_->zero() - *this; }

FieldScalar FieldScalar::pow(long long e) const {
  const u64 group = field_->order() - 1;
  if (is_zero()) {
    require(e >= 0, "FieldScalar::pow: zero to a negative power");
    return e == 0 ? field_->one() : *this;
  }
  long long r = e % static_cast<long long>(group);
  if (r < 0) r += static_cast<long long>(group);
  FieldScalar acc = field_->one();
  FieldScalar base = *this;
  u64 k = static_cast<u64>(r);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

FieldScalar FieldScalar::inverse() const {
  require(!is_zero(), "FieldScalar::inverse: division by zero");
  return pow(-1);
}

std::uint64_t FieldScalar::order() const {
  require(!is_zero(), "FieldScalar::order: zero has no multiplicative order");
  u64 ord = field_->order() - 1;
  for (u64 r : factorize(ord)) {
    if (ord % r == 0 && pow(static_cast<long long>(ord / r)).is_one()) ord /= r;
  }
  return ord;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  check_same(o);
  return c_ == o.c_;
}

std::string FieldScalar::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

std::int64_t Levels::power(int k) const {
  if (k <= 0) return 1;
  std::int64_t r = ell;
  for (int i = 1; i < k; ++i) {
    require(r <= (std::int64_t{1} << 55) / p, "Levels::power: overflow");
    r *= p;
  }
  return r;
}

Levels make_levels(int p, int ell, int n) {
  require(p >= 2 && is_prime(static_cast<u64>(p)), "p must be prime");
  require(ell >= 2, "l must be at least 2");
  require(ell == p || ell % p != 0, "p must not divide l unless l = p");
  require(n >= 1, "level n must be at least 1");
  Levels lv{p, ell, n};
  (void)lv.top();  // overflow check
  return lv;
}

Levels sigma_levels(const Levels& lv, int m) { return make_levels(lv.p, lv.p, m); }

int derive_ell(int p, int N) {
  require(N >= 1, "N must be positive");
  if (N > 2) return N % 2 ? N : N / 2;
  return p;
}

Levels derive_levels(int p, int N, int n) {
  require(p >= 2 && is_prime(static_cast<u64>(p)), "p must be prime");
  require(N >= 1, "N must be positive");
  require(N % p != 0, "p must not divide N");
  return make_levels(p, derive_ell(p, N), n);
}

ParamContext make_context(int p, int N, int n, int zeta_sqrt_selector) {
  ParamContext ctx;
  ctx.levels = derive_levels(p, N, n);
  ctx.p = p;
  ctx.N = N;
  ctx.ell = ctx.levels.ell;
  ctx.n = n;
  ctx.sigma = (ctx.ell + N) % 2 == 0 ? 1 : -1;
  ctx.zeta_sqrt_selector = zeta_sqrt_selector;

  // The square root of zeta lives in the field generated by a primitive
  // (2N)-th root when N is even, and by zeta itself when N is odd.
  const u64 root_order = N % 2 ? static_cast<u64>(N) : 2 * static_cast<u64>(N);
  ctx.d = multiplicative_order(static_cast<u64>(p), root_order);
  ctx.field = GaloisField::create(p, ctx.d);

  const u64 q1 = ctx.field->order() - 1;
  const FieldScalar g = ctx.field->primitive_element();
  ctx.zeta = g.pow(static_cast<long long>(q1 / static_cast<u64>(N)));
  FieldScalar s = N % 2 ? ctx.zeta.pow((N + 1) / 2) : g.pow(static_cast<long long>(q1 / root_order));
  if (zeta_sqrt_selector % 2 != 0) s = -s;
  ctx.zeta_sqrt = s;
  ensure(ctx.zeta_sqrt * ctx.zeta_sqrt == ctx.zeta, "make_context: square root check failed");
  return ctx;
}

FieldScalar quantum_integer(const FieldScalar& q, long long m) {
  if (m < 0) return -quantum_integer(q, -m);
  FieldScalar acc = q.field().zero();
  if (m == 0) return acc;
  FieldScalar term = q.pow(-(m - 1));
  const FieldScalar step = q * q;
  for (long long j = 0; j < m; ++j) {
    acc += term;
    term *= step;
  }
  return acc;
}

FieldScalar quantum_integer_field(const ParamContext& ctx, long long m) { return quantum_integer(ctx.zeta, m); }

LaurentPoly quantum_integer_laurent(long long m) {
  LaurentPoly r;
  const long long k = m < 0 ? -m : m;
  const Integer sign = m < 0 ? -1 : 1;
  for (long long j = 0; j < k; ++j) r.add_term(static_cast<int>(-(k - 1) + 2 * j), sign);
  return r;
}

FieldScalar evaluate(const LaurentPoly& f, const FieldScalar& t) {
  FieldScalar acc = t.field().zero();
  const int p = t.field().characteristic();
  for (const auto& [e, c] : f.terms()) {
    Integer r = c % p;
    if (r < 0) r += p;
    acc += t.field().from_int(r.convert_to<long long>()) * t.pow(e);
  }
  return acc;
}

FieldScalar zeta_half_power(const ParamContext& ctx, long long m) { return ctx.zeta_sqrt.pow(m); }

double fpdim_quantum(const Levels& lv, long long m, std::int64_t power) {
  require(power >= 1, "fpdim_quantum: power must be positive");
  const double P = static_cast<double>(lv.top());
  const double den = std::sin(static_cast<double>(power) * std::numbers::pi / P);
  require(std::abs(den) > 1e-12, "fpdim_quantum: sin(power pi / p^(n)) vanishes");
  return std::sin(static_cast<double>(m) * static_cast<double>(power) * std::numbers::pi / P) / den;
}

}  // namespace verlinde

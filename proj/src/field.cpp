#include "ginv/field.hpp"

#include <algorithm>

namespace ginv {
namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Minimal dense polynomial helpers over GF(p), used only to vet the modulus.
// The general-purpose polynomial layer lives elsewhere and is built on top of
// a finished field, so the bootstrap check is self-contained here.
using PolyP = std::vector<std::uint64_t>;  // low degree first, trimmed

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mod_poly(PolyP a, const PolyP& f, std::uint64_t p) {
  // f monic of degree m
  const std::size_t m = f.size() - 1;
  while (a.size() > m) {
    std::uint64_t c = a.back();
    std::size_t shift = a.size() - 1 - m;
    if (c != 0) {
      for (std::size_t i = 0; i <= m; ++i) {
        std::uint64_t& t = a[shift + i];
        t = (t + (p - c % p) * (f[i] % p)) % p;
      }
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return mod_poly(std::move(c), f, p);
}

PolyP pow_mod(PolyP base, std::uint64_t e, const PolyP& f, std::uint64_t p) {
  PolyP r{1};
  while (e) {
    if (e & 1) r = mul_mod(r, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PolyP gcd_poly(PolyP a, PolyP b, std::uint64_t p) {
  auto inv_p = [p](std::uint64_t x) {
    // extended Euclid on integers
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(x % p);
    while (newr != 0) {
      std::int64_t qu = r / newr;
      std::swap(t -= qu * newt, newt);
      std::swap(r -= qu * newr, newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    std::uint64_t lead_inv = inv_p(b.back());
    PolyP bm(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) bm[i] = b[i] * lead_inv % p;
    a = mod_poly(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

bool modulus_irreducible(const std::vector<fel>& modulus, std::uint64_t p) {
  const std::size_t m = modulus.size() - 1;
  PolyP f(modulus.begin(), modulus.end());
  // An irreducible factor of degree i <= m/2 would show up in
  // gcd(x^{p^i} - x, f); no such factor for any i means f is irreducible.
  PolyP xp = mod_poly(PolyP{0, 1}, f, p);  // x mod f
  for (std::size_t i = 1; 2 * i <= m; ++i) {
    xp = pow_mod(xp, p, f, p);  // now x^{p^i} mod f
    PolyP diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    PolyP g = gcd_poly(diff, f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

Fq::Fq(std::uint64_t p) : p_(p), m_(1), q_(p) {
  require(is_prime_u64(p), Err::NotPrime, "field characteristic " + std::to_string(p) + " is not prime");
  require(p <= (1ull << 31), Err::TooLarge, "prime field too large");
}

Fq::Fq(std::uint64_t p, std::uint32_t m, std::vector<fel> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  require(is_prime_u64(p), Err::NotPrime, "field characteristic " + std::to_string(p) + " is not prime");
  require(m_ >= 1, Err::Input, "extension degree must be >= 1");
  require(modulus_.size() == m_ + 1, Err::Input, "modulus must have degree m (m+1 coefficients, low degree first)");
  for (fel c : modulus_)
    require(c < p, Err::Input, "modulus coefficient out of range");
  require(modulus_.back() == 1, Err::Input, "modulus must be monic");
  q_ = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    require(q_ <= (1ull << 31) / p, Err::TooLarge, "field order p^m too large");
    q_ *= p;
  }
  if (m_ == 1) {
    modulus_.clear();  // GF(p) given with an explicit degree-1 modulus: plain prime field
  } else {
    require(modulus_irreducible(modulus_, p_), Err::ReducibleModulus,
            "modulus polynomial is reducible over GF(" + std::to_string(p_) + ")");
  }
}

fel Fq::from_int(std::int64_t v, const std::string& where) const {
  require(v >= 0 && static_cast<std::uint64_t>(v) < q_, Err::Input,
          where + ": value " + std::to_string(v) + " out of range for field of order " + std::to_string(q_));
  return static_cast<fel>(v);
}

fel Fq::add(fel a, fel b) const {
  if (m_ == 1) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<fel>(s >= q_ ? s - q_ : s);
  }
  fel out = 0, base = 1;
  std::uint64_t x = a, y = b;
  for (std::uint32_t i = 0; i < m_; ++i) {
    fel d = static_cast<fel>((x % p_ + y % p_) % p_);
    out += d * base;
    base = static_cast<fel>(base * p_);
    x /= p_;
    y /= p_;
  }
  return out;
}

fel Fq::neg(fel a) const {
  if (m_ == 1) return a == 0 ? 0 : static_cast<fel>(q_ - a);
  fel out = 0, base = 1;
  std::uint64_t x = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint64_t d = x % p_;
    out += static_cast<fel>((p_ - d) % p_) * base;
    base = static_cast<fel>(base * p_);
    x /= p_;
  }
  return out;
}

fel Fq::sub(fel a, fel b) const { return add(a, neg(b)); }

fel Fq::mul(fel a, fel b) const {
  if (m_ == 1) return static_cast<fel>(static_cast<std::uint64_t>(a) * b % q_);
  if (a == 0 || b == 0) return 0;
  std::vector<fel> da = decode(a), db = decode(b);
  std::vector<std::uint64_t> c(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      c[i + j] = (c[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
  }
  // reduce by the monic modulus
  for (std::uint32_t i = 2 * m_ - 2; i >= m_; --i) {
    std::uint64_t coef = c[i];
    if (coef != 0) {
      for (std::uint32_t j = 0; j <= m_; ++j) {
        std::uint64_t& t = c[i - m_ + j];
        t = (t + (p_ - coef % p_) * modulus_[j]) % p_;
      }
    }
    if (i == m_) break;
  }
  fel out = 0, base = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += static_cast<fel>(c[i]) * base;
    base = static_cast<fel>(base * p_);
  }
  return out;
}

fel Fq::pow(fel a, std::uint64_t e) const {
  fel r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

fel Fq::inv(fel a) const {
  require(a != 0, Err::DivZero, "inverse of zero");
  return pow(a, q_ - 2);
}

std::vector<fel> Fq::decode(fel a) const {
  std::vector<fel> d(m_);
  std::uint64_t x = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = static_cast<fel>(x % p_);
    x /= p_;
  }
  return d;
}

fel Fq::encode(const std::vector<fel>& digits) const {
  require(digits.size() == m_, Err::DimMismatch, "coefficient vector has wrong length");
  fel out = 0, base = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    require(digits[i] < p_, Err::Input, "coefficient out of range");
    out += digits[i] * base;
    base = static_cast<fel>(base * p_);
  }
  return out;
}

std::string Fq::to_string(fel a) const {
  if (m_ == 1) return std::to_string(a);
  std::vector<fel> d = decode(a);
  std::string s = "(";
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  s += ')';
  return s;
}

Field make_prime_field(std::uint64_t p) { return std::make_shared<Fq>(p); }

Field make_extension_field(std::uint64_t p, std::uint32_t m, std::vector<fel> modulus) {
  return std::make_shared<Fq>(p, m, std::move(modulus));
}

}  // namespace ginv

#include "capelli/ugl.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace capelli {

namespace {

// Normal forms of generator words have integer coefficients.
using IntExpansion = std::map<Monomial, mpz_class>;

void accumulate(IntExpansion& into, const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

std::mutex cache_mutex;
std::map<std::pair<Monomial, Generator>, IntExpansion>& rmul_cache() {
  static std::map<std::pair<Monomial, Generator>, IntExpansion> cache;
  return cache;
}

IntExpansion rmul_generator(const Monomial& m, Generator g);

IntExpansion rmul_expansion(const IntExpansion& x, Generator g) {
  IntExpansion out;
  for (const auto& [m, c] : x)
    for (const auto& [m2, c2] : rmul_generator(m, g)) accumulate(out, m2, c * c2);
  return out;
}

// Normal form of m·g for sorted m: if m = m'·a with a > g, then
// m'·a·g = (m'·g)·a + m'·[a, g], and [e_ab, e_cd] = δ_bc e_ad - δ_da e_cb.
IntExpansion rmul_generator(const Monomial& m, Generator g) {
  if (m.empty() || m.back() <= g) {
    Monomial out = m;
    out.push_back(g);
    return IntExpansion{{std::move(out), 1}};
  }
  const std::pair<Monomial, Generator> key{m, g};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = rmul_cache().find(key); it != rmul_cache().end()) return it->second;
  }
  const Generator a = m.back();
  const Monomial prefix(m.begin(), m.end() - 1);
  IntExpansion result = rmul_expansion(rmul_generator(prefix, g), a);
  if (a.col == g.row)
    for (const auto& [m2, c2] : rmul_generator(prefix, Generator{a.row, g.col})) accumulate(result, m2, c2);
  if (g.col == a.row)
    for (const auto& [m2, c2] : rmul_generator(prefix, Generator{g.row, a.col})) accumulate(result, m2, -c2);
  std::lock_guard lock(cache_mutex);
  rmul_cache().emplace(key, result);
  return result;
}

void check_generator(const Generator& g, int n) {
  if (g.row < 1 || g.row > n || g.col < 1 || g.col > n) throw std::out_of_range("generator index out of range");
}

}  // namespace

UglElement::UglElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("U(gl(n)) needs n >= 1");
}

UglElement UglElement::scalar(int n, const Rational& c) {
  UglElement x(n);
  x.add_term({}, c);
  return x;
}

UglElement UglElement::generator(int i, int j, int n) {
  const Generator g{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
  if (i < 1 || j < 1 || i > 255 || j > 255) throw std::out_of_range("generator index out of range");
  UglElement x(n);
  check_generator(g, n);
  x.add_term({g}, 1);
  return x;
}

UglElement UglElement::from_word(int n, const Monomial& word, const Rational& c) {
  IntExpansion current{{Monomial{}, 1}};
  for (const Generator& g : word) {
    check_generator(g, n);
    current = rmul_expansion(current, g);
  }
  UglElement x(n);
  for (const auto& [m, k] : current) x.add_term(m, c * Rational(k));
  return x;
}

Rational UglElement::coefficient(const Monomial& sorted_monomial) const {
  auto it = terms_.find(sorted_monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

int UglElement::filtration_degree() const {
  int deg = kZeroFiltrationDegree;
  for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m.size()));
  return deg;
}

UglElement UglElement::homogeneous_part(int degree) const {
  UglElement out(n_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == degree) out.terms_.emplace(m, c);
  return out;
}

void UglElement::add_term(const Monomial& sorted_monomial, const Rational& c) {
  if (!std::is_sorted(sorted_monomial.begin(), sorted_monomial.end()))
    throw std::invalid_argument("add_term expects a sorted monomial");
  for (const auto& g : sorted_monomial) check_generator(g, n_);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(sorted_monomial, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UglElement& UglElement::operator+=(const UglElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("ambient mismatch in U(gl(n)) addition");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

UglElement& UglElement::operator-=(const UglElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("ambient mismatch in U(gl(n)) subtraction");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

UglElement& UglElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

UglElement operator*(const UglElement& a, const UglElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("ambient mismatch in U(gl(n)) product");
  UglElement out(a.n_);
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) {
      IntExpansion current{{m1, 1}};
      for (const Generator& g : m2) current = rmul_expansion(current, g);
      const Rational c = c1 * c2;
      for (const auto& [m, k] : current) out.add_term(m, c * Rational(k));
    }
  }
  return out;
}

UglElement mul(const UglElement& a, const UglElement& b) { return a * b; }

UglElement commutator(const UglElement& a, const UglElement& b) { return a * b - b * a; }

UglElement ad(int i, int j, const UglElement& x) {
  return commutator(UglElement::generator(i, j, x.n()), x);
}

bool is_central(const UglElement& x) {
  for (int i = 1; i <= x.n(); ++i)
    for (int j = 1; j <= x.n(); ++j)
      if (!ad(i, j, x).is_zero()) return false;
  return true;
}

}  // namespace capelli

#include "capelli/polyalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "capelli/characters.hpp"
#include "capelli/linsolve.hpp"

namespace capelli {

MPoly::MPoly(int n, int d) : n_(n), d_(d) {
  if (n < 1 || d < 1) throw std::invalid_argument("C[M_{n,d}] needs n, d >= 1");
}

MPoly MPoly::constant(int n, int d, const Rational& c) {
  MPoly p(n, d);
  p.add_term(Exponents(static_cast<std::size_t>(n * d), 0), c);
  return p;
}

int MPoly::slot(int i, int phi) const {
  if (i < 1 || i > n_ || phi < 1 || phi > d_) throw std::out_of_range("variable index out of range");
  return (i - 1) * d_ + (phi - 1);
}

MPoly MPoly::variable(int i, int phi, int n, int d) {
  MPoly p(n, d);
  Exponents e(static_cast<std::size_t>(n * d), 0);
  e[static_cast<std::size_t>(p.slot(i, phi))] = 1;
  p.add_term(e, 1);
  return p;
}

MPoly MPoly::monomial(const std::vector<int>& rows, const std::vector<int>& cols, int n, int d, const Rational& c) {
  if (rows.size() != cols.size()) throw std::invalid_argument("monomial: index lists differ in length");
  MPoly p(n, d);
  Exponents e(static_cast<std::size_t>(n * d), 0);
  for (std::size_t k = 0; k < rows.size(); ++k) ++e[static_cast<std::size_t>(p.slot(rows[k], cols[k]))];
  p.add_term(e, c);
  return p;
}

Rational MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

int MPoly::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    const int k = std::accumulate(e.begin(), e.end(), 0);
    if (deg >= 0 && k != deg) return -1;
    deg = k;
  }
  return deg;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != static_cast<std::size_t>(n_ * d_)) throw std::invalid_argument("exponent vector has wrong size");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::derivative(int i, int phi) const {
  const auto s = static_cast<std::size_t>(slot(i, phi));
  MPoly out(n_, d_);
  for (const auto& [e, c] : terms_) {
    if (e[s] == 0) continue;
    Exponents f = e;
    --f[s];
    out.terms_.emplace(std::move(f), c * e[s]);
  }
  return out;
}

MPoly MPoly::times_variable(int i, int phi) const {
  const auto s = static_cast<std::size_t>(slot(i, phi));
  MPoly out(n_, d_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    ++f[s];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.n_ != n_ || other.d_ != d_) throw std::invalid_argument("ambient mismatch in polynomial addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (other.n_ != n_ || other.d_ != d_) throw std::invalid_argument("ambient mismatch in polynomial subtraction");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.n_ != b.n_ || a.d_ != b.d_) throw std::invalid_argument("ambient mismatch in polynomial product");
  MPoly out(a.n_, a.d_);
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : b.terms_) {
      Exponents e = e1;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(e[k] + e2[k]);
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> monomial_contents(const Exponents& e, int n, int d) {
  std::vector<int> rows(static_cast<std::size_t>(n), 0), cols(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < n; ++i)
    for (int phi = 0; phi < d; ++phi) {
      const int x = e[static_cast<std::size_t>(i * d + phi)];
      rows[static_cast<std::size_t>(i)] += x;
      cols[static_cast<std::size_t>(phi)] += x;
    }
  return {rows, cols};
}

std::vector<MPoly> monomials_of_degree(int n, int d, int h) {
  std::vector<MPoly> out;
  const auto slots = static_cast<std::size_t>(n * d);
  Exponents e(slots, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t k, int left) {
    if (k + 1 == slots) {
      e[k] = static_cast<std::uint8_t>(left);
      MPoly m(n, d);
      m.add_term(e, 1);
      out.push_back(std::move(m));
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[k] = static_cast<std::uint8_t>(x);
      fill(k + 1, left - x);
    }
  };
  if (h >= 0) fill(0, h);
  std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) {
    return a.terms().begin()->first < b.terms().begin()->first;
  });
  return out;
}

MPoly biproduct(const std::vector<int>& omega, const std::vector<int>& varpi, int n, int d) {
  MPoly out(n, d);
  if (omega.size() != varpi.size()) return out;
  const int p = static_cast<int>(omega.size());
  const int outer = binomial2_sign(p);
  std::vector<int> cols(varpi.size());
  for (const Permutation& sigma : permutations_of(p)) {
    for (int r = 0; r < p; ++r) cols[static_cast<std::size_t>(r)] = varpi[static_cast<std::size_t>(sigma(r))];
    out += MPoly::monomial(omega, cols, n, d, outer * sigma.sign());
  }
  return out;
}

MPoly column_bitableau(const std::vector<int>& lefts, const std::vector<int>& rights, int n, int d) {
  if (lefts.size() != rights.size()) throw std::invalid_argument("column bitableau: depth mismatch");
  return MPoly::monomial(lefts, rights, n, d, binomial2_sign(static_cast<int>(lefts.size())));
}

MPoly bitableau(const YoungTableau& s, const YoungTableau& t, int n, int d) {
  if (s.shape() != t.shape()) return MPoly(n, d);
  const auto& parts = s.shape().parts();
  int exponent = 0;
  int above = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    exponent += parts[p] * above;
    above += parts[p];
  }
  MPoly out = MPoly::constant(n, d, exponent % 2 == 0 ? 1 : -1);
  for (int r = 0; r < s.shape().length(); ++r) {
    const auto a = s.row(r);
    const auto b = t.row(r);
    out = out * biproduct(std::vector<int>(a.begin(), a.end()), std::vector<int>(b.begin(), b.end()), n, d);
  }
  return out;
}

std::vector<ColumnTerm> expand_into_columns(const YoungTableau& s, const YoungTableau& t) {
  std::vector<ColumnTerm> out;
  if (s.shape() != t.shape()) return out;
  for (auto& [sign, permuted] : row_permuted_family(s)) out.push_back(ColumnTerm{sign, permuted.word(), t.word()});
  return out;
}

MPoly right_symmetrized(const YoungTableau& s, const YoungTableau& t, int n, int d) {
  MPoly out(n, d);
  if (s.shape() != t.shape()) return out;
  for (const YoungTableau& bar : column_permuted_family(t)) out += bitableau(s, bar, n, d);
  return out;
}

MPoly right_symmetrized_via_symmetrizer(const YoungTableau& u, const YoungTableau& v, int n, int d) {
  const YoungTableau identity = identity_tableau(u.shape());
  return right_symmetrized_via_symmetrizer(u, v, identity, identity, n, d);
}

MPoly right_symmetrized_via_symmetrizer(const YoungTableau& u, const YoungTableau& v, const YoungTableau& s_multi,
                                        const YoungTableau& t_multi, int n, int d) {
  MPoly out(n, d);
  if (u.shape() != v.shape()) return out;
  if (s_multi.shape() != u.shape() || t_multi.shape() != u.shape())
    throw std::invalid_argument("symmetrizer tableaux must have the shape of the bitableau");
  const int h = u.size();
  // I(S(c)) = U(c), J(T(c)) = V(c); values are shifted to 0-based.
  std::vector<int> big_i(static_cast<std::size_t>(h)), big_j(static_cast<std::size_t>(h));
  std::vector<int> s_img(static_cast<std::size_t>(h)), t_inv(static_cast<std::size_t>(h));
  for (int c = 0; c < h; ++c) {
    const auto sc = static_cast<std::size_t>(s_multi.word()[static_cast<std::size_t>(c)] - 1);
    const auto tc = static_cast<std::size_t>(t_multi.word()[static_cast<std::size_t>(c)] - 1);
    big_i[sc] = u.word()[static_cast<std::size_t>(c)];
    big_j[tc] = v.word()[static_cast<std::size_t>(c)];
    s_img[static_cast<std::size_t>(c)] = static_cast<int>(sc);
    t_inv[tc] = c;
  }
  std::vector<int> theta(static_cast<std::size_t>(h));
  for (int k = 0; k < h; ++k) theta[static_cast<std::size_t>(k)] = s_img[static_cast<std::size_t>(t_inv[static_cast<std::size_t>(k)])];
  const Permutation theta_p(theta);
  const auto rows = row_group(s_multi);
  const auto cols = column_group(t_multi);
  std::vector<int> lefts(static_cast<std::size_t>(h));
  for (const Permutation& sigma : rows) {
    const Permutation st = sigma.compose(theta_p);
    for (const Permutation& tau : cols) {
      const Permutation g = st.compose(tau);
      for (int k = 0; k < h; ++k) lefts[static_cast<std::size_t>(k)] = big_i[static_cast<std::size_t>(g(k))];
      out += sigma.sign() * column_bitableau(lefts, big_j, n, d);
    }
  }
  return out;
}

MPoly immanant(const Partition& lambda, const std::vector<int>& lefts, const std::vector<int>& rights, int n, int d) {
  const int h = lambda.weight();
  if (static_cast<int>(lefts.size()) != h || static_cast<int>(rights.size()) != h)
    throw std::invalid_argument("immanant: index sequences must have length |λ|");
  MPoly out(n, d);
  std::vector<int> permuted(lefts.size());
  for (const Permutation& sigma : permutations_of(h)) {
    const long long chi = character_swapped(lambda, sigma);
    if (chi == 0) continue;
    for (int k = 0; k < h; ++k) permuted[static_cast<std::size_t>(k)] = lefts[static_cast<std::size_t>(sigma(k))];
    out += Rational(static_cast<long>(chi)) * column_bitableau(permuted, rights, n, d);
  }
  return out;
}

namespace {

void exponent_indices(const Exponents& e, int d, std::vector<int>& rows, std::vector<int>& cols) {
  rows.clear();
  cols.clear();
  for (std::size_t s = 0; s < e.size(); ++s)
    for (int k = 0; k < e[s]; ++k) {
      rows.push_back(static_cast<int>(s) / d + 1);
      cols.push_back(static_cast<int>(s) % d + 1);
    }
}

}  // namespace

MPoly imm_operator(const Partition& lambda, const MPoly& p) {
  MPoly out(p.n(), p.d());
  if (p.is_zero()) return out;
  const int h = lambda.weight();
  if (p.homogeneous_degree() != h) throw std::invalid_argument("IMM: input must be homogeneous of degree |λ|");
  const int sign = binomial2_sign(h);
  std::vector<int> rows, cols;
  for (const auto& [e, c] : p.terms()) {
    exponent_indices(e, p.d(), rows, cols);
    out += (c * sign) * immanant(lambda, rows, cols, p.n(), p.d());
  }
  return out;
}

std::vector<BitabSpec> standard_bitableaux(int n, int d, int h) {
  std::vector<BitabSpec> out;
  for (const Partition& lambda : partitions_of(h)) {
    if (lambda.first() > std::min(n, d)) continue;
    const auto lefts = enumerate_standard(lambda, n);
    const auto rights = enumerate_standard(lambda, d);
    for (const auto& s : lefts)
      for (const auto& t : rights) out.push_back(BitabSpec{s, t});
  }
  return out;
}

bool straight_order_geq(const BitabSpec& st, const BitabSpec& pq) {
  const Partition& a = st.left.shape();
  const Partition& b = pq.left.shape();
  if (a != b) return a > b;
  std::vector<int> w1 = st.left.word(), w2 = pq.left.word();
  w1.insert(w1.end(), st.right.word().begin(), st.right.word().end());
  w2.insert(w2.end(), pq.right.word().begin(), pq.right.word().end());
  return w1 <= w2;
}

namespace {

StdExpansion solve_in_basis(const MPoly& p, const std::function<MPoly(const BitabSpec&)>& realize) {
  StdExpansion out;
  if (p.is_zero()) return out;
  const int h = p.homogeneous_degree();
  if (h < 0) throw std::invalid_argument("straightening needs a homogeneous polynomial");
  const int n = p.n(), d = p.d();

  using Content = std::pair<std::vector<int>, std::vector<int>>;
  std::map<Content, MPoly> blocks;
  for (const auto& [e, c] : p.terms()) {
    auto [it, inserted] = blocks.try_emplace(monomial_contents(e, n, d), n, d);
    it->second.add_term(e, c);
  }
  std::map<Content, std::vector<BitabSpec>> basis;
  for (BitabSpec& b : standard_bitableaux(n, d, h)) {
    Content key{b.left.content(n), b.right.content(d)};
    if (blocks.count(key)) basis[key].push_back(std::move(b));
  }

  for (const auto& [key, part] : blocks) {
    const auto& specs = basis[key];
    std::map<Exponents, int> rows;
    auto to_vec = [&](const MPoly& q) {
      SparseVec v;
      for (const auto& [e, c] : q.terms()) {
        auto [it, inserted] = rows.try_emplace(e, static_cast<int>(rows.size()));
        v.emplace(it->second, c);
      }
      return v;
    };
    ExactColumnSolver solver;
    for (const BitabSpec& b : specs) solver.add_column(to_vec(realize(b)));
    const auto coeffs = solver.solve(to_vec(part));
    if (!coeffs || solver.rank() != solver.columns())
      throw std::logic_error("standard basis solve failed; basis enumeration is inconsistent");
    for (std::size_t k = 0; k < specs.size(); ++k)
      if ((*coeffs)[k] != 0) out.emplace(specs[k], (*coeffs)[k]);
  }
  return out;
}

}  // namespace

StdExpansion straighten(const MPoly& p) {
  const int n = p.n(), d = p.d();
  return solve_in_basis(p, [n, d](const BitabSpec& b) { return bitableau(b.left, b.right, n, d); });
}

StdExpansion gc_expand(const MPoly& p) {
  const int n = p.n(), d = p.d();
  return solve_in_basis(p, [n, d](const BitabSpec& b) { return right_symmetrized(b.left, b.right, n, d); });
}

MPoly act_generator(int i, int j, const MPoly& p) {
  MPoly out(p.n(), p.d());
  for (int phi = 1; phi <= p.d(); ++phi) out += p.derivative(j, phi).times_variable(i, phi);
  return out;
}

MPoly act_ugl(const UglElement& x, const MPoly& p) {
  if (x.n() != p.n()) throw std::invalid_argument("ambient mismatch between U(gl(n)) and C[M_{n,d}]");
  MPoly out(p.n(), p.d());
  for (const auto& [m, c] : x.terms()) {
    MPoly q = p;
    for (auto g = m.rbegin(); g != m.rend() && !q.is_zero(); ++g) q = act_generator(g->row, g->col, q);
    out += c * q;
  }
  return out;
}

namespace {

// Σ_φ̄ (l_1|φ_1)...(l_h|φ_h) ∂_{(r_1|φ_1)}...∂_{(r_h|φ_h)} p, unsigned.
MPoly polarization_product(const std::vector<int>& lefts, const std::vector<int>& rights, const MPoly& p) {
  MPoly out(p.n(), p.d());
  const std::size_t h = lefts.size();
  std::vector<int> phis(h);
  std::function<void(std::size_t, const MPoly&)> rec = [&](std::size_t k, const MPoly& q) {
    if (q.is_zero()) return;
    if (k == h) {
      MPoly r = q;
      for (std::size_t t = 0; t < h; ++t) r = r.times_variable(lefts[t], phis[t]);
      out += r;
      return;
    }
    for (int phi = 1; phi <= p.d(); ++phi) {
      phis[k] = phi;
      rec(k + 1, q.derivative(rights[k], phi));
    }
  };
  rec(0, p);
  return out;
}

}  // namespace

MPoly act_column_capelli_diff(const std::vector<int>& lefts, const std::vector<int>& rights, const MPoly& p) {
  if (lefts.size() != rights.size()) throw std::invalid_argument("column operator: depth mismatch");
  return binomial2_sign(static_cast<int>(lefts.size())) * polarization_product(lefts, rights, p);
}

MPoly act_higher_capelli(const Partition& mu, const MPoly& p) {
  const int h = mu.weight();
  const int n = p.n();
  const Partition mu_conj = mu.conjugate();
  MPoly out(p.n(), p.d());
  std::vector<int> lefts(static_cast<std::size_t>(h), 1), rights(static_cast<std::size_t>(h));
  const auto perms = permutations_of(h);
  while (true) {
    for (const Permutation& sigma : perms) {
      const long long chi = character_swapped(mu_conj, sigma);
      if (chi == 0) continue;
      for (int k = 0; k < h; ++k) rights[static_cast<std::size_t>(k)] = lefts[static_cast<std::size_t>(sigma(k))];
      out += Rational(static_cast<long>(chi)) * polarization_product(lefts, rights, p);
    }
    int k = h - 1;
    while (k >= 0 && lefts[static_cast<std::size_t>(k)] == n) lefts[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++lefts[static_cast<std::size_t>(k)];
  }
  out *= Rational(1, static_cast<unsigned long>(dim_irrep(mu)));
  return out;
}

}  // namespace capelli

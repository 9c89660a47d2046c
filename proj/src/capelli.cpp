#include "capelli/capelli.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "capelli/characters.hpp"
#include "capelli/linsolve.hpp"

namespace capelli {

namespace {

using Rows = std::vector<std::pair<int, int>>;

void check_pair(const std::vector<int>& lefts, const std::vector<int>& rights, int n) {
  if (lefts.size() != rights.size()) throw std::invalid_argument("column pair: lengths differ");
  if (n < 1) throw std::invalid_argument("U(gl(n)) needs n >= 1");
  for (std::size_t k = 0; k < lefts.size(); ++k)
    if (lefts[k] < 1 || lefts[k] > n || rights[k] < 1 || rights[k] > n)
      throw std::out_of_range("column pair: index out of range");
}

Rows zip(const std::vector<int>& lefts, const std::vector<int>& rights) {
  Rows rows;
  for (std::size_t k = 0; k < lefts.size(); ++k) rows.emplace_back(lefts[k], rights[k]);
  return rows;
}

UglElement gen(const std::pair<int, int>& row, int n) { return UglElement::generator(row.first, row.second, n); }

template <class Recurse>
UglElement top_recursion(const Rows& rows, int n, Recurse&& recurse) {
  const int h = static_cast<int>(rows.size());
  if (h == 0) return UglElement::unit(n);
  if (h == 1) return gen(rows[0], n);
  const Rows tail(rows.begin() + 1, rows.end());
  UglElement out = gen(rows[0], n) * recurse(tail);
  if (h % 2 == 0) out *= Rational(-1);
  UglElement contracted(n);
  for (int k = 1; k < h; ++k) {
    if (rows[static_cast<std::size_t>(k)].first != rows[0].second) continue;
    Rows sub;
    sub.emplace_back(rows[0].first, rows[static_cast<std::size_t>(k)].second);
    for (int r = 1; r < h; ++r)
      if (r != k) sub.push_back(rows[static_cast<std::size_t>(r)]);
    contracted += recurse(sub);
  }
  if (h % 2 == 1) contracted *= Rational(-1);
  return out + contracted;
}

UglElement direct(const Rows& rows, int n) {
  return top_recursion(rows, n, [n](const Rows& r) { return direct(r, n); });
}

UglElement bottom(const Rows& rows, int n) {
  const int h = static_cast<int>(rows.size());
  if (h == 0) return UglElement::unit(n);
  if (h == 1) return gen(rows[0], n);
  const Rows head(rows.begin(), rows.end() - 1);
  const auto& last = rows.back();
  UglElement out = bottom(head, n) * gen(last, n);
  if (h % 2 == 0) out *= Rational(-1);
  UglElement contracted(n);
  for (int k = 0; k < h - 1; ++k) {
    if (last.first != rows[static_cast<std::size_t>(k)].second) continue;
    Rows sub = head;
    sub[static_cast<std::size_t>(k)].second = last.second;
    contracted += bottom(sub, n);
  }
  if (h % 2 == 1) contracted *= Rational(-1);
  return out + contracted;
}

std::mutex memo_mutex;
std::map<std::pair<int, Rows>, UglElement>& memo() {
  static std::map<std::pair<int, Rows>, UglElement> table;
  return table;
}

UglElement memoized(Rows rows, int n) {
  std::sort(rows.begin(), rows.end());
  const std::pair<int, Rows> key{n, rows};
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo().find(key); it != memo().end()) return it->second;
  }
  UglElement value = top_recursion(rows, n, [n](const Rows& r) { return memoized(r, n); });
  std::lock_guard lock(memo_mutex);
  memo().emplace(key, value);
  return value;
}

}  // namespace

UglElement column_capelli(const std::vector<int>& lefts, const std::vector<int>& rights, int n) {
  check_pair(lefts, rights, n);
  return memoized(zip(lefts, rights), n);
}

UglElement column_capelli_direct(const std::vector<int>& lefts, const std::vector<int>& rights, int n) {
  check_pair(lefts, rights, n);
  return direct(zip(lefts, rights), n);
}

UglElement column_capelli_alt(const std::vector<int>& lefts, const std::vector<int>& rights, int n) {
  check_pair(lefts, rights, n);
  return bottom(zip(lefts, rights), n);
}

UglElement capelli_bitableau(const YoungTableau& s, const YoungTableau& t, int n) {
  UglElement out(n);
  for (const ColumnTerm& term : expand_into_columns(s, t)) {
    UglElement col = column_capelli(term.lefts, term.rights, n);
    out += term.sign > 0 ? col : -col;
  }
  return out;
}

UglElement young_capelli(const YoungTableau& s, const YoungTableau& t, int n) {
  UglElement out(n);
  if (s.shape() != t.shape()) return out;
  for (const YoungTableau& bar : column_permuted_family(t)) out += capelli_bitableau(s, bar, n);
  return out;
}

UglElement double_young_capelli(const YoungTableau& s, const YoungTableau& t, int n) {
  UglElement out(n);
  if (s.shape() != t.shape()) return out;
  for (const auto& [sign, permuted] : row_permuted_family(t)) {
    UglElement term = young_capelli(s, permuted, n);
    out += sign > 0 ? term : -term;
  }
  if (binomial2_sign(s.size()) < 0) out *= Rational(-1);
  return out;
}

UglElement capelli_immanant(const Partition& lambda, const std::vector<int>& lefts, const std::vector<int>& rights,
                            int n) {
  const int h = lambda.weight();
  if (static_cast<int>(lefts.size()) != h || static_cast<int>(rights.size()) != h)
    throw std::invalid_argument("Capelli immanant: index sequences must have length |λ|");
  UglElement out(n);
  std::vector<int> permuted(lefts.size());
  for (const Permutation& sigma : permutations_of(h)) {
    const long long chi = character_swapped(lambda, sigma);
    if (chi == 0) continue;
    for (int k = 0; k < h; ++k) permuted[static_cast<std::size_t>(k)] = lefts[static_cast<std::size_t>(sigma(k))];
    out += Rational(static_cast<long>(chi)) * column_capelli(permuted, rights, n);
  }
  return out;
}

namespace {

UglElement composition_sum(const Partition& mu, int n, const Rational& scale) {
  const int h = mu.weight();
  const Partition mu_conj = mu.conjugate();
  UglElement out(n);
  for (const auto& comp : enumerate_compositions(h, n)) {
    Rational weight = scale;
    for (int part : comp) weight /= factorial(static_cast<unsigned>(part));
    const auto diag = diagonal_sequence(comp);
    out += weight * capelli_immanant(mu_conj, diag, diag, n);
  }
  if (binomial2_sign(h) < 0) out *= Rational(-1);
  return out;
}

}  // namespace

UglElement quantum_immanant(const Partition& mu, int n) {
  return composition_sum(mu, n, Rational(static_cast<unsigned long>(mu.hook_number())));
}

UglElement schur_element(const Partition& mu, int n) { return composition_sum(mu, n, Rational(1)); }

UglElement schur_element_dyc(const Partition& mu, int n) {
  UglElement out(n);
  for (const YoungTableau& s : enumerate_row_strict(mu.conjugate(), n)) out += double_young_capelli(s, s, n);
  out *= Rational(1, static_cast<unsigned long>(mu.hook_number()));
  return out;
}

UglElement capelli_determinant(int n) {
  UglElement out(n);
  for (const Permutation& sigma : permutations_of(n)) {
    UglElement prod = UglElement::unit(n);
    for (int col = 1; col <= n; ++col) {
      const int row = sigma(col - 1) + 1;
      UglElement entry = UglElement::generator(row, col, n);
      if (row == col) entry += UglElement::scalar(n, n - row);
      prod = prod * entry;
    }
    out += sigma.sign() > 0 ? prod : -prod;
  }
  return out;
}

UglElement koszul_inverse(const MPoly& p) {
  if (p.n() != p.d()) throw std::invalid_argument("Koszul inverse needs a square matrix algebra");
  const int n = p.n();
  UglElement out(n);
  std::vector<int> rows, cols;
  for (const auto& [e, c] : p.terms()) {
    rows.clear();
    cols.clear();
    for (std::size_t s = 0; s < e.size(); ++s)
      for (int k = 0; k < e[s]; ++k) {
        rows.push_back(static_cast<int>(s) / n + 1);
        cols.push_back(static_cast<int>(s) % n + 1);
      }
    out += (c * binomial2_sign(static_cast<int>(rows.size()))) * column_capelli(rows, cols, n);
  }
  return out;
}

std::vector<BitabSpec> standard_young_capelli_pairs(int n, int max_weight) {
  std::vector<BitabSpec> out;
  for (int k = 0; k <= max_weight; ++k)
    for (BitabSpec& b : standard_bitableaux(n, n, k)) out.push_back(std::move(b));
  return out;
}

StdExpansion standard_capelli_expansion(const UglElement& x) {
  StdExpansion out;
  if (x.is_zero()) return out;
  const int n = x.n();
  const int h = x.filtration_degree();

  auto monomial_weight = [n](const Monomial& m) {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (const Generator& g : m) {
      ++w[static_cast<std::size_t>(g.row - 1)];
      --w[static_cast<std::size_t>(g.col - 1)];
    }
    return w;
  };

  std::map<std::vector<int>, UglElement> blocks;
  for (const auto& [m, c] : x.terms()) {
    auto [it, inserted] = blocks.try_emplace(monomial_weight(m), n);
    it->second.add_term(m, c);
  }
  std::map<std::vector<int>, std::vector<BitabSpec>> basis;
  for (BitabSpec& b : standard_young_capelli_pairs(n, h)) {
    std::vector<int> w = b.left.content(n);
    const std::vector<int> ct = b.right.content(n);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] -= ct[k];
    if (blocks.count(w)) basis[w].push_back(std::move(b));
  }

  for (const auto& [w, part] : blocks) {
    const auto& specs = basis[w];
    std::map<Monomial, int> rows;
    auto to_vec = [&](const UglElement& y) {
      SparseVec v;
      for (const auto& [m, c] : y.terms()) {
        auto [it, inserted] = rows.try_emplace(m, static_cast<int>(rows.size()));
        v.emplace(it->second, c);
      }
      return v;
    };
    ExactColumnSolver solver;
    for (const BitabSpec& b : specs) solver.add_column(to_vec(young_capelli(b.left, b.right, n)));
    const auto coeffs = solver.solve(to_vec(part));
    if (!coeffs || solver.rank() != solver.columns())
      throw std::logic_error("Young-Capelli basis solve failed; basis enumeration is inconsistent");
    for (std::size_t k = 0; k < specs.size(); ++k)
      if ((*coeffs)[k] != 0) out.emplace(specs[k], (*coeffs)[k]);
  }
  return out;
}

MPoly koszul(const UglElement& x) { return realize_right_symmetrized(standard_capelli_expansion(x), x.n(), x.n()); }

UglElement realize_young_capelli(const StdExpansion& expansion, int n) {
  UglElement out(n);
  for (const auto& [b, c] : expansion) out += c * young_capelli(b.left, b.right, n);
  return out;
}

MPoly realize_right_symmetrized(const StdExpansion& expansion, int n, int d) {
  MPoly out(n, d);
  for (const auto& [b, c] : expansion) out += c * right_symmetrized(b.left, b.right, n, d);
  return out;
}

MPoly realize_bitableaux(const StdExpansion& expansion, int n, int d) {
  MPoly out(n, d);
  for (const auto& [b, c] : expansion) out += c * bitableau(b.left, b.right, n, d);
  return out;
}

}  // namespace capelli

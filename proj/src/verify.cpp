#include "capelli/verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "capelli/capelli.hpp"
#include "capelli/characters.hpp"
#include "capelli/linsolve.hpp"
#include "capelli/serialize.hpp"

namespace capelli {

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string shape_text(const Partition& p) { return "(" + list(p.parts()) + ")"; }

// Calls visit on every sequence in {1..n}^h.
void for_each_word(int h, int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> w(static_cast<std::size_t>(h), 1);
  while (true) {
    visit(w);
    int k = h - 1;
    while (k >= 0 && w[static_cast<std::size_t>(k)] == n) w[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) return;
    ++w[static_cast<std::size_t>(k)];
  }
}

std::vector<MPoly> monomials_up_to(int n, int d, int max_degree) {
  std::vector<MPoly> out;
  for (int k = 0; k <= max_degree; ++k)
    for (MPoly& m : monomials_of_degree(n, d, k)) out.push_back(std::move(m));
  return out;
}

mpz_class binomial(int top, int bottom) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

SuiteReport central(const VerifyBounds& b) {
  Check schur("schur_element is central"), qimm("quantum_immanant is central"), cdet("capelli_determinant is central");
  for (int n = 1; n <= b.max_n; ++n) {
    for (int h = 1; h <= b.max_h; ++h)
      for (const Partition& mu : partitions_of(h)) {
        if (mu.conjugate().first() > n) continue;
        const auto where = [&] { return "mu=" + shape_text(mu) + " n=" + std::to_string(n); };
        schur.expect(is_central(schur_element(mu, n)), where);
        qimm.expect(is_central(quantum_immanant(mu, n)), where);
      }
    cdet.expect(is_central(capelli_determinant(n)), [&] { return "n=" + std::to_string(n); });
  }
  return {"central", {schur.done(), qimm.done(), cdet.done()}};
}

SuiteReport oracle(const VerifyBounds& b) {
  Check column("column Capelli action equals the column differential operator");
  Check higher("quantum immanant action equals the higher Capelli operator");
  Check module("polarization action is a representation");
  const int n = b.n, d = b.d;
  const auto monomials = monomials_up_to(n, d, b.max_h);
  for (int h = 1; h <= b.max_h; ++h)
    for_each_word(h, n, [&](const std::vector<int>& lefts) {
      for_each_word(h, n, [&](const std::vector<int>& rights) {
        const UglElement x = column_capelli(lefts, rights, n);
        for (const MPoly& m : monomials)
          column.expect(act_ugl(x, m) == act_column_capelli_diff(lefts, rights, m),
                        [&] { return "[" + list(lefts) + "|" + list(rights) + "] on " + to_text(m); });
      });
    });
  for (int h = 1; h <= b.max_h; ++h)
    for (const Partition& mu : partitions_of(h)) {
      const UglElement q = quantum_immanant(mu, n);
      for (const MPoly& m : monomials_up_to(n, d, h + 1))
        higher.expect(act_ugl(q, m) == act_higher_capelli(mu, m),
                      [&] { return "mu=" + shape_text(mu) + " on " + to_text(m); });
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const UglElement a = UglElement::generator(i, j, n), c = UglElement::generator(k, l, n);
          for (const MPoly& m : monomials_up_to(n, d, 2))
            module.expect(act_ugl(a * c, m) == act_ugl(a, act_ugl(c, m)), [&] {
              return "e" + std::to_string(i) + std::to_string(j) + "*e" + std::to_string(k) + std::to_string(l) +
                     " on " + to_text(m);
            });
        }
  return {"oracle", {column.done(), higher.done(), module.done()}};
}

SuiteReport presentations(const VerifyBounds& b) {
  Check dyc("schur_element equals schur_element_dyc"), scale("quantum_immanant equals H(mu) * schur_element");
  Check det("schur_element((1^n), n) equals capelli_determinant(n)"), collapse("double Young-Capelli collapse");
  for (int n = 1; n <= b.max_n; ++n) {
    for (int h = 1; h <= b.max_h; ++h)
      for (const Partition& mu : partitions_of(h)) {
        if (mu.conjugate().first() > n) continue;
        const auto where = [&] { return "mu=" + shape_text(mu) + " n=" + std::to_string(n); };
        const UglElement s = schur_element(mu, n);
        dyc.expect(s == schur_element_dyc(mu, n), where);
        scale.expect(quantum_immanant(mu, n) == s * Rational(static_cast<unsigned long>(mu.hook_number())), where);
      }
    det.expect(schur_element(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), n) == capelli_determinant(n),
               [&] { return "n=" + std::to_string(n); });
  }
  if (b.max_n >= 2 && b.max_h >= 3) {
    const YoungTableau s1 = YoungTableau::from_rows({{1, 2}, {1}}), s2 = YoungTableau::from_rows({{1, 2}, {2}});
    collapse.expect(double_young_capelli(s1, s1, 2) == young_capelli(s1, s1, 2) * Rational(-3, 2),
                    [] { return "[[1,2],[1]] expected coefficient -3/2"; });
    collapse.expect(double_young_capelli(s2, s2, 2) == young_capelli(s2, s2, 2) * Rational(-3),
                    [] { return "[[1,2],[2]] expected coefficient -3"; });
  }
  return {"presentations", {dyc.done(), scale.done(), det.done(), collapse.done()}};
}

SuiteReport recursion(const VerifyBounds& b) {
  Check alt("top and bottom recursions agree"), memo("memoized and direct recursions agree");
  Check perm("row-permutation invariance"), filt("filtration degree at most depth");
  Check examples("worked column examples");
  for (int n = 1; n <= b.max_n; ++n)
    for (int h = 0; h <= b.max_h; ++h)
      for_each_word(h, n, [&](const std::vector<int>& lefts) {
        for_each_word(h, n, [&](const std::vector<int>& rights) {
          const auto where = [&] { return "[" + list(lefts) + "|" + list(rights) + "] n=" + std::to_string(n); };
          const UglElement x = column_capelli_direct(lefts, rights, n);
          alt.expect(x == column_capelli_alt(lefts, rights, n), where);
          memo.expect(x == column_capelli(lefts, rights, n), where);
          filt.expect(x.filtration_degree() <= h, where);
          for (const Permutation& sigma : permutations_of(h)) {
            std::vector<int> l2(lefts.size()), r2(rights.size());
            for (int k = 0; k < h; ++k) {
              l2[static_cast<std::size_t>(k)] = lefts[static_cast<std::size_t>(sigma(k))];
              r2[static_cast<std::size_t>(k)] = rights[static_cast<std::size_t>(sigma(k))];
            }
            perm.expect(column_capelli_direct(l2, r2, n) == x, where);
          }
        });
      });
  if (b.max_n >= 3 && b.max_h >= 3) {
    const UglElement expected = parse_ugl_text("-e[1,2]e[2,1]e[3,1] + e[1,1]e[3,1]", 3);
    examples.expect(column_capelli({1, 2, 3}, {2, 1, 1}, 3) == expected, [] { return "[123|211]"; });
    examples.expect(column_capelli_alt({1, 2, 3}, {2, 1, 1}, 3) == expected, [] { return "[123|211] bottom"; });
    examples.expect(column_capelli_direct({3, 2, 1}, {1, 1, 2}, 3) == expected, [] { return "[321|112]"; });
  }
  if (b.max_n >= 2 && b.max_h >= 2)
    examples.expect(column_capelli({1, 2}, {2, 1}, 2) == parse_ugl_text("-e[1,2]e[2,1] + e[1,1]", 2),
                    [] { return "[12|21]"; });
  return {"recursion", {alt.done(), memo.done(), perm.done(), filt.done(), examples.done()}};
}

SuiteReport bases(const VerifyBounds& b) {
  Check standard("standard bitableaux form a basis"), gc("standard right symmetrized bitableaux form a basis");
  Check yc("standard Young-Capelli bitableaux form a basis of the filtration");
  const int n = b.n, d = b.d;
  for (int h = 0; h <= b.max_h; ++h) {
    const auto specs = standard_bitableaux(n, d, h);
    const mpz_class dim = binomial(h + n * d - 1, h);
    std::map<Exponents, int> rows;
    auto to_vec = [&](const MPoly& p) {
      SparseVec v;
      for (const auto& [e, c] : p.terms()) v.emplace(rows.try_emplace(e, static_cast<int>(rows.size())).first->second, c);
      return v;
    };
    std::vector<SparseVec> plain, sym;
    for (const BitabSpec& s : specs) {
      plain.push_back(to_vec(bitableau(s.left, s.right, n, d)));
      sym.push_back(to_vec(right_symmetrized(s.left, s.right, n, d)));
    }
    const auto where = [&] { return "h=" + std::to_string(h) + " count=" + std::to_string(specs.size()); };
    standard.expect(mpz_class(static_cast<unsigned long>(specs.size())) == dim &&
                        exact_rank(plain) == static_cast<int>(specs.size()),
                    where);
    gc.expect(exact_rank(sym) == static_cast<int>(specs.size()), where);
  }
  {
    std::map<Monomial, int> rows;
    ExactColumnSolver solver;
    mpz_class dim = 0;
    for (int h = 0; h <= b.max_h; ++h) {
      dim += binomial(h + n * n - 1, h);
      for (const BitabSpec& s : standard_bitableaux(n, n, h)) {
        SparseVec v;
        const UglElement y = young_capelli(s.left, s.right, n);
        for (const auto& [m, c] : y.terms())
          v.emplace(rows.try_emplace(m, static_cast<int>(rows.size())).first->second, c);
        solver.add_column(v);
      }
      yc.expect(mpz_class(solver.columns()) == dim && solver.rank() == solver.columns(),
                [&] { return "weight<=" + std::to_string(h) + " rank=" + std::to_string(solver.rank()); });
    }
  }
  return {"bases", {standard.done(), gc.done(), yc.done()}};
}

SuiteReport projectors(const VerifyBounds& b) {
  Check proj("(1/H) IMM fixes its own shape and kills the others");
  Check imm_support("immanants expand on their own shape");
  Check cimm_support("Capelli immanants expand on their own shape");
  const int n = b.n, d = b.d;
  for (int h = 1; h <= b.max_h; ++h) {
    const auto specs = standard_bitableaux(n, d, h);
    for (const Partition& lambda : partitions_of(h)) {
      const Rational inv_hook(1, static_cast<unsigned long>(lambda.hook_number()));
      for (const BitabSpec& s : specs) {
        const MPoly p = right_symmetrized(s.left, s.right, n, d);
        const MPoly image = imm_operator(lambda, p) * inv_hook;
        proj.expect(s.left.shape() == lambda ? image == p : image.is_zero(), [&] {
          return "lambda=" + shape_text(lambda) + " on (" + to_json(s.left).dump() + "|" + to_json(s.right).dump() + ")";
        });
      }
      for_each_word(h, n, [&](const std::vector<int>& lefts) {
        for_each_word(h, std::min(n, d), [&](const std::vector<int>& rights) {
          const auto where = [&] { return "lambda=" + shape_text(lambda) + " [" + list(lefts) + "|" + list(rights) + "]"; };
          bool ok = true;
          for (const auto& [spec, c] : gc_expand(immanant(lambda, lefts, rights, n, d)))
            ok = ok && spec.left.shape() == lambda;
          imm_support.expect(ok, where);
          ok = true;
          for (const auto& [spec, c] : standard_capelli_expansion(capelli_immanant(lambda, lefts, rights, n)))
            ok = ok && spec.left.shape() == lambda;
          cimm_support.expect(ok, where);
        });
      });
    }
  }
  return {"projectors", {proj.done(), imm_support.done(), cimm_support.done()}};
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) item["counterexample"] = c.counterexample;
    checks_json.push_back(item);
  }
  return {{"suite", suite}, {"passed", passed()}, {"checks", checks_json}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"central", "oracle", "presentations", "recursion",
                                              "bases",   "projectors", "all"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const VerifyBounds& bounds) {
  if (bounds.max_h < 0 || bounds.max_h > 6 || bounds.max_n < 1 || bounds.max_n > 4 || bounds.n < 1 || bounds.n > 4 ||
      bounds.d < 1 || bounds.d > 4)
    throw std::invalid_argument("verification bounds out of range (max-h 0..6, n, d, max-n 1..4)");
  using Runner = SuiteReport (*)(const VerifyBounds&);
  const std::vector<std::pair<std::string, Runner>> runners{
      {"central", central}, {"oracle", oracle},   {"presentations", presentations},
      {"recursion", recursion}, {"bases", bases}, {"projectors", projectors}};
  if (suite == "all") {
    SuiteReport all{"all", {}};
    for (const auto& [name, run] : runners)
      for (CheckResult& c : run(bounds).checks) {
        c.name = name + ": " + c.name;
        all.checks.push_back(std::move(c));
      }
    return all;
  }
  for (const auto& [name, run] : runners)
    if (name == suite) return run(bounds);
  throw std::invalid_argument("unknown verification suite: " + suite);
}

}  // namespace capelli

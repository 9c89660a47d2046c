// capelli: compute and verify distinguished elements of U(gl(n)).
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <chrono>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "capelli/capelli.hpp"
#include "capelli/serialize.hpp"
#include "capelli/verify.hpp"

namespace {

using namespace capelli;

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), last_(Clock::now()) {}
  void phase(const std::string& name) {
    const auto now = Clock::now();
    if (enabled_)
      std::cerr << "timing " << name << ": "
                << std::chrono::duration<double, std::milli>(now - last_).count() << " ms\n";
    last_ = now;
  }

 private:
  using Clock = std::chrono::steady_clock;
  bool enabled_;
  Clock::time_point last_;
};

struct Common {
  std::string format = "text";
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timing", c.timing, "Print wall-clock time per phase to stderr");
}

void emit(const UglElement& x, const Common& c) {
  if (c.format == "json")
    std::cout << to_json(x).dump() << "\n";
  else
    std::cout << to_text(x) << "\n";
}

void emit(const MPoly& p, const Common& c) {
  if (c.format == "json")
    std::cout << to_json(p).dump() << "\n";
  else
    std::cout << to_text(p) << "\n";
}

void emit(const StdExpansion& e, const Common& c) {
  if (c.format == "json")
    std::cout << to_json(e).dump() << "\n";
  else
    std::cout << to_text(e) << "\n";
}

void require_n(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("--n must lie in 1..9");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Capelli bitableaux and quantum immanants in U(gl(n))"};
  app.require_subcommand(1);

  Common qimm_c;
  std::string qimm_shape;
  int qimm_n = 2;
  bool qimm_schur = false, qimm_dyc = false;
  auto* qimm = app.add_subcommand("qimm", "Quantum immanant (or Schur element) of a shape");
  qimm->add_option("--shape", qimm_shape, "Partition as comma-separated parts, e.g. 2,1")->required();
  qimm->add_option("--n", qimm_n, "Rank n of gl(n)")->required();
  qimm->add_flag("--schur", qimm_schur, "Print the Schur element instead of the quantum immanant");
  qimm->add_flag("--dyc", qimm_dyc, "Compute the Schur element through double Young-Capelli bitableaux");
  add_common(qimm, qimm_c);

  Common col_c;
  std::string col_rows, col_cols;
  int col_n = 2;
  bool col_alt = false;
  auto* col = app.add_subcommand("col", "Column Capelli bitableau [i1..ih|j1..jh]");
  col->add_option("--rows", col_rows, "Left indices, comma-separated")->required();
  col->add_option("--cols", col_cols, "Right indices, comma-separated")->required();
  col->add_option("--n", col_n, "Rank n of gl(n)")->required();
  col->add_flag("--alt", col_alt, "Use the bottom-row recursion");
  add_common(col, col_c);

  Common bit_c;
  std::string bit_left, bit_right;
  int bit_n = 2;
  std::string bit_kind = "capelli";
  auto* bit = app.add_subcommand("bitab", "Capelli, Young-Capelli or double Young-Capelli bitableau");
  bit->add_option("--left", bit_left, "Left tableau as JSON rows, e.g. [[1,2],[1]]")->required();
  bit->add_option("--right", bit_right, "Right tableau as JSON rows")->required();
  bit->add_option("--n", bit_n, "Rank n of gl(n)")->required();
  bit->add_option("--kind", bit_kind, "capelli | young | double")
      ->check(CLI::IsMember({"capelli", "young", "double"}));
  add_common(bit, bit_c);

  Common cimm_c;
  std::string cimm_shape, cimm_rows, cimm_cols;
  int cimm_n = 2;
  auto* cimm = app.add_subcommand("cimm", "Capelli immanant Cimm_lambda[i|j]");
  cimm->add_option("--shape", cimm_shape, "Partition, comma-separated")->required();
  cimm->add_option("--rows", cimm_rows, "Left indices")->required();
  cimm->add_option("--cols", cimm_cols, "Right indices")->required();
  cimm->add_option("--n", cimm_n, "Rank n of gl(n)")->required();
  add_common(cimm, cimm_c);

  Common cdet_c;
  int cdet_n = 2;
  auto* cdet = app.add_subcommand("cdet", "Capelli column determinant");
  cdet->add_option("--n", cdet_n, "Rank n of gl(n)")->required();
  add_common(cdet, cdet_c);

  std::string ver_suite;
  VerifyBounds bounds;
  Common ver_c;
  auto* ver = app.add_subcommand("verify", "Run an invariant suite and print a pass/fail report");
  ver->add_option("suite", ver_suite, "central | oracle | presentations | recursion | bases | projectors | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-h", bounds.max_h, "Largest degree checked");
  ver->add_option("--max-n", bounds.max_n, "Largest rank checked");
  ver->add_option("--n", bounds.n, "Rank for the polynomial-side suites");
  ver->add_option("--d", bounds.d, "Column count d of M_{n,d}");
  add_common(ver, ver_c);

  Common str_c;
  std::string str_left, str_right, str_poly;
  int str_n = 2, str_d = 2;
  bool str_gc = false, str_sym = false;
  auto* str = app.add_subcommand("straighten", "Coordinates of a polynomial over standard bitableaux");
  auto* str_left_opt = str->add_option("--left", str_left, "Left tableau as JSON rows");
  auto* str_right_opt = str->add_option("--right", str_right, "Right tableau as JSON rows");
  auto* str_poly_opt = str->add_option("--poly", str_poly, "Polynomial text, e.g. 2*x[1,1]x[2,2] - x[1,2]x[2,1]");
  str_left_opt->needs(str_right_opt);
  str_right_opt->needs(str_left_opt);
  str_poly_opt->excludes(str_left_opt)->excludes(str_right_opt);
  str->add_option("--n", str_n, "Rows n of M_{n,d}")->required();
  str->add_option("--d", str_d, "Columns d of M_{n,d}")->required();
  str->add_flag("--symmetrized", str_sym, "Input bitableau is right symmetrized");
  str->add_flag("--gc", str_gc, "Expand over the Gordan-Capelli basis instead");
  add_common(str, str_c);

  Common exp_c;
  std::string exp_element, exp_schur, exp_qimm;
  int exp_n = 2;
  bool exp_koszul = false;
  auto* exp = app.add_subcommand("expand-standard", "Coordinates over standard Young-Capelli bitableaux");
  auto* e1 = exp->add_option("--element", exp_element, "PBW element text, e.g. e[1,2]e[2,1] - e[1,1]");
  auto* e2 = exp->add_option("--schur", exp_schur, "Use the Schur element of this shape");
  auto* e3 = exp->add_option("--qimm", exp_qimm, "Use the quantum immanant of this shape");
  e1->excludes(e2)->excludes(e3);
  e2->excludes(e3);
  exp->add_option("--n", exp_n, "Rank n of gl(n)")->required();
  exp->add_flag("--koszul", exp_koszul, "Print the Koszul image (S|T) polynomial instead");
  add_common(exp, exp_c);

  Common kin_c;
  std::string kin_poly;
  int kin_n = 2;
  auto* kin = app.add_subcommand("koszul-inverse", "Image of a polynomial of C[M_{n,n}] in U(gl(n))");
  kin->add_option("--poly", kin_poly, "Polynomial text")->required();
  kin->add_option("--n", kin_n, "Rank n")->required();
  add_common(kin, kin_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*qimm) {
      require_n(qimm_n);
      Timer t(qimm_c.timing);
      const Partition mu = parse_partition(qimm_shape);
      t.phase("parse");
      UglElement x = qimm_dyc ? schur_element_dyc(mu, qimm_n)
                              : (qimm_schur ? schur_element(mu, qimm_n) : quantum_immanant(mu, qimm_n));
      t.phase("compute");
      emit(x, qimm_c);
      t.phase("render");
    } else if (*col) {
      require_n(col_n);
      Timer t(col_c.timing);
      const auto rows = parse_index_list(col_rows), cols = parse_index_list(col_cols);
      const UglElement x = col_alt ? column_capelli_alt(rows, cols, col_n) : column_capelli(rows, cols, col_n);
      t.phase("compute");
      emit(x, col_c);
    } else if (*bit) {
      require_n(bit_n);
      Timer t(bit_c.timing);
      const YoungTableau s = parse_tableau(bit_left), r = parse_tableau(bit_right);
      if (s.shape() != r.shape()) throw std::invalid_argument("left and right tableaux have different shapes");
      const UglElement x = bit_kind == "young"    ? young_capelli(s, r, bit_n)
                           : bit_kind == "double" ? double_young_capelli(s, r, bit_n)
                                                  : capelli_bitableau(s, r, bit_n);
      t.phase("compute");
      emit(x, bit_c);
    } else if (*cimm) {
      require_n(cimm_n);
      Timer t(cimm_c.timing);
      const UglElement x = capelli_immanant(parse_partition(cimm_shape), parse_index_list(cimm_rows),
                                            parse_index_list(cimm_cols), cimm_n);
      t.phase("compute");
      emit(x, cimm_c);
    } else if (*cdet) {
      require_n(cdet_n);
      Timer t(cdet_c.timing);
      const UglElement x = capelli_determinant(cdet_n);
      t.phase("compute");
      emit(x, cdet_c);
    } else if (*ver) {
      Timer t(ver_c.timing);
      const SuiteReport report = run_suite(ver_suite, bounds);
      t.phase("verify " + ver_suite);
      if (ver_c.format == "json") {
        std::cout << report.to_json().dump(2) << "\n";
      } else {
        for (const CheckResult& c : report.checks) {
          std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
          if (!c.passed) std::cout << ": " << c.counterexample;
          std::cout << "\n";
        }
        std::cout << (report.passed() ? "suite " + report.suite + " passed" : "suite " + report.suite + " failed") << "\n";
      }
      return report.passed() ? 0 : 1;
    } else if (*str) {
      require_n(str_n);
      require_n(str_d);
      Timer t(str_c.timing);
      MPoly p(str_n, str_d);
      if (!str_poly.empty()) {
        p = parse_mpoly_text(str_poly, str_n, str_d);
      } else if (!str_left.empty()) {
        const YoungTableau s = parse_tableau(str_left), r = parse_tableau(str_right);
        if (s.shape() != r.shape()) throw std::invalid_argument("left and right tableaux have different shapes");
        if (s.max_entry() > str_n || r.max_entry() > str_d) throw std::invalid_argument("tableau entry out of range");
        p = str_sym ? right_symmetrized(s, r, str_n, str_d) : bitableau(s, r, str_n, str_d);
      } else {
        throw std::invalid_argument("straighten needs --poly or --left/--right");
      }
      if (!p.is_zero() && p.homogeneous_degree() < 0) throw std::invalid_argument("polynomial is not homogeneous");
      t.phase("parse");
      const StdExpansion e = str_gc ? gc_expand(p) : straighten(p);
      t.phase("solve");
      emit(e, str_c);
    } else if (*exp) {
      require_n(exp_n);
      Timer t(exp_c.timing);
      UglElement x(exp_n);
      if (!exp_schur.empty())
        x = schur_element(parse_partition(exp_schur), exp_n);
      else if (!exp_qimm.empty())
        x = quantum_immanant(parse_partition(exp_qimm), exp_n);
      else if (!exp_element.empty())
        x = parse_ugl_text(exp_element, exp_n);
      else
        throw std::invalid_argument("expand-standard needs --element, --schur or --qimm");
      t.phase("build");
      const StdExpansion e = standard_capelli_expansion(x);
      t.phase("solve");
      if (exp_koszul)
        emit(realize_right_symmetrized(e, exp_n, exp_n), exp_c);
      else
        emit(e, exp_c);
    } else if (*kin) {
      require_n(kin_n);
      Timer t(kin_c.timing);
      const UglElement x = koszul_inverse(parse_mpoly_text(kin_poly, kin_n, kin_n));
      t.phase("compute");
      emit(x, kin_c);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#include "capelli/linsolve.hpp"

namespace capelli {

namespace {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

}  // namespace

void ExactColumnSolver::reduce(SparseVec& v, SparseVec& combo, const Rational& combo_sign) const {
  for (const Reduced& r : pivots_) {
    auto it = v.find(r.pivot);
    if (it == v.end()) continue;
    const Rational f = it->second;
    axpy(v, -f, r.vec);
    axpy(combo, combo_sign * f, r.combo);
  }
}

bool ExactColumnSolver::add_column(const SparseVec& column) {
  SparseVec v = column;
  SparseVec combo{{columns_, Rational(1)}};
  ++columns_;
  reduce(v, combo, Rational(-1));
  if (v.empty()) return false;
  const int pivot = v.begin()->first;
  const Rational inv = 1 / v.begin()->second;
  for (auto& [k, x] : v) x *= inv;
  for (auto& [k, x] : combo) x *= inv;
  pivots_.push_back(Reduced{pivot, std::move(v), std::move(combo)});
  return true;
}

std::optional<std::vector<Rational>> ExactColumnSolver::solve(const SparseVec& target) const {
  SparseVec v = target;
  SparseVec acc;
  reduce(v, acc, Rational(1));
  if (!v.empty()) return std::nullopt;
  std::vector<Rational> out(static_cast<std::size_t>(columns_));
  for (const auto& [k, x] : acc) out[static_cast<std::size_t>(k)] = x;
  return out;
}

int exact_rank(const std::vector<SparseVec>& columns) {
  ExactColumnSolver s;
  for (const auto& c : columns) s.add_column(c);
  return s.rank();
}

}  // namespace capelli

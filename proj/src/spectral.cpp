#include "kreg/spectral.hpp"

#include "kreg/error.hpp"

#include <numeric>
#include <sstream>

namespace kreg {

std::string to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::FiniteOrder: return "FINITE_ORDER";
    case GrowthClass::LinearGrowth: return "LINEAR_GROWTH";
    case GrowthClass::Expanding: return "EXPANDING";
  }
  return "?";
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("characteristic polynomial needs a square matrix");
  return IntPolynomial(characteristic_coefficients(m));
}

CyclotomicDecomposition cyclotomic_strip(const IntPolynomial& p) {
  if (!p.is_monic()) throw InvalidArgument("cyclotomic_strip requires a monic polynomial");
  CyclotomicDecomposition out;
  IntPolynomial rest = p;
  const IntPolynomial x = IntPolynomial::monomial(1);
  while (rest.degree() > 0 && rest.coefficient(0) == 0) {
    rest = *rest.exact_divide(x);
    ++out.zero_multiplicity;
  }
  for (std::uint64_t n : cyclotomic_indices_up_to_degree(rest.degree())) {
    const IntPolynomial& phi = cyclotomic(n);
    if (phi.degree() > rest.degree()) continue;
    unsigned mult = 0;
    while (auto q = rest.exact_divide(phi)) {
      rest = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.factors.push_back({n, mult});
  }
  out.remainder = std::move(rest);
  return out;
}

bool is_defective(const IntMatrix& m, std::uint64_t n) {
  const IntPolynomial& phi = cyclotomic(n);
  if (!char_poly(m).exact_divide(phi))
    throw InvalidArgument("Phi_" + std::to_string(n) + " does not divide the characteristic polynomial");
  const IntMatrix p = evaluate_at(phi, m);
  const IntMatrix p2 = p * p;
  return rank(p) != rank(p2);
}

PowerCycle find_power_cycle(const IntMatrix& m, const CyclotomicDecomposition& decomposition) {
  std::uint64_t period = 1;
  for (const CyclotomicFactor& f : decomposition.factors) period = std::lcm(period, f.index);
  std::uint64_t start = decomposition.zero_multiplicity;
  auto holds = [&](std::uint64_t i, std::uint64_t p) { return power(m, i + p) == power(m, i); };
  if (!holds(start, period)) throw Error("power cycle check failed; matrix is not of finite order");
  while (start > 0 && holds(start - 1, period)) --start;
  for (std::uint64_t p = 1; p < period; ++p)
    if (period % p == 0 && holds(start, p)) return {start, p};
  return {start, period};
}

namespace {

SpectralReport assemble(IntPolynomial poly, CyclotomicDecomposition dec) {
  SpectralReport report;
  report.charpoly = std::move(poly);
  report.nilpotent_order_a = dec.zero_multiplicity;
  report.cyclotomic_part = dec.factors;
  report.non_cyclotomic_part = dec.remainder;
  return report;
}

}  // namespace

SpectralReport classify(const IntMatrix& m) {
  IntPolynomial p = char_poly(m);
  CyclotomicDecomposition dec = cyclotomic_strip(p);
  SpectralReport report = assemble(p, dec);
  if (!dec.remainder.is_one()) {
    report.classification = GrowthClass::Expanding;
    return report;
  }
  for (const CyclotomicFactor& f : dec.factors) {
    if (f.multiplicity >= 2 && is_defective(m, f.index)) {
      report.classification = GrowthClass::LinearGrowth;
      report.defect_witness = f.index;
      return report;
    }
  }
  report.classification = GrowthClass::FiniteOrder;
  report.power_cycle = find_power_cycle(m, dec);
  return report;
}

SpectralReport classify_observed(const IntMatrix& m, const std::vector<IntRowVector>& lefts,
                                 const std::vector<IntColVector>& rights) {
  const Eigen::Index d = m.rows();
  const IntPolynomial p = char_poly(m);
  const CyclotomicDecomposition dec = cyclotomic_strip(p);

  // Each sequence t -> l q(M) M^t r satisfies the recurrence p, so it vanishes
  // identically once its first d terms do.
  auto annihilates = [&](const IntPolynomial& q) {
    const IntMatrix qm = evaluate_at(q, m);
    for (const IntRowVector& l : lefts) {
      IntRowVector u = l * qm;
      for (Eigen::Index t = 0; t < d; ++t) {
        for (const IntColVector& r : rights)
          if (u.dot(r) != 0) return false;
        u = (u * m).eval();
      }
    }
    return true;
  };

  unsigned zero_exp = dec.zero_multiplicity;
  std::vector<CyclotomicFactor> cyc = dec.factors;
  bool keep_remainder = !dec.remainder.is_one();
  const IntPolynomial x = IntPolynomial::monomial(1);
  auto build = [&] {
    IntPolynomial q = x.pow(zero_exp);
    for (const CyclotomicFactor& f : cyc) q = q * cyclotomic(f.index).pow(f.multiplicity);
    if (keep_remainder) q = q * dec.remainder;
    return q;
  };

  if (keep_remainder) {
    keep_remainder = false;
    if (!annihilates(build())) keep_remainder = true;
  }
  while (zero_exp > 0) {
    --zero_exp;
    if (!annihilates(build())) {
      ++zero_exp;
      break;
    }
  }
  for (CyclotomicFactor& f : cyc) {
    while (f.multiplicity > 0) {
      --f.multiplicity;
      if (!annihilates(build())) {
        ++f.multiplicity;
        break;
      }
    }
  }
  std::erase_if(cyc, [](const CyclotomicFactor& f) { return f.multiplicity == 0; });

  CyclotomicDecomposition minimal{zero_exp, cyc, keep_remainder ? dec.remainder : IntPolynomial::constant(1)};
  SpectralReport report = assemble(build(), minimal);
  if (keep_remainder) {
    report.classification = GrowthClass::Expanding;
    return report;
  }
  for (const CyclotomicFactor& f : cyc) {
    // In a minimal annihilator a repeated root means a Jordan block of size >= 2.
    if (f.multiplicity >= 2) {
      report.classification = GrowthClass::LinearGrowth;
      report.defect_witness = f.index;
      return report;
    }
  }
  report.classification = GrowthClass::FiniteOrder;
  return report;
}

std::string SpectralReport::to_string() const {
  std::ostringstream out;
  out << "charpoly: " << charpoly.to_string() << '\n';
  out << "zero root multiplicity: " << nilpotent_order_a << '\n';
  out << "cyclotomic factors:";
  if (cyclotomic_part.empty()) out << " none";
  for (const CyclotomicFactor& f : cyclotomic_part) out << " Phi_" << f.index << "^" << f.multiplicity;
  out << '\n';
  out << "non-cyclotomic part: " << non_cyclotomic_part.to_string() << '\n';
  out << "classification: " << kreg::to_string(classification) << '\n';
  if (defect_witness) out << "defective at: Phi_" << *defect_witness << '\n';
  if (power_cycle) out << "power cycle: M^" << power_cycle->start + power_cycle->period << " = M^" << power_cycle->start << '\n';
  return out.str();
}

}  // namespace kreg

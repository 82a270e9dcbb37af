#include "covforge/calibrate.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

namespace covforge::model {
namespace {

struct Degrees {
  unsigned x = 0, s0 = 0, s = 0, eps = 0;
};

Degrees degrees_of(const Exponents& e) {
  Degrees d;
  for (int i = 1; i <= 9; ++i) d.x += e[index(xvar(i))];
  d.s0 = e[index(Var::s0)];
  for (int j = 1; j <= 5; ++j) d.s += e[index(svar(j))];
  d.eps = e[index(Var::eps)];
  return d;
}

template <class Pred>
ScalarVote vote(const std::string& name, const std::vector<Poly>& block, const std::vector<Poly>& printed,
                const std::vector<Poly>& corrected, Pred in_block) {
  ScalarVote v{name, Cyc(0)};
  std::vector<std::pair<Cyc, int>> tally;
  for (std::size_t j = 0; j < block.size(); ++j) {
    std::vector<Exponents> monos;
    for (const auto& [e, c] : block[j].terms()) monos.push_back(e);
    for (const auto& [e, c] : printed[j].terms())
      if (in_block(e) && block[j].coeff(e).is_zero()) monos.push_back(e);
    for (const auto& e : monos) {
      const Cyc c = block[j].coeff(e);
      if (c.is_zero()) continue;
      const Cyc ratio = printed[j].coeff(e) / c;
      auto it = std::find_if(tally.begin(), tally.end(), [&](const auto& p) { return p.first == ratio; });
      if (it == tally.end()) {
        tally.emplace_back(ratio, 1);
      } else {
        ++it->second;
      }
      ++v.votes_total;
    }
  }
  std::stable_sort(tally.begin(), tally.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (!tally.empty()) {
    v.chosen = tally.front().first;
    v.votes_for = tally.front().second;
    v.unique = tally.size() == 1 || tally[0].second > tally[1].second;
  }
  v.exact_on_corrected = v.unique;
  for (std::size_t j = 0; j < block.size() && v.exact_on_corrected; ++j) {
    for (const auto& [e, c] : block[j].terms())
      if (corrected[j].coeff(e) != c * v.chosen) v.exact_on_corrected = false;
    for (const auto& [e, c] : corrected[j].terms())
      if (in_block(e) && block[j].coeff(e).is_zero()) v.exact_on_corrected = false;
  }
  return v;
}

Calibration run_calibration() {
  Calibration cal;

  for (ActionConvention conv : kAllConventions) {
    ConventionScore score{conv, 0, {}};
    for (Generator g : kGenerators) {
      const CMatrix computed = induced_action(generator(g), conv);
      const CMatrix printed = printed_action(g);
      for (std::size_t j = 0; j < kDim; ++j) {
        if (computed.row(j) == printed.row(j)) continue;
        ++score.mismatched_rows;
        if (score.first_mismatches.size() < 3)
          score.first_mismatches.push_back(std::string(generator_name(g)) + " row " + std::to_string(j + 1));
      }
    }
    if (score.mismatched_rows == 0) cal.matching_conventions.push_back(conv);
    cal.conventions.push_back(std::move(score));
  }

  const DeltaBlocks& b = delta_blocks();
  const auto printed = printed_equations(System::delta_expansion);
  const auto corrected = corrected_equations(System::delta_expansion);
  cal.votes.push_back(vote("psi6", b.b6, printed, corrected, [](const Exponents& e) {
    const auto d = degrees_of(e);
    return d.x == 2;
  }));
  cal.votes.push_back(vote("psi4", b.b4, printed, corrected, [](const Exponents& e) {
    const auto d = degrees_of(e);
    return d.x == 1 && d.s == 1;
  }));
  cal.votes.push_back(vote("psi2", b.b2, printed, corrected, [](const Exponents& e) {
    return degrees_of(e).eps == 1;
  }));
  cal.votes.push_back(vote("f4*f0", b.b0, printed, corrected, [](const Exponents& e) {
    const auto d = degrees_of(e);
    return d.s0 == 1 && d.eps == 0;
  }));

  cal.scalars_unique = true;
  for (const auto& v : cal.votes) cal.scalars_unique = cal.scalars_unique && v.unique && v.exact_on_corrected;
  // lambda0 enters without a transvectant, so its block must come out at 1.
  cal.scalars_unique = cal.scalars_unique && cal.votes[3].chosen == Cyc(1);
  for (std::size_t k = 0; k < 3; ++k)
    if (!cal.votes[k].chosen.is_rational()) cal.scalars_unique = false;
  if (cal.scalars_unique) cal.scalars = {cal.votes[0].chosen[0], cal.votes[1].chosen[0], cal.votes[2].chosen[0]};

  const auto computed = delta_system(cal.scalars);
  cal.printed_diffs = coefficient_diffs(printed, computed);
  cal.corrected_residual_terms = coefficient_diffs(corrected, computed).size();

  const auto ledger = errata_for(System::delta_expansion);
  std::vector<bool> used(ledger.size(), false);
  for (const auto& d : cal.printed_diffs) {
    bool found = false;
    for (std::size_t k = 0; k < ledger.size(); ++k) {
      const auto& e = ledger[k];
      if (e.equation != d.equation) continue;
      if (parse_poly(e.monomial) != parse_poly(d.monomial)) continue;
      if (parse_poly(e.printed).constant_term() != d.printed || parse_poly(e.corrected).constant_term() != d.computed)
        continue;
      used[k] = true;
      found = true;
    }
    if (!found)
      cal.ledger_missing.push_back("Q" + std::to_string(d.equation) + " " + d.monomial + ": printed " +
                                   d.printed.to_string() + ", computed " + d.computed.to_string());
  }
  for (std::size_t k = 0; k < ledger.size(); ++k)
    if (!used[k]) cal.ledger_unexplained.push_back(ledger[k].id);
  return cal;
}

}  // namespace

Lambda<Poly> standard_lambda() { return {Poly(1), Poly::var(Var::eps).scaled(Cyc(6)), Poly(1), Poly(6)}; }

std::vector<Poly> delta_coordinates(const Lambda<Poly>& lambda, const Vec15<Poly>& v,
                                    const TransvectantScalars& scalars) {
  const Forms<Poly> f = to_forms(v);
  const BinaryForm<Poly> d = delta(lambda, f.f8, f.f0, f.f4, scalars);
  return apply_exact(quartic_coordinate_map(), d.coeffs());
}

const DeltaBlocks& delta_blocks() {
  static const DeltaBlocks blocks = [] {
    const Forms<Poly> f = to_forms(symbolic_point());
    const auto coords = [](const BinaryForm<Poly>& g) { return apply_exact(quartic_coordinate_map(), g.coeffs()); };
    DeltaBlocks b;
    b.b6 = coords(transvectant_classical(f.f8, f.f8, 6).scaled(Poly(6)));
    b.b4 = coords(transvectant_classical(f.f8, f.f4, 4));
    b.b2 = coords(transvectant_classical(f.f4, f.f4, 2).scaled(Poly::var(Var::eps).scaled(Cyc(6))));
    b.b0 = coords(f.f4.scaled(f.f0));
    return b;
  }();
  return blocks;
}

std::vector<Poly> delta_system(const TransvectantScalars& s) {
  const DeltaBlocks& b = delta_blocks();
  std::vector<Poly> out;
  for (std::size_t j = 0; j < 5; ++j)
    out.push_back(b.b6[j].scaled(Cyc(s.s6)) + b.b4[j].scaled(Cyc(s.s4)) + b.b2[j].scaled(Cyc(s.s2)) + b.b0[j]);
  return out;
}

std::vector<CoefficientDiff> coefficient_diffs(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("coefficient_diffs: system size mismatch");
  std::vector<CoefficientDiff> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Poly d = a[j] - b[j];
    for (const auto& [e, c] : d.terms())
      out.push_back({static_cast<int>(j) + 1, monomial_string(e), a[j].coeff(e), b[j].coeff(e)});
  }
  return out;
}

std::size_t equivariance_residual(const std::vector<Poly>& system, const CMatrix& g) {
  if (system.size() != 5 || g.rows() != kDim || g.cols() != kDim)
    throw std::invalid_argument("equivariance_residual: expected five equations and a 15x15 action");
  const auto& vars = coordinate_vars();
  std::map<Var, Poly> image;
  for (std::size_t k = 0; k < kDim; ++k) {
    Poly p;
    for (std::size_t j = 0; j < kDim; ++j)
      if (!g(k, j).is_zero()) p += Poly::var(vars[j]).scaled(g(k, j));
    image.emplace(vars[k], std::move(p));
  }
  std::size_t residual = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    Poly lhs = system[i].substitute(image);
    Poly rhs;
    for (std::size_t j = 0; j < 5; ++j)
      if (!g(si(static_cast<int>(i) + 1), si(static_cast<int>(j) + 1)).is_zero())
        rhs += system[j].scaled(g(si(static_cast<int>(i) + 1), si(static_cast<int>(j) + 1)));
    residual += (lhs - rhs).size();
  }
  return residual;
}

bool Calibration::ok() const {
  return matching_conventions.size() == 1 && scalars_unique && ledger_missing.empty() &&
         ledger_unexplained.empty() && corrected_residual_terms == 0;
}

const Calibration& calibrate() {
  static const Calibration c = [] {
    const auto start = std::chrono::steady_clock::now();
    Calibration out = run_calibration();
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  }();
  return c;
}

}  // namespace covforge::model

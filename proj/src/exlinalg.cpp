#include "covforge/exlinalg.hpp"

namespace covforge {

Matrix<Poly> jacobian(const std::vector<Poly>& system, const std::vector<Var>& vars) {
  Matrix<Poly> j(system.size(), vars.size());
  for (std::size_t i = 0; i < system.size(); ++i)
    for (std::size_t k = 0; k < vars.size(); ++k) j(i, k) = system[i].diff(vars[k]);
  return j;
}

CMatrix jacobian_at(const std::vector<Poly>& system, const std::vector<Var>& vars,
                    const std::map<Var, Cyc>& point) {
  std::map<Var, Poly> bind;
  for (const auto& [v, c] : point) bind.emplace(v, Poly(c));
  const Matrix<Poly> j = jacobian(system, vars);
  CMatrix out(j.rows(), j.cols());
  for (std::size_t i = 0; i < j.rows(); ++i)
    for (std::size_t k = 0; k < j.cols(); ++k) {
      const Poly e = j(i, k).substitute(bind);
      if (!e.is_constant())
        throw std::invalid_argument("jacobian_at: entry (" + std::to_string(i) + ", " + std::to_string(k) +
                                    ") still depends on unbound variables: " + e.to_string());
      out(i, k) = e.constant_term();
    }
  return out;
}

JacobianRank jacobian_rank(const std::vector<Poly>& system, const std::vector<Var>& vars,
                           const std::map<Var, Cyc>& point) {
  const CMatrix j = jacobian_at(system, vars, point);
  return {j.rank(), j.kernel()};
}

}  // namespace covforge

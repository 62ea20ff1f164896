#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "legsym/legendrian.hpp"

namespace legsym {

/// A theorem hypothesis fails on the input (caller error, CLI exit 2).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal consistency check fails despite valid-looking hypotheses
/// (tolerance or conditioning problem, CLI exit 1).
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// J is the operator with Lambda(J x, y) = B(x, y), B = -Killing form.
struct JOperator {
  MatrixXd j;
  MatrixXd b;
};

inline JOperator compute_J(const LegendrianSymmetricAlgebra& l,
                           double tol = kDefaultTol) {
  const ResidualReport val = validate_legendrian(l, tol);
  if (!val.all_pass()) {
    std::string names;
    for (const auto& c : val.checks)
      if (!c.pass) names += (names.empty() ? "" : ", ") + c.name;
    throw HypothesisError("compute_J: Legendrian form invalid (" + names +
                          ")");
  }
  const MatrixXd b = -killing_form(l.sym.algebra).matrix;
  Eigen::JacobiSVD<MatrixXd> svd(b);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= kRankRelTol * sv(0))
    throw HypothesisError(
        "compute_J: Killing form is degenerate, so the canonical "
        "decomposition hypotheses fail; split off the euclidean factor "
        "first");
  return {l.lambda.partialPivLu().solve(b), b};
}

/// Residuals of the characteristic J identities.
inline ResidualReport verify_J_properties(const LegendrianSymmetricAlgebra& l,
                                          const JOperator& jop,
                                          double tol = kDefaultTol) {
  const int n = l.dim();
  const MatrixXd& j = jop.j;
  ResidualReport report;
  double comm = 0.0;
  for (int i = 0; i < n; ++i) {
    const MatrixXd ad = l.sym.algebra.ad_basis(i);
    comm = std::max(comm, max_abs(j * ad - ad * j));
  }
  report.add("commutes_with_ad", comm, tol);
  report.add("anticommutes_with_s", max_abs(j * l.sym.s + l.sym.s * j), tol);
  report.add("lambda_self_adjoint",
             max_abs(l.lambda * j - j.transpose() * l.lambda), tol);

  const MatrixXd jg = j * l.sym.g.basis;
  report.add("maps_g_to_p",
             max_abs(0.5 * (MatrixXd::Identity(n, n) + l.sym.s) * jg), tol);
  Eigen::JacobiSVD<MatrixXd> svd(jg);
  const auto& sv = svd.singularValues();
  const double rank_margin = sv.size() == 0 || sv(0) == 0.0
                                 ? 0.0
                                 : sv(sv.size() - 1) / sv(0);
  report.add_margin("g_to_p_rank", rank_margin, kRankRelTol, tol);

  const MatrixXd jsq = j * j;
  const MatrixXd skew = jsq.transpose() * jop.b - jop.b * jsq;
  report.add("jsq_b_self_adjoint_on_g",
             max_abs(l.sym.g.basis.transpose() * skew * l.sym.g.basis), tol);
  return report;
}

/// Eigenvalue clusters of J^2 restricted to g, in the B inner product.
struct EigensplitResult {
  std::vector<double> eigenvalues;  // cluster means, ascending
  std::vector<MatrixXd> g_bases;    // B-orthonormal columns per cluster
  std::vector<double> raw_eigenvalues;
  double min_cluster_gap = std::numeric_limits<double>::infinity();
  bool gap_warning = false;
};

inline EigensplitResult eigensplit_Jsq(const LegendrianSymmetricAlgebra& l,
                                       const JOperator& jop,
                                       double rel_gap = kClusterRelGap) {
  const MatrixXd& g = l.sym.g.basis;
  const MatrixXd bg = g.transpose() * jop.b * g;
  MatrixXd a = g.transpose() * jop.b * jop.j * jop.j * g;
  a = 0.5 * (a + a.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> es(a, bg);
  if (es.info() != Eigen::Success)
    throw CheckError("eigensplit_Jsq: eigensolver failed");
  const VectorXd ev = es.eigenvalues();
  const MatrixXd vec = es.eigenvectors();  // B_g-orthonormal columns

  EigensplitResult out;
  const int m = static_cast<int>(ev.size());
  out.raw_eigenvalues.assign(ev.data(), ev.data() + m);
  const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
  const double gap = rel_gap * scale;
  int begin = 0;
  for (int i = 1; i <= m; ++i) {
    if (i == m || ev(i) - ev(i - 1) > gap) {
      out.eigenvalues.push_back(ev.segment(begin, i - begin).mean());
      out.g_bases.push_back(g * vec.middleCols(begin, i - begin));
      if (i < m)
        out.min_cluster_gap = std::min(out.min_cluster_gap, ev(i) - ev(i - 1));
      begin = i;
    }
  }
  // Flag clusterings that sit near the decision threshold.
  out.gap_warning = out.min_cluster_gap < 10.0 * gap;
  return out;
}

/// Euclidean-orthonormal bases of the ideal blocks h_k = g_k + J g_k and the
/// projectors of the direct-sum decomposition they span (plus an optional
/// extra leading block).
inline std::vector<MatrixXd> block_projectors(
    const std::vector<MatrixXd>& blocks) {
  Eigen::Index n = 0, total = 0;
  for (const auto& w : blocks) {
    n = w.rows();
    total += w.cols();
  }
  if (total != n)
    throw CheckError("block_projectors: blocks do not span the space");
  MatrixXd f(n, n);
  Eigen::Index at = 0;
  for (const auto& w : blocks) {
    f.middleCols(at, w.cols()) = w;
    at += w.cols();
  }
  if (condition_number(f) > 1e8)
    throw CheckError("block_projectors: block basis is ill-conditioned");
  const MatrixXd f_inv = f.inverse();
  std::vector<MatrixXd> pi;
  at = 0;
  for (const auto& w : blocks) {
    pi.push_back(f.middleCols(at, w.cols()) * f_inv.middleRows(at, w.cols()));
    at += w.cols();
  }
  return pi;
}

inline double ideal_closure_residual(const LieAlgebra& l, const MatrixXd& pi,
                                     const MatrixXd& basis) {
  const int n = l.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < basis.cols(); ++a) {
      const VectorXd br = l.bracket(VectorXd::Unit(n, i), basis.col(a));
      worst = std::max(worst, max_abs(br - pi * br));
    }
  return worst;
}

struct NormalizationResult {
  LegendrianSymmetricAlgebra algebra;
  /// Factor applied to J per cluster, 1/sqrt|eigenvalue|.
  std::vector<double> factors;
};

/// Rescales Lambda on each ideal block so the recomputed J^2 has eigenvalues
/// in {+1, -1}; idempotent once the eigenvalues already are.
inline NormalizationResult normalize_scaling(
    const LegendrianSymmetricAlgebra& l, const JOperator& jop,
    const EigensplitResult& split, double tol = kDefaultTol) {
  const int n = l.dim();
  std::vector<MatrixXd> blocks;
  for (const auto& gb : split.g_bases) {
    MatrixXd w(n, 2 * gb.cols());
    w << gb, jop.j * gb;
    blocks.push_back(orthonormal_range(w));
    if (blocks.back().cols() != w.cols())
      throw CheckError("normalize_scaling: g_k + J g_k is degenerate");
  }
  const std::vector<MatrixXd> pi = block_projectors(blocks);

  MatrixXd scale = MatrixXd::Zero(n, n);
  NormalizationResult out{{l.sym, l.lambda, l.inner}, {}};
  for (size_t k = 0; k < blocks.size(); ++k) {
    const double closure =
        ideal_closure_residual(l.sym.algebra, pi[k], blocks[k]);
    if (closure >= std::max(tol, 1e-8))
      throw CheckError(
          "normalize_scaling: eigenvalue-cluster subspace is not an ideal "
          "(residual " +
          std::to_string(closure) + ")");
    const double ev = std::abs(split.eigenvalues[k]);
    if (ev <= kRankRelTol)
      throw CheckError("normalize_scaling: cluster eigenvalue is zero");
    // Lambda picks up sqrt|ev| per block, so J shrinks by 1/sqrt|ev|.
    scale += std::pow(ev, 0.25) * pi[k];
    out.factors.push_back(1.0 / std::sqrt(ev));
  }
  out.algebra.lambda = scale.transpose() * l.lambda * scale;
  return out;
}

enum class ComponentType { Euclidean, Compact, Noncompact };

inline const char* component_tag(ComponentType t) {
  switch (t) {
    case ComponentType::Euclidean: return "0";
    case ComponentType::Compact: return "+";
    default: return "-";
  }
}

/// One canonical summand with its certified model isomorphism.
struct Component {
  ComponentType type = ComponentType::Compact;
  Subspace g_part, p_part, h_part;
  LinearOperator iso_map;  // ambient coordinates -> canonical model
  double iso_residual = 0.0;
  int g_dim = 0;
};

/// The six eigenspace pieces of the normalized algebra (euclidean ones empty
/// here; the full pipeline supplies them from the structural split).
struct ComponentSplit {
  MatrixXd g_plus, g_minus, p_plus, p_minus;  // B-orthonormal g, p = J g
  ResidualReport commutation;
};

namespace detail {

inline double cross_bracket_residual(const LieAlgebra& l, const MatrixXd& a,
                                     const MatrixXd& b) {
  double worst = 0.0;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      worst = std::max(worst, max_abs(l.bracket(a.col(i), b.col(j))));
  return worst;
}

inline double bracket_containment_residual(const LieAlgebra& l,
                                           const MatrixXd& a,
                                           const MatrixXd& target) {
  const MatrixXd q = orthonormal_range(target);
  const MatrixXd proj = MatrixXd::Identity(q.rows(), q.rows()) -
                        q * q.transpose();
  double worst = 0.0;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      worst = std::max(worst, max_abs(proj * l.bracket(a.col(i), a.col(j))));
  return worst;
}

}  // namespace detail

/// Splits the normalized algebra into the +1 and -1 parts of J^2 and checks
/// the bracket relations between them.
inline ComponentSplit extract_components(const LegendrianSymmetricAlgebra& l,
                                         const JOperator& jop,
                                         double tol = kDefaultTol) {
  const EigensplitResult split = eigensplit_Jsq(l, jop);
  const int n = l.dim();
  MatrixXd gp(n, 0), gm(n, 0);
  for (size_t k = 0; k < split.eigenvalues.size(); ++k) {
    const double ev = split.eigenvalues[k];
    if (std::abs(ev - 1.0) > 0.5 && std::abs(ev + 1.0) > 0.5)
      throw CheckError(
          "extract_components: J^2 eigenvalue is not +1 or -1; run "
          "normalize_scaling first (got " +
          std::to_string(ev) + ")");
    MatrixXd& dst = ev > 0.0 ? gp : gm;
    MatrixXd next(n, dst.cols() + split.g_bases[k].cols());
    next << dst, split.g_bases[k];
    dst = next;
  }
  ComponentSplit out{gp, gm, jop.j * gp, jop.j * gm, {}};
  const LieAlgebra& h = l.sym.algebra;
  out.commutation.add("bracket_g_plus_g_minus",
                      detail::cross_bracket_residual(h, gp, gm), tol);
  out.commutation.add("bracket_p_plus_p_minus",
                      detail::cross_bracket_residual(h, out.p_plus,
                                                     out.p_minus), tol);
  out.commutation.add(
      "bracket_p_plus_in_g_plus",
      detail::bracket_containment_residual(h, out.p_plus, gp), tol);
  out.commutation.add(
      "bracket_p_minus_in_g_minus",
      detail::bracket_containment_residual(h, out.p_minus, gm), tol);
  return out;
}

/// Structure constants of the subalgebra spanned by B-orthonormal columns u.
inline LieAlgebra restrict_algebra(const LieAlgebra& l, const MatrixXd& u,
                                   const MatrixXd& b) {
  const int m = static_cast<int>(u.cols());
  std::vector<MatrixXd> c(m, MatrixXd::Zero(m, m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const VectorXd coeff =
          u.transpose() * b * l.bracket(u.col(i), u.col(j));
      for (int k = 0; k < m; ++k) {
        c[k](i, j) = coeff(k);
        c[k](j, i) = -coeff(k);
      }
    }
  return LieAlgebra::from_structure(std::move(c));
}

/// Certifies a linear map as an isomorphism onto a canonical model: bracket
/// preservation, s-intertwining, and Lambda matching on the component basis.
inline double certify_isomorphism(const LegendrianSymmetricAlgebra& src,
                                  const LegendrianSymmetricAlgebra& model,
                                  const MatrixXd& t, const MatrixXd& h_basis) {
  double worst = 0.0;
  const int cols = static_cast<int>(h_basis.cols());
  for (int i = 0; i < cols; ++i)
    for (int j = i + 1; j < cols; ++j) {
      const VectorXd lhs =
          t * src.sym.algebra.bracket(h_basis.col(i), h_basis.col(j));
      const VectorXd rhs =
          model.sym.algebra.bracket(t * h_basis.col(i), t * h_basis.col(j));
      worst = std::max(worst, max_abs(lhs - rhs));
    }
  worst = std::max(worst,
                   max_abs((t * src.sym.s - model.sym.s * t) * h_basis));
  const MatrixXd th = t * h_basis;
  worst = std::max(worst, max_abs(th.transpose() * model.lambda * th -
                                  h_basis.transpose() * src.lambda * h_basis));
  return worst;
}

/// Component isomorphism for the compact (+) and noncompact (-) cases over a
/// normalized algebra: x = xi + J eta maps to (xi + eta, xi - eta) in g x g,
/// or to xi + i eta in the complexification.
inline Component build_sign_component(const LegendrianSymmetricAlgebra& l,
                                      const JOperator& jop,
                                      const MatrixXd& g_basis, bool plus) {
  const int n = l.dim();
  const MatrixXd u = g_basis;  // B-orthonormal
  const MatrixXd ju = jop.j * u;
  MatrixXd w(n, 2 * u.cols());
  w << u, ju;

  const LieAlgebra g_rec = restrict_algebra(l.sym.algebra, u, jop.b);
  const MatrixXd id = MatrixXd::Identity(u.cols(), u.cols());
  const MatrixXd proj_g = 0.5 * (MatrixXd::Identity(n, n) + l.sym.s);
  const MatrixXd proj_p = 0.5 * (MatrixXd::Identity(n, n) - l.sym.s);
  const MatrixXd ub = u.transpose() * jop.b;

  LegendrianSymmetricAlgebra model =
      plus ? build_compact(g_rec, id) : build_noncompact(g_rec, id);
  MatrixXd t(2 * u.cols(), n);
  if (plus) {
    // eta = J w since J^2 = +1 on this block.
    const MatrixXd a = ub * proj_g;
    const MatrixXd b = ub * jop.j * proj_p;
    t << a + b, a - b;
  } else {
    // eta = -J w since J^2 = -1 on this block.
    t << ub * proj_g, -ub * jop.j * proj_p;
  }

  Component out;
  out.type = plus ? ComponentType::Compact : ComponentType::Noncompact;
  out.g_part = Subspace::from_span(u);
  out.p_part = Subspace::from_span(ju);
  out.h_part = Subspace::from_span(w);
  out.iso_map = {t};
  out.iso_residual = certify_isomorphism(l, model, t, w);
  out.g_dim = static_cast<int>(u.cols());
  return out;
}

/// Component isomorphism for the euclidean (0) case: (xi, v) maps to
/// (xi, Lambda(v, .)) in g x g*.
inline Component build_euclidean_component(const LegendrianSymmetricAlgebra& l,
                                           const MatrixXd& b,
                                           const MatrixXd& g0,
                                           const MatrixXd& p0) {
  const int n = l.dim();
  const MatrixXd u = b_orthonormalize(g0, b);
  const LieAlgebra g_rec = restrict_algebra(l.sym.algebra, u, b);
  LegendrianSymmetricAlgebra model = build_euclidean(g_rec);

  const MatrixXd proj_g = 0.5 * (MatrixXd::Identity(n, n) + l.sym.s);
  const MatrixXd proj_p = 0.5 * (MatrixXd::Identity(n, n) - l.sym.s);
  MatrixXd t(2 * u.cols(), n);
  t << u.transpose() * b * proj_g, u.transpose() * l.lambda * proj_p;

  MatrixXd w(n, u.cols() + p0.cols());
  w << u, p0;

  Component out;
  out.type = ComponentType::Euclidean;
  out.g_part = Subspace::from_span(u);
  out.p_part = Subspace::from_span(p0);
  out.h_part = Subspace::from_span(w);
  out.iso_map = {t};
  out.iso_residual = certify_isomorphism(l, model, t, w);
  out.g_dim = static_cast<int>(u.cols());
  return out;
}

struct DecompositionResult {
  std::vector<Component> components;  // ordered euclidean, compact, noncompact
  MatrixXd rescaled_lambda;
  std::vector<double> rescale_factors;
  std::vector<double> cluster_eigenvalues;
  ResidualReport report;
};

namespace detail {

/// Structural euclidean part: p0 = ker B, h0 its Lambda-complement inside the
/// centralizer construction, h1 the derived algebra of the centralizer.
struct StructuralSplit {
  MatrixXd p0, g0, h0, h1;  // orthonormal columns, ambient coordinates
};

inline StructuralSplit split_euclidean_part(
    const LegendrianSymmetricAlgebra& l, const MatrixXd& b,
    ResidualReport& report, double tol) {
  const int n = l.dim();
  StructuralSplit out;
  out.p0 = null_space(b);
  const int m = static_cast<int>(out.p0.cols());
  if (m == 0) {
    out.h1 = MatrixXd::Identity(n, n);
    out.g0 = out.h0 = MatrixXd::Zero(n, 0);
    return out;
  }
  const LieAlgebra& h = l.sym.algebra;
  report.add("euclidean_p0_in_p",
             max_abs(0.5 * (MatrixXd::Identity(n, n) + l.sym.s) * out.p0),
             tol);
  report.add("euclidean_p0_abelian",
             cross_bracket_residual(h, out.p0, out.p0), tol);

  // Centralizer of p0.
  MatrixXd stacked(n * m, n);
  for (int a = 0; a < m; ++a) {
    const MatrixXd ad_minus = -h.ad(out.p0.col(a));  // x -> [x, v_a]
    stacked.middleRows(a * n, n) = ad_minus;
  }
  const MatrixXd z = null_space(stacked);

  // Derived algebra of the centralizer is the nondegenerate complement.
  std::vector<VectorXd> brackets;
  MatrixXd span(n, z.cols() * z.cols());
  int count = 0;
  for (int i = 0; i < z.cols(); ++i)
    for (int j = i + 1; j < z.cols(); ++j)
      span.col(count++) = h.bracket(z.col(i), z.col(j));
  out.h1 = orthonormal_range(span.leftCols(count));
  if (out.h1.cols() != n - 2 * m)
    throw CheckError(
        "decompose: structural euclidean split has inconsistent dimensions");

  out.h0 = null_space(out.h1.transpose() * l.lambda);
  if (out.h0.cols() != 2 * m)
    throw CheckError(
        "decompose: euclidean block is not a Lambda-complement of rank 2m");
  out.g0 = orthonormal_range(
      0.5 * (MatrixXd::Identity(n, n) + l.sym.s) * out.h0);
  if (out.g0.cols() != m)
    throw CheckError("decompose: euclidean block has no g x g* splitting");
  report.add("euclidean_cross_bracket",
             cross_bracket_residual(h, out.h0, out.h1), tol);
  return out;
}

}  // namespace detail

/// Restriction of the whole Legendrian structure to an ideal with orthonormal
/// basis w (columns).
inline LegendrianSymmetricAlgebra restrict_legendrian(
    const LegendrianSymmetricAlgebra& l, const MatrixXd& w, double tol) {
  const int m = static_cast<int>(w.cols());
  const LieAlgebra& h = l.sym.algebra;
  std::vector<MatrixXd> c(m, MatrixXd::Zero(m, m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const VectorXd coeff = w.transpose() * h.bracket(w.col(i), w.col(j));
      for (int k = 0; k < m; ++k) {
        c[k](i, j) = coeff(k);
        c[k](j, i) = -coeff(k);
      }
    }
  if (max_abs((MatrixXd::Identity(l.dim(), l.dim()) - w * w.transpose()) *
              (l.sym.s * w)) >= tol)
    throw CheckError("restrict_legendrian: s does not preserve the ideal");
  LieAlgebra hr = LieAlgebra::from_structure(std::move(c));
  MatrixXd sr = w.transpose() * l.sym.s * w;
  MatrixXd lr = w.transpose() * l.lambda * w;
  return {SymmetricLieAlgebra::make(std::move(hr), std::move(sr)),
          std::move(lr),
          {}};
}

/// Full canonical decomposition pipeline with certified isomorphisms.
inline DecompositionResult decompose(const LegendrianSymmetricAlgebra& l,
                                     double tol = kDefaultTol) {
  DecompositionResult out;
  const int n = l.dim();

  // Hypotheses of the decomposition theorem.
  {
    const ResidualReport val = validate_legendrian(l, tol);
    std::string failures;
    if (!val.all_pass()) failures = "Legendrian form invalid";
    const EffectivenessResult eff = is_effective(l.sym);
    if (!eff.ok)
      failures += std::string(failures.empty() ? "" : "; ") +
                  "pair is not effective (g meets the center, dim " +
                  std::to_string(eff.intersection_dim) + ")";
    const OrthogonalityResult orth = is_orthogonal(l.sym);
    if (!orth.ok)
      failures += std::string(failures.empty() ? "" : "; ") +
                  "pair is not orthogonal (-kappa on g has min eigenvalue " +
                  std::to_string(orth.min_eigenvalue) + ")";
    if (!failures.empty()) throw HypothesisError("decompose: " + failures);
    out.report.merge("lambda_", val);
    out.report.merge("sym_", check_bracket_relations(l.sym, tol));
  }

  const MatrixXd b_full = -killing_form(l.sym.algebra).matrix;
  const detail::StructuralSplit split =
      detail::split_euclidean_part(l, b_full, out.report, tol);
  const int m0 = static_cast<int>(split.p0.cols());

  if (m0 > 0) {
    Component c0 =
        build_euclidean_component(l, b_full, split.g0, split.p0);
    out.report.add("iso_euclidean", c0.iso_residual, std::max(tol, 1e-8));
    out.components.push_back(std::move(c0));
    out.rescale_factors.push_back(1.0);
  }

  MatrixXd rescaled = l.lambda;
  if (split.h1.cols() > 0) {
    const LegendrianSymmetricAlgebra lr =
        m0 > 0 ? restrict_legendrian(l, split.h1, std::max(tol, 1e-8)) : l;
    const JOperator jop = compute_J(lr, std::max(tol, 1e-7));
    out.report.merge("j_", verify_J_properties(lr, jop, tol));

    const EigensplitResult eig = eigensplit_Jsq(lr, jop);
    out.cluster_eigenvalues = eig.eigenvalues;
    // A single cluster has no gap; keep the metadata serializable.
    if (std::isfinite(eig.min_cluster_gap))
      out.report.metadata["eigensplit_min_gap"] = eig.min_cluster_gap;
    out.report.metadata["eigensplit_gap_warning"] =
        eig.gap_warning ? 1.0 : 0.0;

    const NormalizationResult norm = normalize_scaling(lr, jop, eig, tol);
    for (double f : norm.factors) out.rescale_factors.push_back(f);
    const JOperator jop_n{
        norm.algebra.lambda.partialPivLu().solve(jop.b), jop.b};

    const ComponentSplit parts = extract_components(norm.algebra, jop_n, tol);
    out.report.merge("components_", parts.commutation);

    auto lift = [&](Component c) {
      if (m0 > 0) {
        // Back to ambient coordinates of the original algebra.
        c.g_part = Subspace::from_span(split.h1 * c.g_part.basis);
        c.p_part = Subspace::from_span(split.h1 * c.p_part.basis);
        c.h_part = Subspace::from_span(split.h1 * c.h_part.basis);
        c.iso_map.matrix = c.iso_map.matrix * split.h1.transpose();
      }
      return c;
    };
    if (parts.g_plus.cols() > 0) {
      Component cp = lift(
          build_sign_component(norm.algebra, jop_n, parts.g_plus, true));
      out.report.add("iso_compact", cp.iso_residual, std::max(tol, 1e-8));
      out.components.push_back(std::move(cp));
    }
    if (parts.g_minus.cols() > 0) {
      Component cm = lift(
          build_sign_component(norm.algebra, jop_n, parts.g_minus, false));
      out.report.add("iso_noncompact", cm.iso_residual, std::max(tol, 1e-8));
      out.components.push_back(std::move(cm));
    }

    // Ambient rescaled Lambda via the block projectors of the full split.
    std::vector<MatrixXd> blocks;
    if (m0 > 0) blocks.push_back(split.h0);
    std::vector<double> powers;
    if (m0 > 0) powers.push_back(1.0);
    for (size_t k = 0; k < eig.eigenvalues.size(); ++k) {
      MatrixXd w(lr.dim(), 2 * eig.g_bases[k].cols());
      w << eig.g_bases[k], jop.j * eig.g_bases[k];
      blocks.push_back(m0 > 0 ? MatrixXd(split.h1 * orthonormal_range(w))
                              : orthonormal_range(w));
      powers.push_back(std::pow(std::abs(eig.eigenvalues[k]), 0.25));
    }
    const std::vector<MatrixXd> pi = block_projectors(blocks);
    MatrixXd scale = MatrixXd::Zero(n, n);
    for (size_t k = 0; k < pi.size(); ++k) scale += powers[k] * pi[k];
    rescaled = scale.transpose() * l.lambda * scale;
  }
  out.rescaled_lambda = rescaled;

  // Cross-component brackets vanish, components fill the space.
  int total = 0;
  for (const auto& c : out.components) total += c.h_part.dim();
  if (total != n)
    throw CheckError("decompose: component dimensions do not sum to dim h");
  double cross = 0.0;
  for (size_t a = 0; a < out.components.size(); ++a)
    for (size_t b = a + 1; b < out.components.size(); ++b)
      cross = std::max(
          cross, detail::cross_bracket_residual(
                     l.sym.algebra, out.components[a].h_part.basis,
                     out.components[b].h_part.basis));
  out.report.add("cross_component_brackets", cross, tol);
  for (const auto& c : out.components)
    out.report.metadata[std::string("dim_") + component_tag(c.type)] =
        c.h_part.dim();
  return out;
}

} // namespace legsym

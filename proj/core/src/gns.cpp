#include "stablerep/gns.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

namespace stablerep {

namespace {

using Eigen::Index;

struct HermitianSplit {
  Eigen::VectorXd values;
  CMatrix vectors;
};

HermitianSplit eigh(const CMatrix& h) {
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian eigendecomposition failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

CMatrix unvec(const CVector& v, Index d) { return Eigen::Map<const CMatrix>(v.data(), d, d); }

CVector vec(const CMatrix& m) { return Eigen::Map<const CVector>(m.data(), m.size()); }

// out += s * (p kron q)
void add_kron(CMatrix& out, const CMatrix& p, const CMatrix& q, std::complex<double> s) {
  const Index dq = q.rows();
  for (Index j = 0; j < p.cols(); ++j)
    for (Index i = 0; i < p.rows(); ++i) {
      const auto c = s * p(i, j);
      if (c == std::complex<double>{}) continue;
      out.block(i * dq, j * dq, dq, dq) += c * q;
    }
}

bool is_hermitian(const CMatrix& a) { return (a - a.adjoint()).norm() <= 1e-13 * std::max(1.0, a.norm()); }

CMatrix matrix_power(const HermitianSplit& e, double power) {
  const Eigen::VectorXd p = e.values.array().pow(power);
  return e.vectors * p.asDiagonal() * e.vectors.adjoint();
}

}  // namespace

std::vector<CMatrix> GnsTriple::generators() const {
  std::vector<CMatrix> out;
  for (int i = 1; i < level; ++i) out.push_back((*this)(Permutation::transposition(i, i + 1)));
  return out;
}

GnsTriple gns(const StateFunction& f, double tol) {
  const int k = f.level();
  if (k > kMaxGnsLevel)
    throw std::invalid_argument("gns: level " + std::to_string(k) + " exceeds " + std::to_string(kMaxGnsLevel));
  const auto& group = SymmetricGroup::of(k);
  const std::size_t order = group.order();
  const std::size_t e = group.index_of(Permutation{});
  if (std::abs(f.at(e) - 1.0) > tol) throw std::invalid_argument("gns: f(e) must be 1");

  const auto n = static_cast<Index>(order);
  CMatrix gram(n, n);
  for (std::size_t g = 0; g < order; ++g) {
    const Permutation ginv = group.element(g).inverse();
    for (std::size_t h = 0; h < order; ++h)
      gram(static_cast<Index>(g), static_cast<Index>(h)) = f(ginv * group.element(h));
  }
  const HermitianSplit es = eigh(gram);
  if (es.values[0] < -tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "gns: Gram matrix has eigenvalue " << es.values[0];
    throw NotPositiveError(msg.str(), es.values[0]);
  }
  std::vector<Index> keep;
  for (Index i = 0; i < n; ++i)
    if (es.values[i] > tol) keep.push_back(i);
  const auto r = static_cast<Index>(keep.size());
  CMatrix v(r, n), vplus(n, r);  // v = L^{1/2} U*, vplus = U L^{-1/2}
  for (Index a = 0; a < r; ++a) {
    const double s = std::sqrt(es.values[keep[a]]);
    v.row(a) = s * es.vectors.col(keep[a]).adjoint();
    vplus.col(a) = es.vectors.col(keep[a]) / s;
  }

  GnsTriple t;
  t.level = k;
  t.xi = v.col(static_cast<Index>(e));
  t.pi.reserve(order);
  CMatrix moved(r, n);
  for (std::size_t x = 0; x < order; ++x) {
    // column h of v P_x is column x*h of v
    for (std::size_t h = 0; h < order; ++h)
      moved.col(static_cast<Index>(h)) = v.col(static_cast<Index>(group.index_of(group.element(x) * group.element(h))));
    t.pi.push_back(moved * vplus);
  }
  return t;
}

OperatorBasis span_basis(const std::vector<CMatrix>& mats, double tol) {
  if (mats.empty()) return {};
  const Index d = mats.front().rows();
  CMatrix stacked(d * d, static_cast<Index>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i) stacked.col(static_cast<Index>(i)) = vec(mats[i]);
  Eigen::BDCSVD<CMatrix> svd(stacked, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  OperatorBasis out;
  if (s.size() == 0 || s[0] <= tol) return out;
  for (Index i = 0; i < s.size(); ++i)
    if (s[i] > tol * std::max(1.0, s[0])) out.push_back(unvec(svd.matrixU().col(i), d));
  return out;
}

OperatorBasis commutant(const std::vector<CMatrix>& gens, double tol) {
  if (gens.empty()) throw std::invalid_argument("commutant: need at least one generator");
  const Index d = gens.front().rows();
  const CMatrix id = CMatrix::Identity(d, d);
  CMatrix normal = CMatrix::Zero(d * d, d * d);
  auto add = [&](const CMatrix& a) {
    // M = I (x) A - A^T (x) I;  M* M accumulated without forming M
    add_kron(normal, id, a.adjoint() * a, 1.0);
    add_kron(normal, a.transpose(), a.adjoint(), -1.0);
    add_kron(normal, a.conjugate(), a, -1.0);
    add_kron(normal, a.conjugate() * a.transpose(), id, 1.0);
  };
  for (const auto& a : gens) {
    add(a);
    if (!is_hermitian(a)) add(a.adjoint());
  }
  const HermitianSplit es = eigh(normal);
  const double scale = std::max(1.0, es.values[es.values.size() - 1]);
  OperatorBasis out;
  for (Index i = 0; i < es.values.size(); ++i)
    if (es.values[i] <= tol * scale) out.push_back(unvec(es.vectors.col(i), d));
  return out;
}

OperatorBasis double_commutant(const std::vector<CMatrix>& gens, double tol) {
  return commutant(commutant(gens, tol), tol);
}

OperatorBasis center(const std::vector<CMatrix>& gens, double tol) {
  std::vector<CMatrix> all = gens;
  for (auto& c : commutant(gens, tol)) all.push_back(std::move(c));
  return commutant(all, tol);
}

double subspace_distance(const OperatorBasis& a, const OperatorBasis& b, double tol) {
  const OperatorBasis qa = span_basis(a, tol), qb = span_basis(b, tol);
  if (qa.size() != qb.size()) return 1.0;
  if (qa.empty()) return 0.0;
  if (qa.front().rows() != qb.front().rows()) throw std::invalid_argument("subspace_distance: dimension mismatch");
  const Index len = qa.front().size();
  CMatrix ma(len, static_cast<Index>(qa.size())), mb(len, static_cast<Index>(qb.size()));
  for (std::size_t i = 0; i < qa.size(); ++i) {
    ma.col(static_cast<Index>(i)) = vec(qa[i]);
    mb.col(static_cast<Index>(i)) = vec(qb[i]);
  }
  const CMatrix residual = ma - mb * (mb.adjoint() * ma);
  Eigen::JacobiSVD<CMatrix> svd(residual);
  return svd.singularValues()[0];
}

CMatrix project_onto(const OperatorBasis& m, const CMatrix& x) {
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (const auto& b : m) out += (b.adjoint() * x).trace() * b;
  return out;
}

CMatrix support_projection(const CMatrix& density, const OperatorBasis& m, double tol) {
  const HermitianSplit es = eigh(project_onto(m, density));
  if (es.values.size() > 0 && es.values[0] < -tol)
    throw NotPositiveError("support_projection: functional is not positive on M", es.values[0]);
  CMatrix e = CMatrix::Zero(density.rows(), density.cols());
  for (Index i = 0; i < es.values.size(); ++i)
    if (es.values[i] > tol) e += es.vectors.col(i) * es.vectors.col(i).adjoint();
  return e;
}

CMatrix faithful_density(const GnsTriple& t, const OperatorBasis& m, double eps) {
  const Index d = t.xi.size();
  const CMatrix pure = t.xi * t.xi.adjoint();
  return (1.0 - eps) * project_onto(m, pure) + (eps / static_cast<double>(d)) * CMatrix::Identity(d, d);
}

CMatrix StandardForm::represent(const CMatrix& x) const {
  const auto m = static_cast<Index>(algebra.size());
  CMatrix l(m, m);
  for (Index i = 0; i < m; ++i) {
    const CMatrix xb = x * algebra[i];
    for (Index j = 0; j < m; ++j) l(j, i) = (algebra[j].adjoint() * xb).trace();
  }
  return gram_half * l * gram_inv_half;
}

CMatrix StandardForm::conjugate_by_j(const CMatrix& x) const { return L * x.conjugate() * L.conjugate(); }

OperatorBasis StandardForm::represented_algebra() const {
  OperatorBasis out;
  for (const auto& b : algebra) out.push_back(represent(b));
  return out;
}

StandardForm standard_form(const OperatorBasis& m, const CMatrix& density, double tol) {
  StandardForm sf;
  sf.algebra = span_basis(m, tol);
  if (sf.algebra.empty()) throw std::invalid_argument("standard_form: empty algebra");
  const auto n = static_cast<Index>(sf.algebra.size());
  sf.density = project_onto(sf.algebra, density);
  sf.density = 0.5 * (sf.density + sf.density.adjoint());
  const HermitianSplit rho = eigh(sf.density);
  if (rho.values[0] <= tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "standard_form: state is not faithful, smallest density eigenvalue " << rho.values[0];
    throw NotPositiveError(msg.str(), rho.values[0]);
  }

  CMatrix gram(n, n), flip(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      gram(j, i) = (sf.density * sf.algebra[j].adjoint() * sf.algebra[i]).trace();
      flip(j, i) = (sf.algebra[j].adjoint() * sf.algebra[i].adjoint()).trace();
    }
  const HermitianSplit g = eigh(gram);
  sf.gram_half = matrix_power(g, 0.5);
  sf.gram_inv_half = matrix_power(g, -0.5);

  CVector unit(n);
  for (Index i = 0; i < n; ++i) unit[i] = std::conj(sf.algebra[i].trace());
  sf.xi = sf.gram_half * unit;

  // S w = K conj(w); realified on [Re w; Im w]
  const CMatrix k = sf.gram_half * flip * sf.gram_inv_half.conjugate();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r << k.real(), k.imag(), k.imag(), -k.real();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  sf.j_real = svd.matrixU() * svd.matrixV().transpose();
  sf.L = sf.j_real.topLeftCorner(n, n).cast<std::complex<double>>() +
         std::complex<double>(0.0, 1.0) * sf.j_real.bottomLeftCorner(n, n).cast<std::complex<double>>();
  return sf;
}

StandardFormCheck check_standard_form(const StandardForm& sf, double tol) {
  StandardFormCheck c;
  const Index n2 = sf.j_real.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n2, n2);
  c.j_squared = (sf.j_real * sf.j_real - id).norm();
  c.j_isometry = (sf.j_real.transpose() * sf.j_real - id).norm();
  c.j_fixes_xi = (sf.apply_j(sf.xi) - sf.xi).norm();
  const OperatorBasis mt = sf.represented_algebra();
  OperatorBasis flipped;
  for (const auto& x : mt) flipped.push_back(sf.conjugate_by_j(x));
  c.commutant_distance = subspace_distance(flipped, commutant(mt, tol), tol);
  return c;
}

BiregularRep::BiregularRep(const StandardForm& sf, const GnsTriple& pi) : level_(pi.level) {
  for (const auto& p : pi.pi) {
    left_.push_back(sf.represent(p));
    right_.push_back(sf.conjugate_by_j(left_.back()));
    orbit_.push_back(left_.back() * sf.xi);
  }
}

CMatrix BiregularRep::operator()(const Permutation& g, const Permutation& h) const {
  const auto& group = SymmetricGroup::of(level_);
  return (*this)(group.index_of(g), group.index_of(h));
}

CanonicalConstruction canonical_construction(const StateFunction& f, double eps, double tol) {
  GnsTriple t = gns(f, tol);
  std::vector<CMatrix> gens = t.generators();
  if (gens.empty()) gens.push_back(t.pi.front());
  OperatorBasis m = double_commutant(gens, tol);
  StandardForm sf = standard_form(m, faithful_density(t, m, eps), tol);
  BiregularRep pi2(sf, t);
  return CanonicalConstruction{std::move(t), std::move(m), std::move(sf), std::move(pi2)};
}

double ConstructionReport::worst() const {
  return std::max({reproduction, unitarity, standard.j_squared, standard.j_isometry, standard.j_fixes_xi,
                   standard.commutant_distance, homomorphism, left_right_commute, implements_ad, center_distance});
}

ConstructionReport verify_construction(const StateFunction& f, const CanonicalConstruction& c,
                                       std::size_t sample_pairs, std::uint64_t seed, double tol) {
  const auto& group = SymmetricGroup::of(f.level());
  const std::size_t order = group.order();
  const auto& t = c.gns;
  const auto& pi2 = c.biregular;
  ConstructionReport r;
  r.level = f.level();
  r.gns_dimension = t.dimension();
  r.algebra_dimension = static_cast<int>(c.algebra.size());

  const Index d = t.xi.size();
  for (std::size_t g = 0; g < order; ++g) {
    r.reproduction = std::max(r.reproduction, std::abs(t.xi.dot(t.pi[g] * t.xi) - f.at(g)));
    r.unitarity = std::max(r.unitarity, (t.pi[g].adjoint() * t.pi[g] - CMatrix::Identity(d, d)).norm());
  }
  r.standard = check_standard_form(c.standard, tol);

  // pairs ((g1, h1), (g2, h2)) of S_k x S_k
  std::vector<std::array<std::size_t, 4>> quads;
  const std::size_t full = order * order;
  if (sample_pairs == 0 || sample_pairs >= full * full) {
    for (std::size_t a = 0; a < full; ++a)
      for (std::size_t b = 0; b < full; ++b) quads.push_back({a / order, a % order, b / order, b % order});
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (std::size_t i = 0; i < sample_pairs; ++i) quads.push_back({pick(rng), pick(rng), pick(rng), pick(rng)});
  }
  for (const auto& [g1, h1, g2, h2] : quads) {
    const std::size_t g12 = group.index_of(group.element(g1) * group.element(g2));
    const std::size_t h12 = group.index_of(group.element(h1) * group.element(h2));
    r.homomorphism = std::max(r.homomorphism, (pi2(g12, h12) - pi2(g1, h1) * pi2(g2, h2)).norm());
  }
  r.pairs_checked = quads.size();

  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) {
      r.left_right_commute =
          std::max(r.left_right_commute, (pi2.left(g) * pi2.right(h) - pi2.right(h) * pi2.left(g)).norm());
      const CMatrix a = pi2(g, g);
      const std::size_t ghg = group.index_of(conjugate(group.element(g), group.element(h)));
      r.implements_ad = std::max(r.implements_ad, (a * pi2.left(h) * a.adjoint() - pi2.left(ghg)).norm());
    }

  std::vector<CMatrix> pair_gens;
  for (std::size_t g = 0; g < order; ++g) {
    pair_gens.push_back(pi2.left(g));
    pair_gens.push_back(pi2.right(g));
  }
  r.center_distance = subspace_distance(center(span_basis(pair_gens, tol), tol),
                                        center(c.standard.represented_algebra(), tol), tol);
  std::vector<CMatrix> left_rep;
  for (std::size_t g = 0; g < order; ++g) left_rep.push_back(pi2.left(g));
  r.left_quasi_equivalent = quasi_equivalent(irrep_content(left_rep, f.level()), irrep_content(t.pi, f.level()));
  return r;
}

std::map<Partition, std::int64_t> irrep_content(const std::vector<CMatrix>& rep, int level) {
  const auto& group = SymmetricGroup::of(level);
  if (rep.size() != group.order()) throw std::invalid_argument("irrep_content: need one matrix per group element");
  std::map<Partition, std::int64_t> out;
  for (const auto& lambda : partitions_of(level)) {
    std::complex<double> s{};
    for (std::size_t g = 0; g < rep.size(); ++g)
      s += rep[g].trace() * static_cast<double>(mn_character(lambda, cycle_type(group.element(g))));
    s /= static_cast<double>(group.order());
    const double rounded = std::round(s.real());
    if (std::abs(s - rounded) > 1e-6)
      throw std::runtime_error("irrep_content: non-integral multiplicity for " + lambda.to_string());
    if (rounded != 0.0) out[lambda] = static_cast<std::int64_t>(rounded);
  }
  return out;
}

bool quasi_equivalent(const std::map<Partition, std::int64_t>& a, const std::map<Partition, std::int64_t>& b) {
  auto support = [](const std::map<Partition, std::int64_t>& m) {
    std::vector<Partition> s;
    for (const auto& [p, k] : m)
      if (k != 0) s.push_back(p);
    return s;
  };
  return support(a) == support(b);
}

std::vector<std::int64_t> induced_character(const Partition& lambda, const Partition& mu) {
  const int n = lambda.weight();
  const int m = n + mu.weight();
  if (m > kDefaultCharacterTableBound)
    throw std::invalid_argument("induced_character: m = " + std::to_string(m) + " exceeds " +
                                std::to_string(kDefaultCharacterTableBound));
  const CharacterTable table = character_table(m);
  const auto& group = SymmetricGroup::of(m);
  const auto h_order = static_cast<std::int64_t>(factorial(n) * factorial(m - n));
  std::vector<std::int64_t> out;
  for (const auto& c : table.classes) {
    const Permutation s = representative(c);
    std::int64_t sum = 0;
    for (const auto& t : group.elements()) {
      const auto parts = split_product(conjugate(t.inverse(), s), n);
      if (!parts) continue;
      sum += mn_character(lambda, cycle_type(parts->first)) * mn_character(mu, cycle_type(parts->second));
    }
    if (sum % h_order != 0) throw std::logic_error("induced_character: non-integral value");
    out.push_back(sum / h_order);
  }
  return out;
}

std::map<Partition, std::int64_t> induced_multiplicities(const Partition& lambda, const Partition& mu) {
  const std::vector<std::int64_t> chi = induced_character(lambda, mu);
  const int m = lambda.weight() + mu.weight();
  const CharacterTable table = character_table(m);
  std::map<Partition, std::int64_t> out;
  for (std::size_t nu = 0; nu < table.irreps.size(); ++nu) {
    __int128 s = 0;
    for (std::size_t c = 0; c < table.classes.size(); ++c)
      s += static_cast<__int128>(table.class_sizes[c]) * chi[c] * table.values[nu][c];
    const auto order = static_cast<__int128>(factorial(m));
    if (s % order != 0) throw std::logic_error("induced_multiplicities: non-integral multiplicity");
    if (s != 0) out[table.irreps[nu]] = static_cast<std::int64_t>(s / order);
  }
  return out;
}

}  // namespace stablerep

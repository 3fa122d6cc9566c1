#include "stablerep/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace stablerep {

namespace {

// Beta-set (first-column hook lengths) of a partition padded to `len` rows.
std::vector<int> beta_set(const std::vector<int>& parts, std::size_t len) {
  std::vector<int> b(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int part = i < parts.size() ? parts[i] : 0;
    b[i] = part + static_cast<int>(len - 1 - i);
  }
  return b;  // strictly decreasing
}

std::vector<int> from_beta_set(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  std::vector<int> parts;
  const std::size_t len = b.size();
  for (std::size_t i = 0; i < len; ++i) {
    const int part = b[i] - static_cast<int>(len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

  // chi^{lambda}(cycles_[pos..]) with the remaining points fixed.
  std::int64_t eval(const std::vector<int>& parts, std::size_t pos) {
    if (pos == cycles_.size()) return static_cast<std::int64_t>(hook_dimension(Partition(parts)));
    auto key = std::make_pair(parts, pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int k = cycles_[pos];
    std::vector<int> b = beta_set(parts, parts.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const int target = b[i] - k;
      if (target < 0 || std::find(b.begin(), b.end(), target) != b.end()) continue;
      // leg length = number of beta numbers strictly between target and b[i]
      int between = 0;
      for (int x : b)
        if (x > target && x < b[i]) ++between;
      std::vector<int> nb = b;
      nb[i] = target;
      const std::int64_t sub = eval(from_beta_set(nb), pos + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> cycles_;
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo_;
};

}  // namespace

std::int64_t mn_character(const Partition& lambda, const CycleType& c) {
  if (c.weight() > lambda.weight())
    throw std::invalid_argument("mn_character: cycle type " + c.to_string() + " moves more than " +
                                std::to_string(lambda.weight()) + " points");
  MurnaghanNakayama mn(c.lengths);
  return mn.eval(lambda.parts(), 0);
}

double normalized_character(const Partition& lambda, const CycleType& c) {
  return static_cast<double>(mn_character(lambda, c)) / static_cast<double>(hook_dimension(lambda));
}

std::size_t CharacterTable::class_index(const CycleType& c) const {
  auto it = std::find(classes.begin(), classes.end(), c);
  if (it == classes.end()) throw std::invalid_argument("no class " + c.to_string() + " in S_" + std::to_string(n));
  return static_cast<std::size_t>(it - classes.begin());
}

CharacterTable character_table(int n, int bound) {
  if (n < 0 || n > bound)
    throw std::invalid_argument("character_table: n = " + std::to_string(n) + " exceeds bound " +
                                std::to_string(bound));
  CharacterTable t;
  t.n = n;
  t.irreps = partitions_of(n);
  for (const auto& p : t.irreps) {
    t.classes.push_back(as_cycle_type(p));
    t.class_sizes.push_back(class_size(t.classes.back(), n));
  }
  for (const auto& lambda : t.irreps) {
    std::vector<std::int64_t> row;
    row.reserve(t.classes.size());
    for (const auto& c : t.classes) row.push_back(mn_character(lambda, c));
    t.values.push_back(std::move(row));
  }
  return t;
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  const int n = lambda.weight();
  std::vector<StandardTableau> out;
  StandardTableau cur{std::vector<int>(n), std::vector<int>(n)};
  std::vector<int> filled(lambda.length(), 0);
  // place entries 1..n one at a time at an outer corner of the filled shape
  auto rec = [&](auto&& self, int entry) -> void {
    if (entry == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < lambda.length(); ++r) {
      if (filled[r] >= lambda[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      cur.row[entry] = static_cast<int>(r);
      cur.col[entry] = filled[r];
      ++filled[r];
      self(self, entry + 1);
      --filled[r];
    }
  };
  rec(rec, 0);
  return out;
}

IrrepMatrices yor_matrices(const Partition& lambda) {
  const int n = lambda.weight();
  const auto tableaux = standard_tableaux(lambda);
  const auto d = static_cast<Eigen::Index>(tableaux.size());

  std::map<std::pair<std::vector<int>, std::vector<int>>, Eigen::Index> index;
  for (Eigen::Index t = 0; t < d; ++t) index.emplace(std::make_pair(tableaux[t].row, tableaux[t].col), t);

  std::vector<Eigen::MatrixXd> gens;
  for (int i = 1; i < n; ++i) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index t = 0; t < d; ++t) {
      const auto& T = tableaux[t];
      // entries i and i+1 live at 0-based positions i-1 and i
      const int content_a = T.col[i - 1] - T.row[i - 1];
      const int content_b = T.col[i] - T.row[i];
      const int r = content_b - content_a;
      g(t, t) = 1.0 / r;
      if (r != 1 && r != -1) {
        StandardTableau swapped = T;
        std::swap(swapped.row[i - 1], swapped.row[i]);
        std::swap(swapped.col[i - 1], swapped.col[i]);
        const Eigen::Index u = index.at(std::make_pair(swapped.row, swapped.col));
        g(u, t) = std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * r));
      }
    }
    gens.push_back(std::move(g));
  }
  return IrrepMatrices(lambda, std::move(gens));
}

IrrepMatrices::IrrepMatrices(Partition lambda, std::vector<Eigen::MatrixXd> generators)
    : shape_(std::move(lambda)), dim_(hook_dimension(shape_)), generators_(std::move(generators)) {
  const int n = shape_.weight();
  if (static_cast<int>(generators_.size()) != std::max(n - 1, 0))
    throw std::invalid_argument("IrrepMatrices: expected " + std::to_string(std::max(n - 1, 0)) +
                                " generators for " + shape_.to_string());
  const auto d = static_cast<Eigen::Index>(dim_);
  for (const auto& g : generators_) {
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("IrrepMatrices: generator size mismatch for " + shape_.to_string());
    SparseGenerator s{std::vector<double>(dim_), std::vector<int>(dim_, -1), std::vector<double>(dim_, 0.0)};
    for (Eigen::Index c = 0; c < d; ++c) {
      s.diag[c] = g(c, c);
      int nonzeros = 0;
      for (Eigen::Index r = 0; r < d; ++r) {
        if (r == c || g(r, c) == 0.0) continue;
        if (++nonzeros > 1) throw std::invalid_argument("IrrepMatrices: generator is not in orthogonal form");
        s.partner[c] = static_cast<int>(r);
        s.off[c] = g(r, c);
      }
    }
    for (Eigen::Index c = 0; c < d; ++c)
      if (s.partner[c] >= 0 && s.partner[s.partner[c]] != c)
        throw std::invalid_argument("IrrepMatrices: generator off-diagonal pattern is not symmetric");
    sparse_.push_back(std::move(s));
  }
}

void IrrepMatrices::right_multiply(Eigen::MatrixXd& m, int i) const {
  const SparseGenerator& g = sparse_[i - 1];
  // column c of m*G is sum_r m(:, r) G(r, c); G(r, c) nonzero only for r = c
  // and r = partner[c]. Pairs (c, partner[c]) are mutual, so update them
  // together from the old columns.
  const auto d = static_cast<Eigen::Index>(dim_);
  for (Eigen::Index c = 0; c < d; ++c) {
    const int p = g.partner[c];
    if (p < 0) {
      if (g.diag[c] != 1.0) m.col(c) *= g.diag[c];
      continue;
    }
    if (p < c) continue;
    Eigen::VectorXd a = m.col(c);
    Eigen::VectorXd b = m.col(p);
    // G(p, c) = off[c], G(c, p) = off[p]
    m.col(c) = a * g.diag[c] + b * g.off[c];
    m.col(p) = b * g.diag[p] + a * g.off[p];
  }
}

Eigen::MatrixXd irrep_matrix(const IrrepMatrices& m, const Permutation& s) {
  const int n = m.level();
  if (s.level() > n)
    throw std::invalid_argument("irrep_matrix: " + s.to_string() + " is not in S_" + std::to_string(n));
  const auto d = static_cast<Eigen::Index>(m.dimension());
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(d, d);
  if (n <= 1) return out;
  // s = c2 * c3 * ... * cn with ck = s_{k-1} ... s_{jk}; jk = ck^-1(k).
  std::vector<Point> img = s.images(n);
  std::vector<int> j(n + 1, 0);
  for (int k = n; k >= 2; --k) {
    int pos = 1;
    while (img[pos - 1] != k) ++pos;
    j[k] = pos;
    for (int i = pos; i < k; ++i) std::swap(img[i - 1], img[i]);
  }
  for (int k = 2; k <= n; ++k)
    for (int i = k - 1; i >= j[k]; --i) m.right_multiply(out, i);
  return out;
}

}  // namespace stablerep

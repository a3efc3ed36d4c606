#include "lpa/annihilator.hpp"

#include <random>
#include <stdexcept>

namespace lpa {

namespace {

Matrix<Scalar> columns_to_matrix(const std::vector<Coords>& cols, std::size_t rows) {
  Matrix<Scalar> m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

Coords scaled(Coords v, const Scalar& s) {
  for (auto& x : v) x *= s;
  return v;
}

Coords minus(Coords a, const Coords& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

// Paths leaving v in an acyclic graph.
std::vector<Path> paths_from(const Graph& g, VertexId v) {
  std::vector<Path> out{Path{v, {}}};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (EdgeId e : g.out_edges(out[k].finish(g))) {
      Path p = out[k];
      p.edges.push_back(e);
      out.push_back(std::move(p));
    }
  return out;
}

}  // namespace

FDAlgebra::FDAlgebra(GraphRef g, FieldSpec f) : g_(std::move(g)), f_(f) {
  const Graph& gr = *g_;
  if (!is_acyclic(gr)) throw std::invalid_argument("finite-dimensional model needs an acyclic graph");
  for (VertexId v = 0; v < gr.vertex_count(); ++v) {
    auto paths = paths_ending_at(gr, v, false);
    for (const Path& p : paths)
      for (const Path& q : paths) {
        Monomial m{p, q};
        if (!is_reducible(gr, m)) basis_.push_back(std::move(m));
      }
  }
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
  for (const Monomial& m : basis_) star_.push_back(index_.at(m.star()));
  table_.assign(basis_.size(), std::vector<Sparse>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const Element product = mono_mul(g_, f_, basis_[i], basis_[j]);
      for (const auto& [m, c] : product.terms()) table_[i][j].emplace_back(index_.at(m), c);
    }
}

Element FDAlgebra::basis_element(std::size_t k) const { return Element::monomial(g_, f_, basis_.at(k)); }

Coords FDAlgebra::coords(const Element& x) const {
  Coords out(dimension());
  for (const auto& [m, c] : x.terms()) {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("monomial " + to_string(*g_, m) + " is not a basis element");
    out[it->second] = c;
  }
  return out;
}

Element FDAlgebra::element(const Coords& c) const {
  Element::Terms terms;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) terms.emplace(basis_[k], c[k]);
  return Element::raw(g_, f_, std::move(terms));
}

Coords FDAlgebra::multiply(const Coords& a, const Coords& b) const {
  Coords out(dimension());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : table_[i][j]) out[k] += ab * c;
    }
  }
  return out;
}

Coords FDAlgebra::multiply_basis(const Coords& a, std::size_t j) const {
  Coords out(dimension());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& [k, c] : table_[i][j]) out[k] += a[i] * c;
  }
  return out;
}

Coords FDAlgebra::star(const Coords& a) const {
  Coords out(dimension());
  for (std::size_t k = 0; k < a.size(); ++k) out[star_[k]] = a[k].conj(f_.involution);
  return out;
}

Matrix<Scalar> FDAlgebra::left_multiplication(const Coords& x) const {
  const std::size_t d = dimension();
  Matrix<Scalar> m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : table_[i][j]) m(k, j) += x[i] * c;
  }
  return m;
}

std::size_t span_rank(const FDAlgebra& a, const std::vector<Coords>& vs) {
  if (vs.empty()) return 0;
  return rank(columns_to_matrix(vs, a.dimension()));
}

namespace {

// Echelon basis of a subspace for repeated membership tests.
class SpanTester {
 public:
  SpanTester(const std::vector<Coords>& vs, std::size_t d) : d_(d) {
    for (const Coords& v : vs) insert(v);
  }
  std::size_t dim() const { return rows_.size(); }
  bool contains(Coords v) const { return is_zero(reduce(std::move(v))); }
  // Adds v if independent; returns whether it was.
  bool insert(Coords v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < d_ && v[p].is_zero()) ++p;
    if (p == d_) return false;
    Scalar inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  static bool is_zero(const Coords& v) {
    for (const Scalar& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  Coords reduce(Coords v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (v[pivots_[k]].is_zero()) continue;
      Scalar f = v[pivots_[k]];
      for (std::size_t c = 0; c < d_; ++c)
        if (!rows_[k][c].is_zero()) v[c] -= f * rows_[k][c];
    }
    return v;
  }
  std::size_t d_;
  std::vector<Coords> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

bool contains(const FDAlgebra& a, const SubspaceBasis& n, const Coords& v) {
  return SpanTester(n.vectors, a.dimension()).contains(v);
}

bool is_right_ideal(const FDAlgebra& a, const SubspaceBasis& n) {
  SpanTester span(n.vectors, a.dimension());
  if (span.dim() != n.dim()) return false;
  for (const Coords& v : n.vectors)
    for (std::size_t j = 0; j < a.dimension(); ++j)
      if (!span.contains(a.multiply_basis(v, j))) return false;
  return true;
}

SubspaceBasis right_annihilator_fd(const FDAlgebra& a, const std::vector<Element>& xs) {
  const std::size_t d = a.dimension();
  Matrix<Scalar> stacked(d * xs.size(), d);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    auto block = a.left_multiplication(a.coords(xs[k]));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked(k * d + r, c) = block(r, c);
  }
  SubspaceBasis out{kernel(stacked)};
  if (!is_right_ideal(a, out)) throw std::logic_error("annihilator is not a right ideal");
  return out;
}

bool generates(const FDAlgebra& a, const Element& e, const SubspaceBasis& n) {
  const std::size_t d = a.dimension();
  Coords ec = a.coords(e);
  SpanTester target(n.vectors, d);
  SpanTester image({}, d);
  for (std::size_t j = 0; j < d; ++j) {
    Coords v = a.multiply_basis(ec, j);
    if (!target.contains(v)) return false;
    image.insert(std::move(v));
  }
  return image.dim() == n.dim();
}

namespace {

std::optional<Element> find_idempotent(const FDAlgebra& a, const SubspaceBasis& n) {
  if (n.dim() == 0) return Element::zero(a.graph_ref(), a.field());
  const std::size_t d = a.dimension();
  // sum_j lambda_j n_j n_k = n_k for every k
  Matrix<Scalar> m(d * n.dim(), n.dim());
  std::vector<Scalar> rhs(d * n.dim());
  for (std::size_t k = 0; k < n.dim(); ++k) {
    for (std::size_t j = 0; j < n.dim(); ++j) {
      Coords prod = a.multiply(n.vectors[j], n.vectors[k]);
      for (std::size_t r = 0; r < d; ++r) m(k * d + r, j) = prod[r];
    }
    for (std::size_t r = 0; r < d; ++r) rhs[k * d + r] = n.vectors[k][r];
  }
  auto lambda = solve(m, rhs);
  if (!lambda) return std::nullopt;
  Coords e(d);
  for (std::size_t j = 0; j < n.dim(); ++j)
    for (std::size_t r = 0; r < d; ++r) e[r] += (*lambda)[j] * n.vectors[j][r];
  Element out = a.element(e);
  if (!is_idempotent(out) || !generates(a, out, n)) throw std::logic_error("idempotent generator check failed");
  return out;
}


std::optional<Element> find_projection(const FDAlgebra& a, const SubspaceBasis& n) {
  // A projection p generates N = eA exactly when p lies in N, p = p* and
  // p e = e, so an idempotent generator is found first.
  auto idem = find_idempotent(a, n);
  if (!idem) return std::nullopt;
  if (n.dim() == 0) return idem;
  const std::size_t d = a.dimension();
  const Involution inv = a.field().involution;
  const bool gaussian = a.field().base == BaseField::GaussianRationals;
  const Coords e = a.coords(*idem);

  // Conjugation makes p = p* only Q-linear in lambda, so lambda_j = a_j + b_j i
  // is solved for over Q.  Column for each real unknown:
  //   [ (coef n_j) e ; coef n_j - coef* n_j* ]
  std::vector<Scalar> coefs{Scalar(1)};
  if (gaussian) coefs.push_back(Scalar::i());
  const std::size_t rows = 2 * d;
  std::vector<Coords> columns;
  for (const Scalar& coef : coefs)
    for (std::size_t j = 0; j < n.dim(); ++j) {
      Coords nj = scaled(n.vectors[j], coef);
      Coords col = a.multiply(nj, e);
      Coords sym = minus(nj, scaled(a.star(n.vectors[j]), coef.conj(inv)));
      col.insert(col.end(), sym.begin(), sym.end());
      columns.push_back(std::move(col));
    }
  Coords rhs = e;
  rhs.resize(rows);

  Matrix<mpq_class> real(2 * rows, columns.size());
  std::vector<mpq_class> real_rhs(2 * rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      real(2 * r, c) = columns[c][r].re();
      real(2 * r + 1, c) = columns[c][r].im();
    }
    real_rhs[2 * r] = rhs[r].re();
    real_rhs[2 * r + 1] = rhs[r].im();
  }
  auto sol = solve(real, real_rhs);
  if (!sol) return std::nullopt;
  if (!kernel(real).empty()) throw std::logic_error("projection generator is not unique");

  Coords p(d);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Scalar lambda = Scalar((*sol)[c]) * coefs[c / n.dim()];
    for (std::size_t r = 0; r < d; ++r) p[r] += lambda * n.vectors[c % n.dim()][r];
  }
  Element out = a.element(p);
  if (!is_projection(out) || !generates(a, out, n)) throw std::logic_error("projection generator check failed");
  return out;
}

}  // namespace

std::optional<Element> idempotent_generator(const FDAlgebra& a, const SubspaceBasis& n) {
  if (!is_right_ideal(a, n)) throw std::invalid_argument("subspace is not a right ideal");
  return find_idempotent(a, n);
}

std::optional<Element> projection_generator(const FDAlgebra& a, const SubspaceBasis& n) {
  if (!is_right_ideal(a, n)) throw std::invalid_argument("subspace is not a right ideal");
  return find_projection(a, n);
}

OracleReport annihilator_oracle_fd(const FDAlgebra& a, GeneratorKind kind, const OracleOptions& opts) {
  OracleReport report;
  report.seed = opts.seed;
  const std::size_t d = a.dimension();
  if (d == 0) return report;

  auto fails = [&](const std::vector<Element>& xs, const char* family) {
    SubspaceBasis n = right_annihilator_fd(a, xs);
    bool ok = kind == GeneratorKind::Projection ? find_projection(a, n).has_value() : find_idempotent(a, n).has_value();
    if (ok) return false;
    report.pass = false;
    report.witness = xs;
    report.family = family;
    return true;
  };

  for (std::size_t i = 0; i < d; ++i) {
    ++report.counts.singletons;
    if (fails({a.basis_element(i)}, "singleton")) return report;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      ++report.counts.pairs;
      if (fails({a.basis_element(i), a.basis_element(j)}, "pair")) return report;
    }

  std::mt19937_64 rng(opts.seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const bool gaussian = a.field().base == BaseField::GaussianRationals;
  const std::vector<Scalar> pool = gaussian ? std::vector<Scalar>{Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i(),
                                                                  Scalar::rational(1, 2), Scalar::rational(-1, 2)}
                                            : std::vector<Scalar>{Scalar(1), Scalar(-1), Scalar(2), Scalar(-2),
                                                                  Scalar::rational(1, 2), Scalar::rational(-1, 2)};
  for (std::size_t s = 0; s < opts.random_cases; ++s) {
    std::vector<Element> xs;
    std::size_t size = 1 + pick(opts.max_subset);
    for (std::size_t k = 0; k < size; ++k) {
      Coords c(d);
      std::size_t terms = 1 + pick(3);
      for (std::size_t t = 0; t < terms; ++t) c[pick(d)] += pool[pick(pool.size())];
      xs.push_back(a.element(c));
    }
    ++report.counts.random;
    if (fails(xs, "random")) return report;
  }

  const Graph& g = *a.graph_ref();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto paths = paths_from(g, v);
    for (std::size_t parity = 0; parity < 2; ++parity) {
      std::vector<Element> xs;
      for (std::size_t k = parity; k < paths.size(); k += 2)
        xs.push_back(Element::monomial(a.graph_ref(), a.field(), Monomial{paths[k], paths[k]}));
      if (xs.empty()) continue;
      ++report.counts.structured;
      if (fails(xs, parity ? "structured-odd" : "structured-even")) return report;
    }
  }
  return report;
}

}  // namespace lpa

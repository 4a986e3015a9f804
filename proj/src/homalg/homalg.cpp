#include "bil/homalg/homalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bil/error.hpp"

namespace bil::homalg {

using modgb::MTerm;

bool FreeResolution::is_minimal() const {
  for (const auto& m : d)
    if (m.has_unit_entry()) return false;
  return true;
}

namespace {

FreeResolution resolve(const ModulePresentation& M, int steps, bool must_finish) {
  modgb::Pruned p = modgb::prune(M);
  FreeResolution r{M.ring(), p.pres, p.pres.cover(), {}};
  GradedMatrix cur = p.pres.relations();
  if (cur.cols() == 0) return r;
  if (steps == 0) return r;
  r.d.push_back(cur);
  while (true) {
    if (!must_finish && r.length() >= steps) return r;
    GradedMatrix s = modgb::syzygy_module(cur);
    if (s.cols() == 0) return r;
    if (must_finish && r.length() >= steps)
      throw Error(Errc::CapExceeded, "resolution did not terminate within " + std::to_string(steps) + " steps");
    r.d.push_back(s);
    cur = s;
  }
}

}  // namespace

FreeResolution minimal_free_resolution(const ModulePresentation& M, int cap) {
  const auto& R = *M.ring();
  int limit = cap;
  if (!R.is_quotient()) limit = R.num_vars();
  if (limit < 0) throw Error(Errc::InvalidArgument, "resolution over a quotient ring needs a cap");
  return resolve(M, limit, true);
}

FreeResolution partial_resolution(const ModulePresentation& M, int steps) { return resolve(M, steps, false); }

int BettiTable::at(int i, int j) const {
  auto it = b.find({i, j});
  return it == b.end() ? 0 : it->second;
}

int BettiTable::total(int i) const {
  int s = 0;
  for (const auto& [k, v] : b)
    if (k.first == i) s += v;
  return s;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : b) {
    if (!first) os << ' ';
    first = false;
    os << "b" << k.first << "," << k.second << "=" << v;
  }
  return os.str();
}

BettiTable betti_table(const FreeResolution& R) {
  if (!R.is_minimal()) throw Error(Errc::NotMinimal, "resolution has a unit entry");
  BettiTable t;
  for (int i = 0; i <= R.length(); ++i) {
    const FreeModule& F = R.free(i);
    for (int k = 0; k < F.rank(); ++k) t.b[{i, F.degree(k)}] += 1;
  }
  return t;
}

std::int64_t hilbert_function(const ModulePresentation& M, int n) { return modgb::hilbert_series(M).value(n); }

std::int64_t HilbertPolynomial::operator()(int n) const {
  std::int64_t s = 0, p = 1;
  for (auto c : num) {
    s += c * p;
    p *= n;
  }
  return s / den;
}

std::string HilbertPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(num.size()) - 1; k >= 0; --k) {
    std::int64_t c = num[k];
    if (c == 0) continue;
    std::int64_t g = std::gcd(c < 0 ? -c : c, den);
    std::int64_t a = (c < 0 ? -c : c) / g, b = den / g;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool show = k == 0 || a != 1 || b != 1;
    if (show) {
      os << a;
      if (b != 1) os << "/" << b;
    }
    if (k > 0) os << (show ? "*" : "") << "n" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  if (first) os << "0";
  return os.str();
}

HilbertPolynomial hilbert_polynomial(const ModulePresentation& M) {
  auto h = modgb::hilbert_series(M);
  HilbertPolynomial hp;
  int dim = h.dimension();
  if (dim <= 0) {
    hp.num = {0};
    return hp;
  }
  int deg = dim - 1;
  std::int64_t den = 1;
  for (int k = 2; k <= deg; ++k) den *= k;
  // forward differences of den * HP at 0..deg
  std::vector<std::int64_t> vals(deg + 1);
  for (int n = 0; n <= deg; ++n) vals[n] = den * h.polynomial_value(n);
  std::vector<std::int64_t> diff;
  for (int k = 0; k <= deg; ++k) {
    diff.push_back(vals[0]);
    for (int n = 0; n + 1 < static_cast<int>(vals.size()); ++n) vals[n] = vals[n + 1] - vals[n];
    vals.pop_back();
  }
  std::vector<std::int64_t> num(deg + 1, 0);
  std::vector<std::int64_t> falling{1};
  std::int64_t kfact = 1;
  for (int k = 0; k <= deg; ++k) {
    if (k > 0) {
      kfact *= k;
      std::vector<std::int64_t> nx(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        nx[i + 1] += falling[i];
        nx[i] -= static_cast<std::int64_t>(k - 1) * falling[i];
      }
      falling = std::move(nx);
    }
    for (std::size_t i = 0; i < falling.size(); ++i) num[i] += diff[k] / kfact * falling[i];
  }
  hp.num = num;
  hp.den = den;
  std::int64_t g = den;
  for (auto c : num) g = std::gcd(g, c < 0 ? -c : c);
  if (g > 1) {
    for (auto& c : hp.num) c /= g;
    hp.den /= g;
  }
  return hp;
}

GradedMatrix HomModule::as_matrix(const Vec& element) const {
  const int n0 = F0.rank();
  std::vector<Vec> cols(n0);
  const auto& F = F0.ring()->field();
  std::vector<std::vector<MTerm>> t(n0);
  for (const auto& x : element.terms()) t[x.comp % n0].push_back({x.mono, x.comp / n0, x.coef});
  for (int i = 0; i < n0; ++i) cols[i] = Vec(std::move(t[i]), F);
  // the matrix has degree deg(element); shift the source to keep it degree 0
  int d = element.is_zero() ? 0 : *modgb::vec_degree(element, hom_free());
  std::vector<int> sdeg;
  for (int i = 0; i < n0; ++i) sdeg.push_back(F0.degree(i) + d);
  return GradedMatrix(G0, FreeModule(F0.ring(), sdeg), std::move(cols));
}

FreeModule HomModule::hom_free() const {
  std::vector<int> deg;
  for (int k = 0; k < G0.rank(); ++k)
    for (int i = 0; i < F0.rank(); ++i) deg.push_back(G0.degree(k) - F0.degree(i));
  return FreeModule(F0.ring(), deg);
}

namespace {

FreeModule hom_free(const FreeModule& F, const FreeModule& G) {
  std::vector<int> deg;
  for (int k = 0; k < G.rank(); ++k)
    for (int i = 0; i < F.rank(); ++i) deg.push_back(G.degree(k) - F.degree(i));
  return FreeModule(F.ring(), deg);
}

// Hom(F, a) for a : G1 -> G0 : Hom(F, G1) -> Hom(F, G0), post-composition.
GradedMatrix post_compose(const FreeModule& F, const GradedMatrix& a) {
  const int n = F.rank();
  FreeModule src = hom_free(F, a.source()), tgt = hom_free(F, a.target());
  std::vector<Vec> cols;
  for (int l = 0; l < a.cols(); ++l)
    for (int i = 0; i < n; ++i) {
      std::vector<MTerm> t;
      for (const auto& x : a.column(l).terms()) t.push_back({x.mono, x.comp * n + i, x.coef});
      cols.push_back(Vec(std::move(t), F.ring()->field()));
    }
  return GradedMatrix(tgt, src, std::move(cols));
}

// Hom(a, G) for a : F1 -> F0 : Hom(F0, G) -> Hom(F1, G), pre-composition.
GradedMatrix pre_compose(const GradedMatrix& a, const FreeModule& G) {
  const int n0 = a.rows(), n1 = a.cols();
  FreeModule src = hom_free(a.target(), G), tgt = hom_free(a.source(), G);
  std::vector<std::vector<std::vector<MTerm>>> t(G.rank(), std::vector<std::vector<MTerm>>(n0));
  for (int j = 0; j < n1; ++j)
    for (const auto& x : a.column(j).terms())
      for (int k = 0; k < G.rank(); ++k) t[k][x.comp].push_back({x.mono, k * n1 + j, x.coef});
  std::vector<Vec> cols;
  for (int k = 0; k < G.rank(); ++k)
    for (int i = 0; i < n0; ++i) cols.push_back(Vec(std::move(t[k][i]), a.ring()->field()));
  return GradedMatrix(tgt, src, std::move(cols));
}

}  // namespace

HomModule hom_presentation(const ModulePresentation& A, const ModulePresentation& B) {
  const GradedMatrix& a = A.relations();
  const GradedMatrix& b = B.relations();
  GradedMatrix psi = pre_compose(a, B.cover());
  GradedMatrix n1 = post_compose(a.source(), b);
  GradedMatrix K = modgb::kernel_modulo(psi, n1);
  GradedMatrix n0 = post_compose(A.cover(), b);
  HomModule h{modgb::subquotient(K, n0), A.cover(), B.cover()};
  return h;
}

ExtModule ext_module(const FreeResolution& res, int i, int twist) {
  ExtModule e;
  e.res = res;
  e.i = i;
  e.twist = twist;
  const RingPtr& R = res.ring;
  if (i < 0) throw Error(Errc::InvalidArgument, "negative Ext index");
  if (i > res.length()) {
    e.pres = ModulePresentation::free(FreeModule(R, {}));
    return e;
  }
  FreeModule Fi = res.free(i).dual(twist);
  GradedMatrix K = i < res.length() ? modgb::syzygy_module(res.d[i].transpose(twist)) : GradedMatrix::identity(Fi);
  GradedMatrix R0 = i >= 1 ? res.d[i - 1].transpose(twist) : GradedMatrix(Fi, FreeModule(R, {}));
  auto sq = modgb::subquotient(K, R0);
  e.pres = sq.pres;
  e.cocycles = sq.elements;
  return e;
}

ExtModule ext_module(const ModulePresentation& A, int i, int twist) {
  const auto& R = *A.ring();
  if (R.is_quotient()) {
    return ext_module(partial_resolution(A, i + 1), i, twist);
  }
  return ext_module(minimal_free_resolution(A), i, twist);
}

bool ext_vanishes(const ModulePresentation& A, int i) { return ext_module(A, i, 0).is_zero(); }

namespace {

struct DegreeBasis {
  std::vector<Vec> vecs;
  std::map<std::pair<int, std::uint64_t>, int> index;
};

}  // namespace

FiniteLengthModule FiniteLengthModule::zero(RingPtr ring) {
  FiniteLengthModule m;
  m.ring_ = std::move(ring);
  m.act_.resize(m.ring_->num_vars());
  m.pres_ = ModulePresentation::free(FreeModule(m.ring_, {}));
  return m;
}

FiniteLengthModule FiniteLengthModule::from_presentation(const ModulePresentation& M, int max_total) {
  auto h = modgb::hilbert_series(M);
  if (h.is_zero()) {
    auto z = zero(M.ring());
    z.pres_ = M;
    return z;
  }
  if (h.dimension() > 0) throw Error(Errc::NotFiniteLength, "module has positive dimension");
  const auto& q = h.reduced();
  FiniteLengthModule out;
  out.ring_ = M.ring();
  out.pres_ = M;
  int total = 0;
  for (std::size_t k = 0; k < q.c.size(); ++k)
    if (q.c[k] != 0) {
      out.dims_[q.low + static_cast<int>(k)] = static_cast<int>(q.c[k]);
      total += static_cast<int>(q.c[k]);
    }
  if (total > max_total) throw Error(Errc::NotFiniteLength, "finite length module exceeds the size bound");
  std::map<int, DegreeBasis> bases;
  for (const auto& [n, dn] : out.dims_) {
    DegreeBasis b;
    b.vecs = modgb::standard_basis_in_degree(M.relation_module(), n);
    if (static_cast<int>(b.vecs.size()) != dn) throw Error(Errc::NotFiniteLength, "basis size mismatch");
    for (int k = 0; k < dn; ++k) b.index[{b.vecs[k].leading().comp, b.vecs[k].leading().mono.packed()}] = k;
    bases.emplace(n, std::move(b));
  }
  const int nv = out.ring_->num_vars();
  const auto& F = out.ring_->field();
  out.act_.resize(nv);
  for (const auto& [n, b] : bases) {
    auto next = bases.find(n + 1);
    int rows = next == bases.end() ? 0 : out.dims_[n + 1];
    for (int v = 0; v < nv; ++v) {
      DenseMatrix A(rows, b.vecs.size());
      for (std::size_t j = 0; j < b.vecs.size(); ++j) {
        Vec w = M.normal_form(modgb::mul_term(b.vecs[j], ring::Monomial::variable(v), 1, F));
        for (const auto& t : w.terms()) {
          if (next == bases.end()) throw Error(Errc::NotFiniteLength, "action leaves the support");
          auto it = next->second.index.find({t.comp, t.mono.packed()});
          if (it == next->second.index.end()) throw Error(Errc::NotFiniteLength, "normal form outside the basis");
          A(it->second, j) = t.coef;
        }
      }
      out.act_[v][n] = std::move(A);
    }
  }
  return out;
}

FiniteLengthModule FiniteLengthModule::from_linear_data(RingPtr ring, std::map<int, int> dims,
                                                        std::vector<std::map<int, DenseMatrix>> actions) {
  FiniteLengthModule m;
  m.ring_ = std::move(ring);
  for (auto& [n, d] : dims)
    if (d > 0) m.dims_[n] = d;
  m.act_ = std::move(actions);
  m.act_.resize(m.ring_->num_vars());
  m.build_presentation();
  return m;
}

void FiniteLengthModule::build_presentation() {
  const auto& F = ring_->field();
  std::vector<int> deg;
  std::map<int, int> offset;
  for (const auto& [n, d] : dims_) {
    offset[n] = static_cast<int>(deg.size());
    for (int k = 0; k < d; ++k) deg.push_back(n);
  }
  FreeModule cover(ring_, deg);
  std::vector<Vec> rels;
  std::vector<int> rdeg;
  for (const auto& [n, d] : dims_) {
    for (int v = 0; v < ring_->num_vars(); ++v) {
      DenseMatrix A = action(v, n);
      for (int j = 0; j < d; ++j) {
        std::vector<MTerm> t{{ring::Monomial::variable(v), offset[n] + j, 1}};
        for (std::size_t k = 0; k < A.rows(); ++k)
          if (A(k, j)) t.push_back({ring::Monomial{}, offset[n + 1] + static_cast<int>(k), F.neg(A(k, j))});
        rels.push_back(Vec(std::move(t), F));
        rdeg.push_back(n + 1);
      }
    }
  }
  ModulePresentation raw(GradedMatrix(cover, FreeModule(ring_, rdeg), std::move(rels)));
  pres_ = modgb::prune(raw).pres;
}

int FiniteLengthModule::dim(int n) const {
  auto it = dims_.find(n);
  return it == dims_.end() ? 0 : it->second;
}

int FiniteLengthModule::total_dim() const {
  int s = 0;
  for (const auto& [n, d] : dims_) s += d;
  return s;
}

int FiniteLengthModule::lo() const { return dims_.empty() ? 0 : dims_.begin()->first; }
int FiniteLengthModule::hi() const { return dims_.empty() ? -1 : dims_.rbegin()->first; }

DenseMatrix FiniteLengthModule::action(int v, int n) const {
  if (v < static_cast<int>(act_.size())) {
    auto it = act_[v].find(n);
    if (it != act_[v].end() && it->second.rows() == static_cast<std::size_t>(dim(n + 1)) &&
        it->second.cols() == static_cast<std::size_t>(dim(n)))
      return it->second;
  }
  return DenseMatrix(dim(n + 1), dim(n));
}

FiniteLengthModule FiniteLengthModule::shifted(int s) const {
  FiniteLengthModule m;
  m.ring_ = ring_;
  for (const auto& [n, d] : dims_) m.dims_[n - s] = d;
  m.act_.resize(act_.size());
  for (std::size_t v = 0; v < act_.size(); ++v)
    for (const auto& [n, A] : act_[v]) m.act_[v][n - s] = A;
  m.pres_ = pres_.shifted(s);
  return m;
}

FiniteLengthModule graded_dual(const FiniteLengthModule& M) {
  std::map<int, int> dims;
  for (const auto& [n, d] : M.dims()) dims[-n] = d;
  const int nv = M.ring()->num_vars();
  std::vector<std::map<int, DenseMatrix>> act(nv);
  for (int v = 0; v < nv; ++v)
    for (const auto& [n, d] : dims) act[v][n] = M.action(v, -n - 1).transpose();
  return FiniteLengthModule::from_linear_data(M.ring(), dims, std::move(act));
}

Extension yoneda_extension(const ModulePresentation& A, const FreeModule& L, const GradedMatrix& xi) {
  const GradedMatrix& d1 = A.relations();
  if (!(xi.source() == d1.source()) || !(xi.target() == L))
    throw Error(Errc::DegreeMismatch, "cocycle does not match the presentation");
  GradedMatrix d2 = modgb::syzygy_module(d1);
  if (!compose(xi, d2).normalized().is_zero()) throw Error(Errc::NotACocycle, "xi does not vanish on second syzygies");
  const auto& F = A.ring()->field();
  std::vector<Vec> neg;
  for (const auto& c : xi.columns()) neg.push_back(modgb::scale(c, F.neg(1), F));
  GradedMatrix rel = stack(GradedMatrix(L, xi.source(), neg), d1);
  FreeModule cover = L.direct_sum(A.cover());
  std::vector<Vec> fl, ta;
  for (int k = 0; k < L.rank(); ++k) fl.push_back(Vec::unit(k));
  for (int k = 0; k < L.rank(); ++k) ta.push_back(Vec());
  for (int k = 0; k < A.cover().rank(); ++k) ta.push_back(Vec::unit(k));
  return {ModulePresentation(rel), GradedMatrix(cover, L, fl), GradedMatrix(A.cover(), cover, ta)};
}

GradedMatrix cocycle_map(const std::vector<Vec>& cocycles, const FreeModule& F1) {
  FreeModule dual = F1.dual(0);
  std::vector<int> ldeg;
  std::vector<std::vector<MTerm>> cols(F1.rank());
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    auto d = modgb::vec_degree(cocycles[i], dual);
    if (!d) throw Error(Errc::NotACocycle, "cocycle is not homogeneous");
    ldeg.push_back(-*d);
    for (const auto& t : cocycles[i].terms()) cols[t.comp].push_back({t.mono, static_cast<int>(i), t.coef});
  }
  const auto& F = F1.ring()->field();
  std::vector<Vec> out;
  for (auto& c : cols) out.emplace_back(std::move(c), F);
  return GradedMatrix(FreeModule(F1.ring(), ldeg), F1, std::move(out));
}

GradedMatrix connecting_cocycle(const Extension& ext, const ModulePresentation& A) {
  const GradedMatrix& d1 = A.relations();
  const FreeModule& L = ext.from_L.source();
  const int lr = L.rank();
  const auto& F = A.ring()->field();
  std::vector<Vec> out;
  for (int j = 0; j < d1.cols(); ++j) {
    int deg = d1.source().degree(j);
    Vec target = ext.E.normal_form(modgb::shift_components(d1.column(j), lr));
    auto basis = modgb::free_basis_in_degree(L, deg);
    // solve target = sum c_b NF(b)
    std::vector<Vec> images;
    for (const auto& b : basis) images.push_back(ext.E.normal_form(b));
    std::map<std::pair<int, std::uint64_t>, int> idx;
    auto key = [&](const MTerm& t) {
      auto k = std::make_pair(t.comp, t.mono.packed());
      auto it = idx.find(k);
      if (it != idx.end()) return it->second;
      int n = static_cast<int>(idx.size());
      idx.emplace(k, n);
      return n;
    };
    for (const auto& v : images)
      for (const auto& t : v.terms()) key(t);
    for (const auto& t : target.terms()) key(t);
    DenseMatrix M(idx.size(), basis.size());
    std::vector<ring::Scalar> rhs(idx.size(), 0), x;
    for (std::size_t b = 0; b < images.size(); ++b)
      for (const auto& t : images[b].terms()) M(key(t), b) = t.coef;
    for (const auto& t : target.terms()) rhs[key(t)] = t.coef;
    if (!kernels::solve(M, rhs, x, F)) throw Error(Errc::NotACocycle, "relation does not lift into L");
    Vec l;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (x[b]) l = modgb::add(l, modgb::scale(basis[b], x[b], F), F);
    out.push_back(l);
  }
  return GradedMatrix(L, d1.source(), std::move(out));
}

bool euler_characteristic_holds(const FreeResolution& R, int lo, int hi) {
  for (int n = lo; n <= hi; ++n) {
    std::int64_t s = 0;
    for (int i = 0; i <= R.length(); ++i) {
      auto h = modgb::hilbert_series(ModulePresentation::free(R.free(i)));
      s += (i % 2 ? -1 : 1) * h.value(n);
    }
    if (s != modgb::hilbert_series(R.resolved).value(n)) return false;
  }
  return true;
}

bool is_complex(const FreeResolution& R) {
  for (int i = 0; i + 1 < R.length(); ++i)
    if (!compose(R.d[i], R.d[i + 1]).normalized().is_zero()) return false;
  return true;
}

}  // namespace bil::homalg

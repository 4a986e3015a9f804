#include "bil/modgb/matrix.hpp"

#include <string>

#include "bil/error.hpp"

namespace bil::modgb {

GradedMatrix::GradedMatrix(FreeModule target, FreeModule source, std::vector<Vec> columns)
    : target_(std::move(target)), source_(std::move(source)), cols_(std::move(columns)) {
  if (static_cast<int>(cols_.size()) != source_.rank())
    throw Error(Errc::DegreeMismatch, "column count does not match source rank");
  for (int j = 0; j < source_.rank(); ++j) {
    for (const auto& t : cols_[j].terms()) {
      if (t.comp < 0 || t.comp >= target_.rank())
        throw Error(Errc::DegreeMismatch, "column entry outside the target");
      if (t.mono.degree() + target_.degree(t.comp) != source_.degree(j))
        throw Error(Errc::DegreeMismatch, "entry (" + std::to_string(t.comp) + ", " + std::to_string(j) +
                                              ") is not of degree " +
                                              std::to_string(source_.degree(j) - target_.degree(t.comp)));
    }
  }
}

GradedMatrix::GradedMatrix(FreeModule target, FreeModule source)
    : target_(std::move(target)), source_(std::move(source)), cols_(source_.rank()) {}

GradedMatrix GradedMatrix::identity(const FreeModule& F) {
  std::vector<Vec> c;
  for (int i = 0; i < F.rank(); ++i) c.push_back(Vec::unit(i));
  return GradedMatrix(F, F, std::move(c));
}

GradedMatrix GradedMatrix::from_rows(const FreeModule& target, const std::vector<std::vector<Polynomial>>& rows,
                                     const std::vector<int>& source_degrees) {
  std::vector<int> sd = source_degrees;
  std::vector<Vec> cols(sd.size());
  const Field& F = target.ring()->field();
  for (std::size_t j = 0; j < sd.size(); ++j) {
    for (int i = 0; i < target.rank(); ++i) {
      const auto& p = rows[i][j];
      if (p.is_zero()) continue;
      cols[j] = add(cols[j], Vec::from_polynomial(p, i), F);
    }
  }
  return GradedMatrix(target, FreeModule(target.ring(), sd), std::move(cols));
}

GradedMatrix GradedMatrix::row_of(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<int> deg;
  std::vector<Vec> cols;
  for (const auto& g : gens) {
    auto d = g.degree();
    if (!g.is_zero() && !d) throw Error(Errc::NonHomogeneous, "generator is not homogeneous");
    deg.push_back(d.value_or(0));
    cols.push_back(Vec::from_polynomial(g, 0));
  }
  return GradedMatrix(FreeModule(ring, {0}), FreeModule(ring, deg), std::move(cols));
}

std::vector<std::vector<Polynomial>> GradedMatrix::entries() const {
  std::vector<std::vector<std::vector<ring::PTerm>>> t(rows(), std::vector<std::vector<ring::PTerm>>(cols()));
  for (int j = 0; j < cols(); ++j)
    for (const auto& x : cols_[j].terms()) t[x.comp][j].push_back({x.mono, x.coef});
  std::vector<std::vector<Polynomial>> out(rows(), std::vector<Polynomial>(cols()));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) out[i][j] = Polynomial::from_sorted(std::move(t[i][j]));
  return out;
}

bool GradedMatrix::is_zero() const {
  for (const auto& c : cols_)
    if (!c.is_zero()) return false;
  return true;
}

bool GradedMatrix::has_unit_entry() const {
  for (const auto& c : cols_)
    for (const auto& t : c.terms())
      if (t.mono.is_one()) return true;
  return false;
}

GradedMatrix GradedMatrix::transpose(int t) const {
  FreeModule nt = source_.dual(t), ns = target_.dual(t);
  std::vector<std::vector<MTerm>> tc(rows());
  for (int j = 0; j < cols(); ++j)
    for (const auto& x : cols_[j].terms()) tc[x.comp].push_back({x.mono, j, x.coef});
  std::vector<Vec> out;
  const Field& F = ring()->field();
  for (auto& c : tc) out.emplace_back(std::move(c), F);
  return GradedMatrix(nt, ns, std::move(out));
}

GradedMatrix GradedMatrix::select_columns(const std::vector<int>& idx) const {
  std::vector<Vec> c;
  for (int j : idx) c.push_back(cols_[j]);
  return GradedMatrix(target_, source_.subset(idx), std::move(c));
}

GradedMatrix GradedMatrix::drop_zero_columns() const {
  std::vector<int> idx;
  for (int j = 0; j < cols(); ++j)
    if (!cols_[j].is_zero()) idx.push_back(j);
  return select_columns(idx);
}

Vec GradedMatrix::apply(const Vec& v) const {
  const Field& F = ring()->field();
  Vec acc;
  for (const auto& t : v.terms()) acc = sub_mul(acc, t.mono, F.neg(t.coef), cols_[t.comp], F);
  return acc;
}

GradedMatrix GradedMatrix::shifted(int s) const {
  return GradedMatrix(target_.shifted(s), source_.shifted(s), cols_);
}

GradedMatrix GradedMatrix::normalized() const {
  if (!ring()->is_quotient()) return *this;
  std::vector<Vec> c;
  for (const auto& v : cols_) c.push_back(normalize(v, *ring()));
  return GradedMatrix(target_, source_, std::move(c));
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
  std::vector<Vec> c;
  for (const auto& col : b.columns()) c.push_back(a.apply(col));
  return GradedMatrix(a.target(), b.source(), std::move(c));
}

GradedMatrix concat(const GradedMatrix& a, const GradedMatrix& b) {
  auto c = a.columns();
  c.insert(c.end(), b.columns().begin(), b.columns().end());
  return GradedMatrix(a.target(), a.source().direct_sum(b.source()), std::move(c));
}

GradedMatrix direct_sum(const GradedMatrix& a, const GradedMatrix& b) {
  auto c = a.columns();
  for (const auto& v : b.columns()) c.push_back(shift_components(v, a.rows()));
  return GradedMatrix(a.target().direct_sum(b.target()), a.source().direct_sum(b.source()), std::move(c));
}

GradedMatrix stack(const GradedMatrix& a, const GradedMatrix& b) {
  const Field& F = a.ring()->field();
  std::vector<Vec> c;
  for (int j = 0; j < a.cols(); ++j) c.push_back(add(a.column(j), shift_components(b.column(j), a.rows()), F));
  return GradedMatrix(a.target().direct_sum(b.target()), a.source(), std::move(c));
}

}  // namespace bil::modgb

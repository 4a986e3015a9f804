#include "bil/modgb/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "bil/error.hpp"

namespace bil::modgb {

namespace {

// out = a[pos..] - c*m*b
void merge_sub(const std::vector<MTerm>& a, std::size_t pos, const Monomial& m, Scalar c, const Vec& b,
               const Field& F, std::vector<MTerm>& out) {
  out.clear();
  const auto& tb = b.terms();
  out.reserve(a.size() - pos + tb.size());
  std::size_t i = pos, j = 0;
  const Scalar nc = F.neg(c);
  while (i < a.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.insert(out.end(), a.begin() + static_cast<long>(i), a.end());
      break;
    }
    Monomial mb = tb[j].mono * m;
    int cb = tb[j].comp;
    if (i == a.size() || term_greater(mb, cb, a[i].mono, a[i].comp)) {
      out.push_back({mb, cb, F.mul(nc, tb[j].coef)});
      ++j;
    } else if (term_greater(a[i].mono, a[i].comp, mb, cb)) {
      out.push_back(a[i++]);
    } else {
      Scalar v = F.add(a[i].coef, F.mul(nc, tb[j].coef));
      if (v) out.push_back({mb, cb, v});
      ++i;
      ++j;
    }
  }
}

}  // namespace

Reducer::Reducer(const Field& F, int rank) : field_(F), by_comp_(static_cast<std::size_t>(std::max(rank, 0))) {}

void Reducer::add(const Vec& monic) {
  const auto& lt = monic.leading();
  if (lt.comp >= static_cast<int>(by_comp_.size())) by_comp_.resize(lt.comp + 1);
  by_comp_[lt.comp].push_back({lt.mono, static_cast<int>(basis_.size())});
  basis_.push_back(monic);
}

int Reducer::find(const Monomial& m, int comp) const {
  if (comp >= static_cast<int>(by_comp_.size())) return -1;
  for (const auto& [lm, k] : by_comp_[comp])
    if (lm.degree() <= m.degree() && lm.divides(m)) return k;
  return -1;
}

namespace {
std::atomic<bool> g_fault{false};
}

void set_reduction_fault(bool on) { g_fault = on; }
bool reduction_fault() { return g_fault; }

Vec Reducer::reduce(const Vec& v, bool skip_newest) const {
  std::vector<MTerm> out, rest = v.terms(), tmp;
  std::size_t pos = 0;
  const int skip = skip_newest ? static_cast<int>(basis_.size()) - 1 : -1;
  while (pos < rest.size()) {
    const MTerm lt = rest[pos];
    int k = find(lt.mono, lt.comp);
    if (k < 0 || k == skip) {
      out.push_back(lt);
      ++pos;
      continue;
    }
    merge_sub(rest, pos, lt.mono / basis_[k].leading().mono, lt.coef, basis_[k], field_, tmp);
    std::swap(rest, tmp);
    pos = 0;
  }
  return Vec::from_sorted(std::move(out));
}

Vec Reducer::reduce_traced(const Vec& v, Vec& trace, const std::vector<Vec>& traces) const {
  std::vector<MTerm> out, rest = v.terms(), tmp;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const MTerm lt = rest[pos];
    int k = find(lt.mono, lt.comp);
    if (k < 0) {
      out.push_back(lt);
      ++pos;
      continue;
    }
    Monomial q = lt.mono / basis_[k].leading().mono;
    merge_sub(rest, pos, q, lt.coef, basis_[k], field_, tmp);
    std::swap(rest, tmp);
    pos = 0;
    trace = sub_mul(trace, q, lt.coef, traces[k], field_);
  }
  return Vec::from_sorted(std::move(out));
}

std::vector<std::vector<Monomial>> Reducer::leading_monomials(int rank) const {
  std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(rank));
  for (const auto& b : basis_)
    if (b.leading().comp < rank) out[b.leading().comp].push_back(b.leading().mono);
  return out;
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
  int comp;
  int degree;
};

class Engine {
 public:
  Engine(const FreeModule& F, const std::vector<GBInput>& in, const GBOptions& o)
      : F_(F), field_(F.ring()->field()), in_(in), opt_(o), red_(field_, F.rank()) {}

  GBResult run();

 private:
  void add_element(Vec v, Vec trace, int degree);
  void update(int t);
  void process(Vec v, Vec trace, int degree, int input_index);

  const FreeModule& F_;
  const Field& field_;
  const std::vector<GBInput>& in_;
  GBOptions opt_;
  Reducer red_;
  std::vector<Vec> traces_;
  std::vector<int> degrees_;
  std::vector<Pair> pending_;
  GBResult res_;
};

void Engine::add_element(Vec v, Vec trace, int degree) {
  Scalar c = field_.inv(v.leading().coef);
  if (c != 1) {
    v = scale(v, c, field_);
    if (opt_.track) trace = scale(trace, c, field_);
  }
  red_.add(v);
  traces_.push_back(std::move(trace));
  degrees_.push_back(degree);
  update(static_cast<int>(degrees_.size()) - 1);
}

void Engine::update(int t) {
  const auto& B = red_.basis();
  const MTerm& h = B[t].leading();
  std::vector<Pair> C;
  for (int i = 0; i < t; ++i) {
    const MTerm& g = B[i].leading();
    if (g.comp != h.comp) continue;
    Monomial l = g.mono.lcm(h.mono);
    C.push_back({i, t, l, h.comp, l.degree() + F_.degree(h.comp)});
  }
  std::vector<Pair> D;
  std::vector<bool> cop;
  for (std::size_t a = 0; a < C.size(); ++a) {
    const Pair& p = C[a];
    bool coprime = F_.rank() == 1 && B[p.i].leading().mono.coprime(h.mono);
    bool keep = true;
    if (!coprime) {
      for (std::size_t b = a + 1; b < C.size() && keep; ++b)
        if (C[b].lcm.divides(p.lcm)) keep = false;
      for (std::size_t b = 0; b < D.size() && keep; ++b)
        if (D[b].lcm.divides(p.lcm)) keep = false;
    }
    if (keep) {
      D.push_back(p);
      cop.push_back(coprime);
    }
  }
  std::vector<Pair> kept;
  kept.reserve(pending_.size() + D.size());
  for (const auto& p : pending_) {
    bool drop = p.comp == h.comp && h.mono.divides(p.lcm) &&
                !(B[p.i].leading().mono.lcm(h.mono) == p.lcm) && !(B[p.j].leading().mono.lcm(h.mono) == p.lcm);
    if (!drop) kept.push_back(p);
  }
  for (std::size_t a = 0; a < D.size(); ++a)
    if (opt_.track || !cop[a]) kept.push_back(D[a]);
  pending_ = std::move(kept);
}

void Engine::process(Vec v, Vec trace, int degree, int input_index) {
  Vec r = opt_.track ? red_.reduce_traced(v, trace, traces_) : red_.reduce(v);
  if (r.is_zero()) {
    if (opt_.track && !trace.is_zero()) res_.syzygies.push_back(std::move(trace));
    return;
  }
  if (input_index >= 0 && !in_[input_index].background) res_.minimal.push_back(input_index);
  add_element(std::move(r), std::move(trace), degree);
}

GBResult Engine::run() {
  const int n = static_cast<int>(in_.size());
  std::vector<int> deg(n);
  std::vector<int> order;
  for (int j = 0; j < n; ++j) {
    if (in_[j].v.is_zero()) {
      if (opt_.track) res_.syzygies.push_back(Vec::unit(j));
      continue;
    }
    auto d = vec_degree(in_[j].v, F_);
    if (!d) throw Error(Errc::NonHomogeneous, "Gröbner input is not homogeneous");
    deg[j] = *d;
    order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[a] != deg[b]) return deg[a] < deg[b];
    return in_[a].background && !in_[b].background;
  });
  std::size_t next = 0;
  while (true) {
    int d = std::numeric_limits<int>::max();
    if (next < order.size()) d = deg[order[next]];
    for (const auto& p : pending_) d = std::min(d, p.degree);
    if (d == std::numeric_limits<int>::max()) break;
    if (d > opt_.max_degree) {
      res_.complete = false;
      break;
    }
    while (true) {
      int best = -1;
      for (int a = 0; a < static_cast<int>(pending_.size()); ++a) {
        const Pair& p = pending_[a];
        if (p.degree != d) continue;
        if (best < 0) {
          best = a;
          continue;
        }
        const Pair& q = pending_[best];
        if (p.lcm.key() < q.lcm.key() || (p.lcm.key() == q.lcm.key() && (p.comp > q.comp ||
            (p.comp == q.comp && std::pair(p.j, p.i) < std::pair(q.j, q.i)))))
          best = a;
      }
      if (best < 0) break;
      Pair p = pending_[best];
      pending_.erase(pending_.begin() + best);
      const auto& B = red_.basis();
      Monomial mi = p.lcm / B[p.i].leading().mono, mj = p.lcm / B[p.j].leading().mono;
      Vec s = sub_mul(mul_term(B[p.i], mi, 1, field_), mj, 1, B[p.j], field_);
      Vec tr;
      if (opt_.track) tr = sub_mul(mul_term(traces_[p.i], mi, 1, field_), mj, 1, traces_[p.j], field_);
      process(std::move(s), std::move(tr), d, -1);
    }
    while (next < order.size() && deg[order[next]] == d) {
      int j = order[next++];
      process(in_[j].v, opt_.track ? Vec::unit(j) : Vec{}, d, j);
    }
  }
  // interreduce tails, smallest leading terms first
  const auto& B = red_.basis();
  std::vector<int> idx(B.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return term_greater(B[b].leading().mono, B[b].leading().comp, B[a].leading().mono, B[a].leading().comp);
  });
  if (!opt_.reduce) {
    for (int k : idx) {
      res_.basis.push_back(B[k]);
      if (opt_.track) res_.traces.push_back(traces_[k]);
    }
  } else {
    Reducer done(field_, F_.rank());
    std::vector<Vec> done_traces;
    for (int k : idx) {
      const Vec& g = B[k];
      Vec tail = Vec::from_sorted(std::vector<MTerm>(g.terms().begin() + 1, g.terms().end()));
      Vec tr = opt_.track ? traces_[k] : Vec{};
      Vec rt;
      if (opt_.track) {
        Vec sub_tr;
        rt = done.reduce_traced(tail, sub_tr, done_traces);
        tr = add(tr, sub_tr, field_);
      } else {
        rt = done.reduce(tail);
      }
      std::vector<MTerm> terms{g.leading()};
      terms.insert(terms.end(), rt.terms().begin(), rt.terms().end());
      Vec red = Vec::from_sorted(std::move(terms));
      done.add(red);
      done_traces.push_back(tr);
      res_.basis.push_back(red);
      if (opt_.track) res_.traces.push_back(std::move(tr));
    }
  }
  std::sort(res_.minimal.begin(), res_.minimal.end());
  return std::move(res_);
}

}  // namespace

GBResult run_groebner(const FreeModule& F, const std::vector<GBInput>& inputs, const GBOptions& opt) {
  Engine e(F, inputs, opt);
  return e.run();
}

}  // namespace bil::modgb

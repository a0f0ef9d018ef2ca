#include "mclat/statepoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "mclat/errors.hpp"

namespace mclat {

int pair_var_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n) throw std::invalid_argument("pair_var_index: out of range");
  // rows of the upper triangle: row i holds (i,i)..(i,n)
  return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

namespace {

// Shared state-enumeration order: vertices incident to at least one edge
// first, isolated vertices folded in as a single n^k factor.
struct EnumPlan {
  std::vector<int> order;             // non-isolated vertices
  int isolated = 0;                   // trailing isolated count
  // edges_at[d]: edges whose later endpoint (in `order`) sits at depth d,
  // as (earlier depth, is_loop) pairs
  std::vector<std::vector<std::pair<int, bool>>> edges_at;
};

EnumPlan make_plan(const Multigraph& g) {
  int n = g.num_vertices();
  std::vector<bool> touched(n, false);
  for (const auto& [u, v] : g.edges()) touched[u] = touched[v] = true;
  EnumPlan plan;
  std::vector<int> depth_of(n, -1);
  for (int v = 0; v < n; ++v)
    if (touched[v]) {
      depth_of[v] = int(plan.order.size());
      plan.order.push_back(v);
    } else {
      plan.isolated++;
    }
  plan.edges_at.resize(plan.order.size());
  for (const auto& [u, v] : g.edges()) {
    int du = depth_of[u], dv = depth_of[v];
    if (u == v)
      plan.edges_at[du].emplace_back(du, true);
    else
      plan.edges_at[std::max(du, dv)].emplace_back(std::min(du, dv), false);
  }
  return plan;
}

void check_state_cap(const Multigraph& g, int n, const Int& cap) {
  if (n < 1) throw std::invalid_argument("state polynomial: n must be >= 1");
  Int total = int_pow(Int(n), static_cast<unsigned long>(g.num_vertices()));
  if (total > cap)
    throw CapExceeded("state enumeration: n^|V| = " + total.get_str() +
                      " exceeds cap " + cap.get_str());
}

}  // namespace

SymbolicStatePoly z_state_symbolic(const Multigraph& g, int n, const Int& state_cap) {
  check_state_cap(g, n, state_cap);
  EnumPlan plan = make_plan(g);
  int depth = int(plan.order.size());
  int arity = n * (n + 1) / 2;
  Int iso_factor = int_pow(Int(n), static_cast<unsigned long>(plan.isolated));

  SymbolicStatePoly out;
  out.n = n;
  out.poly = ExactPoly(arity);

  std::vector<int> state(depth, 0);     // 1-based states per depth
  std::vector<long> exps(arity, 0);     // running exponent vector
  ExactPoly::Exps key(arity);

  std::function<void(int)> rec = [&](int d) {
    if (d == depth) {
      for (int i = 0; i < arity; ++i) key[i] = exps[i];
      out.poly.add_term(key, iso_factor);
      return;
    }
    for (int s = 1; s <= n; ++s) {
      state[d] = s;
      for (const auto& [pd, loop] : plan.edges_at[d]) {
        int t = loop ? s : state[pd];
        exps[pair_var_index(n, std::min(s, t), std::max(s, t))]++;
      }
      rec(d + 1);
      for (const auto& [pd, loop] : plan.edges_at[d]) {
        int t = loop ? s : state[pd];
        exps[pair_var_index(n, std::min(s, t), std::max(s, t))]--;
      }
    }
  };
  rec(0);
  return out;
}

PseudoStatePoly z_state_weighted(const Multigraph& g, const WeightMatrix& w,
                                 const Int& state_cap) {
  int n = w.states();
  check_state_cap(g, n, state_cap);
  EnumPlan plan = make_plan(g);
  int depth = int(plan.order.size());
  Int iso_factor = int_pow(Int(n), static_cast<unsigned long>(plan.isolated));

  PseudoStatePoly out{w, ExactPoly(1)};

  std::vector<int> state(depth, 0);
  // per-depth accumulators: product of entry primes / sum of entry primes
  std::vector<Int> coeff(depth + 1), expsum(depth + 1);
  coeff[0] = 1;
  expsum[0] = 0;
  ExactPoly::Exps key(1);

  std::function<void(int)> rec = [&](int d) {
    if (d == depth) {
      key[0] = expsum[d];
      out.poly.add_term(key, coeff[d] * iso_factor);
      return;
    }
    for (int s = 1; s <= n; ++s) {
      state[d] = s;
      coeff[d + 1] = coeff[d];
      expsum[d + 1] = expsum[d];
      for (const auto& [pd, loop] : plan.edges_at[d]) {
        const Int& p = w.prime(s, loop ? s : state[pd]);
        coeff[d + 1] *= p;
        expsum[d + 1] += p;
      }
      rec(d + 1);
    }
  };
  rec(0);
  return out;
}

long edge_count_w1(const ExactPoly& z) {
  if (z.arity() != 1) throw std::invalid_argument("edge_count_w1: univariate input required");
  Int total = z.coeff_sum();
  auto k = exact_log(total, 2);
  if (!k)
    throw std::invalid_argument("edge_count_w1: coefficient sum " + total.get_str() +
                                " is not a power of two (corrupted input?)");
  return long(*k);
}

DecodedTerm decode_term(const Int& c, const Int& s, const WeightMatrix& w) {
  DecodedTerm t;
  t.coefficient = c;
  t.exponent = s;
  Int rest = c;
  Int expsum = 0;
  for (int i = 1; i <= w.states(); ++i) {
    for (int j = 1; j <= i; ++j) {
      const Int& p = w.prime(i, j);
      long mult = 0;
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++mult;
      }
      if (mult > 0) {
        t.index_multiset[{j, i}] = mult;
        expsum += p * mult;
        if (i != j) {
          t.support.insert(i);
          t.support.insert(j);
        }
      }
    }
  }
  t.cofactor = rest;
  if (expsum != s)
    throw std::invalid_argument(
        "decode_term: prime exponents sum to " + expsum.get_str() + " but term exponent is " +
        s.get_str() + " (matrix does not match this polynomial)");
  return t;
}

Multigraph reconstruct_pseudo(const PseudoStatePoly& z) {
  return reconstruct_pseudo(z.poly, z.matrix);
}

Multigraph reconstruct_pseudo(const ExactPoly& z, const WeightMatrix& w) {
  if (z.arity() != 1)
    throw std::invalid_argument("reconstruct_pseudo: univariate input required");
  if (z.is_zero())
    throw std::invalid_argument("reconstruct_pseudo: zero polynomial");
  if (w.states() < 2)
    throw std::invalid_argument("reconstruct_pseudo: need at least 2 states");

  std::vector<DecodedTerm> decoded;
  for (const auto& [exps, c] : z.terms()) decoded.push_back(decode_term(c, exps[0], w));

  // every state contributes one index pair per edge
  long m = 0;
  for (const auto& [pair, mult] : decoded.front().index_multiset) m += mult;
  for (const auto& t : decoded) {
    long mt = 0;
    for (const auto& [pair, mult] : t.index_multiset) mt += mult;
    if (mt != m)
      throw std::invalid_argument("reconstruct_pseudo: terms decode to different edge counts");
  }

  AdmissibilityCertificate cert = verify_admissible(w, m);
  if (!cert.ok)
    throw std::invalid_argument("reconstruct_pseudo: matrix not admissible for edge budget " +
                                std::to_string(m) + ": " + cert.detail);
  if (w.states() < 2 * m)
    throw std::invalid_argument("reconstruct_pseudo: need states >= 2 * edge budget (" +
                                std::to_string(w.states()) + " < " + std::to_string(2 * m) + ")");

  // maximal-support term; map iteration order makes ties deterministic
  // (smallest exponent wins)
  const DecodedTerm* best = &decoded.front();
  for (const auto& t : decoded)
    if (t.support.size() > best->support.size()) best = &t;

  for (const auto& [pair, mult] : best->index_multiset)
    if (pair.first == pair.second)
      throw std::invalid_argument(
          "reconstruct_pseudo: maximal-support term contains a diagonal pair; "
          "graphs with loops are not supported");

  std::map<int, int> vertex_of;
  for (int idx : best->support) {
    int v = int(vertex_of.size());
    vertex_of[idx] = v;
  }
  std::vector<Multigraph::Edge> edges;
  for (const auto& [pair, mult] : best->index_multiset)
    for (long k = 0; k < mult; ++k)
      edges.emplace_back(vertex_of[pair.first], vertex_of[pair.second]);
  Multigraph core(int(vertex_of.size()), std::move(edges));

  // cofactor = n^isolated * |Aut(core)|
  Int aut(automorphism_count(core));
  if (!mpz_divisible_p(best->cofactor.get_mpz_t(), aut.get_mpz_t()))
    throw std::invalid_argument("reconstruct_pseudo: cofactor " + best->cofactor.get_str() +
                                " is not a multiple of |Aut| = " + aut.get_str());
  Int q = best->cofactor / aut;
  long isolated = 0;
  if (q != 1) {
    auto k = exact_log(q, Int(w.states()));
    if (!k)
      throw std::invalid_argument("reconstruct_pseudo: cofactor is not of the form n^k * |Aut| "
                                  "(inadmissible matrix or cap violation?)");
    isolated = long(*k);
  }
  return Multigraph::disjoint_union(core, Multigraph(int(isolated), {}));
}

Multigraph reconstruct_symbolic(const SymbolicStatePoly& z) {
  int n = z.n;
  if (n < 2) throw std::invalid_argument("reconstruct_symbolic: need n >= 2");
  if (z.poly.is_zero()) throw std::invalid_argument("reconstruct_symbolic: zero polynomial");
  if (z.poly.arity() != n * (n + 1) / 2)
    throw std::invalid_argument("reconstruct_symbolic: polynomial arity does not match n");

  auto vertex_count = exact_log(z.poly.coeff_sum(), Int(n));
  if (!vertex_count)
    throw std::invalid_argument("reconstruct_symbolic: coefficient sum is not a power of n");

  // variable index -> state pair
  std::vector<std::pair<int, int>> pair_of(n * (n + 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) pair_of[pair_var_index(n, i, j)] = {i, j};

  // maximal-support term, smallest exponent vector on ties
  const ExactPoly::Exps* best = nullptr;
  std::size_t best_support = 0;
  for (const auto& [exps, c] : z.poly.terms()) {
    std::set<int> sup;
    for (std::size_t k = 0; k < exps.size(); ++k)
      if (exps[k] > 0) {
        sup.insert(pair_of[k].first);
        sup.insert(pair_of[k].second);
      }
    if (best == nullptr || sup.size() > best_support) {
      best = &exps;
      best_support = sup.size();
    }
  }

  std::map<int, int> vertex_of;
  std::vector<Multigraph::Edge> edges;
  for (std::size_t k = 0; k < best->size(); ++k) {
    const Int& e = (*best)[k];
    if (e == 0) continue;
    auto [i, j] = pair_of[k];
    for (auto idx : {i, j})
      if (!vertex_of.count(idx)) vertex_of[idx] = int(vertex_of.size());
    long mult = long(to_ulong_checked(e, "edge multiplicity"));
    for (long t = 0; t < mult; ++t) edges.emplace_back(vertex_of[i], vertex_of[j]);
  }
  Multigraph core(int(vertex_of.size()), std::move(edges));
  long isolated = long(*vertex_count) - core.num_vertices();
  if (isolated < 0)
    throw std::invalid_argument("reconstruct_symbolic: support exceeds vertex count");
  return Multigraph::disjoint_union(core, Multigraph(int(isolated), {}));
}

ExactPoly negami_specialize(const SymbolicStatePoly& z) {
  int n = z.n;
  ExactPoly x_plus_y = ExactPoly::term2(1, 1, 0) + ExactPoly::term2(1, 0, 1);
  ExactPoly y = ExactPoly::term2(1, 0, 1);
  std::vector<ExactPoly> images;
  images.reserve(n * (n + 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) images.push_back(i == j ? x_plus_y : y);
  return z.poly.substitute(images);
}

}  // namespace mclat

#include "layerlie/charcalc.hpp"

#include <algorithm>
#include <sstream>

namespace layerlie {

namespace {

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

mpz_class integer_value(const Rat& x, const char* what) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer");
  return c.get_num();
}

}  // namespace

ConjectureViolation::ConjectureViolation(std::string check_, Weight lambda_,
                                         std::string detail_)
    : std::runtime_error("conjecture violation [" + check_ + "] at " +
                         weight_str(lambda_) + ": " + detail_),
      check(std::move(check_)),
      lambda(std::move(lambda_)),
      detail(std::move(detail_)) {}

int OrderedWeightList::index_of(const Weight& w) const {
  auto it = position.find(w);
  return it == position.end() ? -1 : it->second;
}

AlgebraContext make_context(LieType t, long long max_order) {
  AlgebraContext ctx{build_root_system(t), {}, {}, {}, {}};
  // Enumerate the group first so oversized types are refused before any
  // polynomial expansion is attempted.
  ctx.group = enumerate_group(ctx.rs, max_order);
  ctx.D = dim_polynomial(ctx.rs);
  ctx.R = layer_polynomial(ctx.rs);
  ctx.ztab = zgroup_shift_table(ctx.rs);
  return ctx;
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("dominant_weights_below requires a dominant weight");
  const int r = rs.rank;
  // For dominant mu <= lambda, the root-basis coordinates of lambda - mu are
  // integers in the box 0..floor(c_i(lambda)), since dominant weights have
  // non-negative root-basis coordinates.
  RatWeight c = to_root_basis(rs, lambda);
  std::vector<Int> bound(r);
  for (int i = 0; i < r; ++i) {
    mpz_class f = c[i].get_num() / c[i].get_den();
    bound[i] = f.get_si();
  }
  std::vector<Weight> out;
  std::vector<Int> n(r, 0);
  while (true) {
    Weight mu = lambda;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) mu[j] -= rs.cartan[j][i] * n[i];
    if (is_dominant(mu)) out.push_back(mu);
    int pos = r - 1;
    while (pos >= 0 && n[pos] == bound[pos]) { n[pos] = 0; --pos; }
    if (pos < 0) break;
    ++n[pos];
  }
  return out;
}

OrderedWeightList ordered_by_r_bound(const AlgebraContext& ctx, const mpz_class& bound) {
  const int r = ctx.rs.rank;
  std::vector<Int> box(r);
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    Rat lin = ctx.R.coefficient(e);
    if (lin <= 0)
      throw std::logic_error("layer polynomial has a non-positive linear coefficient");
    // R(mu) >= 1 + lin * mu_i since all coefficients are positive.
    Rat cap = (Rat(bound) - 1) / lin;
    box[i] = std::max<Int>(-1, mpz_class(cap.get_num() / cap.get_den()).get_si());
  }
  std::vector<std::pair<Weight, mpz_class>> found;
  std::vector<Int> mu(r, 0);
  while (true) {
    RatWeight pt = to_rational(Weight(mu));
    Rat val = poly_eval(ctx.R, pt);
    if (val <= Rat(bound))
      found.emplace_back(Weight(mu), integer_value(val, "layer polynomial value"));
    int pos = r - 1;
    while (pos >= 0 && mu[pos] == box[pos]) { mu[pos] = 0; --pos; }
    if (pos < 0) break;
    ++mu[pos];
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first > b.first;  // larger first label earlier
  });
  OrderedWeightList order;
  for (size_t i = 0; i < found.size(); ++i) {
    order.weights.push_back(found[i].first);
    order.r_values.push_back(found[i].second);
    order.position[found[i].first] = static_cast<int>(i);
  }
  return order;
}

OrderedWeightList ordered_upto(const AlgebraContext& ctx, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("ordered_upto requires a dominant weight");
  mpz_class r_lambda =
      integer_value(poly_eval(ctx.R, to_rational(lambda)), "layer polynomial value");
  return ordered_by_r_bound(ctx, r_lambda);
}

SignedCharCombo orbit_sum_expansion(const AlgebraContext& ctx, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("orbit_sum_expansion requires a dominant weight");
  std::map<Weight, Int> acc;
  for (const GroupElem& w : ctx.group.elems) {
    Weight shifted = lambda;
    for (int i = 0; i < ctx.rs.rank; ++i) shifted[i] += w.rho_image[i] - 1;
    AuxResolution res = shifted_resolve(ctx.rs, shifted);
    if (res.zero) continue;
    int sign = (w.length % 2 == 0) ? res.sign : -res.sign;
    Int& v = acc[res.dominant];
    v += sign;
    if (v == 0) acc.erase(res.dominant);
  }
  long long osize = orbit_size(ctx.rs, lambda);
  SignedCharCombo out;
  for (const auto& [mu, v] : acc) {
    long long scaled = v * osize;
    if (scaled % ctx.group.order != 0)
      throw ConjectureViolation(
          "integrality", lambda,
          "coefficient at " + weight_str(mu) + " is " + std::to_string(scaled) + "/" +
              std::to_string(ctx.group.order));
    out[mu] = scaled / ctx.group.order;
  }
  return out;
}

SignedCharCombo layer_sum_expansion(const AlgebraContext& ctx, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("layer_sum_expansion requires a dominant weight");
  SignedCharCombo out;
  for (const auto& [shift, count] : ctx.ztab.entries) {
    AuxResolution res = shifted_resolve(ctx.rs, weight_add(lambda, shift));
    if (res.zero) continue;
    Int& v = out[res.dominant];
    v += count * res.sign;
    if (v == 0) out.erase(res.dominant);
  }
  return out;
}

UnitriangularMatrix invert_unitriangular(const UnitriangularMatrix& m) {
  const size_t n = m.rows.size();
  UnitriangularMatrix inv;
  inv.rows.resize(n);
  for (size_t i = 0; i < n; ++i) inv.rows[i].assign(i + 1, 0);
  for (size_t j = 0; j < n; ++j) {
    inv.rows[j][j] = 1;
    for (size_t i = j + 1; i < n; ++i) {
      Int s = 0;
      for (size_t k = j; k < i; ++k) s += m.rows[i][k] * inv.rows[k][j];
      inv.rows[i][j] = -s;
    }
  }
  return inv;
}

namespace {

// Rows of M^-1 or C^-1 laid out over the ordered list, with triangularity
// enforced.
UnitriangularMatrix expansion_matrix(
    const AlgebraContext& ctx, const OrderedWeightList& order,
    SignedCharCombo (*expand)(const AlgebraContext&, const Weight&),
    const char* conjecture) {
  const size_t n = order.size();
  UnitriangularMatrix m;
  m.rows.assign(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    SignedCharCombo row = expand(ctx, order.weights[i]);
    for (const auto& [mu, v] : row) {
      int j = order.index_of(mu);
      if (j < 0 || static_cast<size_t>(j) > i)
        throw ConjectureViolation(conjecture, order.weights[i],
                                  "support at " + weight_str(mu) +
                                      " is not earlier in the R-ordering");
      m.rows[i][j] = v;
    }
    if (m.rows[i][i] != 1)
      throw ConjectureViolation(conjecture, order.weights[i],
                                "diagonal coefficient is " + std::to_string(m.rows[i][i]));
  }
  return m;
}

DominantExpansion row_as_expansion(const OrderedWeightList& order,
                                   const std::vector<Int>& row) {
  DominantExpansion e;
  for (size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) e[order.weights[j]] = row[j];
  return e;
}

}  // namespace

DominantExpansion character_in_orbit_basis(const AlgebraContext& ctx, const Weight& lambda) {
  OrderedWeightList order = ordered_upto(ctx, lambda);
  UnitriangularMatrix minv =
      expansion_matrix(ctx, order, &orbit_sum_expansion, "triangular");
  UnitriangularMatrix m = invert_unitriangular(minv);
  int i = order.index_of(lambda);
  for (Int v : m.rows[i])
    if (v < 0)
      throw ConjectureViolation("nonneg", lambda,
                                "negative weight multiplicity " + std::to_string(v));
  return row_as_expansion(order, m.rows[i]);
}

DominantExpansion layer_decomposition(const AlgebraContext& ctx, const Weight& lambda) {
  OrderedWeightList order = ordered_upto(ctx, lambda);
  UnitriangularMatrix cinv =
      expansion_matrix(ctx, order, &layer_sum_expansion, "triangular");
  UnitriangularMatrix c = invert_unitriangular(cinv);
  int i = order.index_of(lambda);
  std::vector<Weight> pplus = dominant_weights_below(ctx.rs, lambda);
  for (size_t j = 0; j < order.size(); ++j) {
    Int v = c.rows[i][j];
    if (v < 0)
      throw ConjectureViolation("nonneg", lambda,
                                "negative layer coefficient " + std::to_string(v) +
                                    " at " + weight_str(order.weights[j]));
    if (v != 0 &&
        std::find(pplus.begin(), pplus.end(), order.weights[j]) == pplus.end())
      throw ConjectureViolation("nonneg", lambda,
                                "layer coefficient outside P_+(lambda) at " +
                                    weight_str(order.weights[j]));
  }
  return row_as_expansion(order, c.rows[i]);
}

UnitriangularMatrix dominance_matrix(const RootSystem& rs, const OrderedWeightList& order) {
  const size_t n = order.size();
  UnitriangularMatrix d;
  d.rows.assign(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j)
      d.rows[i][j] =
          is_in_Q_plus(rs, weight_sub(order.weights[i], order.weights[j])) ? 1 : 0;
  return d;
}

DominantExpansion freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("freudenthal_multiplicities requires a dominant weight");
  std::vector<Weight> pplus = dominant_weights_below(rs, lambda);
  // Height of lambda - mu; recursion descends from lambda.
  auto depth = [&](const Weight& mu) {
    RatWeight c = to_root_basis(rs, weight_sub(lambda, mu));
    Rat h = 0;
    for (const Rat& x : c) h += x;
    return integer_value(h, "weight-diagram depth");
  };
  std::sort(pplus.begin(), pplus.end(), [&](const Weight& a, const Weight& b) {
    mpz_class da = depth(a), db = depth(b);
    if (da != db) return da < db;
    return a < b;
  });
  std::map<Weight, mpz_class> mult;
  mult[lambda] = 1;
  RatWeight lam_rho = to_rational(weight_add(lambda, rs.rho));
  Rat lam_norm = inner_product(rs, lam_rho, lam_rho);
  for (const Weight& mu : pplus) {
    if (mu == lambda) continue;
    Rat num = 0;
    for (const Root& a : rs.positive_roots) {
      for (Int j = 1;; ++j) {
        Weight nu = mu;
        for (int i = 0; i < rs.rank; ++i) nu[i] += j * a.labels[i];
        Weight dom = dominantize(rs, nu).first;
        auto it = mult.find(dom);
        if (it == mult.end()) break;  // left the weight diagram
        RatWeight nu_r = to_rational(nu);
        RatWeight a_r = to_rational(a.labels);
        num += inner_product(rs, nu_r, a_r) * Rat(it->second);
      }
    }
    RatWeight mu_rho = to_rational(weight_add(mu, rs.rho));
    Rat denom = lam_norm - inner_product(rs, mu_rho, mu_rho);
    mult[mu] = integer_value(2 * num / denom, "Freudenthal multiplicity");
  }
  DominantExpansion out;
  for (const auto& [mu, v] : mult)
    if (v != 0) out[mu] = v.get_si();
  return out;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

VerifyWorkspace::VerifyWorkspace(const AlgebraContext& ctx, const Weight& lambda)
    : ctx_(ctx), order_(ordered_upto(ctx, lambda)) {
  m_inv_ = expansion_matrix(ctx_, order_, &orbit_sum_expansion, "triangular");
  c_inv_ = expansion_matrix(ctx_, order_, &layer_sum_expansion, "triangular");
  m_ = invert_unitriangular(m_inv_);
  c_ = invert_unitriangular(c_inv_);
  dom_ = dominance_matrix(ctx_.rs, order_);
  orbit_sizes_.reserve(order_.size());
  for (const Weight& w : order_.weights)
    orbit_sizes_.push_back(orbit_size(ctx_.rs, w));
}

Report VerifyWorkspace::report_for(const Weight& mu) const {
  int idx = order_.index_of(mu);
  if (idx < 0) throw std::invalid_argument("weight not in the ordered list");
  const size_t i = static_cast<size_t>(idx);
  Report rep;
  auto add = [&](const std::string& name, bool pass, const std::string& witness) {
    rep.checks.push_back({name, pass, pass ? "" : witness});
  };

  // Triangularity and integrality held during construction.
  add("triangular", true, "");
  add("integrality", true, "");

  // (a) C^-1 M = dominance matrix, on the sub-square up to mu.
  {
    bool ok = true;
    std::string witness;
    for (size_t a = 0; a <= i && ok; ++a)
      for (size_t b = 0; b <= a && ok; ++b) {
        Int s = 0;
        for (size_t k = b; k <= a; ++k) s += c_inv_.rows[a][k] * m_.rows[k][b];
        if (s != dom_.rows[a][b]) {
          ok = false;
          witness = "entry (" + std::to_string(a) + "," + std::to_string(b) + ") is " +
                    std::to_string(s) + ", dominance says " +
                    std::to_string(dom_.rows[a][b]);
        }
      }
    add("dominance", ok, witness);
  }

  // (b) m_{mu,nu} equals the partial sum of layer coefficients over the
  // dominance interval [nu, mu].
  {
    bool ok = true;
    std::string witness;
    for (size_t j = 0; j <= i && ok; ++j) {
      Int s = 0;
      for (size_t k = j; k <= i; ++k) {
        if (c_.rows[i][k] == 0) continue;
        if (is_in_Q_plus(ctx_.rs, weight_sub(order_.weights[k], order_.weights[j])) &&
            is_in_Q_plus(ctx_.rs, weight_sub(mu, order_.weights[k])))
          s += c_.rows[i][k];
      }
      if (s != m_.rows[i][j]) {
        ok = false;
        witness = "at " + weight_str(order_.weights[j]) + ": partial sum " +
                  std::to_string(s) + " vs multiplicity " + std::to_string(m_.rows[i][j]);
      }
    }
    add("multiplicity-sum", ok, witness);
  }

  // (c) orbit-weighted multiplicities sum to the dimension.
  {
    Rat d = dim_eval(ctx_.rs, mu);
    Rat s = 0;
    for (size_t j = 0; j <= i; ++j) s += Rat(m_.rows[i][j]) * Rat(orbit_sizes_[j]);
    std::ostringstream os;
    os << "sum " << s << " vs dim " << d;
    add("orbit-dim-sum", s == d, os.str());
  }

  // (d) layer coefficients weighted by layer counts sum to the dimension.
  {
    Rat d = dim_eval(ctx_.rs, mu);
    Rat s = 0;
    for (size_t j = 0; j <= i; ++j) s += Rat(c_.rows[i][j]) * Rat(order_.r_values[j]);
    std::ostringstream os;
    os << "sum " << s << " vs dim " << d;
    add("layer-dim-sum", s == d, os.str());
  }

  // (e) the inversion-derived multiplicity row equals the Freudenthal row.
  {
    DominantExpansion oracle = freudenthal_multiplicities(ctx_.rs, mu);
    DominantExpansion row = row_as_expansion(order_, m_.rows[i]);
    bool ok = (oracle == row);
    std::string witness;
    if (!ok) {
      for (const auto& [w, v] : oracle)
        if (row.count(w) == 0 || row[w] != v) {
          witness = "at " + weight_str(w) + ": inversion " +
                    std::to_string(row.count(w) ? row[w] : 0) + " vs oracle " +
                    std::to_string(v);
          break;
        }
      if (witness.empty())
        for (const auto& [w, v] : row)
          if (oracle.count(w) == 0) {
            witness = "spurious multiplicity at " + weight_str(w);
            break;
          }
    }
    add("freudenthal", ok, witness);
  }

  // (f) brute-force weight count equals the layer polynomial value.
  {
    mpz_class brute = count_weights_bruteforce(ctx_.rs, mu);
    bool ok = (brute == order_.r_values[i]);
    add("brute-count", ok,
        "enumerated " + brute.get_str() + " vs R = " + order_.r_values[i].get_str());
  }

  // Non-negativity of both rows, with layer support inside P_+(mu).
  {
    bool ok = true;
    std::string witness;
    std::vector<Weight> pplus = dominant_weights_below(ctx_.rs, mu);
    for (size_t j = 0; j <= i && ok; ++j) {
      if (m_.rows[i][j] < 0 || c_.rows[i][j] < 0) {
        ok = false;
        witness = "negative coefficient at " + weight_str(order_.weights[j]);
      } else if (c_.rows[i][j] != 0 &&
                 std::find(pplus.begin(), pplus.end(), order_.weights[j]) == pplus.end()) {
        ok = false;
        witness = "layer support outside P_+ at " + weight_str(order_.weights[j]);
      }
    }
    add("nonneg", ok, witness);
  }
  return rep;
}

Report verify_identities(const AlgebraContext& ctx, const Weight& lambda) {
  VerifyWorkspace ws(ctx, lambda);
  return ws.report_for(lambda);
}

}  // namespace layerlie

#include "layerlie/layercalc.hpp"

#include <algorithm>

#include "layerlie/charcalc.hpp"

namespace layerlie {

MultiPoly dim_polynomial(const RootSystem& rs) {
  const int r = rs.rank;
  MultiPoly p = MultiPoly::constant(r, 1);
  for (const Root& a : rs.positive_roots) {
    // (sum_i c_i d_i (l_i + 1)) / (sum_i c_i d_i)
    MultiPoly num = MultiPoly::zero(r);
    Rat den = 0;
    for (int i = 0; i < r; ++i) {
      Rat cd = Rat(a.coeffs[i]) * rs.sym[i];
      if (cd == 0) continue;
      num = poly_add(num, poly_scale(poly_add(MultiPoly::variable(r, i),
                                              MultiPoly::constant(r, 1)),
                                     cd));
      den += cd;
    }
    p = poly_scale(poly_mul(p, num), 1 / den);
  }
  return p;
}

namespace {

SignedShiftTable convolve(const SignedShiftTable& a, const SignedShiftTable& b) {
  SignedShiftTable out;
  out.kind = a.kind;
  out.total_shift = weight_add(a.total_shift, b.total_shift);
  for (const auto& [sa, ca] : a.entries)
    for (const auto& [sb, cb] : b.entries) {
      Weight s = weight_add(sa, sb);
      Int& v = out.entries[s];
      v += ca * cb;
      if (v == 0) out.entries.erase(s);
    }
  return out;
}

SignedShiftTable zgroup_range(const RootSystem& rs, size_t lo, size_t hi) {
  if (hi - lo == 1) {
    const Root& a = rs.nonsimple_positive[lo];
    SignedShiftTable t;
    t.kind = SignedShiftTable::ZGroup;
    Weight neg(rs.rank);
    for (int i = 0; i < rs.rank; ++i) neg[i] = -a.labels[i];
    t.total_shift = neg;
    t.entries[Weight(rs.rank, 0)] = 1;
    t.entries[neg] -= 1;
    if (t.entries[neg] == 0) t.entries.erase(neg);
    return t;
  }
  size_t mid = lo + (hi - lo) / 2;
  return convolve(zgroup_range(rs, lo, mid), zgroup_range(rs, mid, hi));
}

}  // namespace

SignedShiftTable zgroup_shift_table(const RootSystem& rs) {
  if (rs.nonsimple_positive.empty()) {
    SignedShiftTable t;
    t.kind = SignedShiftTable::ZGroup;
    t.total_shift.assign(rs.rank, 0);
    t.entries[Weight(rs.rank, 0)] = 1;
    return t;
  }
  return zgroup_range(rs, 0, rs.nonsimple_positive.size());
}

SignedShiftTable weyl_shift_table(const RootSystem& rs, const GroupTable& table) {
  SignedShiftTable t;
  t.kind = SignedShiftTable::WeylGroup;
  for (const GroupElem& w : table.elems) {
    Weight shift = weight_sub(w.rho_image, rs.rho);
    Int& v = t.entries[shift];
    v += (w.length % 2 == 0) ? 1 : -1;
    if (v == 0) t.entries.erase(shift);
  }
  Weight neg2rho(rs.rank, -2);
  t.total_shift = neg2rho;
  return t;
}

MultiPoly layer_polynomial(const RootSystem& rs) {
  // Apply the difference operator prod_{alpha in Phi'_+} (1 - T_{-alpha}) to
  // the dimension polynomial; each factor lowers the degree by one, so the
  // chain stays small even when 2^k subset enumeration would not.
  MultiPoly p = dim_polynomial(rs);
  for (const Root& a : rs.nonsimple_positive) {
    RatWeight v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v[i] = Rat(-a.labels[i]);
    p = poly_sub(p, poly_shift(p, v));
  }
  return p;
}

LayerPolyReport check_layer_polynomial(const RootSystem& rs, const MultiPoly& R) {
  LayerPolyReport rep;
  const int r = rs.rank;
  rep.degree = R.degree();
  rep.degree_ok = (rep.degree == r);
  rep.term_count = static_cast<long long>(R.terms.size());
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * static_cast<unsigned>(r),
               static_cast<unsigned>(r));
  rep.expected_term_count = binom.get_si();
  rep.term_count_ok = (rep.term_count == rep.expected_term_count);
  rep.positive_ok = std::all_of(R.terms.begin(), R.terms.end(),
                                [](const auto& t) { return t.second > 0; });
  return rep;
}

mpz_class weyl_alternating_dim_sum(const RootSystem& rs, const Weight& lambda,
                                   const GroupTable& table) {
  Rat s = 0;
  for (const GroupElem& w : table.elems) {
    RatWeight point(rs.rank);
    for (int i = 0; i < rs.rank; ++i)
      point[i] = Rat(lambda[i] + w.rho_image[i] - 1);
    Rat d = dim_eval(rs, point);
    s += (w.length % 2 == 0) ? d : -d;
  }
  s.canonicalize();
  if (s.get_den() != 1)
    throw std::logic_error("alternating dimension sum is not an integer");
  return s.get_num();
}

mpz_class count_weights_bruteforce(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("count_weights_bruteforce requires a dominant weight");
  mpz_class total = 0;
  for (const Weight& mu : dominant_weights_below(rs, lambda))
    total += static_cast<long>(orbit_size(rs, mu));
  return total;
}

}  // namespace layerlie

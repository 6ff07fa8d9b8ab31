#include "avinv/classify.hpp"

#include "avinv/errors.hpp"

namespace avinv {

std::optional<bool> geometric_simplicity(int dimension, const std::string& tag, bool simple, int delta) {
  if (!simple) return std::nullopt;
  if (dimension == 1) return true;
  if ((dimension == 2 && tag == "C") || (dimension == 3 && tag == "E")) return false;
  if (tag == "A") return delta == dimension;
  if (tag.empty()) return std::nullopt;
  return true;
}

ClassRecord classify(const WeilPolynomial& P, const ClassifyOptions& opt) {
  if (P.degree() % 2) throw Error(ErrorCode::OddDegreeWithoutRealHandling, "odd degree " + to_string(P.poly));
  ClassRecord rec;
  rec.P = P;
  rec.input = to_string(P.poly);
  rec.dimension = P.degree() / 2;
  const int g = rec.dimension;
  rec.decomposition = frobenius_decompose(P);
  rec.np = newton_polygon(P);
  rec.np_tag = np_classify(rec.np, g).tag;
  const auto& f0 = rec.decomposition.factors[0];
  rec.honda_tate_e = honda_tate_e(f0.h);
  rec.simple = rec.decomposition.factors.size() == 1 && f0.e == rec.honda_tate_e;

  RealSplit split = split_real_roots(rec.decomposition.h, P.q);
  std::vector<RepBlock> blocks;
  int prime_orbit = 0;
  if (split.complex_part.degree() > 0) {
    const WeilPolynomial C{split.complex_part, P.p, P.n, P.q};
    const auto cert = galois_group(C, GaloisOptions{opt.seed, 5, opt.precision_bits});
    const auto va = root_valuations(cert);
    blocks.push_back({cert.group, va.v, P.q});
    prime_orbit = va.orbit_size;
    rec.m_theta_degree = cert.m_theta.degree();
    rec.rejected_candidates = cert.rejected_candidates;
    rec.frobenius_primes = cert.frobenius_primes;
  }
  if (!split.real_factors.empty()) {
    IntPolynomial r = IntPolynomial::constant(1);
    for (const auto& f : split.real_factors) r *= f;
    const auto rc = real_case_group(WeilPolynomial{r, P.p, P.n, P.q});
    blocks.push_back({rc.group, root_valuations(rc).v, P.q});
  }
  const RepBlock sum = direct_sum(blocks);
  rec.rep = make_rep(sum.w, sum.group);
  if (blocks.size() == 1 && split.complex_part.degree() > 0) rec.rep.prime_orbit = prime_orbit;
  rec.rank_detail = angle_rank_detail(rec.rep.w, rec.rep.group);
  rec.angle_rank = angle_rank(rec.rep);
  rec.iso_name = structural_iso_name(rec.rep.group);
  if (rec.rep.d <= 3) rec.label = label_of(rec.rep.group).str();

  if (g <= 3 && rec.rep.d == g) {
    rec.table = table_for(g, rec.np_tag, rec.simple);
    rec.verdict = lookup_verdict(g, rec.np_tag, rec.simple, rec.rep.w, rec.rep.group);
    if (rec.verdict) rec.table_label = rec.verdict->label;
  }
  rec.geom_simple = geometric_simplicity(g, rec.np_tag, rec.simple, rec.angle_rank);

  const bool simple_complex = rec.simple && split.real_factors.empty();
  if (simple_complex) rec.divisor_report = check_divisor_properties(rec.rep, factor_over_Qp(rec.decomposition.h, P.p));
  if (rec.simple && rec.rep.group.contains_iota() && rec.rep.group.is_transitive())
    rec.screen = realizability_screen(rec.rep.w, rec.rep.group);
  else
    rec.screen = {Realizability::Realizable, "computed from an isogeny class"};
  return rec;
}

bool supersingular_field_check(const ClassRecord& rec) {
  if (rec.dimension != 3 || !rec.simple || rec.np_tag != "E")
    throw Error(ErrorCode::InvalidCombination, "field check applies to simple supersingular threefolds");
  const IntPolynomial& h = rec.decomposition.factors[0].h.poly;
  for (unsigned m : {7u, 9u, 14u, 18u}) {
    mpz_class qm;
    mpz_pow_ui(qm.get_mpz_t(), rec.P.q.get_mpz_t(), m);
    IntPolynomial target = IntPolynomial::monomial(mpz_class(1), 2 * m) - IntPolynomial::constant(qm);
    if (divides_exactly(h, target)) return true;
  }
  return false;
}

}  // namespace avinv

#include "weylchar/rectify.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "weylchar/morphism.hpp"

namespace weylchar {

std::optional<DependenceWitness> homogeneous_dependent(const PolyElement& a,
                                                       const PolyElement& b) {
  if (a.signature() != b.signature()) {
    throw UsageError("elements come from different algebras");
  }
  if (a.is_zero() || b.is_zero()) {
    throw UsageError("dependence test requires nonzero forms");
  }
  if (!is_homogeneous(a) || !is_homogeneous(b)) {
    throw UsageError("dependence test requires homogeneous forms");
  }
  const std::uint64_t qa = total_degree(a).value();
  const std::uint64_t rb = total_degree(b).value();

  // constants are dependent on anything
  if (qa == 0 && rb == 0) {
    const FpScalar f =
        a.leading_term().second * b.leading_term().second.inverse();
    return DependenceWitness{f, 1, 1};
  }
  if (qa == 0) return DependenceWitness{a.leading_term().second, 1, 0};
  if (rb == 0) {
    return DependenceWitness{b.leading_term().second.inverse(), 0, 1};
  }

  const std::uint64_t d = std::gcd(qa, rb);
  const PolyElement big_a = pow(a, rb / d);
  const PolyElement big_b = pow(b, qa / d);
  // proportional iff big_a == f * big_b with f the ratio of leading terms
  if (big_a.term_count() != big_b.term_count()) return std::nullopt;
  const FpScalar f =
      big_a.leading_term().second * big_b.leading_term().second.inverse();
  if (big_a != f * big_b) return std::nullopt;
  return DependenceWitness{f, rb / d, qa / d};
}

namespace {

std::uint64_t minimal_k(std::uint64_t p, std::uint64_t q) {
  // smallest k >= 1 with kp + 1 = 0 mod q; exists since gcd(p, q) = 1
  for (std::uint64_t k = 1; k <= q; ++k) {
    if ((k * p + 1) % q == 0) return k;
  }
  throw ComputeError("no k with kp + 1 = 0 mod q; q should be coprime to p");
}

}  // namespace

RectifyResult rectify_pair(WeylElement u, WeylElement v, int max_steps,
                           std::uint64_t max_degree) {
  if (commutator(u, v).is_zero()) {
    throw UsageError("rectification requires a non-commuting pair");
  }
  const std::uint64_t p = u.signature().p.value();

  RectifyResult result{RectifyResult::Status::cap_exceeded, u, v, {}, 1, 1};
  std::uint64_t wl_u = 1, wl_v = 1;

  for (int step = 1; step <= max_steps + 1; ++step) {
    auto witness = homogeneous_dependent(leading_form(u), leading_form(v));
    if (!witness) {
      result.status = RectifyResult::Status::rectified;
      break;
    }
    if (step > max_steps) break;  // caps exhausted before independence

    bool swapped = false;
    if (witness->q % p == 0) {
      // gcd(q, r) = 1, so r is coprime to p; continue with the roles of
      // u and v exchanged
      std::swap(u, v);
      std::swap(wl_u, wl_v);
      witness = homogeneous_dependent(leading_form(u), leading_form(v));
      swapped = true;
    }
    const std::uint64_t q = witness->q;
    const std::uint64_t deg_u = total_degree(u).value();
    const std::uint64_t deg_v = total_degree(v).value();

    const std::uint64_t k = minimal_k(p, q);
    const std::uint64_t e = checked_add(checked_mul(k, p), 1);  // kp + 1
    if (checked_mul(e, deg_u) > max_degree) break;  // degree cap

    if (checked_mul(e, deg_u) % deg_v != 0) {
      throw ComputeError("non-integral matching exponent s; the dependence "
                         "witness should make (kp+1) deg(u) / deg(v) exact");
    }
    const std::uint64_t s = checked_mul(e, deg_u) / deg_v;
    const FpScalar f1 = witness->f.pow(e / q);  // u^q = f v^r  =>  f1 = f^t

    const std::uint64_t old_def = commutation_defect(u, v);
    u = pow(u, e) - f1 * pow(v, s);
    wl_u = std::max(checked_mul(e, wl_u), checked_mul(s, wl_v));

    if (u.is_zero() || commutator(u, v).is_zero()) {
      throw ComputeError("rectification produced a commuting pair; this "
                         "should be impossible");
    }
    const std::uint64_t new_def = commutation_defect(u, v);
    if (new_def >= old_def) {
      throw ComputeError("rectification defect did not decrease; this "
                         "should be impossible");
    }
    result.log.push_back(RectifyStep{step, q, witness->r, k, s, f1, new_def,
                                     swapped});
  }

  result.u = u;
  result.v = v;
  result.word_length_u = wl_u;
  result.word_length_v = wl_v;
  return result;
}

}  // namespace weylchar

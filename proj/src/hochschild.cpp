#include "pcy/hochschild.hpp"

#include <functional>
#include <stdexcept>

namespace pcy {

AInfStructure AInfStructure::make(const GradedQuiver& A, MultiElement sm) {
  if (sm.ambient() != Ambient::hochschild)
    throw std::invalid_argument("AInfStructure: element must be hochschild ambient");
  if (sm.degree() != 1)
    throw std::invalid_argument("AInfStructure: sm must have degree 1");
  if (&sm.A() != &A)
    throw std::invalid_argument("AInfStructure: carrier mismatch");
  return AInfStructure{&A, std::move(sm)};
}

AInfMorphismData AInfMorphismData::identity(const GradedQuiver& A, Truncation t) {
  std::map<ObjectId, ObjectId> idm;
  for (const auto& x : A.objects()) idm[x] = x;
  MultiElement F = MultiElement::ainf_morphism(A, A, idm, 0, t);
  for (BasisId a = 0; a < A.dim(); ++a) {
    Signature s;
    s.tuples = {{A.at(a).tgt, A.at(a).src}};
    F.add_entry(s, {a}, {a}, Rational(1));
  }
  return AInfMorphismData{std::move(idm), std::move(F)};
}

MultiElement gerstenhaber_circ(const MultiElement& sF, const MultiElement& sG) {
  if (sF.ambient() != Ambient::hochschild || sG.ambient() != Ambient::hochschild)
    throw std::invalid_argument("gerstenhaber_circ: hochschild ambient required");
  if (&sF.A() != &sG.A())
    throw std::invalid_argument("gerstenhaber_circ: carrier mismatch");
  MultiElement R = MultiElement::hochschild(sF.A(), sF.degree() + sG.degree(),
                                            sF.truncation());
  const long long g = sG.degree();
  for (const auto& [sigF, tableF] : sF.components()) {
    const auto& ys = sigF.tuples[0];
    const int p = static_cast<int>(ys.size()) - 1;  // arity of sF component
    for (const auto& [inF, rowF] : tableF) {
      for (int k = 0; k < p; ++k) {
        // Insert a component of sG into input slot k (between objects
        // ys[k] and ys[k+1]); the slot currently holds basis inF[k].
        long long lead = 0;
        for (int r = 0; r < k; ++r) lead += sF.input_token_degree(inF[r]);
        Rational sign = sign_of_parity(g * lead);
        for (const auto& [sigG, tableG] : sG.components()) {
          const auto& zs = sigG.tuples[0];
          if (zs.size() < 2) continue;  // (SI)-type sums use arity >= 1
          if (zs.front() != ys[k] || zs.back() != ys[k + 1]) continue;
          for (const auto& [inG, rowG] : tableG) {
            for (const auto& [outG, cG] : rowG) {
              if (outG[0] != inF[k]) continue;
              Signature sigX;
              sigX.tuples = {{}};
              auto& xs = sigX.tuples[0];
              xs.insert(xs.end(), ys.begin(), ys.begin() + k + 1);
              xs.insert(xs.end(), zs.begin() + 1, zs.end() - 1);
              xs.insert(xs.end(), ys.begin() + k + 1, ys.end());
              BasisTuple inX;
              inX.insert(inX.end(), inF.begin(), inF.begin() + k);
              inX.insert(inX.end(), inG.begin(), inG.end());
              inX.insert(inX.end(), inF.begin() + k + 1, inF.end());
              for (const auto& [outF, cF] : rowF)
                R.add_entry(sigX, inX, outF, sign * cF * cG);
            }
          }
        }
      }
    }
  }
  return R;
}

MultiElement gerstenhaber_bracket(const MultiElement& sF, const MultiElement& sG) {
  MultiElement fg = gerstenhaber_circ(sF, sG);
  MultiElement gf = gerstenhaber_circ(sG, sF);
  Rational sign = -sign_of_parity((long long)sF.degree() * sG.degree());
  return linear_combine({Rational(1), sign}, {&fg, &gf});
}

Report check_stasheff(const AInfStructure& sm, int max_arity) {
  Report rep;
  const MultiElement& E = sm.element;
  for (const auto& sig : E.all_signatures()) {
    const int n = sig.total_inputs();
    if (n > max_arity) continue;
    const auto& xs = sig.tuples[0];
    for (const auto& in : E.input_tuples(sig)) {
      std::map<BasisId, Rational> acc;
      for (int p = 0; p < n; ++p) {
        long long lead = 0;
        for (int r = 0; r < p; ++r) lead += E.input_token_degree(in[r]);
        Rational sign = sign_of_parity(lead);  // |sm| = 1
        for (int q = 1; q <= n - p; ++q) {
          Signature inner;
          inner.tuples = {{xs.begin() + p, xs.begin() + p + q + 1}};
          BasisTuple inner_in(in.begin() + p, in.begin() + p + q);
          auto inner_row = E.eval_component(inner, inner_in);
          if (inner_row.empty()) continue;
          Signature outer;
          outer.tuples = {{}};
          auto& os = outer.tuples[0];
          os.insert(os.end(), xs.begin(), xs.begin() + p + 1);
          os.insert(os.end(), xs.begin() + p + q, xs.end());
          for (const auto& [b, c1] : inner_row) {
            BasisTuple outer_in(in.begin(), in.begin() + p);
            outer_in.push_back(b[0]);
            outer_in.insert(outer_in.end(), in.begin() + p + q, in.end());
            for (const auto& [o, c2] : E.eval_component(outer, outer_in))
              acc[o[0]] += sign * c1 * c2;
          }
        }
      }
      ++rep.checked;
      for (const auto& [o, v] : acc)
        if (v != 0) rep.failures.push_back({sig, in, {o}, v});
    }
  }
  return rep;
}

Report check_ainf_morphism(const AInfMorphismData& F, const AInfStructure& smA,
                           const AInfStructure& smB, int max_arity) {
  const MultiElement& EF = F.element;
  if (EF.ambient() != Ambient::ainf_morphism)
    throw std::invalid_argument("check_ainf_morphism: bad ambient");
  if (&EF.A() != smA.carrier || &EF.B() != smB.carrier)
    throw std::invalid_argument("check_ainf_morphism: carrier mismatch");
  const MultiElement& EA = smA.element;
  const MultiElement& EB = smB.element;
  Report rep;
  for (const auto& sig : EF.all_signatures()) {
    const int n = sig.total_inputs();
    if (n > max_arity) continue;
    const auto& xs = sig.tuples[0];
    for (const auto& in : EF.input_tuples(sig)) {
      std::map<BasisId, Rational> acc;
      // LHS: F o (id (x) smA (x) id), inner smA of degree 1.
      for (int p = 0; p < n; ++p) {
        long long lead = 0;
        for (int r = 0; r < p; ++r) lead += EF.input_token_degree(in[r]);
        Rational sign = sign_of_parity(lead);
        for (int q = 1; q <= n - p; ++q) {
          Signature inner;
          inner.tuples = {{xs.begin() + p, xs.begin() + p + q + 1}};
          BasisTuple inner_in(in.begin() + p, in.begin() + p + q);
          auto inner_row = EA.eval_component(inner, inner_in);
          if (inner_row.empty()) continue;
          Signature outer;
          outer.tuples = {{}};
          auto& os = outer.tuples[0];
          os.insert(os.end(), xs.begin(), xs.begin() + p + 1);
          os.insert(os.end(), xs.begin() + p + q, xs.end());
          for (const auto& [b, c1] : inner_row) {
            BasisTuple outer_in(in.begin(), in.begin() + p);
            outer_in.push_back(b[0]);
            outer_in.insert(outer_in.end(), in.begin() + p + q, in.end());
            for (const auto& [o, c2] : EF.eval_component(outer, outer_in))
              acc[o[0]] += sign * c1 * c2;
          }
        }
      }
      // RHS: smB(F (x) .. (x) F) over all splittings into m >= 1 blocks; F
      // components have degree 0, so no Koszul signs arise.  Subtract.
      std::function<void(int, std::vector<ObjectId>&, BasisTuple&, Rational)> rec =
          [&](int start, std::vector<ObjectId>& yobjs, BasisTuple& bs, Rational coeff) {
            if (start == n) {
              Signature ysig;
              ysig.tuples = {yobjs};
              for (const auto& [o, c] : EB.eval_component(ysig, bs))
                acc[o[0]] -= coeff * c;
              return;
            }
            for (int len = 1; start + len <= n; ++len) {
              Signature blk;
              blk.tuples = {{xs.begin() + start, xs.begin() + start + len + 1}};
              BasisTuple blk_in(in.begin() + start, in.begin() + start + len);
              for (const auto& [b, c] : EF.eval_component(blk, blk_in)) {
                yobjs.push_back(F.object_map.at(xs[start + len]));
                bs.push_back(b[0]);
                rec(start + len, yobjs, bs, coeff * c);
                bs.pop_back();
                yobjs.pop_back();
              }
            }
          };
      std::vector<ObjectId> yobjs{F.object_map.at(xs[0])};
      BasisTuple bs;
      rec(0, yobjs, bs, Rational(1));
      ++rep.checked;
      for (const auto& [o, v] : acc)
        if (v != 0) rep.failures.push_back({sig, in, {o}, v});
    }
  }
  return rep;
}

namespace {

// Calls fn(a_1..a_n) for every composable cyclic basis chain: a_i in
// hom(w_i, w_{i+1}) with w_{n+1} = w_1.
void for_each_cyclic_chain(const GradedQuiver& A, int n,
                           const std::function<void(const BasisTuple&)>& fn) {
  BasisTuple chain;
  std::function<void(const ObjectId&, const ObjectId&, int)> rec =
      [&](const ObjectId& first, const ObjectId& cur, int left) {
        if (left == 0) {
          if (cur == first) fn(chain);
          return;
        }
        for (BasisId a = 0; a < A.dim(); ++a) {
          if (A.at(a).tgt != cur) continue;
          chain.push_back(a);
          rec(first, A.at(a).src, left - 1);
          chain.pop_back();
        }
      };
  for (const auto& x : A.objects()) rec(x, x, n);
}

}  // namespace

Report check_almost_cyclic(const AInfStructure& sm, const BilinearForm& gamma,
                           int max_arity) {
  const MultiElement& E = sm.element;
  if (&gamma.carrier() != sm.carrier)
    throw std::invalid_argument("check_almost_cyclic: carrier mismatch");
  const GradedQuiver& A = *sm.carrier;
  Report rep;
  for (int n = 2; n <= max_arity + 1; ++n) {
    if (n - 1 > E.truncation().max_inputs) break;
    for_each_cyclic_chain(A, n, [&](const BasisTuple& a) {
      // LHS: Gamma(sm^{(w_1..w_n)}(sa_1..sa_{n-1}), sa_n).
      Signature sig;
      sig.tuples = {{}};
      auto& ws = sig.tuples[0];
      for (int i = 0; i < n; ++i) ws.push_back(A.at(a[i]).tgt);
      Rational lhs(0);
      BasisTuple in(a.begin(), a.end() - 1);
      for (const auto& [b, c] : E.eval_component(sig, in))
        lhs += c * gamma.eval(b[0], a[n - 1]);
      // RHS: rotate: sm^{(w_n, w_1..w_{n-1})}(sa_n, sa_1..sa_{n-2}) paired
      // with sa_{n-1}, with sign (-1)^{|sa_n| sum_{i<n} |sa_i|}.
      Signature rsig;
      rsig.tuples = {{}};
      auto& rs = rsig.tuples[0];
      rs.push_back(A.at(a[n - 1]).tgt);
      for (int i = 0; i + 1 < n; ++i) rs.push_back(A.at(a[i]).tgt);
      BasisTuple rin;
      rin.push_back(a[n - 1]);
      rin.insert(rin.end(), a.begin(), a.end() - 2);
      long long head = 0;
      for (int i = 0; i + 1 < n; ++i) head += A.at(a[i]).degree - 1;
      Rational sign = sign_of_parity((A.at(a[n - 1]).degree - 1) * head);
      Rational rhs(0);
      for (const auto& [b, c] : E.eval_component(rsig, rin))
        rhs += c * gamma.eval(b[0], a[n - 2]);
      ++rep.checked;
      Rational res = lhs - sign * rhs;
      if (res != 0) rep.failures.push_back({sig, a, {}, res});
    });
  }
  return rep;
}

Report check_cyclic_morphism(const AInfMorphismData& F, const BilinearForm& gamma,
                             const BilinearForm& Gamma, int max_arity) {
  const MultiElement& EF = F.element;
  const GradedQuiver& A = EF.A();
  if (&gamma.carrier() != &A || &Gamma.carrier() != &EF.B())
    throw std::invalid_argument("check_cyclic_morphism: carrier mismatch");
  Report rep;
  // Equation 1: Gamma(F1(sa), F1(sb)) = gamma(sa, sb).
  for_each_cyclic_chain(A, 2, [&](const BasisTuple& ab) {
    BasisId a = ab[0], b = ab[1];
    Signature sa, sb;
    sa.tuples = {{A.at(a).tgt, A.at(a).src}};
    sb.tuples = {{A.at(b).tgt, A.at(b).src}};
    Rational lhs(0);
    for (const auto& [c, vc] : EF.eval_component(sa, {a}))
      for (const auto& [e, ve] : EF.eval_component(sb, {b}))
        lhs += vc * ve * Gamma.eval(c[0], e[0]);
    ++rep.checked;
    Rational res = lhs - gamma.eval(a, b);
    if (res != 0) rep.failures.push_back({sa, ab, {}, res});
  });
  // Equation 2: for each n >= 3 and composable cycle, the sum over all cuts
  // sharing the same cut object vanishes.
  for (int n = 3; n <= max_arity; ++n) {
    for_each_cyclic_chain(A, n, [&](const BasisTuple& a) {
      std::map<ObjectId, Rational> by_cut;
      for (int i = 1; i < n; ++i) {
        if (i > EF.truncation().max_inputs || n - i > EF.truncation().max_inputs)
          continue;
        Signature sx, sy;
        sx.tuples = {{}};
        sy.tuples = {{}};
        for (int k = 0; k < i; ++k) sx.tuples[0].push_back(A.at(a[k]).tgt);
        sx.tuples[0].push_back(A.at(a[i - 1]).src);
        for (int k = i; k < n; ++k) sy.tuples[0].push_back(A.at(a[k]).tgt);
        sy.tuples[0].push_back(A.at(a[n - 1]).src);
        BasisTuple ax(a.begin(), a.begin() + i);
        BasisTuple ay(a.begin() + i, a.end());
        Rational term(0);
        for (const auto& [c, vc] : EF.eval_component(sx, ax))
          for (const auto& [e, ve] : EF.eval_component(sy, ay))
            term += vc * ve * Gamma.eval(c[0], e[0]);
        by_cut[A.at(a[i - 1]).src] += term;
      }
      for (const auto& [cut, v] : by_cut) {
        ++rep.checked;
        if (v != 0) {
          Signature sig;
          sig.tuples = {{cut}};
          rep.failures.push_back({sig, a, {}, v});
        }
      }
    });
  }
  return rep;
}

}  // namespace pcy

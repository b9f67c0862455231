#include "pcy/multimap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pcy {

int Signature::total_inputs() const {
  int t = 0;
  for (const auto& x : tuples) t += static_cast<int>(x.size()) - 1;
  return t;
}

Signature Signature::rotated(const Permutation& tau) const {
  if (tau.size() != n())
    throw std::invalid_argument("Signature::rotated: size mismatch");
  Signature r;
  r.part = part;
  r.tuples.reserve(tuples.size());
  for (int i = 0; i < n(); ++i) r.tuples.push_back(tuples[tau(i)]);
  return r;
}

MultiElement::MultiElement(Ambient ambient, const GradedQuiver* A,
                           const GradedQuiver* B, std::map<ObjectId, ObjectId> Phi0,
                           Degree d, Degree degree, Truncation trunc)
    : ambient_(ambient), A_(A), B_(B), Phi0_(std::move(Phi0)), d_(d),
      degree_(degree), trunc_(trunc) {
  if (!A_) throw std::invalid_argument("MultiElement: null carrier quiver");
  bool needs_B = ambient == Ambient::mixed || ambient == Ambient::morphism ||
                 ambient == Ambient::ainf_morphism;
  if (needs_B && !B_)
    throw std::invalid_argument("MultiElement: mixed/morphism ambient needs B");
}

MultiElement MultiElement::hochschild(const GradedQuiver& A, Degree degree,
                                      Truncation t) {
  return MultiElement(Ambient::hochschild, &A, nullptr, {}, 0, degree, t);
}

MultiElement MultiElement::necklace(const GradedQuiver& A, Degree d, Degree degree,
                                    Truncation t) {
  return MultiElement(Ambient::necklace, &A, nullptr, {}, d, degree, t);
}

MultiElement MultiElement::mixed(const GradedQuiver& A, const GradedQuiver& B,
                                 std::map<ObjectId, ObjectId> Phi0, Degree d,
                                 Degree degree, Truncation t) {
  return MultiElement(Ambient::mixed, &A, &B, std::move(Phi0), d, degree, t);
}

MultiElement MultiElement::morphism(const GradedQuiver& A, const GradedQuiver& B,
                                    std::map<ObjectId, ObjectId> Phi0, Degree d,
                                    Degree degree, Truncation t) {
  return MultiElement(Ambient::morphism, &A, &B, std::move(Phi0), d, degree, t);
}

MultiElement MultiElement::ainf_morphism(const GradedQuiver& A,
                                         const GradedQuiver& B,
                                         std::map<ObjectId, ObjectId> Phi0,
                                         Degree degree, Truncation t) {
  return MultiElement(Ambient::ainf_morphism, &A, &B, std::move(Phi0), 0, degree, t);
}

Degree MultiElement::map_degree() const {
  return ambient_ == Ambient::hochschild || ambient_ == Ambient::ainf_morphism
             ? degree_
             : degree_ + d_ + 1;
}

Degree MultiElement::input_token_degree(BasisId a) const {
  return A_->at(a).degree - 1;
}

namespace {

const ObjectId& phi_of(const std::map<ObjectId, ObjectId>& Phi0, const ObjectId& x) {
  auto it = Phi0.find(x);
  if (it == Phi0.end())
    throw std::invalid_argument("MultiElement: Phi0 undefined on '" + x + "'");
  return it->second;
}

}  // namespace

Degree MultiElement::output_token_degree(const Signature& sig, int slot,
                                         BasisId b) const {
  switch (ambient_) {
    case Ambient::hochschild:
      return A_->at(b).degree - 1;
    case Ambient::ainf_morphism:
      return B_->at(b).degree - 1;
    case Ambient::necklace:
      return A_->at(b).degree + d_;
    case Ambient::morphism:
      return B_->at(b).degree + d_;
    case Ambient::mixed:
      if (slot + 1 < sig.n())
        return B_->at(b).degree + d_;
      if (sig.part == MixedPart::A_part) return A_->at(b).degree + d_;
      return -B_->at(b).degree + 1;  // b*[-1]
  }
  throw std::logic_error("unreachable");
}

void MultiElement::validate_entry(const Signature& sig, const BasisTuple& in,
                                  const BasisTuple& out) const {
  const int n = sig.n();
  if (n == 0) throw std::invalid_argument("validate_entry: empty signature");
  const bool single_block =
      ambient_ == Ambient::hochschild || ambient_ == Ambient::ainf_morphism;
  if (single_block && n != 1)
    throw std::invalid_argument("validate_entry: this ambient needs n = 1");
  for (const auto& tup : sig.tuples) {
    if (tup.empty()) throw std::invalid_argument("validate_entry: empty tuple");
    for (const auto& x : tup)
      if (!A_->has_object(x))
        throw std::invalid_argument("validate_entry: unknown object '" + x + "'");
  }
  if (static_cast<int>(in.size()) != sig.total_inputs())
    throw std::invalid_argument("validate_entry: input arity mismatch");
  // Object matching of inputs: element j of block i lies in
  // tgt = x^i_j, src = x^i_{j+1}.
  {
    size_t k = 0;
    for (const auto& tup : sig.tuples) {
      for (size_t j = 0; j + 1 < tup.size(); ++j, ++k) {
        const auto& v = A_->at(in[k]);
        if (v.tgt != tup[j] || v.src != tup[j + 1])
          throw std::invalid_argument("validate_entry: input object mismatch");
      }
    }
  }
  const int n_out = single_block ? 1 : n;
  if (static_cast<int>(out.size()) != n_out)
    throw std::invalid_argument("validate_entry: output arity mismatch");
  auto check_out = [&](int slot, const GradedQuiver& Q, const ObjectId& tgt,
                       const ObjectId& src) {
    const auto& v = Q.at(out[slot]);
    if (v.tgt != tgt || v.src != src)
      throw std::invalid_argument("validate_entry: output object mismatch");
  };
  switch (ambient_) {
    case Ambient::hochschild:
      check_out(0, *A_, sig.lt(0), sig.rt(0));
      break;
    case Ambient::ainf_morphism:
      check_out(0, *B_, phi_of(Phi0_, sig.lt(0)), phi_of(Phi0_, sig.rt(0)));
      break;
    case Ambient::necklace:
      for (int i = 0; i < n; ++i)
        check_out(i, *A_, sig.lt(i), sig.rt((i + 1) % n));
      break;
    case Ambient::morphism:
      for (int i = 0; i < n; ++i)
        check_out(i, *B_, phi_of(Phi0_, sig.lt(i)), phi_of(Phi0_, sig.rt((i + 1) % n)));
      break;
    case Ambient::mixed:
      for (int i = 0; i + 1 < n; ++i)
        check_out(i, *B_, phi_of(Phi0_, sig.lt(i)), phi_of(Phi0_, sig.rt(i + 1)));
      if (sig.part == MixedPart::A_part)
        check_out(n - 1, *A_, sig.lt(n - 1), sig.rt(0));
      else
        // Last slot stores b with b* in _{Phi(lt(x^n))}B*_{Phi(rt(x^1))}[-1],
        // i.e. b in _{Phi(rt(x^1))}B_{Phi(lt(x^n))}.
        check_out(n - 1, *B_, phi_of(Phi0_, sig.rt(0)), phi_of(Phi0_, sig.lt(n - 1)));
      break;
  }
  // Degree consistency: sum of output token degrees minus sum of input token
  // degrees equals the degree of the underlying map.
  long long deg = 0;
  for (BasisId a : in) deg -= input_token_degree(a);
  for (int i = 0; i < n_out; ++i) deg += output_token_degree(sig, i, out[i]);
  if (deg != map_degree())
    throw std::invalid_argument("validate_entry: degree inconsistency");
}

void MultiElement::add_entry(const Signature& sig, const BasisTuple& in,
                             const BasisTuple& out, const Rational& c) {
  if (c == 0) return;
  if (!trunc_.admits(sig)) return;
  validate_entry(sig, in, out);
  auto& row = comps_[sig][in];
  Rational& slot = row[out];
  slot += c;
  if (slot == 0) {
    row.erase(out);
    if (row.empty()) {
      comps_[sig].erase(in);
      if (comps_[sig].empty()) comps_.erase(sig);
    }
  }
}

std::vector<std::pair<BasisTuple, Rational>> MultiElement::eval_component(
    const Signature& sig, const BasisTuple& in) const {
  std::vector<std::pair<BasisTuple, Rational>> out;
  auto it = comps_.find(sig);
  if (it == comps_.end()) return out;
  auto jt = it->second.find(in);
  if (jt == it->second.end()) return out;
  out.assign(jt->second.begin(), jt->second.end());
  return out;
}

bool MultiElement::is_zero() const { return comps_.empty(); }

bool MultiElement::same_shape(const MultiElement& o) const {
  return ambient_ == o.ambient_ && A_ == o.A_ && B_ == o.B_ && Phi0_ == o.Phi0_ &&
         d_ == o.d_ && trunc_ == o.trunc_;
}

bool MultiElement::operator==(const MultiElement& o) const {
  return same_shape(o) && degree_ == o.degree_ && comps_ == o.comps_;
}

void MultiElement::accumulate(const Rational& c, const MultiElement& other) {
  if (!same_shape(other) || degree_ != other.degree_)
    throw std::invalid_argument("accumulate: shape/degree mismatch");
  if (c == 0) return;
  for (const auto& [sig, table] : other.comps_)
    for (const auto& [in, row] : table)
      for (const auto& [out, v] : row) add_entry(sig, in, out, c * v);
}

std::vector<BasisTuple> MultiElement::input_tuples(const Signature& sig) const {
  std::vector<std::vector<BasisId>> choices;
  for (const auto& tup : sig.tuples)
    for (size_t j = 0; j + 1 < tup.size(); ++j)
      choices.push_back(A_->hom(tup[j], tup[j + 1]));
  std::vector<BasisTuple> result{{}};
  for (const auto& ch : choices) {
    if (ch.empty()) return {};
    std::vector<BasisTuple> next;
    for (const auto& partial : result)
      for (BasisId b : ch) {
        auto t = partial;
        t.push_back(b);
        next.push_back(std::move(t));
      }
    result = std::move(next);
  }
  return result;
}

std::vector<BasisTuple> MultiElement::output_tuples(const Signature& sig) const {
  const int n = sig.n();
  const int n_out = ambient_ == Ambient::hochschild ||
                            ambient_ == Ambient::ainf_morphism
                        ? 1
                        : n;
  std::vector<std::vector<BasisId>> choices;
  for (int i = 0; i < n_out; ++i) {
    switch (ambient_) {
      case Ambient::hochschild:
        choices.push_back(A_->hom(sig.lt(0), sig.rt(0)));
        break;
      case Ambient::ainf_morphism:
        choices.push_back(
            B_->hom(phi_of(Phi0_, sig.lt(0)), phi_of(Phi0_, sig.rt(0))));
        break;
      case Ambient::necklace:
        choices.push_back(A_->hom(sig.lt(i), sig.rt((i + 1) % n)));
        break;
      case Ambient::morphism:
        choices.push_back(
            B_->hom(phi_of(Phi0_, sig.lt(i)), phi_of(Phi0_, sig.rt((i + 1) % n))));
        break;
      case Ambient::mixed:
        if (i + 1 < n)
          choices.push_back(
              B_->hom(phi_of(Phi0_, sig.lt(i)), phi_of(Phi0_, sig.rt(i + 1))));
        else if (sig.part == MixedPart::A_part)
          choices.push_back(A_->hom(sig.lt(n - 1), sig.rt(0)));
        else
          choices.push_back(
              B_->hom(phi_of(Phi0_, sig.rt(0)), phi_of(Phi0_, sig.lt(n - 1))));
        break;
    }
  }
  std::vector<BasisTuple> result{{}};
  for (const auto& ch : choices) {
    if (ch.empty()) return {};
    std::vector<BasisTuple> next;
    for (const auto& partial : result)
      for (BasisId b : ch) {
        auto t = partial;
        t.push_back(b);
        next.push_back(std::move(t));
      }
    result = std::move(next);
  }
  return result;
}

std::vector<Signature> MultiElement::all_signatures() const {
  const auto& objs = A_->objects();
  const int N = trunc_.max_inputs;
  const int M = ambient_ == Ambient::hochschild || ambient_ == Ambient::ainf_morphism
                    ? 1
                    : trunc_.max_outputs;
  // All object tuples of length 1..N+1.
  std::vector<std::vector<std::vector<ObjectId>>> tuples_by_extra(N + 1);
  std::vector<std::vector<ObjectId>> cur;
  for (const auto& x : objs) cur.push_back({x});
  for (int extra = 0; extra <= N; ++extra) {
    tuples_by_extra[extra] = cur;
    std::vector<std::vector<ObjectId>> next;
    for (const auto& t : cur)
      for (const auto& x : objs) {
        auto u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    cur = std::move(next);
  }
  std::vector<Signature> result;
  std::function<void(std::vector<std::vector<ObjectId>>&, int, int)> rec =
      [&](std::vector<std::vector<ObjectId>>& acc, int blocks_left, int budget) {
        if (blocks_left == 0) {
          Signature s;
          s.tuples = acc;
          if (ambient_ == Ambient::mixed) {
            s.part = MixedPart::A_part;
            result.push_back(s);
            s.part = MixedPart::B_part;
            result.push_back(s);
          } else {
            result.push_back(s);
          }
          return;
        }
        for (int extra = 0; extra <= budget; ++extra)
          for (const auto& t : tuples_by_extra[extra]) {
            acc.push_back(t);
            rec(acc, blocks_left - 1, budget - extra);
            acc.pop_back();
          }
      };
  for (int n = 1; n <= M; ++n) {
    std::vector<std::vector<ObjectId>> acc;
    rec(acc, n, N);
  }
  return result;
}

namespace {

// True iff tau is a power of the standard cycle.
bool is_cyclic(const Permutation& tau) {
  int n = tau.size();
  for (int i = 0; i < n; ++i)
    if (tau((i + 1) % n) != (tau(i) + 1) % n) return false;
  return true;
}

std::vector<int> block_sizes(const Signature& sig) {
  std::vector<int> s;
  for (const auto& t : sig.tuples) s.push_back(static_cast<int>(t.size()) - 1);
  return s;
}

}  // namespace

MultiElement cyclic_act(const Permutation& tau, const MultiElement& E) {
  if (E.ambient() == Ambient::hochschild || E.ambient() == Ambient::ainf_morphism)
    throw std::invalid_argument("cyclic_act: single-block ambient has trivial C_1 only");
  if (E.ambient() == Ambient::mixed)
    throw std::invalid_argument(
        "cyclic_act: the unsplit mixed space carries no rotation action");
  if (!is_cyclic(tau)) throw std::invalid_argument("cyclic_act: tau not cyclic");
  MultiElement R(E.ambient(), &E.A(), E.Bptr(), E.Phi0(), E.d(), E.degree(),
                 E.truncation());
  const Permutation tau_inv = tau.inverse();
  for (const auto& [sigP, table] : E.components()) {
    if (sigP.n() != tau.size()) {
      for (const auto& [in, row] : table)
        for (const auto& [out, c] : row) R.add_entry(sigP, in, out, c);
      continue;
    }
    // sigP = sig . tau, so sig = sigP rotated by tau^{-1}.
    const Signature sig = sigP.rotated(tau_inv);
    const auto szP = block_sizes(sigP);
    for (const auto& [in, row] : table) {
      // Split the stored input into blocks w^0..w^{n-1} of sigP; the input of
      // (tau.F) at sig has blocks v with v = tau.apply(w).
      std::vector<BasisTuple> w;
      size_t k = 0;
      for (int i = 0; i < sigP.n(); ++i) {
        w.emplace_back(in.begin() + k, in.begin() + k + szP[i]);
        k += szP[i];
      }
      std::vector<BasisTuple> v = tau.apply(w);
      BasisTuple in_new;
      std::vector<Degree> v_block_degs;
      for (const auto& blk : v) {
        Degree bd = 0;
        for (BasisId a : blk) bd += E.input_token_degree(a);
        v_block_degs.push_back(bd);
        in_new.insert(in_new.end(), blk.begin(), blk.end());
      }
      // tau_in sends v to w: block k of v lands in slot tau^{-1}(k).
      Rational s_in = koszul_block_sign(tau_inv, v_block_degs);
      for (const auto& [out, c] : row) {
        // Output slot j of sigP is output slot tau(j) of sig.
        std::vector<Degree> o_degs;
        for (int j = 0; j < sigP.n(); ++j)
          o_degs.push_back(E.output_token_degree(sigP, j, out[j]));
        Rational s_out = koszul_sign(tau, o_degs);
        BasisTuple out_new = tau.apply(out);
        R.add_entry(sig, in_new, out_new, c * s_in * s_out);
      }
    }
  }
  return R;
}

bool check_cyclic_invariance(const MultiElement& E) {
  if (E.ambient() != Ambient::necklace && E.ambient() != Ambient::morphism)
    throw std::invalid_argument("check_cyclic_invariance: unsupported ambient");
  std::set<int> lengths;
  for (const auto& [sig, table] : E.components()) lengths.insert(sig.n());
  for (int n : lengths) {
    if (n == 1) continue;
    if (!(cyclic_act(Permutation::cycle(n), E) == E)) return false;
  }
  return true;
}

MultiElement symmetrize(const MultiElement& E) {
  std::set<int> lengths;
  for (const auto& [sig, table] : E.components()) lengths.insert(sig.n());
  MultiElement R(E.ambient(), &E.A(), E.Bptr(), E.Phi0(), E.d(), E.degree(),
                 E.truncation());
  for (int n : lengths) {
    // Average (1/n) sum over C_n, then keep only length-n signatures.
    MultiElement avg = R;  // empty, same shape
    Permutation tau = Permutation::identity(n);
    const Permutation c = Permutation::cycle(n);
    for (int k = 0; k < n; ++k) {
      avg.accumulate(Rational(1, n), n == 1 ? E : cyclic_act(tau, E));
      tau = tau.compose(c);
    }
    for (const auto& [sig, table] : avg.components()) {
      if (sig.n() != n) continue;
      for (const auto& [in, row] : table)
        for (const auto& [out, v] : row) R.add_entry(sig, in, out, v);
    }
  }
  return R;
}

MultiElement linear_combine(const std::vector<Rational>& coeffs,
                            const std::vector<const MultiElement*>& elements) {
  if (coeffs.size() != elements.size() || elements.empty())
    throw std::invalid_argument("linear_combine: size mismatch");
  const MultiElement& first = *elements.front();
  MultiElement R(first.ambient(), &first.A(), first.Bptr(), first.Phi0(), first.d(),
                 first.degree(), first.truncation());
  for (size_t i = 0; i < elements.size(); ++i) R.accumulate(coeffs[i], *elements[i]);
  return R;
}

MultiElement random_element(Ambient ambient, const GradedQuiver& A,
                            const GradedQuiver* B,
                            const std::map<ObjectId, ObjectId>& Phi0, Degree d,
                            Degree degree, Truncation t, std::mt19937& rng,
                            double density) {
  MultiElement E(ambient, &A, B, Phi0, d, degree, t);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> coeff(1, 6);
  std::bernoulli_distribution neg(0.5);
  for (const auto& sig : E.all_signatures()) {
    for (const auto& in : E.input_tuples(sig)) {
      long long in_deg = 0;
      for (BasisId a : in) in_deg += E.input_token_degree(a);
      for (const auto& out : E.output_tuples(sig)) {
        long long out_deg = 0;
        for (size_t i = 0; i < out.size(); ++i)
          out_deg += E.output_token_degree(sig, static_cast<int>(i), out[i]);
        if (out_deg - in_deg != E.map_degree()) continue;
        if (!keep(rng)) continue;
        int v = coeff(rng);
        E.add_entry(sig, in, out, Rational(neg(rng) ? -v : v));
      }
    }
  }
  return E;
}

}  // namespace pcy

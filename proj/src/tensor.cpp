#include "cbasis/tensor.hpp"

#include <stdexcept>

namespace cbasis {

std::string to_string(const Signature& sig) {
  std::string s;
  for (Mark m : sig) s += static_cast<char>(m);
  return s;
}

Signature parse_signature(std::string_view text) {
  Signature sig;
  for (char ch : text) {
    switch (ch) {
      case 'f': sig.push_back(Mark::f); break;
      case 'e': sig.push_back(Mark::e); break;
      case '.': sig.push_back(Mark::dot); break;
      default: throw std::invalid_argument("signature characters must be f, e or '.'");
    }
  }
  return sig;
}

Signature isig(const Tuple& b, int i, const Space& space) {
  Signature sig(b.size(), Mark::dot);
  if (space.is_c()) {
    if (i < 0) throw std::invalid_argument("type C generators are indexed by naturals");
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (b[t] == i || b[t] == -i)
        sig[t] = Mark::f;
      else if (b[t] == 1 + i || b[t] == 1 - i)
        sig[t] = Mark::e;
    }
    return sig;
  }
  if (space.sigma.size() != b.size()) throw std::invalid_argument("sign vector length differs from tuple length");
  for (std::size_t t = 0; t < b.size(); ++t) {
    const bool plus = space.sigma[t] == Sign::plus;
    if (b[t] == (plus ? i : 1 + i))
      sig[t] = Mark::f;
    else if (b[t] == (plus ? 1 + i : i))
      sig[t] = Mark::e;
  }
  return sig;
}

const char* to_string(GenKind kind) { return kind == GenKind::f ? "f" : "e"; }

// ---------------------------------------------------------------------------

TensorVec::TensorVec(Space space, int n) : space_(std::move(space)), n_(n) {
  if (n < 1) throw std::invalid_argument("tensor length must be >= 1");
  if (!space_.is_c() && static_cast<int>(space_.sigma.size()) != n)
    throw std::invalid_argument("sign vector length differs from tensor length");
}

TensorVec TensorVec::monomial(Space space, Tuple b, LaurentPoly coeff) {
  TensorVec v(std::move(space), static_cast<int>(b.size()));
  v.add_term(b, coeff);
  return v;
}

LaurentPoly TensorVec::coefficient(const Tuple& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TensorVec::add_term(const Tuple& b, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  if (static_cast<int>(b.size()) != n_) throw std::invalid_argument("tuple length differs from tensor length");
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorVec::check_compatible(const TensorVec& rhs) const {
  if (space_ != rhs.space_ || n_ != rhs.n_) throw std::invalid_argument("tensor vectors live in different spaces");
}

void TensorVec::add_scaled(const TensorVec& rhs, const LaurentPoly& scale) {
  check_compatible(rhs);
  if (scale.is_zero()) return;
  for (const auto& [b, p] : rhs.terms_) add_term(b, scale * p);
}

TensorVec& TensorVec::operator+=(const TensorVec& rhs) {
  add_scaled(rhs, 1);
  return *this;
}

TensorVec& TensorVec::operator-=(const TensorVec& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

TensorVec operator*(const LaurentPoly& scale, const TensorVec& v) {
  TensorVec out(v.space_, v.n_);
  out.add_scaled(v, scale);
  return out;
}

bool TensorVec::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Weight w0 = total_weight(terms_.begin()->first, space_);
  for (const auto& [b, p] : terms_)
    if (total_weight(b, space_) != w0) return false;
  return true;
}

TensorVec TensorVec::bar_coefficients() const {
  TensorVec out(space_, n_);
  for (const auto& [b, p] : terms_) out.terms_.emplace(b, p.bar());
  return out;
}

TensorVec TensorVec::specialize_at_one() const {
  TensorVec out(space_, n_);
  for (const auto& [b, p] : terms_) {
    Integer c = p.eval_at_one();
    if (c != 0) out.terms_.emplace(b, LaurentPoly::monomial(c, 0));
  }
  return out;
}

std::string TensorVec::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, p] : terms_) {
    std::string basis = "v[" + cbasis::to_string(b) + "]";
    bool negative = false;
    std::string coeff;
    if (p.size() == 1) {
      const auto& [e, c] = p.terms().front();
      negative = c < 0;
      LaurentPoly magnitude = LaurentPoly::monomial(negative ? Integer(-c) : c, e);
      if (!magnitude.is_one()) coeff = magnitude.to_string() + " ";
    } else {
      coeff = "(" + p.to_string() + ") ";
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    out += coeff + basis;
  }
  return out;
}

// ---------------------------------------------------------------------------

int k_exponent(int i, int j, const Space& space, Sign slot_sign) {
  if (space.is_c()) return (j == i) + (j == -i) - (j == 1 + i) - (j == 1 - i);
  const int e = (j == i) - (j == 1 + i);
  return slot_sign == Sign::plus ? e : -e;
}

namespace {

Sign slot_sign(const Space& space, std::size_t t) { return space.is_c() ? Sign::plus : space.sigma[t]; }

/// Shift applied to slot t by f (e uses the negative): +1 in type C, sigma_t in type A.
int f_shift(const Space& space, std::size_t t) { return space.is_c() ? 1 : value(space.sigma[t]); }

template <bool Quantum>
TensorVec chevalley(const TensorVec& v, int i, GenKind kind) {
  const Space& space = v.space();
  const Mark wanted = kind == GenKind::f ? Mark::f : Mark::e;
  const int n = v.n();
  TensorVec out(space, n);
  std::vector<int> kexp(n);
  for (const auto& [b, p] : v.terms()) {
    const Signature sig = isig(b, i, space);
    if constexpr (Quantum)
      for (int t = 0; t < n; ++t) kexp[t] = k_exponent(i, b[t], space, slot_sign(space, t));
    for (int t = 0; t < n; ++t) {
      if (sig[t] != wanted) continue;
      Tuple c = b;
      c[t] += kind == GenKind::f ? f_shift(space, t) : -f_shift(space, t);
      int power = 0;
      if constexpr (Quantum) {
        if (kind == GenKind::f)
          for (int s = t + 1; s < n; ++s) power += kexp[s];
        else
          for (int s = 0; s < t; ++s) power -= kexp[s];
      }
      out.add_term(c, power == 0 ? p : p.shifted(power));
    }
  }
  return out;
}

}  // namespace

TensorVec chevalley_classical(const TensorVec& v, int i, GenKind kind) { return chevalley<false>(v, i, kind); }

TensorVec chevalley_quantum(const TensorVec& v, int i, GenKind kind) { return chevalley<true>(v, i, kind); }

TensorVec project(const TensorVec& v, const Projection& target) {
  switch (target.kind) {
    case Projection::Kind::pr_k: {
      if (!v.space().is_c()) throw std::invalid_argument("pr_k applies to type C vectors");
      TensorVec out(v.space(), v.n());
      for (const auto& [b, p] : v.terms())
        if (in_Bk(b, target.k)) out.add_term(b, p);
      return out;
    }
    case Projection::Kind::pr_0: {
      if (v.space().is_c()) throw std::invalid_argument("pr_0 applies to type A vectors");
      TensorVec out(v.space(), v.n());
      for (const auto& [b, p] : v.terms())
        if (in_B0(b)) out.add_term(b, p);
      return out;
    }
    case Projection::Kind::pr_sigma: {
      if (!v.space().is_c()) throw std::invalid_argument("pr_sigma applies to type C vectors");
      TensorVec out(Space::a(target.sigma), v.n());
      for (const auto& [b, p] : v.terms())
        if (in_Bsigma(b, target.sigma)) out.add_term(prime_map(b), p);
      return out;
    }
  }
  throw std::logic_error("unknown projection");
}

TensorVec include(const TensorVec& v, const Projection& source) {
  switch (source.kind) {
    case Projection::Kind::pr_k:
      for (const auto& [b, p] : v.terms())
        if (!in_Bk(b, source.k)) throw std::invalid_argument("vector is not supported in B_k");
      return v;
    case Projection::Kind::pr_0:
      for (const auto& [b, p] : v.terms())
        if (!in_B0(b)) throw std::invalid_argument("vector is not supported in B_0");
      return v;
    case Projection::Kind::pr_sigma: {
      if (v.space() != Space::a(source.sigma)) throw std::invalid_argument("in_sigma expects a vector of V_0^sigma");
      TensorVec out(Space::c(), v.n());
      for (const auto& [b, p] : v.terms()) out.add_term(prime_inverse(b, source.sigma), p);
      return out;
    }
  }
  throw std::logic_error("unknown projection");
}

}  // namespace cbasis

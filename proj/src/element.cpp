#include "garside/element.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "garside/error.hpp"

namespace garside {

namespace {

Simple must(std::optional<Simple> s, const char* what) {
  if (!s) throw std::logic_error(std::string("garside: ") + what);
  return *s;
}

void left_weight_sweeps(const GarsideStructure& g, std::vector<Simple>& seq) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const Simple t = g.meet_prefix(g.complement(seq[i]), seq[i + 1]);
      if (t == g.identity()) continue;
      seq[i] = must(g.product(seq[i], t), "left sweep product");
      seq[i + 1] = must(g.left_quotient(t, seq[i + 1]), "left sweep quotient");
      changed = true;
    }
  }
}

void right_weight_sweeps(const GarsideStructure& g, std::vector<Simple>& seq) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = seq.size(); i-- > 1;) {
      const Simple u = g.meet_suffix(g.complement_inverse(seq[i]), seq[i - 1]);
      if (u == g.identity()) continue;
      seq[i - 1] = must(g.right_quotient(seq[i - 1], u), "right sweep quotient");
      seq[i] = must(g.product(u, seq[i]), "right sweep product");
      changed = true;
    }
  }
}

}  // namespace

Element::Element(StructurePtr structure) : structure_(std::move(structure)) {
  if (!structure_) throw InvalidInput("element without a structure");
}

Element::Element(StructurePtr structure, long long inf, std::vector<Simple> factors)
    : structure_(std::move(structure)), inf_(inf), factors_(std::move(factors)) {}

Element Element::from_normal_form(StructurePtr structure, long long inf,
                                  std::vector<Simple> factors) {
  const GarsideStructure& g = *structure;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].id >= g.size()) throw InvalidInput("factor is not a simple of " + g.descriptor());
    if (!g.is_proper(factors[i])) throw InvalidInput("normal form factor must be proper");
    if (i > 0 && !g.left_weighted(factors[i - 1], factors[i]))
      throw InvalidInput("normal form factors are not left-weighted");
  }
  return Element(std::move(structure), inf, std::move(factors));
}

Element Element::delta_power(StructurePtr structure, long long k) {
  return Element(std::move(structure), k, {});
}

Element Element::simple(StructurePtr structure, Simple s) {
  const GarsideStructure& g = *structure;
  if (s == g.identity()) return Element(std::move(structure));
  if (s == g.delta()) return delta_power(std::move(structure), 1);
  return Element(std::move(structure), 0, {s});
}

void Element::strip() {
  const GarsideStructure& g = *structure_;
  std::size_t lead = 0;
  while (lead < factors_.size() && factors_[lead] == g.delta()) ++lead;
  if (lead) {
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    inf_ += static_cast<long long>(lead);
  }
  while (!factors_.empty() && factors_.back() == g.identity()) factors_.pop_back();
}

long long Element::word_length() const {
  return std::max(sup(), 0LL) - std::min(inf(), 0LL);
}

Element Element::right_multiply(Simple s, std::vector<Simple>* transcript) const {
  const GarsideStructure& g = *structure_;
  if (transcript) transcript->clear();
  if (s == g.identity()) return *this;
  const std::size_t r = factors_.size();
  std::vector<Simple> out(r + 1);
  std::vector<Simple> carry(r);
  Simple next = s;  // s_{i+1}
  for (std::size_t i = r; i-- > 0;) {
    const Simple z = factors_[i];
    const Simple t = g.meet_prefix(g.complement(z), next);
    carry[i] = t;
    out[i + 1] = must(g.left_quotient(t, next), "carry quotient");
    next = must(g.product(z, t), "carry product");
  }
  out[0] = next;
  if (transcript) *transcript = std::move(carry);
  Element result(structure_, inf_, std::move(out));
  result.strip();
  return result;
}

Element Element::right_multiply_delta(long long k) const {
  std::vector<Simple> f = factors_;
  for (Simple& s : f) s = structure_->tau_power(s, k);
  return Element(structure_, inf_ + k, std::move(f));
}

Element Element::right_divide(Simple s) const {
  return right_multiply(structure_->complement(s)).right_multiply_delta(-1);
}

void require_same_structure(const Element& a, const Element& b) {
  if (a.structure_ptr() != b.structure_ptr() &&
      a.structure().descriptor() != b.structure().descriptor())
    throw InvalidInput("elements of different structures: " + a.structure().descriptor() +
                       " and " + b.structure().descriptor());
}

Element Element::operator*(const Element& other) const {
  require_same_structure(*this, other);
  Element r = right_multiply_delta(other.inf_);
  for (Simple s : other.factors_) r = r.right_multiply(s);
  return r;
}

Element Element::inverse() const {
  Element r(structure_);
  for (std::size_t i = factors_.size(); i-- > 0;) r = r.right_divide(factors_[i]);
  return r.right_multiply_delta(-inf_);
}

bool operator<(const Element& a, const Element& b) {
  if (a.inf_ != b.inf_) return a.inf_ < b.inf_;
  return a.factors_ < b.factors_;
}

std::size_t ElementHash::operator()(const Element& g) const noexcept {
  std::size_t h = std::hash<long long>{}(g.inf());
  for (Simple s : g.factors()) h = h * 1000003u ^ s.id;
  return h;
}

Element power(const Element& g, long long k) {
  Element base = k < 0 ? g.inverse() : g;
  unsigned long long n = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);
  Element result(g.structure_ptr());
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Element normalize(StructurePtr structure, std::span<const SignedSimple> word) {
  const GarsideStructure& g = *structure;
  long long p = 0;
  std::vector<Simple> seq;
  for (const SignedSimple& tok : word) {
    if (tok.simple.id >= g.size()) throw InvalidInput("token is not a simple of " + g.descriptor());
    if (tok.sign >= 0) {
      seq.push_back(tok.simple);
    } else {
      // s⁻¹ = ∂(s)Δ⁻¹, and Δ⁻¹ moves left through the sequence as τ⁻¹.
      seq.push_back(g.complement(tok.simple));
      for (Simple& s : seq) s = g.tau_inverse(s);
      --p;
    }
  }
  left_weight_sweeps(g, seq);
  std::vector<Simple> kept;
  for (Simple s : seq) {
    if (s == g.delta() && kept.empty()) {
      ++p;
    } else if (s != g.identity()) {
      kept.push_back(s);
    }
  }
  return Element::from_normal_form(std::move(structure), p, std::move(kept));
}

RightNormalForm right_normal_form(const Element& x) {
  const GarsideStructure& g = x.structure();
  std::vector<Simple> seq = x.factors();
  for (Simple& s : seq) s = g.tau_power(s, -x.inf());
  right_weight_sweeps(g, seq);
  RightNormalForm rnf;
  rnf.sup_power = x.inf();
  while (!seq.empty() && seq.back() == g.delta()) {
    seq.pop_back();
    ++rnf.sup_power;
  }
  for (Simple s : seq)
    if (s != g.identity()) rnf.factors.push_back(s);
  return rnf;
}

Element from_right_normal_form(StructurePtr structure, const RightNormalForm& rnf) {
  Element r(structure);
  for (Simple s : rnf.factors) r = r.right_multiply(s);
  return r.right_multiply_delta(rnf.sup_power);
}

bool prefix_le(const Element& a, const Element& b) { return (a.inverse() * b).inf() >= 0; }

bool suffix_le(const Element& a, const Element& b) { return (b * a.inverse()).inf() >= 0; }

Element meet_prefix(const Element& a0, const Element& b0) {
  if (!a0.is_positive() || !b0.is_positive())
    throw InvalidInput("prefix meet needs positive elements");
  require_same_structure(a0, b0);
  const GarsideStructure& g = a0.structure();
  auto head = [&](const Element& e) {
    if (e.inf() > 0) return g.delta();
    return e.factors().empty() ? g.identity() : e.factors().front();
  };
  Element result(a0.structure_ptr());
  Element a = a0, b = b0;
  for (;;) {
    const Simple w = g.meet_prefix(head(a), head(b));
    if (w == g.identity()) return result;
    result = result.right_multiply(w);
    const Element wi = Element::simple(a0.structure_ptr(), w).inverse();
    a = wi * a;
    b = wi * b;
  }
}

Element meet_suffix(const Element& a0, const Element& b0) {
  if (!a0.is_positive() || !b0.is_positive())
    throw InvalidInput("suffix meet needs positive elements");
  require_same_structure(a0, b0);
  const GarsideStructure& g = a0.structure();
  auto tail = [&](const Element& e) {
    if (e.inf() > 0) return g.delta();
    if (e.factors().empty()) return g.identity();
    return right_normal_form(e).factors.back();
  };
  Element result(a0.structure_ptr());
  Element a = a0, b = b0;
  for (;;) {
    const Simple w = g.meet_suffix(tail(a), tail(b));
    if (w == g.identity()) return result;
    const Element we = Element::simple(a0.structure_ptr(), w);
    result = we * result;
    a = a.right_divide(w);
    b = b.right_divide(w);
  }
}

std::vector<Simple> positive_simple_word(const Element& e) {
  if (!e.is_positive()) throw InvalidInput("positive simple word of a non-positive element");
  std::vector<Simple> w(static_cast<std::size_t>(e.inf()), e.structure().delta());
  w.insert(w.end(), e.factors().begin(), e.factors().end());
  return w;
}

Fraction left_fraction(const Element& x) {
  const StructurePtr& s = x.structure_ptr();
  if (x.inf() >= 0) return {Side::left, Element(s), x};
  if (x.sup() <= 0) return {Side::left, x.inverse(), Element(s)};
  const auto m = static_cast<std::size_t>(-x.inf());
  const auto& f = x.factors();
  std::vector<Simple> dpart(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<Simple> npart(f.begin() + static_cast<std::ptrdiff_t>(m), f.end());
  Element dinv = Element::from_normal_form(s, x.inf(), std::move(dpart));
  return {Side::left, dinv.inverse(), Element::from_normal_form(s, 0, std::move(npart))};
}

Fraction right_fraction(const Element& x) {
  const StructurePtr& s = x.structure_ptr();
  if (x.inf() >= 0) return {Side::right, Element(s), x};
  if (x.sup() <= 0) return {Side::right, x.inverse(), Element(s)};
  const RightNormalForm rnf = right_normal_form(x);
  const auto m = static_cast<std::size_t>(-rnf.sup_power);
  const std::size_t split = rnf.factors.size() - m;
  RightNormalForm num, den_inv;
  num.factors.assign(rnf.factors.begin(), rnf.factors.begin() + static_cast<std::ptrdiff_t>(split));
  den_inv.factors.assign(rnf.factors.begin() + static_cast<std::ptrdiff_t>(split),
                         rnf.factors.end());
  den_inv.sup_power = rnf.sup_power;
  return {Side::right, from_right_normal_form(s, den_inv).inverse(),
          from_right_normal_form(s, num)};
}

std::vector<SignedSimple> mixed_word(const Element& x) {
  const Fraction f = left_fraction(x);
  std::vector<SignedSimple> out;
  const std::vector<Simple> d = positive_simple_word(f.denominator);
  for (std::size_t i = d.size(); i-- > 0;) out.push_back({d[i], -1});
  for (Simple s : positive_simple_word(f.numerator)) out.push_back({s, 1});
  return out;
}

std::vector<std::string> factor_names(const Element& x) {
  std::vector<std::string> out;
  for (Simple s : x.factors()) out.push_back(x.structure().name(s));
  return out;
}

std::string to_word(const Element& x) {
  std::string out;
  if (x.inf() == 1) {
    out = "D";
  } else if (x.inf() != 0) {
    out = "D^" + std::to_string(x.inf());
  }
  for (const std::string& f : factor_names(x)) {
    if (!out.empty()) out += ' ';
    out += f;
  }
  return out;
}

Element parse_word(StructurePtr structure, std::string_view text) {
  constexpr long long kMaxExponent = 1000000;
  const GarsideStructure& g = *structure;
  Element result(structure);
  std::size_t i = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    std::string_view token = text.substr(start, i - start);
    std::string_view base = token, exponent;
    long long k = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      base = token.substr(0, caret);
      exponent = token.substr(caret + 1);
      std::string_view digits = exponent;
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
          k > kMaxExponent || k < -kMaxExponent)
        throw ParseError("malformed exponent '" + std::string(exponent) + "'",
                         start + caret + 1);
    }
    if (base == "D") {
      result = result.right_multiply_delta(k);
      continue;
    }
    if (base == "1") continue;
    if (base.size() < 2 || base.front() != 's')
      throw ParseError("unknown token '" + std::string(token) + "'", start);
    int atom = 0;
    auto [ptr, ec] = std::from_chars(base.data() + 1, base.data() + base.size(), atom);
    if (ec != std::errc() || ptr != base.data() + base.size())
      throw ParseError("unknown token '" + std::string(token) + "'", start);
    if (atom < 1 || static_cast<std::size_t>(atom) > g.atoms().size())
      throw ParseError("unknown atom " + std::string(base), start);
    const Simple a = g.atoms()[static_cast<std::size_t>(atom - 1)];
    for (long long j = 0; j < k; ++j) result = result.right_multiply(a);
    for (long long j = 0; j > k; --j) result = result.right_divide(a);
  }
  return result;
}

}  // namespace garside

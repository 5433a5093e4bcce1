#include "garside/structure.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "garside/error.hpp"
#include "garside/structures.hpp"

namespace garside {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

int parse_n(std::string_view text, std::string_view descriptor) {
  if (!text.starts_with("n="))
    throw InvalidInput("malformed structure descriptor '" + std::string(descriptor) + "'");
  text.remove_prefix(2);
  int n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidInput("malformed structure descriptor '" + std::string(descriptor) + "'");
  return n;
}

}  // namespace

StructurePtr GarsideStructure::from_descriptor(std::string_view descriptor) {
  std::shared_ptr<const SimpleModel> model;
  if (descriptor.starts_with("braid:classical:")) {
    model = std::make_shared<ClassicalBraidModel>(
        parse_n(descriptor.substr(16), descriptor));
  } else if (descriptor.starts_with("braid:dual:")) {
    model = std::make_shared<DualBraidModel>(parse_n(descriptor.substr(11), descriptor));
  } else if (descriptor.starts_with("zn:")) {
    model = std::make_shared<FreeAbelianModel>(parse_n(descriptor.substr(3), descriptor));
  } else {
    throw InvalidInput("unknown structure descriptor '" + std::string(descriptor) + "'");
  }
  return std::make_shared<const GarsideStructure>(std::move(model));
}

GarsideStructure::GarsideStructure(std::shared_ptr<const SimpleModel> model)
    : model_(std::move(model)), descriptor_(model_->descriptor()) {
  std::vector<Payload> simples = model_->enumerate();
  struct Keyed {
    int length;
    std::vector<int> key;
    Payload payload;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(simples.size());
  for (auto& p : simples) keyed.push_back({model_->length(p), model_->sort_key(p), p});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.length, a.key) < std::tie(b.length, b.key);
  });

  const std::size_t n = keyed.size();
  payloads_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    payloads_.push_back(keyed[i].payload);
    index_.emplace(keyed[i].payload, i);
    all_.push_back(Simple{i});
    length_.push_back(keyed[i].length);
  }
  if (payloads_.front() != model_->identity() || payloads_.back() != model_->delta())
    throw InvalidInput("structure " + descriptor_ + ": identity/Δ are not the extreme simples");

  atom_number_.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (length_[i] == 1) {
      atoms_.push_back(Simple{i});
      atom_number_[i] = static_cast<int>(atoms_.size());
    }
    if (i != 0 && i + 1 != n) proper_.push_back(Simple{i});
  }

  complement_.resize(n);
  complement_inv_.resize(n);
  tau_.resize(n);
  tau_inv_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    complement_[i] = intern(model_->complement(payloads_[i])).id;
    tau_[i] = intern(model_->tau(payloads_[i])).id;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    complement_inv_[complement_[i]] = i;
    tau_inv_[tau_[i]] = i;
  }

  // τ permutes the atoms, which generate; its order on atoms is e.
  std::vector<Simple> image(atoms_.begin(), atoms_.end());
  for (tau_order_ = 1;; ++tau_order_) {
    for (Simple& a : image) a = tau(a);
    if (std::equal(image.begin(), image.end(), atoms_.begin())) break;
  }

  dense_ = n <= kDenseLimit;
  if (dense_) {
    const std::size_t nn = n * n;
    product_.assign(nn, kNone);
    ldiv_.assign(nn, kNone);
    rdiv_.assign(nn, kNone);
    meet_p_.resize(nn);
    join_p_.resize(nn);
    meet_s_.resize(nn);
    join_s_.resize(nn);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        const std::size_t k = a * n + b;
        const Payload& pa = payloads_[a];
        const Payload& pb = payloads_[b];
        if (length_[a] + length_[b] <= length_.back()) {
          auto it = index_.find(model_->compose(pa, pb));
          if (it != index_.end() && length_[it->second] == length_[a] + length_[b]) {
            product_[k] = it->second;
            ldiv_[a * n + it->second] = b;
            rdiv_[it->second * n + b] = a;
          }
        }
        meet_p_[k] = intern(model_->meet_prefix(pa, pb)).id;
        join_p_[k] = intern(model_->join_prefix(pa, pb)).id;
        meet_s_[k] = intern(model_->meet_suffix(pa, pb)).id;
        join_s_[k] = intern(model_->join_suffix(pa, pb)).id;
      }
  }
}

Simple GarsideStructure::intern(const Payload& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw InvalidInput("structure " + descriptor_ + ": " + model_->payload_string(p) +
                       " is not a simple");
  return Simple{it->second};
}

std::optional<Simple> GarsideStructure::find(const Payload& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return Simple{it->second};
}

std::optional<Simple> GarsideStructure::lookup(const std::vector<std::uint32_t>& table,
                                               Simple a, Simple b) const {
  std::uint32_t v = table[a.id * size() + b.id];
  if (v == kNone) return std::nullopt;
  return Simple{v};
}

Simple GarsideStructure::meet_prefix(Simple a, Simple b) const {
  if (dense_) return Simple{meet_p_[a.id * size() + b.id]};
  return intern(model_->meet_prefix(payload(a), payload(b)));
}

Simple GarsideStructure::join_prefix(Simple a, Simple b) const {
  if (dense_) return Simple{join_p_[a.id * size() + b.id]};
  return intern(model_->join_prefix(payload(a), payload(b)));
}

Simple GarsideStructure::meet_suffix(Simple a, Simple b) const {
  if (dense_) return Simple{meet_s_[a.id * size() + b.id]};
  return intern(model_->meet_suffix(payload(a), payload(b)));
}

Simple GarsideStructure::join_suffix(Simple a, Simple b) const {
  if (dense_) return Simple{join_s_[a.id * size() + b.id]};
  return intern(model_->join_suffix(payload(a), payload(b)));
}

std::optional<Simple> GarsideStructure::product(Simple a, Simple b) const {
  if (dense_) return lookup(product_, a, b);
  auto r = find(model_->compose(payload(a), payload(b)));
  if (r && length(*r) == length(a) + length(b)) return r;
  return std::nullopt;
}

std::optional<Simple> GarsideStructure::left_quotient(Simple a, Simple b) const {
  if (dense_) return lookup(ldiv_, a, b);
  auto q = find(model_->compose(model_->invert(payload(a)), payload(b)));
  if (q && length(a) + length(*q) == length(b)) return q;
  return std::nullopt;
}

std::optional<Simple> GarsideStructure::right_quotient(Simple b, Simple a) const {
  if (dense_) return lookup(rdiv_, b, a);
  auto q = find(model_->compose(payload(b), model_->invert(payload(a))));
  if (q && length(a) + length(*q) == length(b)) return q;
  return std::nullopt;
}

Simple GarsideStructure::tau_power(Simple s, long long k) const {
  long long r = k % tau_order_;
  if (r < 0) r += tau_order_;
  for (long long i = 0; i < r; ++i) s = tau(s);
  return s;
}

std::vector<Simple> GarsideStructure::atom_word(Simple s) const {
  std::vector<Simple> word;
  while (s != identity()) {
    for (Simple a : atoms_) {
      if (auto q = left_quotient(a, s)) {
        word.push_back(a);
        s = *q;
        break;
      }
    }
  }
  return word;
}

int GarsideStructure::atom_number(Simple s) const { return atom_number_[s.id]; }

std::string GarsideStructure::name(Simple s) const {
  if (s == identity()) return "1";
  if (s == delta()) return "D";
  std::string out;
  for (Simple a : atom_word(s)) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(atom_number(a));
  }
  return out;
}

GarsideStructure GarsideStructure::with_complement_override(Simple s, Simple image) const {
  GarsideStructure copy = *this;
  copy.complement_[s.id] = image.id;
  return copy;
}

}  // namespace garside

#include "garside/structures.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "garside/error.hpp"

namespace garside {

namespace {

Payload compose_perm(const Payload& a, const Payload& b) {
  Payload r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Payload invert_perm(const Payload& a) {
  Payload r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

std::vector<Payload> all_permutations(int n) {
  Payload p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Payload> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int cycle_count(const Payload& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

// Inversion relation over starting positions: rel[i*n+j] for i < j.
using Relation = std::vector<char>;

Relation inversions(const Payload& p) {
  const std::size_t n = p.size();
  Relation rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rel[i * n + j] = p[i] > p[j];
  return rel;
}

// Warshall with the middle point outermost; only pairs i < j are stored.
void transitive_closure(Relation& rel, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (rel[i * n + j])
        for (std::size_t k = j + 1; k < n; ++k)
          if (rel[j * n + k]) rel[i * n + k] = 1;
}

Payload from_inversions(const Relation& rel, std::size_t n) {
  Payload p(n);
  for (std::size_t i = 0; i < n; ++i) {
    int pos = static_cast<int>(i);
    for (std::size_t j = 0; j < i; ++j) pos -= rel[j * n + i];
    for (std::size_t j = i + 1; j < n; ++j) pos += rel[i * n + j];
    p[i] = pos;
  }
  return p;
}

}  // namespace

std::string SimpleModel::payload_string(const Payload& p) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Classical

ClassicalBraidModel::ClassicalBraidModel(int n) : n_(n) {
  if (n < 2 || n > kMaxStrands)
    throw InvalidInput("classical braid structure needs 2 <= n <= " +
                       std::to_string(kMaxStrands));
}

std::string ClassicalBraidModel::descriptor() const {
  return "braid:classical:n=" + std::to_string(n_);
}

std::vector<Payload> ClassicalBraidModel::enumerate() const { return all_permutations(n_); }

Payload ClassicalBraidModel::identity() const {
  Payload p(n_);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Payload ClassicalBraidModel::delta() const {
  Payload p(n_);
  for (int i = 0; i < n_; ++i) p[i] = n_ - 1 - i;
  return p;
}

Payload ClassicalBraidModel::compose(const Payload& a, const Payload& b) const {
  return compose_perm(a, b);
}

Payload ClassicalBraidModel::invert(const Payload& a) const { return invert_perm(a); }

bool ClassicalBraidModel::is_simple(const Payload& p) const {
  if (static_cast<int>(p.size()) != n_) return false;
  std::vector<char> seen(n_, 0);
  for (int v : p) {
    if (v < 0 || v >= n_ || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int ClassicalBraidModel::length(const Payload& p) const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) inv += p[i] > p[j];
  return inv;
}

Payload ClassicalBraidModel::join_prefix(const Payload& a, const Payload& b) const {
  const std::size_t n = n_;
  Relation ra = inversions(a), rb = inversions(b);
  for (std::size_t k = 0; k < ra.size(); ++k) ra[k] = ra[k] || rb[k];
  transitive_closure(ra, n);
  return from_inversions(ra, n);
}

Payload ClassicalBraidModel::meet_prefix(const Payload& a, const Payload& b) const {
  // Complement of the transitive closure of the union of non-inversions.
  const std::size_t n = n_;
  Relation ra = inversions(a), rb = inversions(b);
  Relation non(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      non[i * n + j] = !ra[i * n + j] || !rb[i * n + j];
  transitive_closure(non, n);
  Relation inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) inv[i * n + j] = !non[i * n + j];
  return from_inversions(inv, n);
}

Payload ClassicalBraidModel::meet_suffix(const Payload& a, const Payload& b) const {
  return invert_perm(meet_prefix(invert_perm(a), invert_perm(b)));
}

Payload ClassicalBraidModel::join_suffix(const Payload& a, const Payload& b) const {
  return invert_perm(join_prefix(invert_perm(a), invert_perm(b)));
}

std::vector<int> ClassicalBraidModel::sort_key(const Payload& p) const {
  std::vector<int> key;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (p[i] > p[j]) {
        key.push_back(i);
        key.push_back(j);
      }
  return key;
}

// ---------------------------------------------------------------------------
// Dual

DualBraidModel::DualBraidModel(int n) : n_(n) {
  if (n < 2 || n > kMaxStrands)
    throw InvalidInput("dual braid structure needs 2 <= n <= " +
                       std::to_string(kMaxStrands));
}

std::string DualBraidModel::descriptor() const {
  return "braid:dual:n=" + std::to_string(n_);
}

std::vector<Payload> DualBraidModel::enumerate() const {
  std::vector<Payload> out;
  for (auto& p : all_permutations(n_))
    if (is_simple(p)) out.push_back(p);
  return out;
}

Payload DualBraidModel::identity() const {
  Payload p(n_);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Payload DualBraidModel::delta() const {
  Payload p(n_);
  for (int i = 0; i < n_; ++i) p[i] = (i + 1) % n_;
  return p;
}

Payload DualBraidModel::compose(const Payload& a, const Payload& b) const {
  return compose_perm(a, b);
}

Payload DualBraidModel::invert(const Payload& a) const { return invert_perm(a); }

bool DualBraidModel::is_simple(const Payload& p) const {
  if (static_cast<int>(p.size()) != n_) return false;
  std::vector<char> seen(n_, 0);
  for (int v : p) {
    if (v < 0 || v >= n_ || seen[v]) return false;
    seen[v] = 1;
  }
  // p ⩽ δ in absolute order: reflection lengths add up along p·(p⁻¹δ).
  const int lp = n_ - cycle_count(p);
  const int lq = n_ - cycle_count(compose_perm(invert_perm(p), delta()));
  return lp + lq == n_ - 1;
}

int DualBraidModel::length(const Payload& p) const { return n_ - cycle_count(p); }

std::vector<int> DualBraidModel::blocks(const Payload& p) {
  std::vector<int> label(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (label[i] >= 0) continue;
    for (std::size_t j = i; label[j] < 0; j = p[j]) label[j] = static_cast<int>(i);
  }
  return label;
}

Payload DualBraidModel::from_blocks(const std::vector<int>& labels) {
  const std::size_t n = labels.size();
  Payload p(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Next point of the same block in cyclic increasing order.
    std::size_t next = i;
    for (std::size_t step = 1; step <= n; ++step) {
      std::size_t j = (i + step) % n;
      if (labels[j] == labels[i]) {
        next = j;
        break;
      }
    }
    p[i] = static_cast<int>(next);
  }
  return p;
}

Payload DualBraidModel::meet_prefix(const Payload& a, const Payload& b) const {
  auto la = blocks(a), lb = blocks(b);
  std::vector<int> label(n_, -1);
  for (int i = 0; i < n_; ++i) {
    if (label[i] >= 0) continue;
    for (int j = i; j < n_; ++j)
      if (la[j] == la[i] && lb[j] == lb[i]) label[j] = i;
  }
  return from_blocks(label);
}

Payload DualBraidModel::join_prefix(const Payload& a, const Payload& b) const {
  auto la = blocks(a), lb = blocks(b);
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (int i = 0; i < n_; ++i) {
    unite(i, la[i]);
    unite(i, lb[i]);
  }
  // Merge crossing blocks until the partition is non-crossing.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n_ && !changed; ++p)
      for (int q = p + 1; q < n_ && !changed; ++q)
        for (int r = q + 1; r < n_ && !changed; ++r)
          for (int s = r + 1; s < n_ && !changed; ++s)
            if (find(p) == find(r) && find(q) == find(s) && find(p) != find(q)) {
              unite(p, q);
              changed = true;
            }
  }
  std::vector<int> label(n_);
  for (int i = 0; i < n_; ++i) label[i] = find(i);
  return from_blocks(label);
}

Payload DualBraidModel::meet_suffix(const Payload& a, const Payload& b) const {
  return meet_prefix(a, b);
}

Payload DualBraidModel::join_suffix(const Payload& a, const Payload& b) const {
  return join_prefix(a, b);
}

std::vector<int> DualBraidModel::sort_key(const Payload& p) const {
  // Non-singleton blocks, each as its sorted points followed by -1.
  auto label = blocks(p);
  std::vector<int> key;
  for (int i = 0; i < n_; ++i) {
    if (label[i] != i || p[i] == i) continue;
    for (int j = i; j < n_; ++j)
      if (label[j] == i) key.push_back(j);
    key.push_back(-1);
  }
  return key;
}

std::string DualBraidModel::payload_string(const Payload& p) const {
  auto label = blocks(p);
  std::ostringstream os;
  os << '{';
  bool first_block = true;
  for (int i = 0; i < n_; ++i) {
    if (label[i] != i) continue;
    os << (first_block ? "" : "|");
    first_block = false;
    bool first = true;
    for (int j = i; j < n_; ++j)
      if (label[j] == i) {
        os << (first ? "" : ",") << j + 1;
        first = false;
      }
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Free abelian

FreeAbelianModel::FreeAbelianModel(int n) : n_(n) {
  if (n < 1 || n > kMaxRank)
    throw InvalidInput("free abelian structure needs 1 <= n <= " + std::to_string(kMaxRank));
}

std::string FreeAbelianModel::descriptor() const { return "zn:n=" + std::to_string(n_); }

std::vector<Payload> FreeAbelianModel::enumerate() const {
  std::vector<Payload> out;
  for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) {
    Payload p(n_);
    for (int i = 0; i < n_; ++i) p[i] = (mask >> i) & 1;
    out.push_back(std::move(p));
  }
  return out;
}

Payload FreeAbelianModel::identity() const { return Payload(n_, 0); }
Payload FreeAbelianModel::delta() const { return Payload(n_, 1); }

Payload FreeAbelianModel::compose(const Payload& a, const Payload& b) const {
  Payload r(n_);
  for (int i = 0; i < n_; ++i) r[i] = a[i] + b[i];
  return r;
}

Payload FreeAbelianModel::invert(const Payload& a) const {
  Payload r(n_);
  for (int i = 0; i < n_; ++i) r[i] = -a[i];
  return r;
}

bool FreeAbelianModel::is_simple(const Payload& p) const {
  return static_cast<int>(p.size()) == n_ &&
         std::all_of(p.begin(), p.end(), [](int v) { return v == 0 || v == 1; });
}

int FreeAbelianModel::length(const Payload& p) const {
  return std::accumulate(p.begin(), p.end(), 0);
}

Payload FreeAbelianModel::meet_prefix(const Payload& a, const Payload& b) const {
  Payload r(n_);
  for (int i = 0; i < n_; ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Payload FreeAbelianModel::join_prefix(const Payload& a, const Payload& b) const {
  Payload r(n_);
  for (int i = 0; i < n_; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Payload FreeAbelianModel::meet_suffix(const Payload& a, const Payload& b) const {
  return meet_prefix(a, b);
}

Payload FreeAbelianModel::join_suffix(const Payload& a, const Payload& b) const {
  return join_prefix(a, b);
}

Payload FreeAbelianModel::complement(const Payload& s) const {
  Payload r(n_);
  for (int i = 0; i < n_; ++i) r[i] = 1 - s[i];
  return r;
}

std::vector<int> FreeAbelianModel::sort_key(const Payload& p) const {
  std::vector<int> key;
  for (int i = 0; i < n_; ++i)
    if (p[i]) key.push_back(i);
  return key;
}

}  // namespace garside
